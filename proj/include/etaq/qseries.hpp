#ifndef ETAQ_QSERIES_HPP
#define ETAQ_QSERIES_HPP

#include <cstdint>
#include <vector>

#include "etaq/exact_arith.hpp"

namespace etaq
{

/// Truncated formal power series in q over the rationals.
///
/// A QSeries stores the coefficients of q^n for leading_exponent() <= n < precision().
/// Coefficients below the leading exponent are exactly zero; coefficients at or
/// beyond the precision are unknown. When precision() <= leading_exponent() nothing
/// is known and the coefficient list is empty.
///
/// The leading coefficient is not normalized away: a series built with a zero
/// coefficient at its leading exponent keeps that exponent (see normalized()).
class QSeries
{
public:
    using Exponent = std::int64_t;

    /// The empty series: nothing known (leading exponent 0, precision 0).
    QSeries() = default;

    /// Coefficients of q^leading, q^(leading+1), ...; precision = leading + coeffs.size().
    QSeries(Exponent leading, std::vector<Rational> coeffs);

    /// As above but with explicit precision; coeffs are zero-padded or truncated to fit.
    QSeries(Exponent leading, std::vector<Rational> coeffs, Exponent precision);

    static QSeries constant(const Rational& c, Exponent precision);
    static QSeries one(Exponent precision) { return constant(Rational(1), precision); }
    static QSeries zero(Exponent precision) { return constant(Rational(0), precision); }

    /// q^e, known up to (but excluding) q^precision.
    static QSeries monomial(Exponent e, const Rational& c, Exponent precision);

    Exponent leading_exponent() const noexcept { return leading_; }
    Exponent precision() const noexcept { return precision_; }

    /// Number of known coefficients, precision - leading_exponent (never negative).
    Exponent relative_precision() const noexcept
    {
        return static_cast<Exponent>(coeffs_.size());
    }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of q^n; zero below the leading exponent.
    /// Throws InsufficientPrecision when n >= precision().
    Rational coefficient(Exponent n) const;

    bool is_zero() const;

    /// Strip zero coefficients at the front, moving the leading exponent up.
    QSeries normalized() const;

    /// Multiply by q^s.
    QSeries shifted(Exponent s) const;

    /// Drop knowledge of coefficients at or beyond new_precision (never raises precision).
    QSeries truncated(Exponent new_precision) const;

    /// Substitute q -> q^d (d >= 1). Both leading exponent and precision scale by d.
    QSeries dilated(Exponent d) const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    Exponent leading_ = 0;
    Exponent precision_ = 0;
    std::vector<Rational> coeffs_;
};

/// Coefficient-wise sum; precision is the minimum of the two.
QSeries add(const QSeries& a, const QSeries& b);
QSeries negate(const QSeries& a);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rational& c);

/// Cauchy product. Leading exponents add; the result is known for
/// n < min(a.precision + b.leading, b.precision + a.leading).
QSeries mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse. Requires a known, nonzero coefficient at a.leading_exponent();
/// throws NonUnitLeadingCoefficient otherwise. Result has leading exponent -a.leading_exponent()
/// and the same relative precision as a.
QSeries invert(const QSeries& a);

/// a^e by repeated squaring; negative e inverts first. a^0 is 1 with a's relative precision.
QSeries pow(const QSeries& a, std::int64_t e);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return negate(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

} // namespace etaq

#endif
