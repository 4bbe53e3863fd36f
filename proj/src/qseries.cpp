#include "etaq/qseries.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "etaq/errors.hpp"

namespace etaq
{

QSeries::QSeries(Exponent leading, std::vector<Rational> coeffs)
    : leading_(leading), precision_(leading + static_cast<Exponent>(coeffs.size())), coeffs_(std::move(coeffs))
{
}

QSeries::QSeries(Exponent leading, std::vector<Rational> coeffs, Exponent precision)
    : leading_(leading), precision_(precision), coeffs_(std::move(coeffs))
{
    coeffs_.resize(static_cast<std::size_t>(std::max<Exponent>(0, precision - leading)), Rational(0));
}

QSeries QSeries::constant(const Rational& c, Exponent precision)
{
    return monomial(0, c, precision);
}

QSeries QSeries::monomial(Exponent e, const Rational& c, Exponent precision)
{
    QSeries s(e, {}, precision);
    if (!s.coeffs_.empty())
        s.coeffs_[0] = c;
    return s;
}

Rational QSeries::coefficient(Exponent n) const
{
    if (n >= precision_)
        throw InsufficientPrecision("coefficient of q^" + std::to_string(n) + " requested but series is known only below q^" +
                                    std::to_string(precision_));
    if (n < leading_)
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(n - leading_)];
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QSeries QSeries::normalized() const
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
    if (first == coeffs_.begin())
        return *this;
    const auto skip = static_cast<Exponent>(first - coeffs_.begin());
    return QSeries(leading_ + skip, std::vector<Rational>(first, coeffs_.end()), precision_);
}

QSeries QSeries::shifted(Exponent s) const
{
    QSeries r = *this;
    r.leading_ += s;
    r.precision_ += s;
    return r;
}

QSeries QSeries::truncated(Exponent new_precision) const
{
    if (new_precision >= precision_)
        return *this;
    const auto keep = static_cast<std::size_t>(std::max<Exponent>(0, new_precision - leading_));
    return QSeries(leading_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep)),
                   new_precision);
}

QSeries QSeries::dilated(Exponent d) const
{
    if (d < 1)
        throw DomainError("dilation factor must be positive");
    QSeries r(leading_ * d, {}, precision_ * d);
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        r.coeffs_[n * static_cast<std::size_t>(d)] = coeffs_[n];
    return r;
}

QSeries add(const QSeries& a, const QSeries& b)
{
    const auto lead = std::min(a.leading_exponent(), b.leading_exponent());
    const auto prec = std::min(a.precision(), b.precision());
    std::vector<Rational> c(static_cast<std::size_t>(std::max<QSeries::Exponent>(0, prec - lead)), Rational(0));
    for (auto n = lead; n < prec; ++n) {
        auto& slot = c[static_cast<std::size_t>(n - lead)];
        if (n >= a.leading_exponent())
            slot += a.coefficients()[static_cast<std::size_t>(n - a.leading_exponent())];
        if (n >= b.leading_exponent())
            slot += b.coefficients()[static_cast<std::size_t>(n - b.leading_exponent())];
    }
    return QSeries(lead, std::move(c), prec);
}

QSeries negate(const QSeries& a)
{
    return scale(a, Rational(-1));
}

QSeries sub(const QSeries& a, const QSeries& b)
{
    return add(a, negate(b));
}

QSeries scale(const QSeries& a, const Rational& c)
{
    std::vector<Rational> out = a.coefficients();
    for (auto& x : out)
        x *= c;
    return QSeries(a.leading_exponent(), std::move(out), a.precision());
}

QSeries mul(const QSeries& a, const QSeries& b)
{
    const auto lead = a.leading_exponent() + b.leading_exponent();
    const auto prec = std::min(a.precision() + b.leading_exponent(), b.precision() + a.leading_exponent());
    const auto len = static_cast<std::size_t>(std::max<QSeries::Exponent>(0, prec - lead));
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    std::vector<Rational> c(len, Rational(0));
    Rational term;
    for (std::size_t i = 0; i < std::min(len, x.size()); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < len; ++j) {
            if (y[j] == 0)
                continue;
            mpq_mul(term.get_mpq_t(), x[i].get_mpq_t(), y[j].get_mpq_t());
            c[i + j] += term;
        }
    }
    return QSeries(lead, std::move(c), prec);
}

QSeries invert(const QSeries& a)
{
    const auto& x = a.coefficients();
    if (x.empty())
        throw NonUnitLeadingCoefficient("cannot invert a series with no known coefficients");
    if (x[0] == 0)
        throw NonUnitLeadingCoefficient("cannot invert a series whose coefficient at q^" +
                                        std::to_string(a.leading_exponent()) + " is zero");
    const std::size_t len = x.size();
    const Rational inv0 = 1 / x[0];
    std::vector<Rational> y(len, Rational(0));
    y[0] = inv0;
    Rational acc;
    Rational term;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (x[k] == 0 || y[n - k] == 0)
                continue;
            mpq_mul(term.get_mpq_t(), x[k].get_mpq_t(), y[n - k].get_mpq_t());
            acc += term;
        }
        y[n] = -acc * inv0;
    }
    const auto lead = -a.leading_exponent();
    return QSeries(lead, std::move(y), lead + static_cast<QSeries::Exponent>(len));
}

QSeries pow(const QSeries& a, std::int64_t e)
{
    if (e == 0)
        return QSeries::one(a.relative_precision());
    QSeries base = e < 0 ? invert(a) : a;
    auto n = static_cast<std::uint64_t>(e < 0 ? -e : e);
    QSeries result;
    bool have_result = false;
    while (true) {
        if (n & 1u) {
            result = have_result ? mul(result, base) : base;
            have_result = true;
        }
        n >>= 1u;
        if (n == 0)
            break;
        base = mul(base, base);
    }
    return result;
}

} // namespace etaq
