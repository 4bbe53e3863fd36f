#ifndef ETAQ_EXACT_ARITH_HPP
#define ETAQ_EXACT_ARITH_HPP

// Exact scalars: GMP integers and rationals, the number-theoretic functions
// used throughout (Bernoulli numbers, divisor sums, the character mod 12) and
// dense rational linear algebra.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace etaq
{

using Integer = mpz_class;

/// Always canonical: mpq_class is kept reduced with a positive denominator.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;

/// num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den);

/// "p/q", or "n" when the denominator is 1; the sign lives on the numerator.
std::string to_string(const Rational& x);

/// Inverse of to_string. Accepts "n", "-n", "p/q"; rejects zero denominators and garbage.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

/// B_m for the convention x/(e^x - 1) = sum B_n x^n / n!, so B_1 = -1/2.
/// Memoized behind a mutex; safe to call concurrently.
Rational bernoulli(unsigned m);

/// Sum of power-th powers of the positive divisors of n; 0 when n <= 0.
Integer sigma(unsigned power, std::int64_t n);

/// Same, but any non-integral n yields 0 so sigma(p, n/r) is total.
Integer sigma(unsigned power, const Rational& n);

/// The Kronecker symbol (12/n): 1 for n = +-1 mod 12, -1 for n = +-5 mod 12, else 0.
int kronecker12(std::int64_t n);

/// Binomial coefficient C(n, k) as an exact integer.
Integer binomial(unsigned n, unsigned k);

class RationalMatrix
{
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

RationalVector operator*(const RationalMatrix& m, const RationalVector& x);

/// Exact Gaussian elimination. The pivot of each column is the first row (lowest index)
/// at or below the diagonal with a nonzero entry. Throws SingularMatrix when rank-deficient,
/// DomainError on shape mismatch.
RationalVector solve_linear_system(const RationalMatrix& m, const RationalVector& rhs);

/// Determinant by the same elimination; 0 for singular matrices.
Rational determinant(const RationalMatrix& m);

} // namespace etaq

#endif
