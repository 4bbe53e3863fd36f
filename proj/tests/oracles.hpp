#ifndef ETAQ_TESTS_ORACLES_HPP
#define ETAQ_TESTS_ORACLES_HPP

// Test-only reference computations. None of these call into the library's
// series, eta or formula code, so they can check it.

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace etaq::oracle
{

/// B_0..B_max as m! [x^m] of 1 / ((e^x - 1)/x), by inverting sum x^n/(n+1)! with plain vectors.
inline std::vector<mpq_class> bernoulli_by_series_inversion(unsigned max)
{
    std::vector<mpq_class> f(max + 1);
    mpz_class fact = 1;
    for (unsigned n = 0; n <= max; ++n) {
        fact *= (n + 1);
        f[n] = mpq_class(1) / mpq_class(fact);
    }
    std::vector<mpq_class> g(max + 1);
    g[0] = 1;
    for (unsigned n = 1; n <= max; ++n) {
        mpq_class acc = 0;
        for (unsigned k = 1; k <= n; ++k)
            acc += f[k] * g[n - k];
        g[n] = -acc;
    }
    mpz_class m_fact = 1;
    for (unsigned m = 0; m <= max; ++m) {
        if (m > 0)
            m_fact *= m;
        g[m] *= m_fact;
        g[m].canonicalize();
    }
    return g;
}

/// sum of d^power over d | n by trial division of every d <= n.
inline mpz_class divisor_power_sum(unsigned power, std::int64_t n)
{
    mpz_class total = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), power);
            total += p;
        }
    return total;
}

/// #{(x, y) : x^2 + y^2 = n}
inline std::int64_t sum_of_two_squares_count(std::int64_t n)
{
    std::int64_t count = 0;
    for (std::int64_t x = -n; x <= n; ++x)
        for (std::int64_t y = -n; y <= n; ++y)
            if (x * x + y * y == n)
                ++count;
    return count;
}

/// Coefficients of prod (1 - q^n) below q^precision from Euler's pentagonal number theorem:
/// (-1)^m at q^(m(3m-1)/2) for m in Z.
inline std::vector<std::int64_t> pentagonal_coefficients(std::int64_t precision)
{
    std::vector<std::int64_t> c(static_cast<std::size_t>(precision), 0);
    for (std::int64_t m = -precision; m <= precision; ++m) {
        const std::int64_t e = m * (3 * m - 1) / 2;
        if (e >= 0 && e < precision)
            c[static_cast<std::size_t>(e)] = (m % 2 == 0) ? 1 : -1;
    }
    return c;
}

/// Dense integer polynomial product truncated below `precision`.
inline std::vector<mpz_class> truncated_product(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                                std::size_t precision)
{
    std::vector<mpz_class> c(precision, 0);
    for (std::size_t i = 0; i < a.size() && i < precision; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < precision; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

} // namespace etaq::oracle

#endif
