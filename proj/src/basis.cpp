#include "etaq/basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "etaq/errors.hpp"

namespace etaq
{

EisensteinSeries::EisensteinSeries(int k, std::int64_t t) : k_(k), t_(t)
{
    if (k < 2)
        throw DomainError("Eisenstein series E_2k needs k >= 2, got k=" + std::to_string(k));
    if (t < 1 || 12 % t != 0)
        throw DomainError("Eisenstein dilation must divide 12, got t=" + std::to_string(t));
}

Rational EisensteinSeries::constant_term() const
{
    Rational c = -bernoulli(static_cast<unsigned>(2 * k_)) / Rational(4 * k_);
    c.canonicalize();
    return c;
}

QSeries eisenstein_expand(const EisensteinSeries& e, QSeries::Exponent precision)
{
    if (precision < 1)
        throw DomainError("eisenstein_expand: precision must be at least 1");
    std::vector<Rational> c(static_cast<std::size_t>(precision), Rational(0));
    c[0] = e.constant_term();
    const auto power = static_cast<unsigned>(2 * e.k() - 1);
    for (std::int64_t n = 1; n * e.dilation() < precision; ++n)
        c[static_cast<std::size_t>(n * e.dilation())] = Rational(sigma(power, n));
    return QSeries(0, std::move(c));
}

EtaQuotient cusp_quotient(int j, int weight)
{
    const std::int64_t w = weight;
    const std::int64_t jj = j;
    return EtaQuotient(12, {{1, 6 * w - 3 * jj - 15},
                            {2, 2 * jj - 3 * w + 10},
                            {3, jj - 2 * w + 5},
                            {4, 1 - jj},
                            {6, w - 2 * jj + 2},
                            {12, 3 * jj - 3}});
}

int dim_cusp(int k)
{
    if (k < 2)
        throw DomainError("dim S_2k(Gamma_0(12)) is only tabulated for k >= 2, got k=" + std::to_string(k));
    return 4 * k - 5;
}

CuspBasisElement cusp_element(int k, int j)
{
    const int dim = dim_cusp(k);
    if (j < 1 || j > dim)
        throw DomainError("cusp basis index j=" + std::to_string(j) + " outside 1.." + std::to_string(dim));
    return CuspBasisElement{j, 2 * k, cusp_quotient(j, 2 * k)};
}

std::vector<CuspBasisElement> cusp_basis(int k)
{
    const int dim = dim_cusp(k);
    std::vector<CuspBasisElement> basis;
    basis.reserve(static_cast<std::size_t>(dim));
    for (int j = 1; j <= dim; ++j) {
        auto element = cusp_element(k, j);
        const auto report = ligozat_check(element.quotient);
        if (!report.is_cusp_form || report.weight != 2 * k)
            throw std::logic_error("C_{" + std::to_string(j) + "," + std::to_string(2 * k) +
                                   "} failed the cusp form check: exponent vector is wrong");
        basis.push_back(std::move(element));
    }
    return basis;
}

std::vector<QSeries> cusp_basis_expansions(int k, QSeries::Exponent precision)
{
    std::vector<QSeries> out;
    for (const auto& element : cusp_basis(k))
        out.push_back(expand(element.quotient, precision));
    return out;
}

RationalMatrix basis_matrix(int k, QSeries::Exponent precision)
{
    const int dim = dim_cusp(k);
    if (precision <= dim)
        throw InsufficientPrecision("basis_matrix needs precision > " + std::to_string(dim));
    const auto expansions = cusp_basis_expansions(k, precision);
    RationalMatrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int j = 1; j <= dim; ++j)
        for (int n = 1; n <= dim; ++n)
            m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(n - 1)) =
                expansions[static_cast<std::size_t>(j - 1)].coefficient(n);
    return m;
}

} // namespace etaq
