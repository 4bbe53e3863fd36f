#include "etaq/formula.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "etaq/basis.hpp"
#include "etaq/errors.hpp"

namespace etaq
{

namespace
{

void require_k(int k)
{
    if (k < 2)
        throw DomainError("k must be at least 2 (S_2(Gamma_0(12)) is trivial), got k=" + std::to_string(k));
}

void require_ki(int k, int i)
{
    require_k(k);
    if (i < 0 || i > 2 * k)
        throw DomainError("i must satisfy 0 <= i <= 2k, got k=" + std::to_string(k) + ", i=" + std::to_string(i));
}

Rational sign(int e)
{
    return Rational(e % 2 == 0 ? 1 : -1);
}

Rational ipow(unsigned long base, unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return Rational(r);
}

} // namespace

Rational alpha(int k)
{
    require_k(k);
    const auto twok = static_cast<unsigned long>(2 * k);
    Rational r = Rational(-4 * k) / ((ipow(2, twok) - 1) * (ipow(3, twok) - 1) * bernoulli(static_cast<unsigned>(twok)));
    r.canonicalize();
    return r;
}

BCoefficients b_closed_form(int k, int i)
{
    require_ki(k, i);
    const Rational a = alpha(k);
    const auto twok = static_cast<unsigned long>(2 * k);
    const Rational p3 = ipow(3, twok - static_cast<unsigned long>(i)); // 3^(2k-i)
    const Rational u = p3 + sign(i + 1);                                // 3^(2k-i) + (-1)^(i+1)
    const Rational v = ipow(3, static_cast<unsigned long>(i)) + sign(i + 1); // 3^i + (-1)^(i+1)
    const Rational even = 1 + sign(i + k);                              // 1 + (-1)^(i+k)
    const Rational p2 = ipow(2, twok);

    BCoefficients b;
    b[1] = sign(k) * u * a;
    b[2] = sign(i + 1) * even * u * a;
    b[3] = sign(i + k) * p3 * v * a;
    b[4] = sign(i) * p2 * u * a;
    b[6] = -even * p3 * v * a;
    b[12] = p2 * p3 * v * a;
    for (auto& [r, x] : b)
        x.canonicalize();
    return b;
}

std::vector<CuspFirstTerm> first_terms_phi(int k, int i)
{
    require_ki(k, i);
    const auto twok = static_cast<unsigned long>(2 * k);
    const Rational p2 = ipow(2, twok);
    const Rational p3i = ipow(3, static_cast<unsigned long>(i));
    std::vector<CuspFirstTerm> out;
    for (const auto& cusp : level12_cusps()) {
        Rational value;
        switch (cusp.c) {
        case 12: value = 1; break;
        case 1: value = sign(k) / (p2 * p3i); break;
        case 3: value = sign(i + k) / p2; break;
        case 4: value = sign(i) / p3i; break;
        default: value = 0; break; // 1/2 and 1/6: positive order, so no constant term
        }
        value.canonicalize();
        out.push_back({cusp, value});
    }
    return out;
}

RationalMatrix eis_first_term_matrix(int k)
{
    require_k(k);
    const auto cusps = level12_cusps();
    RationalMatrix m(cusps.size(), std::size(kLevel12Divisors));
    for (std::size_t row = 0; row < cusps.size(); ++row)
        for (std::size_t col = 0; col < std::size(kLevel12Divisors); ++col) {
            const auto t = kLevel12Divisors[col];
            const Rational ratio = make_rational(std::gcd(t, cusps[row].c), t);
            Rational entry;
            mpz_pow_ui(entry.get_num_mpz_t(), ratio.get_num_mpz_t(), static_cast<unsigned long>(2 * k));
            mpz_pow_ui(entry.get_den_mpz_t(), ratio.get_den_mpz_t(), static_cast<unsigned long>(2 * k));
            m(row, col) = entry;
        }
    return m;
}

BCoefficients b_from_linear_system(int k, int i)
{
    require_ki(k, i);
    const Rational scale = Rational(-4 * k) / bernoulli(static_cast<unsigned>(2 * k));
    RationalVector rhs;
    for (const auto& term : first_terms_phi(k, i))
        rhs.push_back(term.value * scale);
    const auto solution = solve_linear_system(eis_first_term_matrix(k), rhs);
    BCoefficients b;
    for (std::size_t col = 0; col < solution.size(); ++col)
        b[kLevel12Divisors[col]] = solution[col];
    return b;
}

QSeries theta_series(QSeries::Exponent precision)
{
    std::vector<Rational> c(static_cast<std::size_t>(std::max<QSeries::Exponent>(precision, 0)), Rational(0));
    if (!c.empty())
        c[0] = 1;
    for (QSeries::Exponent n = 1; n * n < precision; ++n)
        c[static_cast<std::size_t>(n * n)] = 2;
    return QSeries(0, std::move(c), std::max<QSeries::Exponent>(precision, 0));
}

QSeries representation_count_oracle(int k, int i, QSeries::Exponent n_max)
{
    if (k < 1 || i < 0 || i > 2 * k)
        throw DomainError("representation_count_oracle requires k >= 1 and 0 <= i <= 2k");
    if (n_max < 0)
        throw DomainError("representation_count_oracle requires n_max >= 0");
    const auto precision = n_max + 1;
    const QSeries phi = theta_series(precision);
    const QSeries phi3 = phi.dilated(3).truncated(precision);
    return mul(pow(phi, 4 * k - 2 * i), pow(phi3, 2 * i));
}

std::vector<std::int64_t> quadratic_form_coefficients(int k, int i)
{
    if (k < 1 || i < 0 || i > 2 * k)
        throw DomainError("quadratic_form_coefficients requires k >= 1 and 0 <= i <= 2k");
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(4 * k - 2 * i), 1);
    coeffs.insert(coeffs.end(), static_cast<std::size_t>(2 * i), 3);
    return coeffs;
}

Integer lattice_count_bruteforce(std::span<const std::int64_t> coeffs, std::int64_t n, std::uint64_t max_box)
{
    if (n < 0)
        return 0;
    std::vector<std::int64_t> bound;
    double box = 1.0;
    for (auto a : coeffs) {
        if (a < 1)
            throw DomainError("lattice_count_bruteforce: coefficients must be positive");
        std::int64_t b = 0;
        while ((b + 1) * (b + 1) * a <= n)
            ++b;
        bound.push_back(b);
        box *= static_cast<double>(2 * b + 1);
    }
    if (box > static_cast<double>(max_box))
        throw ResourceLimit("lattice enumeration box of " + std::to_string(box) + " points exceeds the limit of " +
                            std::to_string(max_box));

    std::uint64_t count = 0;
    std::function<void(std::size_t, std::int64_t)> visit = [&](std::size_t slot, std::int64_t remaining) {
        if (slot == coeffs.size()) {
            if (remaining == 0)
                ++count;
            return;
        }
        for (std::int64_t x = -bound[slot]; x <= bound[slot]; ++x) {
            const auto used = coeffs[slot] * x * x;
            if (used <= remaining)
                visit(slot + 1, remaining - used);
        }
    };
    visit(0, n);
    return Integer(static_cast<unsigned long>(count));
}

std::vector<Rational> a_coefficients(int k, int i, const std::vector<QSeries>& basis_expansions,
                                     QSeries::Exponent precision)
{
    require_ki(k, i);
    const int dim = 4 * k - 5;
    if (precision <= dim)
        throw InsufficientPrecision("a_coefficients needs precision > " + std::to_string(dim));
    if (basis_expansions.size() != static_cast<std::size_t>(dim))
        throw DomainError("a_coefficients: expected " + std::to_string(dim) + " basis expansions");
    const auto b = b_closed_form(k, i);
    const QSeries counts = representation_count_oracle(k, i, dim);
    const auto power = static_cast<unsigned>(2 * k - 1);

    std::vector<Rational> a;
    for (int j = 1; j <= dim; ++j) {
        Rational value = counts.coefficient(j);
        for (const auto& [r, br] : b)
            if (br != 0)
                value -= br * Rational(sigma(power, make_rational(j, r)));
        for (int l = 1; l < j; ++l)
            value -= a[static_cast<std::size_t>(l - 1)] * basis_expansions[static_cast<std::size_t>(l - 1)].coefficient(j);
        a.push_back(value);
    }
    return a;
}

Formula build_formula(int k, int i, const std::vector<QSeries>& basis_expansions)
{
    require_ki(k, i);
    Formula f;
    f.k = k;
    f.i = i;
    f.alpha = alpha(k);
    f.b = b_closed_form(k, i);
    QSeries::Exponent precision = 4 * k - 4;
    for (const auto& s : basis_expansions)
        precision = std::min(precision, s.precision());
    f.a = a_coefficients(k, i, basis_expansions, precision);
    return f;
}

Formula build_formula(int k, int i)
{
    require_ki(k, i);
    return build_formula(k, i, cusp_basis_expansions(k, 4 * k - 4));
}

Rational eisenstein_part(const Formula& f, std::int64_t n)
{
    Rational total(0);
    if (n < 0)
        return total;
    const auto power = static_cast<unsigned>(2 * f.k - 1);
    const Rational constant = EisensteinSeries(f.k, 1).constant_term();
    for (const auto& [r, br] : f.b) {
        if (br == 0)
            continue;
        if (n == 0)
            total += br * constant;
        else
            total += br * Rational(sigma(power, make_rational(n, r)));
    }
    return total;
}

Rational evaluate(const Formula& f, const std::vector<QSeries>& c_expansions, std::int64_t n)
{
    if (c_expansions.size() < f.a.size())
        throw DomainError("evaluate: fewer basis expansions than a-coefficients");
    Rational total = eisenstein_part(f, n);
    for (std::size_t j = 0; j < f.a.size(); ++j)
        if (f.a[j] != 0)
            total += f.a[j] * c_expansions[j].coefficient(n);
    return total;
}

VerifyReport verify_identity(const VerifyOptions& options)
{
    if (options.kmax < 2)
        throw DomainError("verify needs kmax >= 2, got " + std::to_string(options.kmax));
    if (options.nmax < 4 * options.kmax - 5)
        throw DomainError("verify needs nmax >= 4*kmax-5 = " + std::to_string(4 * options.kmax - 5));

    VerifyReport report;
    for (int k = 2; k <= options.kmax; ++k) {
        const auto expansions = cusp_basis_expansions(k, options.nmax + 1);
        for (int i = 0; i <= 2 * k; ++i) {
            ++report.cells;
            Formula f = build_formula(k, i, expansions);
            if (options.b1_fault)
                f.b[1] += *options.b1_fault;
            const QSeries oracle = representation_count_oracle(k, i, options.nmax);

            auto fail = [&](std::int64_t n, const Rational& expected, const Rational& actual, std::string what) {
                report.mismatch = Mismatch{k, i, n, to_string(expected), to_string(actual), std::move(what)};
            };

            for (std::int64_t n = 1; n <= options.nmax; ++n) {
                ++report.comparisons;
                const Rational expected = oracle.coefficient(n);
                const Rational actual = evaluate(f, expansions, n);
                if (actual != expected) {
                    fail(n, expected, actual, "formula disagrees with theta-product oracle");
                    return report;
                }
            }

            const auto b_system = b_from_linear_system(k, i);
            for (const auto& [r, br] : b_system) {
                ++report.comparisons;
                if (f.b.at(r) != br) {
                    fail(-1, br, f.b.at(r), "b_" + std::to_string(r) + " closed form disagrees with linear system");
                    return report;
                }
            }

            ++report.comparisons;
            const Rational constant = evaluate(f, expansions, 0);
            if (constant != 1) {
                fail(0, Rational(1), constant, "constant term is not 1");
                return report;
            }
        }
    }
    return report;
}

} // namespace etaq
