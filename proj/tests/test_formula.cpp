#include <doctest.h>

#include "etaq/basis.hpp"
#include "etaq/errors.hpp"
#include "etaq/formula.hpp"
#include "oracles.hpp"

using namespace etaq;

namespace
{

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> values)
{
    std::vector<Rational> out;
    for (auto [n, d] : values)
        out.push_back(make_rational(n, d));
    return out;
}

} // namespace

TEST_CASE("alpha")
{
    CHECK(alpha(2) == make_rational(1, 5));
    CHECK(alpha(3) == make_rational(-1, 91));
    // (3^2 + (-1)^5) alpha_3 (-1)^3 = b_(1,4,3) = 8/91
    CHECK(-(9 - 1) * alpha(3) == make_rational(8, 91));
    for (int k = 2; k <= 10; ++k)
        CHECK(sgn(alpha(k)) == -sgn(bernoulli(static_cast<unsigned>(2 * k))));
    CHECK_THROWS_AS(alpha(1), DomainError);
}

TEST_CASE("b_closed_form: worked examples")
{
    CHECK(b_closed_form(2, 1) == BCoefficients{{1, make_rational(28, 5)},
                                               {2, 0},
                                               {3, make_rational(-108, 5)},
                                               {4, make_rational(-448, 5)},
                                               {6, 0},
                                               {12, make_rational(1728, 5)}});
    // b_12 for (k, i) = (3, 4) is -46080/91 (2^6 3^2 (3^4 - 1) alpha_3)
    CHECK(b_closed_form(3, 4) == BCoefficients{{1, make_rational(8, 91)},
                                               {2, 0},
                                               {3, make_rational(720, 91)},
                                               {4, make_rational(-512, 91)},
                                               {6, 0},
                                               {12, make_rational(-46080, 91)}});
    CHECK_THROWS_AS(b_closed_form(2, 5), DomainError);
    CHECK_THROWS_AS(b_closed_form(1, 0), DomainError);
}

TEST_CASE("b coefficients sum to -4k/B_2k; the printed -4608/91 would not")
{
    for (int k = 2; k <= 6; ++k)
        for (int i = 0; i <= 2 * k; ++i) {
            Rational sum(0);
            for (const auto& [r, b] : b_closed_form(k, i))
                sum += b;
            CHECK(sum == Rational(-4 * k) / bernoulli(static_cast<unsigned>(2 * k)));
        }
    auto b = b_closed_form(3, 4);
    b[12] = make_rational(-4608, 91);
    Rational sum(0);
    for (const auto& [r, x] : b)
        sum += x;
    CHECK(sum != -504);
}

TEST_CASE("b vanishing structure")
{
    for (int k = 2; k <= 6; ++k)
        for (int i = 0; i <= 2 * k; ++i) {
            const auto b = b_closed_form(k, i);
            const bool odd = (i + k) % 2 == 1;
            const bool top = i == 2 * k; // 3^(2k-i) - 1 = 0
            CHECK((b.at(2) == 0) == (odd || top));
            CHECK((b.at(6) == 0) == (odd || i == 0));
            CHECK((b.at(3) == 0) == (i == 0));
            CHECK((b.at(12) == 0) == (i == 0));
            CHECK((b.at(1) == 0) == top);
            CHECK((b.at(4) == 0) == top);
        }
}

TEST_CASE("first_terms_phi")
{
    const auto t = first_terms_phi(2, 1);
    REQUIRE(t.size() == 6);
    CHECK(t[0].cusp == Cusp{1, 12});
    CHECK(t[0].value == 1);
    CHECK(t[1].value == make_rational(1, 48));
    CHECK(t[2].value == 0);
    CHECK(t[3].value == make_rational(-1, 16));
    CHECK(t[4].value == make_rational(-1, 3));
    CHECK(t[5].value == 0);
    CHECK(first_terms_phi(2, 0)[4].value == 1);
    for (int k = 2; k <= 4; ++k)
        for (int i = 0; i <= 2 * k; ++i)
            CHECK(first_terms_phi(k, i)[2].value == 0);
}

TEST_CASE("eis_first_term_matrix")
{
    for (int k = 2; k <= 4; ++k) {
        const auto m = eis_first_term_matrix(k);
        auto inv_pow = [k](long base) -> Rational {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(2 * k));
            return Rational(1) / Rational(p);
        };
        for (std::size_t col = 0; col < 6; ++col)
            CHECK(m(0, col) == 1);
        const long t[] = {1, 2, 3, 4, 6, 12};
        for (std::size_t col = 0; col < 6; ++col)
            CHECK(m(1, col) == inv_pow(t[col]));
        CHECK(m(2, 5) == inv_pow(6));
    }
}

TEST_CASE("linear-system b equals closed-form b on k = 2..6")
{
    CHECK(b_from_linear_system(2, 1) == b_closed_form(2, 1));
    CHECK(b_from_linear_system(3, 4) == b_closed_form(3, 4));
    for (int k = 2; k <= 6; ++k)
        for (int i = 0; i <= 2 * k; ++i)
            CHECK(b_from_linear_system(k, i) == b_closed_form(k, i));
}

TEST_CASE("representation_count_oracle")
{
    const auto s21 = representation_count_oracle(2, 1, 3);
    CHECK(s21.coefficients() == std::vector<Rational>{1, 12, 60, 164});

    const auto s34 = representation_count_oracle(3, 4, 7);
    CHECK(s34.coefficients() == std::vector<Rational>{1, 8, 24, 48, 152, 432, 720, 1344});

    // r_4(n) = 8 sigma(n) - 32 sigma(n/4): k = 1 is allowed here
    const auto r4 = representation_count_oracle(1, 0, 30);
    for (std::int64_t n = 1; n <= 30; ++n) {
        Rational expected = 8 * Rational(oracle::divisor_power_sum(1, n));
        if (n % 4 == 0)
            expected -= 32 * Rational(oracle::divisor_power_sum(1, n / 4));
        CHECK(r4.coefficient(n) == expected);
    }
    for (int k = 1; k <= 4; ++k)
        for (int i = 0; i <= 2 * k; ++i)
            CHECK(representation_count_oracle(k, i, 5).coefficient(0) == 1);
}

TEST_CASE("lattice_count_bruteforce")
{
    const auto f = quadratic_form_coefficients(2, 1);
    CHECK(f == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 3, 3});
    CHECK(lattice_count_bruteforce(f, 1) == 12);
    CHECK(lattice_count_bruteforce(f, 0) == 1);
    const std::vector<std::int64_t> ones(8, 1);
    CHECK(lattice_count_bruteforce(ones, 1) == 16);
    CHECK_THROWS_AS(lattice_count_bruteforce(ones, 20, 1000), ResourceLimit);
}

TEST_CASE("lattice enumeration agrees with the theta oracle for k = 2")
{
    for (int i = 0; i <= 2; ++i) {
        const auto theta = representation_count_oracle(2, i, 10);
        const auto coeffs = quadratic_form_coefficients(2, i);
        for (std::int64_t n = 0; n <= 10; ++n)
            CHECK(theta.coefficient(n) == Rational(lattice_count_bruteforce(coeffs, n)));
    }
}

TEST_CASE("a_coefficients: worked examples")
{
    CHECK(a_coefficients(2, 1, cusp_basis_expansions(2, 4), 4) == rationals({{32, 5}, {48, 1}, {576, 5}}));
    CHECK(a_coefficients(3, 4, cusp_basis_expansions(3, 8), 8) ==
          rationals({{720, 91}, {14880, 91}, {123376, 91}, {40640, 7}, {1248448, 91}, {1551360, 91}, {792576, 91}}));
    CHECK_THROWS_AS(a_coefficients(2, 1, cusp_basis_expansions(2, 4), 3), InsufficientPrecision);
}

TEST_CASE("build_formula")
{
    const auto f = build_formula(2, 1);
    CHECK(f.k == 2);
    CHECK(f.i == 1);
    CHECK(f.alpha == make_rational(1, 5));
    CHECK(f.b == b_closed_form(2, 1));
    CHECK(f.a == rationals({{32, 5}, {48, 1}, {576, 5}}));
    CHECK_THROWS_AS(build_formula(1, 0), DomainError);
    CHECK_THROWS_AS(build_formula(2, 5), DomainError);
}

TEST_CASE("evaluate reproduces representation numbers")
{
    const auto f21 = build_formula(2, 1);
    const auto c2 = cusp_basis_expansions(2, 30);
    CHECK(evaluate(f21, c2, 3) == 164);
    CHECK(evaluate(f21, c2, 0) == 1);
    // sigma(1/r) = 0 for r > 1, so at n = 1 only b_1 survives in the Eisenstein part
    CHECK(eisenstein_part(f21, 1) == f21.b.at(1));

    const auto f34 = build_formula(3, 4);
    const auto c3 = cusp_basis_expansions(3, 30);
    CHECK(evaluate(f34, c3, 7) == 1344);
    CHECK(evaluate(f34, c3, 0) == 1);

    CHECK_THROWS_AS(evaluate(f21, cusp_basis_expansions(2, 5), 5), InsufficientPrecision);
}

TEST_CASE("oracle identity for k = 2..4 up to n = 80")
{
    for (int k = 2; k <= 4; ++k) {
        const auto c = cusp_basis_expansions(k, 81);
        for (int i = 0; i <= 2 * k; ++i) {
            const auto f = build_formula(k, i, c);
            const auto oracle = representation_count_oracle(k, i, 80);
            for (std::int64_t n = 0; n <= 80; ++n) {
                const auto value = evaluate(f, c, n);
                CHECK(value == oracle.coefficient(n));
                CHECK(is_integer(value));
                CHECK(value >= 0);
            }
        }
    }
}

TEST_CASE("i = 0: Eisenstein part is the classical Ramanujan-Mordell sigma combination")
{
    for (int k = 2; k <= 6; ++k) {
        const auto f = build_formula(k, 0);
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(2 * k));
        const Rational scale = Rational(4 * k) / ((Rational(p2) - 1) * bernoulli(static_cast<unsigned>(2 * k)));
        const unsigned power = static_cast<unsigned>(2 * k - 1);
        for (std::int64_t n = 1; n <= 40; ++n) {
            const Rational s1 = sigma(power, n);
            const Rational s2 = sigma(power, make_rational(n, 2));
            const Rational s4 = sigma(power, make_rational(n, 4));
            const Rational sign_k1 = (k % 2 == 0) ? -1 : 1;
            const Rational one_plus = (k % 2 == 0) ? 2 : 0;
            const Rational expected = scale * (sign_k1 * s1 + one_plus * s2 - Rational(p2) * s4);
            CHECK(eisenstein_part(f, n) == expected);
        }
    }
}

TEST_CASE("verify_identity")
{
    const auto ok = verify_identity({3, 40, std::nullopt});
    CHECK_FALSE(ok.mismatch.has_value());
    CHECK(ok.cells == 5 + 7);

    VerifyOptions faulty{2, 3, Rational(1)};
    const auto bad = verify_identity(faulty);
    REQUIRE(bad.mismatch.has_value());
    CHECK(bad.mismatch->k == 2);
    CHECK(bad.mismatch->i == 0);
    CHECK(bad.mismatch->n == 1);

    CHECK_THROWS_AS(verify_identity({1, 10, std::nullopt}), DomainError);
    CHECK_THROWS_AS(verify_identity({3, 6, std::nullopt}), DomainError);
}
