#ifndef ETAQ_FORMULA_HPP
#define ETAQ_FORMULA_HPP

// The representation-number formula for N(1^(4k-2i), 3^(2i); n):
//
//   phi(z)^(4k-2i) phi(3z)^(2i) = sum_{r | 12} b_r E_2k(rz) + sum_{j=1}^{4k-5} a_j C_{j,2k}(z)
//
// b_r comes either from closed forms or from matching constant terms at the six
// cusps of Gamma_0(12); a_j comes from a forward recursion on the first 4k-5
// coefficients. The theta-product and lattice-enumeration oracles here never
// touch eta quotients.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "etaq/eta.hpp"
#include "etaq/exact_arith.hpp"
#include "etaq/qseries.hpp"

namespace etaq
{

/// b_r keyed by r in {1, 2, 3, 4, 6, 12}.
using BCoefficients = std::map<std::int64_t, Rational>;

struct Formula
{
    int k = 0;
    int i = 0;
    Rational alpha;
    BCoefficients b;
    std::vector<Rational> a; ///< a_1 .. a_(4k-5)

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// Constant term at a cusp of Gamma_0(12), weight factor (-cz-1)^2k stripped.
struct CuspFirstTerm
{
    Cusp cusp;
    Rational value;
};

/// alpha_k = -4k / ((2^2k - 1)(3^2k - 1) B_2k). DomainError for k < 2.
Rational alpha(int k);

/// Closed forms for the six Eisenstein coefficients. DomainError unless k >= 2, 0 <= i <= 2k.
BCoefficients b_closed_form(int k, int i);

/// First terms of phi(z)^(4k-2i) phi(3z)^(2i), ordered as level12_cusps().
std::vector<CuspFirstTerm> first_terms_phi(int k, int i);

/// 6x6 matrix of first terms of E_2k(tz) at the cusps, divided by -B_2k/(4k):
/// entry (cusp 1/c, t) = (gcd(t, c)/t)^2k. Rows ordered as level12_cusps(), columns as t = 1,2,3,4,6,12.
RationalMatrix eis_first_term_matrix(int k);

/// Solves the 6x6 first-term system for b. Must agree with b_closed_form.
BCoefficients b_from_linear_system(int k, int i);

/// phi(z) = sum_{n in Z} q^(n^2), known below q^precision.
QSeries theta_series(QSeries::Exponent precision);

/// phi(z)^(4k-2i) phi(3z)^(2i) to q^n_max inclusive, built from theta_series only.
/// Accepts any k >= 1; DomainError unless 0 <= i <= 2k and n_max >= 0.
QSeries representation_count_oracle(int k, int i, QSeries::Exponent n_max);

/// Default cap on the enumeration box of lattice_count_bruteforce.
inline constexpr std::uint64_t kLatticeSearchLimit = 100'000'000;

/// #{x in Z^m : sum coeffs[j] x_j^2 = n} by exhaustive enumeration.
/// Throws ResourceLimit when the box prod (2 floor(sqrt(n/a_j)) + 1) exceeds max_box.
Integer lattice_count_bruteforce(std::span<const std::int64_t> coeffs, std::int64_t n,
                                 std::uint64_t max_box = kLatticeSearchLimit);

/// The multiset 1^(4k-2i) 3^(2i).
std::vector<std::int64_t> quadratic_form_coefficients(int k, int i);

/// a_1..a_(4k-5) by forward recursion. basis_expansions[j-1] must be C_{j,2k} known to
/// at least `precision`; precision must exceed 4k-5. Throws InsufficientPrecision otherwise.
std::vector<Rational> a_coefficients(int k, int i, const std::vector<QSeries>& basis_expansions,
                                     QSeries::Exponent precision);

/// Full formula with the basis expanded to the minimal 4k-4 coefficients.
Formula build_formula(int k, int i);

/// Same, reusing already-expanded cusp basis series.
Formula build_formula(int k, int i, const std::vector<QSeries>& basis_expansions);

/// sum_r b_r [q^n] E_2k(rz): the Eisenstein part of the right-hand side.
Rational eisenstein_part(const Formula& f, std::int64_t n);

/// Right-hand side of the identity at q^n. n = 0 uses the Eisenstein constant terms.
/// Throws InsufficientPrecision when some c_expansions entry is not known at n.
Rational evaluate(const Formula& f, const std::vector<QSeries>& c_expansions, std::int64_t n);

struct VerifyOptions
{
    int kmax = 2;
    std::int64_t nmax = 0;
    /// Test hook: added to b_1 after the a-recursion, to exercise mismatch reporting.
    std::optional<Rational> b1_fault;
};

struct Mismatch
{
    int k = 0;
    int i = 0;
    std::int64_t n = 0; ///< -1 for a b closed-form vs linear-system disagreement
    std::string expected;
    std::string actual;
    std::string what;
};

struct VerifyReport
{
    int cells = 0;
    std::int64_t comparisons = 0;
    std::optional<Mismatch> mismatch; ///< the first failure, in (k, i, n) order
};

/// For 2 <= k <= kmax, 0 <= i <= 2k: compares evaluate() against the theta oracle for
/// n = 1..nmax, then the two b derivations, then the n = 0 constant term. Stops at the
/// first mismatch. DomainError unless kmax >= 2 and nmax >= 4 kmax - 5.
VerifyReport verify_identity(const VerifyOptions& options);

} // namespace etaq

#endif
