#ifndef ETAQ_BASIS_HPP
#define ETAQ_BASIS_HPP

#include <cstdint>
#include <vector>

#include "etaq/eta.hpp"
#include "etaq/exact_arith.hpp"
#include "etaq/qseries.hpp"

namespace etaq
{

/// The dilations t of E_2k(tz) spanning the Eisenstein subspace at level 12.
inline constexpr std::int64_t kLevel12Divisors[] = {1, 2, 3, 4, 6, 12};

/// E_2k(tz) = -B_2k/(4k) + sum sigma_(2k-1)(n) q^(tn).
class EisensteinSeries
{
public:
    /// Throws DomainError unless k >= 2 and t divides 12.
    EisensteinSeries(int k, std::int64_t t);

    int k() const noexcept { return k_; }
    int weight() const noexcept { return 2 * k_; }
    std::int64_t dilation() const noexcept { return t_; }

    /// -B_2k / (4k)
    Rational constant_term() const;

private:
    int k_;
    std::int64_t t_;
};

QSeries eisenstein_expand(const EisensteinSeries& e, QSeries::Exponent precision);

/// C_{j,2k}: a weight-2k cusp form on Gamma_0(12) whose expansion starts at q^j.
struct CuspBasisElement
{
    int j;
    int weight;
    EtaQuotient quotient;
};

/// Level-12 quotient C_{j,w} of weight w, with the three defining factors merged:
///   r1 = 6w-3j-15, r2 = 2j-3w+10, r3 = j-2w+5, r4 = 1-j, r6 = w-2j+2, r12 = 3j-3.
/// Its expansion starts at q^j.
EtaQuotient cusp_quotient(int j, int weight);

/// C_{j,2k} for a single j in 1..4k-5. Throws DomainError out of range.
CuspBasisElement cusp_element(int k, int j);

/// The 4k-5 elements C_{1,2k}..C_{4k-5,2k}. Each one is run through ligozat_check on
/// construction; a failure throws std::logic_error. Throws DomainError for k < 2.
std::vector<CuspBasisElement> cusp_basis(int k);

/// expand() of every element of cusp_basis(k), in order of j.
std::vector<QSeries> cusp_basis_expansions(int k, QSeries::Exponent precision);

/// (4k-5)x(4k-5) matrix with entry (j-1, n-1) = [q^n] C_{j,2k}. Requires precision > 4k-5.
RationalMatrix basis_matrix(int k, QSeries::Exponent precision);

/// dim S_2k(Gamma_0(12)) = 4k-5; DomainError for k < 2.
int dim_cusp(int k);

/// dim of the Eisenstein subspace at level 12, weight >= 4.
constexpr int dim_eis()
{
    return 6;
}

} // namespace etaq

#endif
