#ifndef ETAQ_ETA_HPP
#define ETAQ_ETA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "etaq/exact_arith.hpp"
#include "etaq/qseries.hpp"

namespace etaq
{

/// prod over delta | level of eta(delta z)^r_delta.
///
/// Zero exponents are dropped on construction, so exponents() only holds the
/// nonzero r_delta; an EtaQuotient with no exponents is the constant 1.
class EtaQuotient
{
public:
    using Exponents = std::map<std::int64_t, std::int64_t>;

    /// Throws DomainError if level < 1 or some key is not a positive divisor of level.
    EtaQuotient(std::int64_t level, Exponents exponents);

    /// The empty quotient (constant 1) at the given level.
    static EtaQuotient empty(std::int64_t level) { return EtaQuotient(level, {}); }

    std::int64_t level() const noexcept { return level_; }
    const Exponents& exponents() const noexcept { return exponents_; }

    /// r_delta, zero when absent.
    std::int64_t exponent(std::int64_t delta) const;

    bool is_empty() const noexcept { return exponents_.empty(); }

    /// sum of delta * r_delta; the leading q-power is this over 24.
    std::int64_t weighted_sum() const;

    /// 1/2 sum r_delta.
    Rational weight() const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::int64_t level_;
    Exponents exponents_;
};

/// Product of two quotients: levels combine by lcm, exponent maps add.
EtaQuotient operator*(const EtaQuotient& f, const EtaQuotient& g);

/// A cusp a/c. The point at infinity is represented by 1/N at level N.
struct Cusp
{
    std::int64_t a = 1;
    std::int64_t c = 1;

    static Cusp infinity(std::int64_t level) { return Cusp{1, level}; }

    friend auto operator<=>(const Cusp&, const Cusp&) = default;
};

std::string to_string(const Cusp& cusp);

/// The six cusp representatives of Gamma_0(12), in the order 1/12 (infinity), 1, 1/2, 1/3, 1/4, 1/6.
std::vector<Cusp> level12_cusps();

struct LigozatReport
{
    Rational weight;
    bool L1_ok = false; ///< sum delta r_delta = 0 mod 24
    bool L2_ok = false; ///< sum (N/delta) r_delta = 0 mod 24
    bool L3_ok = false; ///< every cusp order >= 0
    bool L4_ok = false; ///< sqrt(prod delta^r_delta) is rational
    bool L5_ok = false; ///< weight is an even integer
    std::map<Cusp, Rational> cusp_orders; ///< keyed by 1/d for each d | N
    bool is_modular = false;
    bool is_cusp_form = false;
};

/// prod_{n>=1} (1 - q^(delta n)), i.e. eta(delta z) without its q^(delta/24) factor,
/// known for exponents below `precision`. Computed by direct multiplication of the factors.
QSeries eta_unit_series(std::int64_t delta, QSeries::Exponent precision);

/// Exact q-expansion of f, known for exponents below `precision`.
/// Throws FractionalLeadingPower when 24 does not divide weighted_sum().
QSeries expand(const EtaQuotient& f, QSeries::Exponent precision);

/// Leading q-power sum delta r_delta / 24, possibly non-integral.
Rational fractional_order(const EtaQuotient& f);

/// Order of f at the cusp a/c:
///   N / (24 gcd(c^2, N)) * sum_delta gcd(delta, c)^2 r_delta / delta.
/// Throws CuspNotOnLevel when c does not divide N.
Rational cusp_order(const EtaQuotient& f, const Cusp& cusp);

/// Evaluates the Ligozat conditions exactly. L4 is decided by factoring prod delta^r_delta.
LigozatReport ligozat_check(const EtaQuotient& f);

/// The level-12 shortcut for L4: r_2 + r_6 and r_3 + r_6 + r_12 both even.
bool l4_parity_level12(const EtaQuotient& f);

/// phi(z)^(4k-2i) phi(3z)^(2i) written over eta(delta z), delta | 12.
/// Throws DomainError unless k >= 2 and 0 <= i <= 2k.
EtaQuotient phi_power_quotient(int k, int i);

/// phi(z) = eta(2z)^5 / (eta(z)^2 eta(4z)^2) at level 4.
EtaQuotient phi_quotient();

/// Parses "delta:exponent(,delta:exponent)*"; the empty string is the empty quotient.
/// Whitespace is not permitted. Throws ParseError on malformed input (including repeated
/// deltas) and DomainError when a delta does not divide level.
EtaQuotient parse_eta_quotient(std::string_view text, std::int64_t level);

/// Inverse of parse_eta_quotient, deltas ascending.
std::string format_eta_quotient(const EtaQuotient& f);

} // namespace etaq

#endif
