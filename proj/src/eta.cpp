#include "etaq/eta.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "etaq/errors.hpp"

namespace etaq
{

EtaQuotient::EtaQuotient(std::int64_t level, Exponents exponents) : level_(level)
{
    if (level < 1)
        throw DomainError("eta quotient level must be positive, got " + std::to_string(level));
    for (const auto& [delta, r] : exponents) {
        if (delta < 1 || level % delta != 0)
            throw DomainError("eta factor delta=" + std::to_string(delta) + " does not divide level " +
                              std::to_string(level));
        if (r != 0)
            exponents_.emplace(delta, r);
    }
}

std::int64_t EtaQuotient::exponent(std::int64_t delta) const
{
    auto it = exponents_.find(delta);
    return it == exponents_.end() ? 0 : it->second;
}

std::int64_t EtaQuotient::weighted_sum() const
{
    std::int64_t s = 0;
    for (const auto& [delta, r] : exponents_)
        s += delta * r;
    return s;
}

Rational EtaQuotient::weight() const
{
    std::int64_t s = 0;
    for (const auto& [delta, r] : exponents_)
        s += r;
    return make_rational(s, 2);
}

EtaQuotient operator*(const EtaQuotient& f, const EtaQuotient& g)
{
    EtaQuotient::Exponents merged = f.exponents();
    for (const auto& [delta, r] : g.exponents())
        merged[delta] += r;
    return EtaQuotient(std::lcm(f.level(), g.level()), std::move(merged));
}

std::string to_string(const Cusp& cusp)
{
    return std::to_string(cusp.a) + "/" + std::to_string(cusp.c);
}

std::vector<Cusp> level12_cusps()
{
    return {Cusp{1, 12}, Cusp{1, 1}, Cusp{1, 2}, Cusp{1, 3}, Cusp{1, 4}, Cusp{1, 6}};
}

QSeries eta_unit_series(std::int64_t delta, QSeries::Exponent precision)
{
    if (delta < 1)
        throw DomainError("eta_unit_series: delta must be positive");
    if (precision < 1)
        throw DomainError("eta_unit_series: precision must be at least 1");
    const auto len = static_cast<std::size_t>(precision);
    std::vector<Integer> c(len, Integer(0));
    c[0] = 1;
    // multiply in (1 - q^m) for m = delta, 2 delta, ... below the precision
    for (auto m = static_cast<std::size_t>(delta); m < len; m += static_cast<std::size_t>(delta))
        for (std::size_t n = len; n-- > m;)
            if (c[n - m] != 0)
                c[n] -= c[n - m];
    std::vector<Rational> out;
    out.reserve(len);
    for (auto& x : c)
        out.emplace_back(x);
    return QSeries(0, std::move(out));
}

Rational fractional_order(const EtaQuotient& f)
{
    return make_rational(f.weighted_sum(), 24);
}

QSeries expand(const EtaQuotient& f, QSeries::Exponent precision)
{
    const auto ws = f.weighted_sum();
    if (ws % 24 != 0)
        throw FractionalLeadingPower("eta quotient has leading power q^(" + to_string(fractional_order(f)) +
                                     "), not an integer power of q");
    const auto lead = ws / 24;
    const auto relative = precision - lead;
    if (relative <= 0)
        return QSeries(lead, {}, precision);

    std::vector<std::pair<std::int64_t, std::int64_t>> order(f.exponents().begin(), f.exponents().end());
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& x, const auto& y) { return std::llabs(x.second) < std::llabs(y.second); });

    QSeries result = QSeries::one(relative);
    for (const auto& [delta, r] : order)
        result = mul(result, pow(eta_unit_series(delta, relative), r));
    return result.shifted(lead);
}

Rational cusp_order(const EtaQuotient& f, const Cusp& cusp)
{
    const auto level = f.level();
    if (cusp.c < 1 || level % cusp.c != 0)
        throw CuspNotOnLevel("cusp " + to_string(cusp) + " is not a cusp representative at level " +
                             std::to_string(level));
    Rational sum(0);
    for (const auto& [delta, r] : f.exponents()) {
        const auto g = std::gcd(delta, cusp.c);
        sum += make_rational(g * g * r, delta);
    }
    return make_rational(level, 24 * std::gcd(cusp.c * cusp.c, level)) * sum;
}

namespace
{

std::int64_t mod(std::int64_t x, std::int64_t m)
{
    return ((x % m) + m) % m;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

// prime -> exponent of prod delta^r_delta
std::map<std::int64_t, std::int64_t> factor_product(const EtaQuotient& f)
{
    std::map<std::int64_t, std::int64_t> exps;
    for (auto [delta, r] : f.exponents()) {
        auto n = delta;
        for (std::int64_t p = 2; p * p <= n; ++p)
            while (n % p == 0) {
                exps[p] += r;
                n /= p;
            }
        if (n > 1)
            exps[n] += r;
    }
    return exps;
}

} // namespace

bool l4_parity_level12(const EtaQuotient& f)
{
    return mod(f.exponent(2) + f.exponent(6), 2) == 0 &&
           mod(f.exponent(3) + f.exponent(6) + f.exponent(12), 2) == 0;
}

LigozatReport ligozat_check(const EtaQuotient& f)
{
    const auto level = f.level();
    LigozatReport report;
    report.weight = f.weight();

    std::int64_t l2 = 0;
    for (const auto& [delta, r] : f.exponents())
        l2 += (level / delta) * r;
    report.L1_ok = mod(f.weighted_sum(), 24) == 0;
    report.L2_ok = mod(l2, 24) == 0;

    bool all_nonneg = true;
    bool all_pos = true;
    for (auto d : divisors(level)) {
        Rational v = cusp_order(f, Cusp{1, d});
        all_nonneg = all_nonneg && v >= 0;
        all_pos = all_pos && v > 0;
        report.cusp_orders.emplace(Cusp{1, d}, std::move(v));
    }
    report.L3_ok = all_nonneg;

    const auto prime_exps = factor_product(f);
    report.L4_ok = std::all_of(prime_exps.begin(), prime_exps.end(), [](const auto& pe) { return pe.second % 2 == 0; });

    report.L5_ok = is_integer(report.weight) && report.weight.get_num() % 2 == 0;

    report.is_modular = report.L1_ok && report.L2_ok && report.L3_ok && report.L4_ok && report.L5_ok;
    report.is_cusp_form = report.is_modular && all_pos;
    return report;
}

EtaQuotient phi_power_quotient(int k, int i)
{
    if (k < 2 || i < 0 || i > 2 * k)
        throw DomainError("phi_power_quotient requires k >= 2 and 0 <= i <= 2k, got k=" + std::to_string(k) +
                          ", i=" + std::to_string(i));
    const std::int64_t outer = 8 * k - 4 * i;
    return EtaQuotient(12, {{1, -outer}, {2, 20 * k - 10 * i}, {3, -4 * i}, {4, -outer}, {6, 10 * i}, {12, -4 * i}});
}

EtaQuotient phi_quotient()
{
    return EtaQuotient(4, {{1, -2}, {2, 5}, {4, -2}});
}

namespace
{

std::int64_t parse_int(std::string_view token, std::string_view whole)
{
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    // from_chars rejects a leading '+'; accept it for symmetry with '-'
    if (first != last && *first == '+' && last - first > 1 && first[1] != '-')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
        throw ParseError("malformed eta quotient '" + std::string(whole) + "': bad integer '" + std::string(token) + "'");
    return value;
}

} // namespace

EtaQuotient parse_eta_quotient(std::string_view text, std::int64_t level)
{
    EtaQuotient::Exponents exps;
    if (text.empty())
        return EtaQuotient(level, std::move(exps));
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("malformed eta quotient '" + std::string(text) + "': expected delta:exponent, got '" +
                             std::string(item) + "'");
        const auto delta = parse_int(item.substr(0, colon), text);
        const auto r = parse_int(item.substr(colon + 1), text);
        if (!exps.emplace(delta, r).second)
            throw ParseError("malformed eta quotient '" + std::string(text) + "': delta " + std::to_string(delta) +
                             " repeated");
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return EtaQuotient(level, std::move(exps));
}

std::string format_eta_quotient(const EtaQuotient& f)
{
    std::string out;
    for (const auto& [delta, r] : f.exponents()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(delta) + ":" + std::to_string(r);
    }
    return out;
}

} // namespace etaq
