#include "etaq/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "etaq/basis.hpp"
#include "etaq/errors.hpp"

namespace etaq::cli
{

using nlohmann::json;

json formula_to_json(const Formula& f)
{
    json b = json::object();
    for (const auto& [r, value] : f.b)
        b[std::to_string(r)] = to_string(value);
    json a = json::array();
    for (const auto& value : f.a)
        a.push_back(to_string(value));
    return json{{"k", f.k}, {"i", f.i}, {"alpha", to_string(f.alpha)}, {"b", b}, {"a", a}};
}

Formula formula_from_json(const json& doc)
{
    try {
        Formula f;
        f.k = doc.at("k").get<int>();
        f.i = doc.at("i").get<int>();
        f.alpha = parse_rational(doc.at("alpha").get<std::string>());
        for (auto r : kLevel12Divisors)
            f.b[r] = parse_rational(doc.at("b").at(std::to_string(r)).get<std::string>());
        if (doc.at("b").size() != std::size(kLevel12Divisors))
            throw ParseError("formula document: b must have exactly the keys 1,2,3,4,6,12");
        for (const auto& value : doc.at("a"))
            f.a.push_back(parse_rational(value.get<std::string>()));
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("formula document: ") + e.what());
    }
}

namespace
{

std::string join(const std::vector<Rational>& values, const char* sep)
{
    std::string out;
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (n)
            out += sep;
        out += to_string(values[n]);
    }
    return out;
}

json to_json_array(const std::vector<Rational>& values)
{
    json a = json::array();
    for (const auto& v : values)
        a.push_back(to_string(v));
    return a;
}

std::vector<Rational> first_coefficients(const QSeries& s, std::int64_t terms)
{
    std::vector<Rational> out;
    for (auto n = s.leading_exponent(); n < s.leading_exponent() + terms; ++n)
        out.push_back(s.coefficient(n));
    return out;
}

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

const char* pass_fail(bool b)
{
    return b ? "pass" : "fail";
}

struct Settings
{
    int k = 0;
    int i = 0;
    std::int64_t level = 0;
    std::string eta;
    std::int64_t terms = 20;
    int kmax = 0;
    std::int64_t nmax = 0;
    bool json = false;
    bool csv = false;
    std::string b1_fault;
};

int cmd_expand(const Settings& s, std::ostream& out)
{
    if (s.terms < 1)
        throw DomainError("--terms must be at least 1");
    const auto f = parse_eta_quotient(s.eta, s.level);
    const Rational order = fractional_order(f);
    if (!is_integer(order))
        throw FractionalLeadingPower("eta quotient has leading power q^(" + to_string(order) +
                                     "); 24 must divide sum delta*r_delta");
    const auto lead = order.get_num().get_si();
    const auto coeffs = first_coefficients(expand(f, lead + s.terms), s.terms);
    if (s.json) {
        out << json{{"level", s.level},
                    {"eta", format_eta_quotient(f)},
                    {"leading_exponent", lead},
                    {"coefficients", to_json_array(coeffs)}}
                   .dump()
            << '\n';
    } else {
        out << "leading_exponent: " << lead << '\n';
        out << "coefficients: " << join(coeffs, ",") << '\n';
    }
    return kSuccess;
}

int cmd_check(const Settings& s, std::ostream& out)
{
    const auto f = parse_eta_quotient(s.eta, s.level);
    const auto report = ligozat_check(f);
    if (s.json) {
        json orders = json::object();
        for (const auto& [cusp, v] : report.cusp_orders)
            orders[to_string(cusp)] = to_string(v);
        out << json{{"level", f.level()},
                    {"eta", format_eta_quotient(f)},
                    {"weight", to_string(report.weight)},
                    {"L1", report.L1_ok},
                    {"L2", report.L2_ok},
                    {"L3", report.L3_ok},
                    {"L4", report.L4_ok},
                    {"L5", report.L5_ok},
                    {"cusp_orders", orders},
                    {"modular", report.is_modular},
                    {"cusp_form", report.is_cusp_form}}
                   .dump()
            << '\n';
        return kSuccess;
    }
    out << "level: " << f.level() << '\n';
    out << "weight: " << to_string(report.weight) << '\n';
    out << "L1: " << pass_fail(report.L1_ok) << '\n';
    out << "L2: " << pass_fail(report.L2_ok) << '\n';
    out << "L3: " << pass_fail(report.L3_ok) << '\n';
    out << "L4: " << pass_fail(report.L4_ok) << '\n';
    out << "L5: " << pass_fail(report.L5_ok) << '\n';
    for (const auto& [cusp, v] : report.cusp_orders)
        out << "order at " << to_string(cusp) << ": " << to_string(v) << '\n';
    out << "modular: " << yes_no(report.is_modular) << ", cusp form: " << yes_no(report.is_cusp_form) << '\n';
    return kSuccess;
}

int cmd_formula(const Settings& s, std::ostream& out)
{
    const Formula f = build_formula(s.k, s.i);
    if (s.json) {
        out << formula_to_json(f).dump() << '\n';
        return kSuccess;
    }
    out << "k: " << f.k << '\n';
    out << "i: " << f.i << '\n';
    out << "alpha: " << to_string(f.alpha) << '\n';
    for (const auto& [r, value] : f.b)
        out << "b_" << r << ": " << to_string(value) << '\n';
    for (std::size_t j = 0; j < f.a.size(); ++j)
        out << "a_" << j + 1 << ": " << to_string(f.a[j]) << '\n';
    return kSuccess;
}

int cmd_verify(const Settings& s, std::ostream& out)
{
    VerifyOptions options;
    options.kmax = s.kmax;
    options.nmax = s.nmax;
    if (!s.b1_fault.empty())
        options.b1_fault = parse_rational(s.b1_fault);
    const auto report = verify_identity(options);
    if (const auto& m = report.mismatch) {
        out << "MISMATCH k=" << m->k << " i=" << m->i << " n=" << m->n << ": " << m->what << "; expected "
            << m->expected << ", got " << m->actual << '\n';
        return kMismatch;
    }
    out << "verified " << report.cells << " (k,i) cells, " << report.comparisons
        << " exact comparisons, kmax=" << s.kmax << " nmax=" << s.nmax << '\n';
    return kSuccess;
}

int cmd_basis(const Settings& s, std::ostream& out)
{
    if (s.terms < 1)
        throw DomainError("--terms must be at least 1");
    const auto cusp = cusp_basis_expansions(s.k, s.terms);
    std::vector<std::vector<Rational>> eis;
    for (auto t : kLevel12Divisors)
        eis.push_back(first_coefficients(eisenstein_expand(EisensteinSeries(s.k, t), s.terms), s.terms));

    if (s.json) {
        json cusp_rows = json::array();
        for (std::size_t j = 0; j < cusp.size(); ++j) {
            std::vector<Rational> row;
            for (std::int64_t n = 0; n < s.terms; ++n)
                row.push_back(cusp[j].coefficient(n));
            cusp_rows.push_back({{"j", j + 1}, {"coefficients", to_json_array(row)}});
        }
        json eis_rows = json::array();
        for (std::size_t t = 0; t < eis.size(); ++t)
            eis_rows.push_back({{"t", kLevel12Divisors[t]}, {"coefficients", to_json_array(eis[t])}});
        out << json{{"k", s.k}, {"weight", 2 * s.k}, {"terms", s.terms}, {"cusp", cusp_rows}, {"eisenstein", eis_rows}}
                   .dump()
            << '\n';
        return kSuccess;
    }
    out << "kind,index";
    for (std::int64_t n = 0; n < s.terms; ++n)
        out << ",q" << n;
    out << '\n';
    for (std::size_t j = 0; j < cusp.size(); ++j) {
        out << "cusp," << j + 1;
        for (std::int64_t n = 0; n < s.terms; ++n)
            out << ',' << to_string(cusp[j].coefficient(n));
        out << '\n';
    }
    for (std::size_t t = 0; t < eis.size(); ++t)
        out << "eisenstein," << kLevel12Divisors[t] << ',' << join(eis[t], ",") << '\n';
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact eta-quotient bases and representation-number formulas at level 12"};
    app.name(args.empty() ? "etaq" : args.front());
    app.require_subcommand(1);
    Settings s;

    auto* expand_cmd = app.add_subcommand("expand", "q-expansion of an eta quotient");
    expand_cmd->add_option("--level", s.level, "level N")->required();
    expand_cmd->add_option("--eta", s.eta, "delta:exponent list, e.g. 1:-2,2:5,4:-2")->required();
    expand_cmd->add_option("--terms", s.terms, "number of coefficients from the leading exponent")->capture_default_str();
    expand_cmd->add_flag("--json", s.json, "JSON output");

    auto* check_cmd = app.add_subcommand("check", "Ligozat conditions and cusp orders");
    check_cmd->add_option("--level", s.level, "level N")->required();
    check_cmd->add_option("--eta", s.eta, "delta:exponent list")->required();
    check_cmd->add_flag("--json", s.json, "JSON output");

    auto* formula_cmd = app.add_subcommand("formula", "coefficients of the formula for N(1^(4k-2i),3^(2i);n)");
    formula_cmd->add_option("--k", s.k, "weight is 2k")->required();
    formula_cmd->add_option("--i", s.i, "2i variables carry coefficient 3")->required();
    formula_cmd->add_flag("--json", s.json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "check the formula against the theta-product oracle");
    verify_cmd->add_option("--kmax", s.kmax, "largest k")->required();
    verify_cmd->add_option("--nmax", s.nmax, "largest n; defaults to 4*kmax-5");
    verify_cmd->add_option("--terms", s.nmax, "alias for --nmax");
    verify_cmd->add_option("--inject-b1-fault", s.b1_fault, "add this rational to b_1 (test mode)")->group("");

    auto* basis_cmd = app.add_subcommand("basis", "coefficient tables of C_{j,2k} and E_2k(tz)");
    basis_cmd->add_option("--k", s.k, "weight is 2k")->required();
    basis_cmd->add_option("--terms", s.terms, "coefficients q^0 .. q^(terms-1)")->capture_default_str();
    auto* json_flag = basis_cmd->add_flag("--json", s.json, "JSON output");
    auto* csv_flag = basis_cmd->add_flag("--csv", s.csv, "CSV output (default)");
    json_flag->excludes(csv_flag);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalid;
    }

    try {
        if (expand_cmd->parsed())
            return cmd_expand(s, out);
        if (check_cmd->parsed())
            return cmd_check(s, out);
        if (formula_cmd->parsed())
            return cmd_formula(s, out);
        if (verify_cmd->parsed()) {
            if (verify_cmd->count("--nmax") == 0 && verify_cmd->count("--terms") == 0)
                s.nmax = 4 * s.kmax - 5;
            return cmd_verify(s, out);
        }
        if (basis_cmd->parsed())
            return cmd_basis(s, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}

} // namespace etaq::cli
