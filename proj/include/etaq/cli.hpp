#ifndef ETAQ_CLI_HPP
#define ETAQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "etaq/formula.hpp"

namespace etaq::cli
{

/// Process exit codes.
enum ExitCode : int
{
    kSuccess = 0,  ///< success, or every comparison exact
    kMismatch = 1, ///< an identity failed against its oracle
    kInvalid = 2,  ///< malformed arguments or domain violation
};

/// {"k":int,"i":int,"alpha":"p/q","b":{"1":"p/q",...,"12":"p/q"},"a":["p/q",...]}
nlohmann::json formula_to_json(const Formula& f);

/// Inverse of formula_to_json. Throws ParseError on schema violations.
Formula formula_from_json(const nlohmann::json& doc);

/// Parses argv (argv[0] is the program name) and runs one subcommand:
/// expand, check, formula, verify, basis. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace etaq::cli

#endif
