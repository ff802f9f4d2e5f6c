#ifndef EO_CLI_HPP
#define EO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "eo/prefix_map.hpp"
#include "eo/reasoner.hpp"

namespace eo::cli {

/// Exit codes: 0 success, 1 validation errors, 2 input/parse errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationErrors = 1;
inline constexpr int kExitInputError = 2;

/// Run the command line (without argv[0]); output to `out`, problems to
/// `err`. Deterministic: identical inputs produce identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Structured key-value rendering of a membership trace, two-space
/// indentation per level.
void write_trace(std::ostream& out, const TraceNode& trace, const PrefixMap& prefixes,
                 int indent);

}  // namespace eo::cli

#endif
