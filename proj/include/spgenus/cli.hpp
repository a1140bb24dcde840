#ifndef SPGENUS_CLI_HPP
#define SPGENUS_CLI_HPP

#include <iosfwd>
#include <string>

namespace spgenus {

inline constexpr const char* kToolName = "spgenus";
inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes are part of the contract so scripted callers can branch on the
// failure mode instead of scraping stderr.
enum ExitCode : int {
    kOk = 0,
    kParseFailure = 1,      // unreadable file, malformed edge list, bad usage
    kValidationFailure = 2, // graph outside the supported family, bad terminals
    kMismatch = 3,          // check: engine and oracle disagree
    kLimitExceeded = 4,     // oracle census larger than the cap
    kInternalFailure = 5,   // a library invariant broke; always a bug
};

// Full command-line front end, stream-parameterized so tests can drive it
// in-process.  argv follows main() conventions (argv[0] is the tool name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// FNV-1a (64-bit) over the raw input document, e.g. "fnv1a64:a1b2...";
// identifies inputs in output documents without implying cryptographic use.
std::string input_digest(const std::string& bytes);

} // namespace spgenus

#endif
