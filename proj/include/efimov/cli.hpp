#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace efimov::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInfeasible = 2,
  kThreshold = 3,
  kUniversalityFailed = 4,
};

// Parses numbers with an optional pi factor: "3", "1e-3", "pi", "8pi", "8*pi", "-0.5pi".
double parse_number(const std::string& text);

// Flat "key = value" lines; '#' starts a comment. Throws DomainError on malformed lines.
std::map<std::string, std::string> parse_config(const std::string& text);

// Entry point behind the efimov executable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace efimov::cli
