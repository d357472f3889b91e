#pragma once

// Command-line front end.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sylvres/bipoly.hpp"

namespace sylvres::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kFailure = 2,
    kOracleMismatch = 3,
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One term "c i j" per line, '#' starts a comment, j may be omitted, repeated
/// monomials are summed. Throws ParseError.
BiPoly parse_terms(const FieldPtr& F, std::istream& in);
BiPoly read_terms_file(const FieldPtr& F, const std::string& path);

/// "c i j" lines, by descending j then i.
std::string format_terms(const BiPoly& f);
/// "c i" lines by descending i.
std::string format_terms(const UPoly& f);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylvres::cli
