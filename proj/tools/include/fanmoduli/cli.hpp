#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fanmoduli::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 domain error, 2 malformed input or usage error. Errors are reported as
// a JSON object on `out`; usage text goes to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fanmoduli::cli
