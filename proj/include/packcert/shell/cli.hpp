#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace packcert::shell {

/// Exit codes: 0 every check passed, 1 some check failed or was disproved,
/// 2 something stayed inconclusive, 3 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace packcert::shell
