#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pctk {

/// Grid arguments: a single value, a comma list, or an inclusive a:b:s range.
std::vector<double> parse_value_grid(const std::string& text);
std::vector<int> parse_order_grid(const std::string& text);

/// Entry point behind the pctk binary. Exit codes: 0 success, 1 failed
/// checks (verify, or sweep --strict), 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pctk
