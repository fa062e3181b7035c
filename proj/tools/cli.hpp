#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cobordism/fixedpoint.hpp"

namespace cobordism::cli {

/// Exit codes: 0 no failing check, 1 some check failed, 2 bad input or usage.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Builtin actions swept by `verify --all` when no action is given.
std::vector<MuTwoActionModel> catalog_actions(int max_n);

/// Runs one theorem on one action.
Report run_theorem(const std::string& theorem, const MuTwoActionModel& action, int order, int max_m);

/// Runs every (action, theorem) pair on a worker pool; reports are merged in input order.
Report run_batch(const std::vector<MuTwoActionModel>& actions, const std::vector<std::string>& theorems, int order,
                 int max_m, unsigned jobs);

}  // namespace cobordism::cli
