#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thinray/cli/problem.hpp"

namespace thinray::cli {

struct Builtin {
  std::string_view name;
  std::string_view json;
};

/// cubic-example and quadratic-example, identical to data/*.json.
const std::vector<Builtin>& builtins();
std::optional<std::string_view> builtin_text(std::string_view name);

/// A builtin name or a path to a problem file.
ProblemFile load_problem_or_builtin(const std::string& arg);

}  // namespace thinray::cli
