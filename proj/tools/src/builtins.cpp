#include "thinray/cli/builtins.hpp"

namespace thinray::cli {

namespace data {
extern const char kCubicExample[];
extern const char kQuadraticExample[];
}  // namespace data

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> list = {{"cubic-example", data::kCubicExample},
                                            {"quadratic-example", data::kQuadraticExample}};
  return list;
}

std::optional<std::string_view> builtin_text(std::string_view name) {
  for (const auto& b : builtins()) {
    if (b.name == name) return b.json;
  }
  return std::nullopt;
}

ProblemFile load_problem_or_builtin(const std::string& arg) {
  if (auto text = builtin_text(arg)) return parse_problem_text(std::string(*text), arg);
  return load_problem(arg);
}

}  // namespace thinray::cli
