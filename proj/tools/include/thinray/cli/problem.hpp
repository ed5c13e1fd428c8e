#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "thinray/algebraic.hpp"
#include "thinray/forms.hpp"
#include "thinray/polyhedron.hpp"
#include "thinray/rayanalysis.hpp"

namespace thinray::cli {

using Json = nlohmann::ordered_json;

struct FieldSpec {
  IntPolynomial min_poly;
  Rational lo;
  Rational hi;
};

struct ProblemFile {
  int dimension = 0;
  std::optional<FieldSpec> field_spec;
  FieldPtr field;
  HPolyhedron polyhedron;
  CubicObjective objective;
  std::vector<Vec> directions;
  std::vector<Curve> curves;
};

/// `context` names the source in error messages.
ProblemFile parse_problem(const Json& doc, const std::string& context = "problem");
ProblemFile parse_problem_text(const std::string& text, const std::string& context = "problem");
ProblemFile load_problem(const std::string& path);

/// Canonical form: every nonzero tensor/matrix entry written out (all index
/// permutations), rationals as strings.
Json serialize_problem(const ProblemFile& p);

/// Rational or coefficient vector over the problem field.
Json field_value_json(const FieldElement& v);
/// Parses "p/q", an integer, or an array of coefficient strings.
FieldElement parse_field_value(const Json& j, const FieldPtr& field, const std::string& where);
/// Parses "p/q" or an integer polynomial in t over the field (e.g. "t^2 - 1").
FieldElement parse_field_expression(const std::string& text, const FieldPtr& field);

}  // namespace thinray::cli
