#include "thinray/cli/problem.hpp"

#include <fstream>
#include <sstream>

#include "thinray/errors.hpp"

namespace thinray::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

Rational parse_rational_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a rational written as a string (\"p/q\") or an integer");
}

BigInt parse_integer_json(const Json& j, const std::string& where) {
  const Rational r = parse_rational_json(j, where);
  if (r.get_den() != 1) fail(where, "expected an integer");
  return r.get_num();
}

int parse_index(const Json& j, int n, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "index must be an integer");
  const long long i = j.get<long long>();
  if (i < 1 || i > n) throw ValidationError(where + ": index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return static_cast<int>(i - 1);
}

std::vector<Json> as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return {j.begin(), j.end()};
}

IntPolynomial parse_int_poly_json(const Json& j, const std::string& where) {
  std::vector<BigInt> c;
  const auto items = as_array(j, where);
  for (std::size_t i = 0; i < items.size(); ++i) c.push_back(parse_integer_json(items[i], where + "[" + std::to_string(i) + "]"));
  return IntPolynomial(std::move(c));
}

}  // namespace

FieldElement parse_field_value(const Json& j, const FieldPtr& field, const std::string& where) {
  if (!j.is_array()) return FieldElement(parse_rational_json(j, where));
  if (!field) throw ValidationError(where + ": coefficient vector given but the problem declares no field");
  const auto items = as_array(j, where);
  if (items.size() > static_cast<std::size_t>(field->degree())) {
    throw ValidationError(where + ": more coefficients than the field degree " + std::to_string(field->degree()));
  }
  std::vector<Rational> c;
  for (std::size_t i = 0; i < items.size(); ++i) c.push_back(parse_rational_json(items[i], where + "[" + std::to_string(i) + "]"));
  return FieldElement(field, std::move(c));
}

FieldElement parse_field_expression(const std::string& text, const FieldPtr& field) {
  try {
    return FieldElement(parse_rational(text));
  } catch (const ParseError&) {
  }
  const IntPolynomial p = parse_int_polynomial(text, 't');
  if (p.degree() <= 0) return FieldElement(p.coeff(0));
  if (!field) throw ValidationError("'" + text + "' uses t but the problem declares no field");
  std::vector<Rational> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return FieldElement(field, std::move(c));
}

Json field_value_json(const FieldElement& v) {
  if (v.is_rational()) return to_string(v.coeffs()[0]);
  Json arr = Json::array();
  for (const auto& c : v.coeffs()) arr.push_back(to_string(c));
  return arr;
}

ProblemFile parse_problem(const Json& doc, const std::string& context) {
  if (!doc.is_object()) fail(context, "top level must be an object");
  ProblemFile p;
  const Json& dim = member(doc, "dimension", context);
  if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 64) {
    fail(context + ".dimension", "expected an integer in 1..64");
  }
  p.dimension = static_cast<int>(dim.get<long long>());
  const int n = p.dimension;

  if (doc.contains("field") && !doc.at("field").is_null()) {
    const std::string where = context + ".field";
    const Json& fj = doc.at("field");
    FieldSpec spec{parse_int_poly_json(member(fj, "min_poly", where), where + ".min_poly"),
                   parse_rational_json(member(fj, "lo", where), where + ".lo"),
                   parse_rational_json(member(fj, "hi", where), where + ".hi")};
    try {
      p.field = NumberField::create(make_algebraic_real(spec.min_poly, spec.lo, spec.hi));
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
    p.field_spec = std::move(spec);
  }

  {
    const std::string where = context + ".polyhedron";
    const Json& pj = member(doc, "polyhedron", context);
    const auto rows = as_array(member(pj, "A", where), where + ".A");
    const auto rhs = as_array(member(pj, "b", where), where + ".b");
    if (rows.size() != rhs.size()) {
      throw ValidationError(where + ": A has " + std::to_string(rows.size()) + " rows but b has " + std::to_string(rhs.size()));
    }
    QMatrix A;
    QVec b;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string rw = where + ".A[" + std::to_string(i) + "]";
      const auto items = as_array(rows[i], rw);
      if (items.size() != static_cast<std::size_t>(n)) {
        throw ValidationError(rw + ": expected " + std::to_string(n) + " entries, got " + std::to_string(items.size()));
      }
      QVec row;
      for (std::size_t k = 0; k < items.size(); ++k) row.push_back(parse_rational_json(items[k], rw + "[" + std::to_string(k) + "]"));
      A.push_back(std::move(row));
      b.push_back(parse_rational_json(rhs[i], where + ".b[" + std::to_string(i) + "]"));
    }
    p.polyhedron = HPolyhedron(n, std::move(A), std::move(b));
  }

  {
    const std::string where = context + ".objective";
    const Json& oj = member(doc, "objective", context);
    if (!oj.is_object()) fail(where, "expected an object");
    const auto nn = static_cast<std::size_t>(n);
    std::vector<FieldElement> rawT(nn * nn * nn);
    std::vector<FieldElement> rawM(nn * nn);
    LinVec V(n);
    if (oj.contains("tensor")) {
      const auto items = as_array(oj.at("tensor"), where + ".tensor");
      for (std::size_t e = 0; e < items.size(); ++e) {
        const std::string ew = where + ".tensor[" + std::to_string(e) + "]";
        const auto i = static_cast<std::size_t>(parse_index(member(items[e], "i", ew), n, ew + ".i"));
        const auto j = static_cast<std::size_t>(parse_index(member(items[e], "j", ew), n, ew + ".j"));
        const auto k = static_cast<std::size_t>(parse_index(member(items[e], "k", ew), n, ew + ".k"));
        rawT[(i * nn + j) * nn + k] += parse_field_value(member(items[e], "value", ew), p.field, ew + ".value");
      }
    }
    if (oj.contains("matrix")) {
      const auto items = as_array(oj.at("matrix"), where + ".matrix");
      for (std::size_t e = 0; e < items.size(); ++e) {
        const std::string ew = where + ".matrix[" + std::to_string(e) + "]";
        const auto i = static_cast<std::size_t>(parse_index(member(items[e], "i", ew), n, ew + ".i"));
        const auto j = static_cast<std::size_t>(parse_index(member(items[e], "j", ew), n, ew + ".j"));
        rawM[i * nn + j] += parse_field_value(member(items[e], "value", ew), p.field, ew + ".value");
      }
    }
    if (oj.contains("vector")) {
      const auto items = as_array(oj.at("vector"), where + ".vector");
      for (std::size_t e = 0; e < items.size(); ++e) {
        const std::string ew = where + ".vector[" + std::to_string(e) + "]";
        const int i = parse_index(member(items[e], "i", ew), n, ew + ".i");
        V.set(i, V[i] + parse_field_value(member(items[e], "value", ew), p.field, ew + ".value"));
      }
    }
    FieldElement c;
    if (oj.contains("constant")) c = parse_field_value(oj.at("constant"), p.field, where + ".constant");
    p.objective = CubicObjective(SymTensor3::symmetrize(n, rawT), SymMatrix::symmetrize(n, rawM), std::move(V), c);
  }

  if (doc.contains("directions")) {
    const auto items = as_array(doc.at("directions"), context + ".directions");
    for (std::size_t e = 0; e < items.size(); ++e) {
      const std::string ew = context + ".directions[" + std::to_string(e) + "]";
      const auto comps = as_array(items[e], ew);
      if (comps.size() != static_cast<std::size_t>(n)) {
        throw ValidationError(ew + ": expected " + std::to_string(n) + " entries, got " + std::to_string(comps.size()));
      }
      Vec d;
      for (std::size_t k = 0; k < comps.size(); ++k) d.push_back(parse_field_value(comps[k], p.field, ew + "[" + std::to_string(k) + "]"));
      p.directions.push_back(std::move(d));
    }
  }

  if (doc.contains("curves")) {
    const auto items = as_array(doc.at("curves"), context + ".curves");
    for (std::size_t e = 0; e < items.size(); ++e) {
      const std::string ew = context + ".curves[" + std::to_string(e) + "]";
      Curve c;
      const auto comps = as_array(member(items[e], "components", ew), ew + ".components");
      if (comps.size() != static_cast<std::size_t>(n)) {
        throw ValidationError(ew + ": expected " + std::to_string(n) + " components, got " + std::to_string(comps.size()));
      }
      for (std::size_t k = 0; k < comps.size(); ++k) {
        c.components.push_back(parse_int_poly_json(comps[k], ew + ".components[" + std::to_string(k) + "]"));
      }
      const auto dom = as_array(member(items[e], "domain", ew), ew + ".domain");
      if (dom.size() != 2) fail(ew + ".domain", "expected [lo, hi]");
      c.lo = parse_rational_json(dom[0], ew + ".domain[0]");
      c.hi = parse_rational_json(dom[1], ew + ".domain[1]");
      if (c.lo > c.hi) throw ValidationError(ew + ".domain: lo > hi");
      p.curves.push_back(std::move(c));
    }
  }
  return p;
}

ProblemFile parse_problem_text(const std::string& text, const std::string& context) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(context + ": " + e.what());
  }
  return parse_problem(doc, context);
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open problem file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str(), path);
}

Json serialize_problem(const ProblemFile& p) {
  const int n = p.dimension;
  Json doc;
  doc["dimension"] = n;
  if (p.field_spec) {
    Json f;
    Json poly = Json::array();
    for (const auto& c : p.field_spec->min_poly.coeffs()) poly.push_back(to_string(c));
    f["min_poly"] = std::move(poly);
    f["lo"] = to_string(p.field_spec->lo);
    f["hi"] = to_string(p.field_spec->hi);
    doc["field"] = std::move(f);
  }
  Json A = Json::array();
  Json b = Json::array();
  for (std::size_t i = 0; i < p.polyhedron.rows(); ++i) {
    Json row = Json::array();
    for (const auto& v : p.polyhedron.A()[i]) row.push_back(to_string(v));
    A.push_back(std::move(row));
    b.push_back(to_string(p.polyhedron.b()[i]));
  }
  doc["polyhedron"] = Json{{"A", std::move(A)}, {"b", std::move(b)}};

  const CubicObjective& f = p.objective;
  Json tensor = Json::array();
  Json matrix = Json::array();
  Json vector = Json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (f.T(i, j, k).is_zero()) continue;
        tensor.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", field_value_json(f.T(i, j, k))}});
      }
      if (!f.M(i, j).is_zero()) matrix.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"value", field_value_json(f.M(i, j))}});
    }
    if (!f.V[i].is_zero()) vector.push_back(Json{{"i", i + 1}, {"value", field_value_json(f.V[i])}});
  }
  doc["objective"] = Json{{"tensor", std::move(tensor)},
                          {"matrix", std::move(matrix)},
                          {"vector", std::move(vector)},
                          {"constant", field_value_json(f.c)}};

  Json dirs = Json::array();
  for (const auto& d : p.directions) {
    Json row = Json::array();
    for (const auto& v : d) row.push_back(field_value_json(v));
    dirs.push_back(std::move(row));
  }
  doc["directions"] = std::move(dirs);

  Json curves = Json::array();
  for (const auto& c : p.curves) {
    Json comps = Json::array();
    for (const auto& poly : c.components) {
      Json cs = Json::array();
      for (const auto& v : poly.coeffs()) cs.push_back(to_string(v));
      comps.push_back(std::move(cs));
    }
    curves.push_back(Json{{"components", std::move(comps)}, {"domain", Json::array({to_string(c.lo), to_string(c.hi)})}});
  }
  doc["curves"] = std::move(curves);
  return doc;
}

}  // namespace thinray::cli
