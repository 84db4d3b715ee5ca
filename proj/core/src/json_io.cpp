#include "freelip/json_io.hpp"

#include "freelip/errors.hpp"

namespace freelip {

namespace {

using nlohmann::json;

const json& expect(const json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(context) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

std::string expect_string(const json& j, const char* context) {
  if (!j.is_string()) {
    throw ParseError(std::string(context) + ": expected a string");
  }
  return j.get<std::string>();
}

int resolve_point(const FiniteMetricSpace& space, const std::string& label,
                  const char* context) {
  auto idx = space.index_of(label);
  if (!idx) {
    throw UnknownPoint(std::string(context) + ": unknown point \"" + label +
                       "\"");
  }
  return *idx;
}

std::string pair_key(const FiniteMetricSpace& space, int x, int y) {
  return space.label(x) + "->" + space.label(y);
}

std::pair<int, int> parse_pair_key(const FiniteMetricSpace& space,
                                   const std::string& key,
                                   const char* context) {
  // labels never contain "->" (enforced at build), so the split is unique
  auto sep = key.find("->");
  if (sep == std::string::npos) {
    throw ParseError(std::string(context) + ": pair key \"" + key +
                     "\" lacks \"->\"");
  }
  int x = resolve_point(space, key.substr(0, sep), context);
  int y = resolve_point(space, key.substr(sep + 2), context);
  return {x, y};
}

}  // namespace

json space_to_json(const FiniteMetricSpace& space) {
  json dist = json::array();
  for (int i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < space.size(); ++j) {
      row.push_back(format_rational(space.dist(i, j)));
    }
    dist.push_back(std::move(row));
  }
  return json{{"points", space.points()},
              {"base", space.base()},
              {"dist", std::move(dist)}};
}

SpacePtr space_from_json(const json& j) {
  const json& points_j = expect(j, "points", "space");
  const json& base_j = expect(j, "base", "space");
  const json& dist_j = expect(j, "dist", "space");
  if (!points_j.is_array() || !dist_j.is_array() ||
      !base_j.is_number_integer()) {
    throw ParseError("space: malformed fields");
  }
  std::vector<std::string> points;
  for (const auto& p : points_j) points.push_back(expect_string(p, "space"));
  std::vector<std::vector<Rational>> dist;
  for (const auto& row_j : dist_j) {
    if (!row_j.is_array()) throw ParseError("space: dist row is not an array");
    std::vector<Rational> row;
    for (const auto& cell : row_j) {
      row.push_back(parse_rational(expect_string(cell, "space")));
    }
    dist.push_back(std::move(row));
  }
  return make_space(std::move(points), std::move(dist), base_j.get<int>());
}

json element_to_json(const FreeElement& m) {
  json weights = json::object();
  for (const auto& [point, w] : m.weights()) {
    weights[m.space()->label(point)] = format_rational(w);
  }
  return json{{"weights", std::move(weights)}};
}

FreeElement element_from_json(SpacePtr space, const json& j) {
  const json& weights_j = expect(j, "weights", "element");
  if (!weights_j.is_object()) {
    throw ParseError("element: \"weights\" must be an object");
  }
  std::map<int, Rational> weights;
  for (const auto& [label, value] : weights_j.items()) {
    int point = resolve_point(*space, label, "element");
    weights[point] += parse_rational(expect_string(value, "element"));
  }
  return FreeElement::from_weights(std::move(space), weights);
}

json function_to_json(const LipschitzFunction& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(format_rational(v));
  return json{{"values", std::move(values)}};
}

LipschitzFunction function_from_json(SpacePtr space, const json& j) {
  const json& values_j = expect(j, "values", "function");
  if (!values_j.is_array()) {
    throw ParseError("function: \"values\" must be an array");
  }
  std::vector<Rational> values;
  for (const auto& v : values_j) {
    values.push_back(parse_rational(expect_string(v, "function")));
  }
  return LipschitzFunction::from_values(std::move(space), std::move(values));
}

json measure_to_json(const DeLeeuwMeasure& mu) {
  json mass = json::object();
  for (const auto& [pair, w] : mu.mass()) {
    mass[pair_key(*mu.space(), pair.first, pair.second)] = format_rational(w);
  }
  return json{{"mass", std::move(mass)}};
}

DeLeeuwMeasure measure_from_json(SpacePtr space, const json& j) {
  const json& mass_j = expect(j, "mass", "measure");
  if (!mass_j.is_object()) {
    throw ParseError("measure: \"mass\" must be an object");
  }
  std::map<std::pair<int, int>, Rational> mass;
  for (const auto& [key, value] : mass_j.items()) {
    auto pair = parse_pair_key(*space, key, "measure");
    mass[pair] += parse_rational(expect_string(value, "measure"));
  }
  return DeLeeuwMeasure::from_masses(std::move(space), mass);
}

json solution_to_json(const NormSolution& s) {
  const auto& space = *s.witness.space();
  json flow = json::object();
  for (const auto& [pair, a] : s.flow) {
    flow[pair_key(space, pair.first, pair.second)] = format_rational(a);
  }
  return json{{"value", format_rational(s.value)},
              {"flow", std::move(flow)},
              {"witness", function_to_json(s.witness)}};
}

json certificate_to_json(const SpacePtr& space,
                         const ExtremalityCertificate& cert) {
  json j = json::object();
  switch (cert.verdict) {
    case Verdict::extreme:
      j["verdict"] = "Extreme";
      break;
    case Verdict::not_extreme:
      j["verdict"] = "NotExtreme";
      break;
    case Verdict::not_a_molecule:
      j["verdict"] = "NotAMolecule";
      break;
  }
  if (cert.pair) {
    j["pair"] = {space->label(cert.pair->first),
                 space->label(cert.pair->second)};
  }
  if (cert.violating_point) {
    j["violating_point"] = space->label(*cert.violating_point);
  }
  if (cert.exposed_constant) {
    j["exposed_constant"] = cert.exposed_constant->is_unbounded()
                                ? "unbounded"
                                : format_rational(cert.exposed_constant->value());
  }
  if (cert.localized) {
    j["localized"] = measure_to_json(*cert.localized);
  }
  return j;
}

}  // namespace freelip
