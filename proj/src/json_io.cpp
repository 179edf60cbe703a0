#include "cellcat/json_io.hpp"

#include <algorithm>

namespace cellcat::io {

namespace {

json integer_json(const Integer& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw FormatError("expected an integer, got " + j.dump());
}

int int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw FormatError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = integer_json(c);
  return out;
}

json to_json(const DeltaPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(integer_json(c));
  return out;
}

json to_json(const tl::Diagram& d) {
  json pairs = json::array();
  for (const auto& [a, b] : d.pairs()) pairs.push_back({a, b});
  return {{"n", d.n()}, {"m", d.m()}, {"pairs", pairs}};
}

json to_json(const tl::Morphism& f) {
  std::vector<std::pair<std::string, json>> terms;
  for (const auto& [d, c] : f.terms()) {
    json dj = to_json(d);
    terms.emplace_back(dj.dump(), json{{"diagram", dj}, {"coeff", to_json(c)}});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json arr = json::array();
  for (auto& t : terms) arr.push_back(std::move(t.second));
  return {{"n", f.n()}, {"m", f.m()}, {"terms", arr}};
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("Laurent polynomial must be a JSON object");
  std::map<int, Integer> coeffs;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != k.size()) throw FormatError("bad exponent key \"" + k + "\"");
    coeffs[e] += integer_from_json(v);
  }
  return LaurentPoly::from_map(coeffs);
}

DeltaPoly delta_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("Z[delta] element must be a JSON array");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return DeltaPoly(c);
}

tl::Diagram diagram_from_json(const json& j) {
  const int n = int_field(j, "n");
  const int m = int_field(j, "m");
  if (!j.contains("pairs") || !j["pairs"].is_array()) throw FormatError("missing \"pairs\" array");
  std::vector<tl::Diagram::Pair> pairs;
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw FormatError("each pair must be [a, b]");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  try {
    return tl::Diagram(n, m, pairs);
  } catch (const tl::DiagramError& e) {
    throw FormatError(e.what());
  }
}

tl::Morphism morphism_from_json(const json& j) {
  if (j.is_object() && j.contains("pairs")) return tl::Morphism(diagram_from_json(j));
  const int n = int_field(j, "n");
  const int m = int_field(j, "m");
  if (!j.contains("terms") || !j["terms"].is_array()) throw FormatError("missing \"terms\" array");
  tl::Morphism out(n, m);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("diagram") || !t.contains("coeff"))
      throw FormatError("each term needs \"diagram\" and \"coeff\"");
    tl::Diagram d = diagram_from_json(t["diagram"]);
    if (d.n() != n || d.m() != m) throw FormatError("term diagram has the wrong shape");
    out.add_term(d, delta_from_json(t["coeff"]));
  }
  return out;
}

}  // namespace cellcat::io
