#include "facsub/json_io.hpp"

#include "facsub/error.hpp"

namespace facsub {
namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw DomainError(path + ": " + what);
}

std::int64_t int_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<std::int64_t>();
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<Point> points_from_json(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(point_from_json(j[i], dim, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

Json point_to_json(const Point& p) {
  Json j = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) j.push_back(p[i]);
  return j;
}

Point point_from_json(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of integers");
  if (j.size() != dim) schema(path, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  Point p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = int_at(j[i], path + "[" + std::to_string(i) + "]");
  return p;
}

Json witness_to_json(const Witness& w) {
  Json j = Json::array();
  for (const auto& p : w.points) j.push_back(point_to_json(p));
  for (auto k : w.ints) j.push_back(k);
  if (!w.digits.empty()) j.push_back(Json{{"digits", w.digits}});
  return j;
}

Witness witness_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) schema("witness", "expected an array");
  Witness w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = "witness[" + std::to_string(i) + "]";
    const Json& item = j[i];
    if (item.is_array()) {
      if (!w.ints.empty() || !w.digits.empty()) schema(path, "points must precede integers");
      w.points.push_back(point_from_json(item, dim, path));
    } else if (item.is_number_integer()) {
      if (!w.digits.empty()) schema(path, "integers must precede digits");
      w.ints.push_back(item.get<std::int64_t>());
    } else if (item.is_object()) {
      const Json& rows = field(item, "digits", path);
      if (!rows.is_array()) schema(path + ".digits", "expected an array of rows");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string rpath = path + ".digits[" + std::to_string(r) + "]";
        if (!rows[r].is_array()) schema(rpath, "expected an array");
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          row.push_back(int_at(rows[r][c], rpath + "[" + std::to_string(c) + "]"));
        }
        w.digits.push_back(std::move(row));
      }
    } else {
      schema(path, "expected a point, an integer or a digits object");
    }
  }
  return w;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["condition"] = v.condition;
  j["outcome"] = std::string(outcome_name(v.outcome));
  j["bound"] = Json{{"B", v.bound.B}, {"K", v.bound.K}};
  j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  j["reason"] = v.reason ? Json(*v.reason) : Json(nullptr);
  return j;
}

Verdict verdict_from_json(const Json& j, std::size_t dim) {
  Verdict v;
  const Json& cond = field(j, "condition", "verdict");
  if (!cond.is_string()) schema("verdict.condition", "expected a string");
  v.condition = cond.get<std::string>();
  const Json& outcome = field(j, "outcome", "verdict");
  if (!outcome.is_string()) schema("verdict.outcome", "expected a string");
  const auto o = parse_outcome(outcome.get<std::string>());
  if (!o) schema("verdict.outcome", "unknown outcome");
  v.outcome = *o;
  const Json& bound = field(j, "bound", "verdict");
  v.bound.B = int_at(field(bound, "B", "verdict.bound"), "verdict.bound.B");
  v.bound.K = int_at(field(bound, "K", "verdict.bound"), "verdict.bound.K");
  if (j.contains("witness") && !j["witness"].is_null()) v.witness = witness_from_json(j["witness"], dim);
  if (j.contains("reason") && !j["reason"].is_null()) {
    if (!j["reason"].is_string()) schema("verdict.reason", "expected a string");
    v.reason = j["reason"].get<std::string>();
  }
  return v;
}

Json instance_to_json(const Instance& inst) {
  Json amb;
  amb["dim"] = inst.ambient.dim();
  Json signs = Json::array();
  for (auto s : inst.ambient.signs()) signs.push_back(s == CoordSign::Nat ? "nat" : "int");
  amb["signs"] = signs;
  amb["grading"] = inst.ambient.grading();
  Json j;
  j["ambient"] = amb;
  Json gens = Json::array(), units = Json::array();
  for (const auto& g : inst.gens) gens.push_back(point_to_json(g));
  for (const auto& u : inst.unit_gens) units.push_back(point_to_json(u));
  j["gens"] = gens;
  j["unit_gens"] = units;
  return j;
}

Instance instance_from_json(const Json& j) {
  const Json& amb = field(j, "ambient", "instance");
  const std::int64_t dim = int_at(field(amb, "dim", "ambient"), "ambient.dim");
  if (dim < 1 || dim > static_cast<std::int64_t>(kMaxDim)) {
    schema("ambient.dim", "must be between 1 and " + std::to_string(kMaxDim));
  }
  const auto n = static_cast<std::size_t>(dim);
  const Json& signs = field(amb, "signs", "ambient");
  if (!signs.is_array() || signs.size() != n) schema("ambient.signs", "expected " + std::to_string(n) + " entries");
  std::vector<CoordSign> sv;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string path = "ambient.signs[" + std::to_string(i) + "]";
    if (signs[i] == "nat") {
      sv.push_back(CoordSign::Nat);
    } else if (signs[i] == "int") {
      sv.push_back(CoordSign::Int);
    } else {
      schema(path, "expected \"nat\" or \"int\"");
    }
  }
  std::optional<std::vector<std::int64_t>> grading;
  if (amb.contains("grading") && !amb["grading"].is_null()) {
    const Json& g = amb["grading"];
    if (!g.is_array()) schema("ambient.grading", "expected an array of integers");
    grading.emplace();
    for (std::size_t i = 0; i < g.size(); ++i) grading->push_back(int_at(g[i], "ambient.grading[" + std::to_string(i) + "]"));
  }
  Instance inst{AmbientLattice(std::move(sv), std::move(grading)), {}, {}};
  inst.gens = points_from_json(field(j, "gens", "instance"), n, "gens");
  if (j.contains("unit_gens")) inst.unit_gens = points_from_json(j["unit_gens"], n, "unit_gens");
  return inst;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports the 1-based offset of the offending byte.
    const std::size_t pos = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    throw ParseError("malformed JSON (" + (colon == std::string::npos ? what : what.substr(colon + 2)) + ")", pos);
  }
}

Instance parse_instance(std::string_view text) { return instance_from_json(parse_json_text(text)); }

PolyMap poly_map_from_json(const Json& j) {
  auto strings = [&](const char* key) {
    const Json& a = field(j, key, "map");
    if (!a.is_array()) schema(key, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_string()) schema(std::string(key) + "[" + std::to_string(i) + "]", "expected a string");
      out.push_back(a[i].get<std::string>());
    }
    return out;
  };
  return PolyMap::parse(strings("vars"), strings("polys"));
}

Json minor_report_to_json(const MinorReport& rep, const PolyMap& m) {
  Json polys = Json::array();
  for (const auto& f : m.fs()) polys.push_back(f.to_string(m.vars()));
  Json minors = Json::array();
  for (std::size_t i = 0; i < rep.minors.size(); ++i) {
    Json cols = Json::array();
    for (auto c : rep.indices[i]) cols.push_back(m.vars()[c]);
    minors.push_back(Json{{"columns", cols}, {"minor", rep.minors[i].to_string(m.vars())}});
  }
  Json j;
  j["vars"] = m.vars();
  j["polys"] = polys;
  j["minors"] = minors;
  j["gcd"] = rep.gcd.to_string(m.vars());
  j["verdict"] = rep.verdict;
  return j;
}

Json bridge_report_to_json(const BridgeReport& rep, const PolyMap& m) {
  Json j;
  j["status"] = rep.consistent ? "CONSISTENT" : "INCONSISTENT";
  j["fragment"] = verdict_to_json(rep.fragment);
  j["minors"] = minor_report_to_json(rep.minors, m);
  return j;
}

}  // namespace facsub
