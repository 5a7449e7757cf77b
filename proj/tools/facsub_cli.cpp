// Command-line front end over the C API.
//
// Exit status: 0 holds / consistent / pass, 1 fails / mismatch, 2 usage or
// input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "facsub/facsub.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Input {
  std::string message;
};

// Owns a string returned by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { facsub_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

void check(facsub_status st, const std::string& context) {
  if (st == FACSUB_OK) return;
  throw Input{context.empty() ? facsub_last_error() : context + ": " + facsub_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Input{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Subring {
  facsub_subring* h = nullptr;
  explicit Subring(const std::string& path) { check(facsub_subring_from_json(read_file(path).c_str(), &h), path); }
  ~Subring() { facsub_subring_free(h); }
};

// Splits on commas outside parentheses.
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  for (auto& t : out) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? "" : t.substr(b, e - b + 1);
  }
  return out;
}

std::string witness_text(const Json& w) { return w.is_null() ? "" : w.dump(); }

void print_verdict(const Json& v) {
  std::cout << std::left << std::setw(24) << v["condition"].get<std::string>() << std::setw(21)
            << v["outcome"].get<std::string>();
  if (!v["witness"].is_null()) std::cout << "witness " << witness_text(v["witness"]);
  if (!v["reason"].is_null()) std::cout << v["reason"].get<std::string>();
  std::cout << "\n";
}

struct Common {
  std::int64_t B = 12;
  std::int64_t K = 6;
  bool json = false;
  facsub_bound bound() const { return {B, K}; }
};

void add_bound(CLI::App* app, Common& c) {
  app->add_option("--bound", c.B, "coordinate radius B")->capture_default_str();
  app->add_option("--power-bound", c.K, "largest exponent K")->capture_default_str();
  app->add_flag("--json", c.json, "JSON output");
}

int cmd_check(const Common& c, const std::string& instance, const std::string& condition) {
  Subring s(instance);
  if (condition == "all") {
    Owned out;
    facsub_outcome worst = FACSUB_HOLDS;
    check(facsub_check_all(s.h, c.bound(), &out.p, &worst), "check");
    const Json arr = Json::parse(out.str());
    if (c.json) {
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& v : arr) print_verdict(v);
    }
    return worst == FACSUB_FAILS ? kFail : kPass;
  }
  Owned out;
  facsub_outcome o = FACSUB_HOLDS;
  check(facsub_check(s.h, condition.c_str(), c.bound(), &out.p, &o), "check");
  const Json v = Json::parse(out.str());
  if (c.json) {
    std::cout << v.dump(2) << "\n";
  } else {
    print_verdict(v);
  }
  return o == FACSUB_FAILS ? kFail : kPass;
}

int cmd_lattice(const Common& c, const std::string& instance, const std::string& point, std::int64_t grade) {
  Subring s(instance);
  if (point.empty()) {
    Owned out;
    check(facsub_atoms(s.h, grade > 0 ? grade : c.B, &out.p), "atoms");
    const Json atoms = Json::parse(out.str());
    if (c.json) {
      std::cout << Json{{"atoms", atoms}}.dump(2) << "\n";
    } else {
      std::cout << "atoms";
      for (const auto& a : atoms) std::cout << " " << a.dump();
      std::cout << "\n";
    }
    return kPass;
  }
  Owned out;
  check(facsub_element_report(s.h, point.c_str(), c.bound(), &out.p), "point");
  const Json r = Json::parse(out.str());
  if (c.json) {
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "point        " << r["point"].dump() << "\n";
    std::cout << "member       " << r["member"].dump() << "\n";
    if (r["member"].get<bool>()) {
      std::cout << "unit         " << r["unit"].dump() << "\n";
      std::cout << "atom         " << r["atom"].dump() << "\n";
      std::cout << "squarefree   " << r["squarefree"].dump() << "\n";
      for (const char* k : {"prime", "gpr"}) {
        if (r[k].is_null()) continue;
        std::cout << std::left << std::setw(13) << k << r[k]["outcome"].get<std::string>();
        if (!r[k]["witness"].is_null()) std::cout << " witness " << r[k]["witness"].dump();
        std::cout << "\n";
      }
      std::cout << "factorizations " << r["factorizations"].size() << "\n";
      for (const auto& f : r["factorizations"]) std::cout << "  " << f.dump() << "\n";
    }
  }
  return r["member"].get<bool>() ? kPass : kFail;
}

int cmd_jacobian(const Common& c, const std::string& vars, const std::string& polys, const std::string& input,
                 bool bridge) {
  std::string map_json;
  if (!input.empty()) {
    map_json = read_file(input);
  } else {
    if (vars.empty() || polys.empty()) throw Input{"jacobian needs --vars and --polys, or --input"};
    map_json = Json{{"vars", split_top(vars)}, {"polys", split_top(polys)}}.dump();
  }
  Owned out;
  if (bridge) {
    int consistent = 0;
    check(facsub_bridge_check(map_json.c_str(), c.bound(), &out.p, &consistent), "bridge");
    const Json r = Json::parse(out.str());
    if (c.json) {
      std::cout << r.dump(2) << "\n";
    } else {
      std::cout << "status    " << r["status"].get<std::string>() << "\n";
      std::cout << "fragment  ";
      print_verdict(r["fragment"]);
      std::cout << "gcd       " << r["minors"]["gcd"].get<std::string>() << "\n";
    }
    return consistent ? kPass : kFail;
  }
  int verdict = 0;
  check(facsub_jacobian_report(map_json.c_str(), &out.p, &verdict), "jacobian");
  const Json r = Json::parse(out.str());
  if (c.json) {
    std::cout << r.dump(2) << "\n";
  } else {
    for (const auto& m : r["minors"]) {
      std::string cols;
      for (const auto& v : m["columns"]) cols += (cols.empty() ? "" : ",") + v.get<std::string>();
      std::cout << "minor(" << cols << ")  " << m["minor"].get<std::string>() << "\n";
    }
    std::cout << "gcd       " << r["gcd"].get<std::string>() << "\n";
    std::cout << "verdict   " << (verdict ? "true" : "false") << "\n";
  }
  return verdict ? kPass : kFail;
}

struct HarnessArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  unsigned threads = 1;
  bool timing = false;
};

int cmd_harness(const Common& c, const HarnessArgs& h) {
  std::vector<std::string> suites;
  if (h.suite == "all") {
    Owned names;
    check(facsub_suite_names(&names.p), "harness");
    for (const auto& n : Json::parse(names.str())) suites.push_back(n.get<std::string>());
  } else {
    suites = split_top(h.suite);
  }
  facsub_gen_params p = facsub_default_gen_params();
  p.seed = h.seed;
  p.instance_count = h.count;
  p.threads = h.threads;
  bool all_passed = true;
  Json reports = Json::array();
  for (const auto& name : suites) {
    Owned out;
    int passed = 0;
    check(facsub_run_suite(name.c_str(), &p, c.bound(), h.timing ? 1 : 0, &out.p, &passed), "suite " + name);
    all_passed = all_passed && passed;
    Json r = Json::parse(out.str());
    if (c.json) {
      reports.push_back(std::move(r));
      continue;
    }
    std::cout << std::left << std::setw(22) << r["suite"].get<std::string>() << "instances " << r["instances"]
              << "  skipped " << r["skipped"] << "  violations " << r["violations"];
    if (h.timing) std::cout << "  " << std::fixed << std::setprecision(2) << r["seconds"].get<double>() << " s";
    std::cout << "\n";
    for (const auto& e : r["edges"]) {
      std::cout << "  " << std::setw(24) << e["premise"].get<std::string>() << std::setw(4) << "=>" << std::setw(24)
                << e["conclusion"].get<std::string>();
      for (const auto& [k, v] : e["counts"].items()) {
        if (v.get<std::size_t>() > 0) std::cout << " " << k << "=" << v;
      }
      std::cout << "\n";
    }
    for (const auto& v : r["counterexamples"]) {
      std::cout << "  VIOLATION instance " << v["instance_index"] << " " << v["premise"].get<std::string>() << " => "
                << v["conclusion"].get<std::string>() << ": " << v["detail"].get<std::string>() << "\n";
    }
  }
  if (c.json) std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return all_passed ? kPass : kFail;
}

int cmd_fixtures(const Common& c) {
  Owned rows, table;
  int passed = 0;
  check(facsub_run_fixtures(&rows.p, &table.p, &passed), "fixtures");
  if (c.json) {
    std::cout << Json::parse(rows.str()).dump(2) << "\n";
  } else {
    std::cout << table.str();
  }
  return passed ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded checks of factoriality conditions on subrings"};
  app.set_version_flag("--version", std::string(facsub_version()));
  app.require_subcommand(1);

  Common common;
  std::string instance, condition = "all", point, vars, polys, input;
  std::int64_t grade = 0;
  bool bridge = false;
  HarnessArgs h;

  auto* c_check = app.add_subcommand("check", "evaluate conditions on an instance");
  c_check->add_option("--instance", instance, "instance JSON file")->required();
  c_check->add_option("--condition", condition, "condition id, or 'all'")->capture_default_str();
  add_bound(c_check, common);

  auto* c_lat = app.add_subcommand("lattice", "membership, atoms and element queries");
  c_lat->add_option("--instance", instance, "instance JSON file")->required();
  c_lat->add_option("--point", point, "point as a JSON array; omit to list atoms");
  c_lat->add_option("--grade", grade, "atom search grade (default: --bound)");
  add_bound(c_lat, common);

  auto* c_jac = app.add_subcommand("jacobian", "gcd of maximal Jacobian minors");
  c_jac->add_option("--vars", vars, "comma-separated variable names");
  c_jac->add_option("--polys", polys, "comma-separated polynomials");
  c_jac->add_option("--input", input, "JSON file {\"vars\": [...], \"polys\": [...]}");
  c_jac->add_flag("--bridge", bridge, "cross-check a monomial map against the catalog");
  add_bound(c_jac, common);

  auto* c_har = app.add_subcommand("harness", "run property suites on seeded random instances");
  c_har->add_option("--suite", h.suite, "suite name(s), comma-separated, or 'all'")->capture_default_str();
  c_har->add_option("--seed", h.seed, "generator seed")->capture_default_str();
  c_har->add_option("--count", h.count, "number of instances")->capture_default_str();
  c_har->add_option("--threads", h.threads, "worker threads")->capture_default_str();
  c_har->add_flag("--timing", h.timing, "report wall-clock time");
  add_bound(c_har, common);

  auto* c_fix = app.add_subcommand("fixtures", "run the pinned example fixtures");
  c_fix->add_flag("--json", common.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c_check->parsed()) return cmd_check(common, instance, condition);
    if (c_lat->parsed()) return cmd_lattice(common, instance, point, grade);
    if (c_jac->parsed()) return cmd_jacobian(common, vars, polys, input, bridge);
    if (c_har->parsed()) return cmd_harness(common, h);
    if (c_fix->parsed()) return cmd_fixtures(common);
  } catch (const Input& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
