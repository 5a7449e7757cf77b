#include "facsub/facsub.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "facsub/conditions.hpp"
#include "facsub/error.hpp"
#include "facsub/harness.hpp"
#include "facsub/jacobian.hpp"
#include "facsub/json_io.hpp"

struct facsub_subring {
  facsub::Instance instance;
  std::unique_ptr<facsub::MonomialSubring> S;
};

namespace {

using namespace facsub;

thread_local std::string g_error;
thread_local std::int64_t g_error_pos = -1;

struct ArgError {
  std::string what;
};

template <typename F>
facsub_status guard(F&& f) {
  g_error.clear();
  g_error_pos = -1;
  try {
    f();
    return FACSUB_OK;
  } catch (const ArgError& e) {
    g_error = e.what;
    return FACSUB_ERR_ARG;
  } catch (const ParseError& e) {
    g_error = e.what();
    g_error_pos = static_cast<std::int64_t>(e.position());
    return FACSUB_ERR_PARSE;
  } catch (const DomainError& e) {
    g_error = e.what();
    return FACSUB_ERR_DOMAIN;
  } catch (const InternalError& e) {
    g_error = e.what();
    return FACSUB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return FACSUB_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown error";
    return FACSUB_ERR_INTERNAL;
  }
}

template <typename T>
void need(T* p, const char* name) {
  if (p == nullptr) throw ArgError{std::string(name) + " is null"};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SearchBound to_bound(facsub_bound b) {
  if (b.B < 1) throw ArgError{"bound B must be >= 1"};
  if (b.K < 2) throw ArgError{"power bound K must be >= 2"};
  return {b.B, b.K};
}

GenParams to_params(const facsub_gen_params* p) {
  need(p, "params");
  return {p->seed, p->n_max, p->gen_count, p->coord_max, p->unit_dirs, p->instance_count};
}

facsub_outcome to_outcome(Outcome o) {
  switch (o) {
    case Outcome::Holds: return FACSUB_HOLDS;
    case Outcome::Fails: return FACSUB_FAILS;
    case Outcome::HypothesisViolated: return FACSUB_HYPOTHESIS_VIOLATED;
  }
  return FACSUB_FAILS;
}

Point parse_point(const facsub_subring* s, const char* text) {
  need(text, "point_json");
  return point_from_json(parse_json_text(text), s->S->dim());
}

Json test_json(const std::optional<Witness>& w) {
  return Json{{"outcome", w ? "fails" : "holds"}, {"witness", w ? witness_to_json(*w) : Json(nullptr)}};
}

}  // namespace

extern "C" {

const char* facsub_version(void) { return "0.1.0"; }

facsub_bound facsub_default_bound(void) {
  const SearchBound b;
  return {b.B, b.K};
}

facsub_gen_params facsub_default_gen_params(void) {
  const GenParams p;
  return {p.seed, p.n_max, p.gen_count, p.coord_max, p.unit_dirs, p.instance_count, 1};
}

const char* facsub_last_error(void) { return g_error.c_str(); }

int64_t facsub_last_error_position(void) { return g_error_pos; }

void facsub_string_free(char* s) { std::free(s); }

facsub_status facsub_subring_from_json(const char* instance_json, facsub_subring** out) {
  return guard([&] {
    need(instance_json, "instance_json");
    need(out, "out");
    auto h = std::make_unique<facsub_subring>();
    h->instance = parse_instance(instance_json);
    h->S = h->instance.build();
    *out = h.release();
  });
}

facsub_status facsub_subring_to_json(const facsub_subring* s, char** out) {
  return guard([&] {
    need(s, "subring");
    need(out, "out");
    *out = dup(instance_to_json(s->instance).dump());
  });
}

void facsub_subring_free(facsub_subring* s) { delete s; }

facsub_status facsub_catalog_json(char** out) {
  return guard([&] {
    need(out, "out");
    Json arr = Json::array();
    for (const auto& c : catalog()) {
      arr.push_back(Json{{"id", c.id}, {"statement", c.statement}, {"witness", c.witness}, {"needs_units_equal", c.needs_units_equal}});
    }
    *out = dup(arr.dump());
  });
}

facsub_status facsub_check(const facsub_subring* s, const char* condition, facsub_bound bound, char** verdict_json,
                           facsub_outcome* outcome) {
  return guard([&] {
    need(s, "subring");
    need(condition, "condition");
    need(verdict_json, "verdict_json");
    const Verdict v = eval(condition, *s->S, to_bound(bound));
    *verdict_json = dup(verdict_to_json(v).dump());
    if (outcome) *outcome = to_outcome(v.outcome);
  });
}

facsub_status facsub_check_all(const facsub_subring* s, facsub_bound bound, char** verdicts_json, facsub_outcome* worst) {
  return guard([&] {
    need(s, "subring");
    need(verdicts_json, "verdicts_json");
    const SearchBound b = to_bound(bound);
    Json arr = Json::array();
    facsub_outcome w = FACSUB_HOLDS;
    for (const auto& c : catalog()) {
      const Verdict v = eval(c.id, *s->S, b);
      if (v.is_fails()) w = FACSUB_FAILS;
      arr.push_back(verdict_to_json(v));
    }
    *verdicts_json = dup(arr.dump());
    if (worst) *worst = w;
  });
}

facsub_status facsub_replay(const facsub_subring* s, const char* condition, const char* witness_json, facsub_bound bound,
                            int* violated) {
  return guard([&] {
    need(s, "subring");
    need(condition, "condition");
    need(witness_json, "witness_json");
    need(violated, "violated");
    if (!find_condition(condition)) throw DomainError(std::string("unknown condition '") + condition + "'");
    const Witness w = witness_from_json(parse_json_text(witness_json), s->S->dim());
    *violated = replay(condition, *s->S, w, to_bound(bound)).violated ? 1 : 0;
  });
}

facsub_status facsub_member(const facsub_subring* s, const char* point_json, int* member) {
  return guard([&] {
    need(s, "subring");
    need(member, "member");
    const Point p = parse_point(s, point_json);
    *member = s->S->ambient().contains(p) && s->S->member(p) ? 1 : 0;
  });
}

facsub_status facsub_atoms(const facsub_subring* s, int64_t grade, char** points_json) {
  return guard([&] {
    need(s, "subring");
    need(points_json, "points_json");
    if (grade < 1) throw ArgError{"grade must be >= 1"};
    Json arr = Json::array();
    for (const auto& a : s->S->atoms_up_to(grade)) arr.push_back(point_to_json(a));
    *points_json = dup(arr.dump());
  });
}

facsub_status facsub_element_report(const facsub_subring* s, const char* point_json, facsub_bound bound,
                                    char** report_json) {
  return guard([&] {
    need(s, "subring");
    need(report_json, "report_json");
    const Point p = parse_point(s, point_json);
    const SearchBound b = to_bound(bound);
    const MonomialSubring& S = *s->S;
    Json j;
    j["point"] = point_to_json(p);
    const bool member = S.ambient().contains(p) && S.member(p);
    j["member"] = member;
    if (member) {
      const bool unit = S.is_unit(p);
      j["unit"] = unit;
      j["atom"] = S.is_atom(p);
      j["squarefree"] = S.is_squarefree(p);
      j["prime"] = unit ? Json(nullptr) : test_json(S.prime_counterexample(p, b));
      j["gpr"] = unit ? Json(nullptr) : test_json(S.gpr_counterexample(p, b));
      Json facs = Json::array();
      if (!unit) {
        for (const auto& f : S.atom_factorizations(p)) {
          Json one = Json::array();
          for (const auto& a : f) one.push_back(point_to_json(a));
          facs.push_back(one);
        }
      }
      j["factorizations"] = facs;
    }
    *report_json = dup(j.dump());
  });
}

facsub_status facsub_jacobian_report(const char* map_json, char** report_json, int* verdict) {
  return guard([&] {
    need(map_json, "map_json");
    need(report_json, "report_json");
    const PolyMap m = poly_map_from_json(parse_json_text(map_json));
    const MinorReport rep = minor_report(m);
    *report_json = dup(minor_report_to_json(rep, m).dump());
    if (verdict) *verdict = rep.verdict ? 1 : 0;
  });
}

facsub_status facsub_bridge_check(const char* map_json, facsub_bound bound, char** report_json, int* consistent) {
  return guard([&] {
    need(map_json, "map_json");
    need(report_json, "report_json");
    const PolyMap m = poly_map_from_json(parse_json_text(map_json));
    const BridgeReport rep = bridge_check(m, to_bound(bound));
    *report_json = dup(bridge_report_to_json(rep, m).dump());
    if (consistent) *consistent = rep.consistent ? 1 : 0;
  });
}

facsub_status facsub_suite_names(char** names_json) {
  return guard([&] {
    need(names_json, "names_json");
    Json arr = Json::array({"lemma", "implication"});
    for (const auto& p : equivalence_props()) {
      if (p == "2_2") {
        arr.push_back("2_2_p2");
        arr.push_back("2_2_p3");
      } else {
        arr.push_back(p);
      }
    }
    *names_json = dup(arr.dump());
  });
}

facsub_status facsub_run_suite(const char* suite, const facsub_gen_params* params, facsub_bound bound, int with_timing,
                               char** report_json, int* passed) {
  return guard([&] {
    need(suite, "suite");
    need(report_json, "report_json");
    const GenParams gp = to_params(params);
    const SearchBound b = to_bound(bound);
    SuiteOptions opt;
    opt.threads = params->threads == 0 ? 1 : params->threads;
    const std::string name = suite;
    SuiteReport rep;
    if (name == "lemma") {
      rep = run_lemma_suite(gp, b, opt);
    } else if (name == "implication") {
      rep = run_implication_suite(gp, b, opt);
    } else if (name.rfind("2_2", 0) == 0) {
      std::int64_t p = 2;
      if (name.size() > 3) {
        if (name.compare(3, 2, "_p") != 0 || name.size() == 5) throw DomainError("unknown suite '" + name + "'");
        p = std::stoll(name.substr(5));
      }
      if (!find_condition("P2_2_iv_p" + std::to_string(p))) throw DomainError("invalid p in '" + name + "': p must be prime");
      rep = run_equivalence_suite("2_2", gp, b, p, opt);
    } else {
      rep = run_equivalence_suite(name, gp, b, 2, opt);
    }
    *report_json = dup(rep.to_json(with_timing != 0).dump());
    if (passed) *passed = rep.passed() ? 1 : 0;
  });
}

facsub_status facsub_gen_instance(const facsub_gen_params* params, size_t index, char** instance_json) {
  return guard([&] {
    need(instance_json, "instance_json");
    *instance_json = dup(instance_to_json(gen_instance(to_params(params), index)).dump());
  });
}

facsub_status facsub_shrink(const char* instance_json, const char* condition, const char* witness_json,
                            facsub_bound bound, char** result_json) {
  return guard([&] {
    need(instance_json, "instance_json");
    need(condition, "condition");
    need(witness_json, "witness_json");
    need(result_json, "result_json");
    const Instance inst = parse_instance(instance_json);
    const Witness w = witness_from_json(parse_json_text(witness_json), inst.ambient.dim());
    if (!find_condition(condition)) throw DomainError(std::string("unknown condition '") + condition + "'");
    const auto S = inst.build();
    const SearchBound b = to_bound(bound);
    const Shrunk s = shrink(inst, condition, w, b);
    *result_json = dup(Json{{"instance", instance_to_json(s.instance)}, {"witness", witness_to_json(s.witness)}}.dump());
  });
}

facsub_status facsub_run_fixtures(char** rows_json, char** table_text, int* passed) {
  return guard([&] {
    const auto rows = run_fixtures();
    if (rows_json) *rows_json = dup(fixtures_to_json(rows).dump());
    if (table_text) *table_text = dup(fixtures_to_text(rows));
    if (passed) {
      bool all = true;
      for (const auto& r : rows) all = all && r.pass;
      *passed = all ? 1 : 0;
    }
  });
}

facsub_status facsub_fixture_instance(const char* name, char** instance_json) {
  return guard([&] {
    need(name, "name");
    need(instance_json, "instance_json");
    *instance_json = dup(instance_to_json(fixture_instance(name)).dump());
  });
}

}  // extern "C"
