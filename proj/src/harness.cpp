#include "facsub/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "facsub/error.hpp"

namespace facsub {
namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Result of one instance, assembled into the report by index.
struct InstanceRun {
  InstanceOutcome outcome;
  std::vector<std::array<std::size_t, 6>> counts;  // per edge slot
  std::vector<Violation> violations;
};

void run_all(std::size_t count, unsigned threads, const std::function<InstanceRun(std::size_t)>& work,
             std::vector<InstanceRun>& out) {
  out.assign(count, {});
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) out[i] = work(i);
    });
  }
  for (auto& th : pool) th.join();
}

SuiteReport assemble(std::string suite, const GenParams& params, const SearchBound& bound,
                     std::vector<EdgeTally> edges, std::vector<InstanceRun>& runs) {
  SuiteReport rep;
  rep.suite = std::move(suite);
  rep.params = params;
  rep.bound = bound;
  rep.edges = std::move(edges);
  for (auto& run : runs) {
    rep.instances.push_back(run.outcome);
    for (std::size_t e = 0; e < run.counts.size(); ++e) {
      for (std::size_t s = 0; s < 6; ++s) rep.edges[e].counts[s] += run.counts[e][s];
    }
    for (auto& v : run.violations) rep.violations.push_back(std::move(v));
  }
  return rep;
}

void bump(std::array<std::size_t, 6>& c, EdgeStatus s) { ++c[static_cast<std::size_t>(s)]; }

void attach_shrunk(Violation& v, const SearchBound& bound) {
  if (!v.conclusion_witness) return;
  try {
    Shrunk s = shrink(v.instance, v.conclusion, *v.conclusion_witness, bound);
    v.shrunk_instance = std::move(s.instance);
    v.shrunk_witness = std::move(s.witness);
  } catch (const Error&) {
    // A conclusion witness that does not replay is already in the detail.
  }
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Class-inclusion transports. Each returns the status of "r in X implies
// r in Y" for one element r; `witness` receives the failure of X on a
// transport.
struct InclusionCheck {
  EdgeStatus status = EdgeStatus::Holds;
  std::optional<Witness> from;  // failure of the larger class
  std::optional<Witness> to;    // transported failure of the smaller class
  std::string detail;
};

std::int64_t extent(std::initializer_list<Point> ps) {
  std::int64_t m = 0;
  for (const auto& p : ps) m = std::max(m, p.max_abs());
  return m;
}

InclusionCheck settle(bool replays, bool stronger_fails, std::int64_t ext, const SearchBound& bound, InclusionCheck c) {
  if (!replays) {
    c.status = EdgeStatus::Violation;
    c.detail = "transported witness does not replay";
  } else if (stronger_fails) {
    c.status = EdgeStatus::Consistent;
  } else if (ext <= bound.B) {
    c.status = EdgeStatus::Violation;
    c.detail = "transported witness lies within the bound but the element passes";
  } else {
    c.status = EdgeStatus::BoundArtifact;
  }
  return c;
}

// r = 2u + w is not square-free, so r = u + (u + w) is not an atom.
InclusionCheck irr_in_sqf(const MonomialSubring& S, const Point& r, const SearchBound& bound) {
  const auto sf = S.square_factor(r);
  if (!sf) return {};
  const auto& [u, w] = *sf;
  InclusionCheck c;
  c.from = Witness{{u, w}, {}, {}};
  const Point v = u + w;
  c.to = Witness{{u, v}, {}, {}};
  const bool ok = S.member(u) && S.member(v) && !S.is_unit(u) && !S.is_unit(v) && u + v == r;
  return settle(ok, !S.is_atom(r), extent({u, v}), bound, std::move(c));
}

// r = u + w with non-units: r divides u + w but neither summand.
InclusionCheck prime_in_irr(const MonomialSubring& S, const Point& r, const SearchBound& bound) {
  const auto d = S.decomposition(r);
  if (!d) return {};
  const auto& [u, w] = *d;
  InclusionCheck c;
  c.from = Witness{{u, w}, {}, {}};
  c.to = c.from;
  const bool ok = S.divides(r, u + w) && !S.divides(r, u) && !S.divides(r, w);
  return settle(ok, S.prime_counterexample(r, bound).has_value(), extent({u, w}), bound, std::move(c));
}

// k x in r + S, x not in r + S: with j minimal such that r | j x, r divides
// x + (j - 1) x but neither x nor (j - 1) x.
InclusionCheck prime_in_gpr(const MonomialSubring& S, const Point& r, const SearchBound& bound) {
  const auto g = S.gpr_counterexample(r, bound);
  if (!g) return {};
  InclusionCheck c;
  c.from = *g;
  const Point x = g->points.at(0);
  const std::int64_t k = g->ints.at(0);
  std::int64_t j = 2;
  while (j <= k && !S.divides(r, j * x)) ++j;
  if (j > k) {
    c.status = EdgeStatus::Violation;
    c.detail = "gpr witness does not replay";
    return c;
  }
  const Point y = (j - 1) * x;
  c.to = Witness{{x, y}, {}, {}};
  const bool ok = S.divides(r, x + y) && !S.divides(r, x) && !S.divides(r, y);
  return settle(ok, S.prime_counterexample(r, bound).has_value(), extent({x, y}), bound, std::move(c));
}

// r = 2u + w: 2(u + w) = r + w lies in r + S while u + w does not.
InclusionCheck gpr_in_sqf(const MonomialSubring& S, const Point& r, const SearchBound& bound) {
  const auto sf = S.square_factor(r);
  if (!sf) return {};
  const auto& [u, w] = *sf;
  InclusionCheck c;
  c.from = Witness{{u, w}, {}, {}};
  const Point x = u + w;
  c.to = Witness{{x}, {2}, {}};
  const bool ok = S.member(x) && S.member(2 * x - r) && !S.member(x - r);
  return settle(ok, S.gpr_counterexample(r, bound).has_value(), extent({x, 2 * x}), bound, std::move(c));
}

using InclusionFn = InclusionCheck (*)(const MonomialSubring&, const Point&, const SearchBound&);
constexpr std::array<InclusionFn, 4> kInclusionFns = {irr_in_sqf, prime_in_irr, prime_in_gpr, gpr_in_sqf};

Json counts_json(const std::array<std::size_t, 6>& c) {
  Json j;
  for (std::size_t s = 0; s < 6; ++s) j[std::string(edge_status_name(static_cast<EdgeStatus>(s)))] = c[s];
  return j;
}

Json opt_witness(const std::optional<Witness>& w) { return w ? witness_to_json(*w) : Json(nullptr); }

}  // namespace

Instance gen_instance(const GenParams& params, std::size_t index) {
  if (params.n_max < 1 || params.n_max > kMaxDim) throw DomainError("n_max must be in [1, " + std::to_string(kMaxDim) + "]");
  if (params.gen_count < 1) throw DomainError("gen_count must be positive");
  if (params.coord_max < 1) throw DomainError("coord_max must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t(index) >> 32)};
  std::mt19937_64 rng(seq);
  const auto cmax = params.coord_max;
  for (;;) {
    const auto n = static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(params.n_max)));
    const auto n_int = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(std::min(params.unit_dirs, n - 1))));
    std::vector<CoordSign> signs(n, CoordSign::Nat);
    for (std::size_t placed = 0; placed < n_int;) {
      auto t = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(n) - 1));
      if (signs[t] == CoordSign::Nat) {
        signs[t] = CoordSign::Int;
        ++placed;
      }
    }
    AmbientLattice amb(signs);
    Instance inst{amb, {}, {}};
    const auto ngens = draw(rng, 1, static_cast<std::int64_t>(params.gen_count));
    for (std::int64_t g = 0; g < ngens; ++g) {
      // A generator along unit directions only (x in R, 1/x not in R) is
      // allowed; the subring constructor rejects draws with no grading.
      Point p(n);
      do {
        for (std::size_t t = 0; t < n; ++t) p[t] = amb.is_nat(t) ? draw(rng, 0, cmax) : draw(rng, -cmax, cmax);
      } while (p.is_zero());
      inst.gens.push_back(p);
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (amb.is_nat(t)) continue;
      const auto m = draw(rng, 0, 2);
      if (m == 0) continue;
      Point u(n);
      u[t] = m;
      inst.unit_gens.push_back(u);
    }
    try {
      inst.build();
      return inst;
    } catch (const DomainError&) {
      // Resample from the same stream.
    }
  }
}

Instance with_pth_powers(const Instance& inst, std::int64_t p) {
  Instance out{inst.ambient, {}, inst.unit_gens};
  const std::size_t n = inst.ambient.dim();
  // Once p*Z^m lies in the units, a generator along unit directions g has
  // -g = (p - 1) g - p g in R, so it becomes a unit generator.
  for (const Point& g : inst.gens) {
    bool unit_dir = true;
    for (std::size_t t = 0; t < n; ++t) unit_dir = unit_dir && (!inst.ambient.is_nat(t) ? true : g[t] == 0);
    (unit_dir ? out.unit_gens : out.gens).push_back(g);
  }
  for (std::size_t t = 0; t < n; ++t) {
    Point q(n);
    q[t] = p;
    if (inst.ambient.is_nat(t)) {
      out.gens.push_back(q);
    } else {
      out.unit_gens.push_back(q);
    }
  }
  return out;
}

const std::vector<std::pair<std::string, std::string>>& lemma_edges() {
  static const std::vector<std::pair<std::string, std::string>> edges = {
      {"Irr", "Sqf"}, {"Prime", "Irr"}, {"Prime", "Gpr"}, {"Gpr", "Sqf"}};
  return edges;
}

std::size_t SuiteReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), [](const auto& i) { return i.skipped; }));
}

Json SuiteReport::to_json(bool with_timing) const {
  Json j;
  j["suite"] = suite;
  j["params"] = Json{{"seed", params.seed},           {"n_max", params.n_max},
                     {"gen_count", params.gen_count}, {"coord_max", params.coord_max},
                     {"unit_dirs", params.unit_dirs}, {"instance_count", params.instance_count}};
  j["bound"] = Json{{"B", bound.B}, {"K", bound.K}};
  j["instances"] = instances.size();
  j["skipped"] = skipped();
  j["violations"] = violations.size();
  j["passed"] = passed();
  Json edges_j = Json::array();
  for (const auto& e : edges) {
    edges_j.push_back(Json{{"kind", e.kind}, {"premise", e.premise}, {"conclusion", e.conclusion}, {"counts", counts_json(e.counts)}});
  }
  j["edges"] = edges_j;
  Json inst_j = Json::array();
  for (const auto& i : instances) {
    Json row{{"index", i.index}, {"skipped", i.skipped}, {"checks", i.checks}, {"violations", i.violations}};
    if (i.skipped) row["reason"] = i.skip_reason;
    inst_j.push_back(row);
  }
  j["per_instance"] = inst_j;
  Json viol_j = Json::array();
  for (const auto& v : violations) {
    Json row;
    row["instance_index"] = v.instance_index;
    row["premise"] = v.premise;
    row["conclusion"] = v.conclusion;
    row["detail"] = v.detail;
    row["instance"] = instance_to_json(v.instance);
    row["conclusion_witness"] = opt_witness(v.conclusion_witness);
    row["premise_witness"] = opt_witness(v.premise_witness);
    row["shrunk_instance"] = v.shrunk_instance ? instance_to_json(*v.shrunk_instance) : Json(nullptr);
    row["shrunk_witness"] = opt_witness(v.shrunk_witness);
    viol_j.push_back(row);
  }
  j["counterexamples"] = viol_j;
  if (with_timing) j["seconds"] = seconds;
  return j;
}

SuiteReport run_lemma_suite(const GenParams& params, const SearchBound& bound, const SuiteOptions& opt) {
  const auto t0 = Clock::now();
  const auto& names = lemma_edges();
  auto work = [&](std::size_t idx) {
    InstanceRun run;
    run.outcome.index = idx;
    run.counts.assign(names.size(), {});
    const Instance inst = gen_instance(params, idx);
    const auto S = inst.build();
    std::set<Point> seen;
    for (const Point& v : S->members_in_box(bound.B)) {
      if (S->is_unit(v) || !seen.insert(S->reduce(v)).second) continue;
      for (std::size_t e = 0; e < names.size(); ++e) {
        InclusionCheck c = kInclusionFns[e](*S, v, bound);
        bump(run.counts[e], c.status);
        ++run.outcome.checks;
        if (c.status != EdgeStatus::Violation) continue;
        ++run.outcome.violations;
        Violation viol;
        viol.instance_index = idx;
        viol.premise = names[e].first;
        viol.conclusion = names[e].second;
        viol.detail = "element " + v.to_string() + ": " + c.detail;
        viol.instance = inst;
        viol.conclusion_witness = c.from;
        viol.premise_witness = c.to;
        run.violations.push_back(std::move(viol));
      }
    }
    return run;
  };
  std::vector<InstanceRun> runs;
  run_all(params.instance_count, opt.threads, work, runs);
  std::vector<EdgeTally> tallies;
  for (const auto& [x, y] : names) tallies.push_back({"lemma", x, y, {}});
  SuiteReport rep = assemble("lemma", params, bound, std::move(tallies), runs);
  rep.seconds = since(t0);
  return rep;
}

SuiteReport run_implication_suite(const GenParams& params, const SearchBound& bound, const SuiteOptions& opt) {
  const auto t0 = Clock::now();
  const auto& edges = implication_edges();
  auto work = [&](std::size_t idx) {
    InstanceRun run;
    run.outcome.index = idx;
    run.counts.assign(edges.size(), {});
    const Instance inst = gen_instance(params, idx);
    const auto S = inst.build();
    VerdictCache cache(*S, bound);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      EdgeResult r = check_edge(edges[e], cache);
      bump(run.counts[e], r.status);
      ++run.outcome.checks;
      if (r.status != EdgeStatus::Violation) continue;
      ++run.outcome.violations;
      Violation v{idx, r.premise, r.conclusion, r.detail, inst, r.conclusion_witness, r.premise_witness, {}, {}};
      if (opt.shrink) attach_shrunk(v, bound);
      run.violations.push_back(std::move(v));
    }
    return run;
  };
  std::vector<InstanceRun> runs;
  run_all(params.instance_count, opt.threads, work, runs);
  std::vector<EdgeTally> tallies;
  for (const auto& e : edges) tallies.push_back({"edge", e.premise, e.conclusion, {}});
  SuiteReport rep = assemble("implication", params, bound, std::move(tallies), runs);
  rep.seconds = since(t0);
  return rep;
}

SuiteReport run_equivalence_suite(const std::string& prop, const GenParams& params, const SearchBound& bound,
                                  std::int64_t p, const SuiteOptions& opt) {
  const auto t0 = Clock::now();
  const auto edges = equivalence_edges(prop, p);
  const auto pairs = agreement_pairs(prop, p);
  auto work = [&](std::size_t idx) {
    InstanceRun run;
    run.outcome.index = idx;
    run.counts.assign(edges.size() + pairs.size(), {});
    Instance inst = gen_instance(params, idx);
    if (prop == "2_2") inst = with_pth_powers(inst, p);
    const auto S = inst.build();
    VerdictCache cache(*S, bound);
    if (auto why = suite_hypothesis(prop, cache, p)) {
      run.outcome.skipped = true;
      run.outcome.skip_reason = *why;
      return run;
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      EdgeResult r = check_edge(edges[e], cache);
      bump(run.counts[e], r.status);
      ++run.outcome.checks;
      if (r.status != EdgeStatus::Violation) continue;
      ++run.outcome.violations;
      Violation v{idx, r.premise, r.conclusion, r.detail, inst, r.conclusion_witness, r.premise_witness, {}, {}};
      if (opt.shrink) attach_shrunk(v, bound);
      run.violations.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const Verdict& a = cache.get(pairs[k].first);
      const Verdict& b = cache.get(pairs[k].second);
      ++run.outcome.checks;
      auto& c = run.counts[edges.size() + k];
      if (a.outcome == b.outcome) {
        bump(c, a.is_holds() ? EdgeStatus::Holds : EdgeStatus::Consistent);
        continue;
      }
      bump(c, EdgeStatus::Violation);
      ++run.outcome.violations;
      run.violations.push_back({idx, pairs[k].first, pairs[k].second,
                                "verdicts differ: " + std::string(outcome_name(a.outcome)) + " vs " +
                                    std::string(outcome_name(b.outcome)),
                                inst, b.witness, a.witness, {}, {}});
    }
    return run;
  };
  std::vector<InstanceRun> runs;
  run_all(params.instance_count, opt.threads, work, runs);
  std::vector<EdgeTally> tallies;
  for (const auto& e : edges) tallies.push_back({"edge", e.premise, e.conclusion, {}});
  for (const auto& [a, b] : pairs) tallies.push_back({"agreement", a, b, {}});
  std::string name = "equivalence_" + prop;
  if (prop == "2_2") name += "_p" + std::to_string(p);
  SuiteReport rep = assemble(std::move(name), params, bound, std::move(tallies), runs);
  rep.seconds = since(t0);
  return rep;
}

Shrunk shrink(const Instance& instance, const std::string& condition, const Witness& witness,
              const SearchBound& bound) {
  auto S = instance.build();
  if (!replay(condition, *S, witness, bound).violated) {
    throw InternalError("cannot shrink a witness that does not replay for " + condition);
  }
  Shrunk cur{instance, witness};
  auto holds_on = [&](const MonomialSubring& R, const Witness& w) { return replay(condition, R, w, bound).violated; };

  // Coordinate and parameter moves on a fixed instance, to a fixed point.
  auto shrink_witness = [&](const MonomialSubring& R) {
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& p : cur.witness.points) {
        for (std::size_t t = 0; t < p.size(); ++t) {
          const std::int64_t orig = p[t];
          const std::int64_t step = orig > 0 ? 1 : -1;
          for (std::int64_t v = 0; v != orig; v += step) {
            p[t] = v;
            if (holds_on(R, cur.witness)) {
              changed = true;
              break;
            }
            p[t] = orig;
          }
        }
      }
      const std::size_t dim = cur.instance.ambient.dim();
      for (std::size_t t = 0; t < dim && !cur.witness.points.empty(); ++t) {
        // Common magnitude of coordinate t, when all points share a sign.
        std::int64_t m = INT64_MAX;
        int sign = 0;
        for (const auto& p : cur.witness.points) {
          const int s = (p[t] > 0) - (p[t] < 0);
          if (s == 0 || (sign != 0 && s != sign)) {
            m = 0;
            break;
          }
          sign = s;
          m = std::min(m, p[t] * s);
        }
        for (std::int64_t shift = m; shift >= 1; --shift) {
          Witness w = cur.witness;
          for (auto& p : w.points) p[t] -= sign * shift;
          if (holds_on(R, w)) {
            cur.witness = std::move(w);
            changed = true;
            break;
          }
        }
      }
      if (cur.witness.digits.empty()) {
        for (auto& k : cur.witness.ints) {
          const std::int64_t orig = k;
          for (std::int64_t v = 0; v < orig; ++v) {
            k = v;
            if (holds_on(R, cur.witness)) {
              changed = true;
              break;
            }
            k = orig;
          }
        }
      }
    }
  };

  shrink_witness(*S);
  for (bool removed = true; removed;) {
    removed = false;
    for (std::size_t g = cur.instance.gens.size(); g-- > 0;) {
      Instance smaller = cur.instance;
      smaller.gens.erase(smaller.gens.begin() + static_cast<std::ptrdiff_t>(g));
      if (smaller.gens.empty()) continue;
      std::unique_ptr<MonomialSubring> R;
      try {
        R = smaller.build();
      } catch (const DomainError&) {
        continue;
      }
      bool ok = false;
      try {
        ok = holds_on(*R, cur.witness);
      } catch (const DomainError&) {
      }
      if (!ok) continue;
      cur.instance = std::move(smaller);
      S = std::move(R);
      shrink_witness(*S);
      removed = true;
      break;
    }
  }
  return cur;
}

}  // namespace facsub
