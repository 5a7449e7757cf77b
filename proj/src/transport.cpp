#include "facsub/transport.hpp"

#include <algorithm>

#include "facsub/error.hpp"

namespace facsub {
namespace {

Witness pts(std::vector<Point> p, std::vector<std::int64_t> ints = {}) {
  return Witness{std::move(p), std::move(ints), {}};
}

using Cands = std::vector<Witness>;

// Splits v into its natural part and its unit part.
Point nat_part(const MonomialSubring& S, const Point& v) {
  Point out = v;
  for (std::size_t i = 0; i < S.dim(); ++i) {
    if (!S.ambient().is_nat(i)) out[i] = 0;
  }
  return out;
}

std::vector<std::size_t> nat_support(const MonomialSubring& S, const Point& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < S.dim(); ++i) {
    if (S.ambient().is_nat(i) && c[i] > 0) out.push_back(i);
  }
  return out;
}

Point e(std::size_t n, std::size_t t) {
  Point p(n);
  p[t] = 1;
  return p;
}

Point sum(const std::vector<Point>& ps, std::size_t n) {
  Point s(n);
  for (const auto& p : ps) s += p;
  return s;
}

TransportMap identity() {
  return [](const MonomialSubring&, const Witness& w, const SearchBound&) { return Cands{w}; };
}

// Binary layers L_0..L_m of the natural part of a, with the unit part of a
// folded into L_0, so that sum 2^i L_i = a.
std::vector<Point> binary_layers(const MonomialSubring& S, const Point& a) {
  std::int64_t top = 0;
  for (std::size_t i = 0; i < S.dim(); ++i) {
    if (S.ambient().is_nat(i)) top = std::max(top, a[i]);
  }
  std::size_t width = 1;
  while ((top >> width) > 0) ++width;
  std::vector<Point> layers(width, Point(S.dim()));
  for (std::size_t t = 0; t < S.dim(); ++t) {
    if (!S.ambient().is_nat(t)) {
      layers[0][t] = a[t];
      continue;
    }
    for (std::size_t i = 0; i < width; ++i) layers[i][t] = (a[t] >> i) & 1;
  }
  return layers;
}

// Irreducible factorization q = e_t, k = c_t of the natural part of c.
Witness prime_powers(const MonomialSubring& S, const Point& c) {
  Witness w;
  for (auto t : nat_support(S, c)) {
    w.points.push_back(e(S.dim(), t));
    w.ints.push_back(c[t]);
  }
  return w;
}

// Candidate failures of "for all k >= 1 (up to K): a^k b in R => a, b in R"
// given a^k b in R for every k in [lo, hi], hi > lo. Missing neighbours of
// the run are reached through
//   (a^k b)^l a^(k+2) b = (a^(k+1) b)^2 (a^k b)^(l-1),
//   (a^(k+1) b)^l a^(k-1) b = (a^k b)^2 (a^(k+1) b)^(l-1).
Cands run_closure(const MonomialSubring& S, const Point& a, const Point& b, std::int64_t lo, std::int64_t hi,
                  std::int64_t K) {
  Cands out;
  bool full = true;
  for (std::int64_t k = hi + 1; k <= K; ++k) {
    if (!S.member(k * a + b)) {
      out.push_back(pts({(k - 2) * a + b, k * a + b}));
      full = false;
      break;
    }
  }
  for (std::int64_t k = lo - 1; k >= 1; --k) {
    if (!S.member(k * a + b)) {
      out.push_back(pts({(k + 2) * a + b, k * a + b}));
      full = false;
      break;
    }
  }
  if (full) out.push_back(pts({a, b}));
  return out;
}

// ------------------------------------------- divisibility, units, rpr

// (iv) fails with (a, b): a |_A b, not in R. Then a (b - a) = b in R.
Cands divis_iv_to_iii(const MonomialSubring&, const Witness& w, const SearchBound&) {
  return {pts({w.points[0], w.points[1] - w.points[0]})};
}

// (iii) fails with (a, b): a | ab in A.
Cands divis_iii_to_iv(const MonomialSubring&, const Witness& w, const SearchBound&) {
  return {pts({w.points[0], w.points[0] + w.points[1]})};
}

// A unit u of A in R that is not a unit of R divides 0 = 1 in A only.
Cands unit_to_divis(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  return {pts({w.points[0], Point(S.dim())})};
}

// A common non-unit divisor d of A-coprime elements is an A-unit.
Cands rpr_to_unit(const MonomialSubring&, const Witness& w, const SearchBound&) { return {pts({w.points[2]})}; }

// u in A* and not in R* is A-coprime to itself, but u | u in R.
Cands unit_to_rpr(const MonomialSubring&, const Witness& w, const SearchBound&) {
  const Point& u = w.points[0];
  return {pts({u, u, u})};
}

// a = u w in R with a irreducible in A: one factor is an A-unit.
Cands irr_to_unit(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Cands out;
  for (std::size_t i = 1; i <= 2; ++i) {
    if (S.ambient().is_unit(w.points[i])) out.push_back(pts({w.points[i]}));
  }
  return out;
}

Cands irr_to_rpr(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Cands out;
  for (std::size_t i = 1; i <= 2; ++i) {
    const Point& u = w.points[i];
    if (S.ambient().is_unit(u)) out.push_back(pts({u, u, u}));
  }
  return out;
}

// A-associates a, b that are not R-associates: one quotient leaves R.
Cands assoc_to_divis(const MonomialSubring&, const Witness& w, const SearchBound&) {
  const Point &a = w.points[0], &b = w.points[1];
  return {pts({a, b}), pts({b, a})};
}

// d is an A-unit of R, so d ~_A 1 while d is not a unit of R.
Cands rpr_to_assoc(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  return {pts({Point(S.dim()), w.points[2]})};
}

// -------------------------------------------------- B-factorial closure

// (iii) fails with (a, b), b in R: then b | ab in A.
Cands self_to_divis(const MonomialSubring&, const Witness& w, const SearchBound&) {
  return {pts({w.points[1], w.points[0] + w.points[1]})};
}

// (ii) fails with (a, b): (b/a) a = b.
Cands divis_to_self(const MonomialSubring&, const Witness& w, const SearchBound&) {
  return {pts({w.points[1] - w.points[0], w.points[0]})};
}

// ab in R, b in R: a b^p = (ab) b^(p-1) in R.
TransportMap self_to_powers(std::int64_t p) {
  return [p](const MonomialSubring&, const Witness& w, const SearchBound&) {
    return Cands{pts({w.points[0], p * w.points[1]})};
  };
}

// ---------------------------------------------- square-factorial closure

// v in Sqf R with v = x^2 y, y in Sqf A, x a non-unit of A.
Cands sqf_to_sqfc(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  const Point& v = w.points[0];
  Point x(S.dim()), y = v;
  for (std::size_t t = 0; t < S.dim(); ++t) {
    if (!S.ambient().is_nat(t)) continue;
    x[t] = v[t] / 2;
    y[t] = v[t] % 2;
  }
  return {pts({x, y})};
}

// x^2 y in R with x or y outside R: peel square factors in R off x^2 y
// until an element of Sqf R that is not square-free in A remains.
Cands sqfc_to_sqf(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Point c = 2 * w.points[0] + w.points[1];
  while (!S.ambient().is_squarefree(c)) {
    const auto f = S.square_factor(c);
    if (!f) return {pts({c})};
    c = f->second;
  }
  return {};
}

// v^k in R, v not in R: halve along the binary expansion of v^k. Each
// layer split x^2 y with y square-free in A is a square-factorial test.
Cands root_to_sqfc(const MonomialSubring& S, const Witness& w, const SearchBound& bound) {
  Cands out;
  Point c = w.ints[0] * w.points[0];
  while (!nat_part(S, c).is_zero()) {
    const auto layers = sqf_to_sqfc(S, pts({c}), bound)[0];
    out.push_back(layers);
    c = layers.points[0];
  }
  return out;
}

// ------------------------------------------------ binary square-free form

// a^2 b with a = s_m^(2^m)..s_0: the (ii) tuple is (b, s_0, .., s_m).
Cands p41_i_to_ii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  std::vector<Point> s{w.points[1]};
  for (auto& layer : binary_layers(S, w.points[0])) s.push_back(layer);
  return {pts(std::move(s))};
}

// Each s_i is a unit times q_1^c1_i..q_m^cm_i; digit rows are the s_i's
// coordinates.
Cands p41_ii_to_iii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  const auto& s = w.points;
  Point c(S.dim());
  for (std::size_t i = 0; i < s.size(); ++i) c += (std::int64_t{1} << i) * s[i];
  Witness base;
  for (auto t : nat_support(S, c)) {
    base.points.push_back(e(S.dim(), t));
    base.ints.push_back(c[t]);
    std::vector<std::int64_t> row;
    for (const auto& si : s) row.push_back(si[t]);
    base.digits.push_back(std::move(row));
  }
  Cands out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (S.member(s[i])) continue;
    Witness wi = base;
    wi.ints.push_back(static_cast<std::int64_t>(i));
    out.push_back(std::move(wi));
  }
  return out;
}

Cands p41_iii_to_ii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  std::size_t width = 0;
  for (const auto& row : w.digits) width = std::max(width, row.size());
  std::vector<Point> s(std::max<std::size_t>(width, 1), Point(S.dim()));
  for (std::size_t j = 0; j < w.points.size(); ++j) {
    for (std::size_t i = 0; i < w.digits[j].size(); ++i) {
      if (w.digits[j][i] == 1) s[i] += w.points[j];
    }
  }
  return {pts(std::move(s))};
}

// Induction: s_n^(2^n)..s_0 = (s_n^(2^(n-1))..s_1)^2 s_0, and so on.
Cands p41_ii_to_i(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  const auto& s = w.points;
  Cands out;
  for (std::size_t m = 0; m + 1 < s.size(); ++m) {
    Point a(S.dim());
    for (std::size_t i = m + 1; i < s.size(); ++i) a += (std::int64_t{1} << (i - m - 1)) * s[i];
    out.push_back(pts({a, s[m]}));
  }
  return out;
}

// ------------------------------------------------- irreducible powers

Cands p42_ii_to_i(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Point c(S.dim());
  for (std::size_t j = 0; j < w.points.size(); ++j) c += w.ints[j] * w.points[j];
  Cands out;
  for (const auto& q : w.points) {
    if (!S.member(q)) out.push_back(pts({q, c - q}));
  }
  return out;
}

Cands p42_i_to_ii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  return {prime_powers(S, w.points[0] + w.points[1])};
}

// ---------------------------------------------- relatively prime factors

Cands p43_ii_to_i_special(const MonomialSubring&, const Witness& w, const SearchBound&) { return {w}; }

Cands p43_iii_to_ii_special(const MonomialSubring&, const Witness& w, const SearchBound&) {
  std::vector<Point> a;
  for (std::size_t j = 0; j < w.points.size(); ++j) a.push_back(w.ints[j] * w.points[j]);
  return {pts(std::move(a))};
}

// Induction: a_1 (a_2..a_n), then a_2 (a_3..a_n), ...
Cands p43_ii_to_i(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  const auto& a = w.points;
  Cands out;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    const Point rest = sum(std::vector<Point>(a.begin() + static_cast<std::ptrdiff_t>(j) + 1, a.end()), S.dim());
    out.push_back(pts({a[j], rest}));
  }
  return out;
}

Cands p43_i_to_iii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  return {prime_powers(S, w.points[0] + w.points[1])};
}

// ------------------------------------------- rpr factors with exponents

// Induction over q_1^k_1 (q_2^k_2..q_r^k_r q_(r+1)..q_n), ...
Cands p44_ii_to_i(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  const auto& q = w.points;
  const auto r = static_cast<std::size_t>(w.ints[0]);
  std::vector<Point> rest(r + 1, Point(S.dim()));  // rest[j] = q_(j+1)^k.. q_r^k_r tail
  for (std::size_t j = r; j < q.size(); ++j) rest[r] += q[j];
  for (std::size_t j = r; j-- > 0;) rest[j] = rest[j + 1] + w.ints[j + 1] * q[j];
  Cands out;
  for (std::size_t j = 0; j < r; ++j) out.push_back(pts({q[j], rest[j + 1]}, {w.ints[j + 1]}));
  return out;
}

// a^k b with a rpr b: a's primes carry exponents k*l_t > 1, b's primes
// split into exponent > 1 and the square-free tail.
Cands p44_i_to_ii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  const Point &a = w.points[0], &b = w.points[1];
  const std::int64_t k = w.ints[0];
  Witness out;
  std::vector<std::int64_t> ks;
  for (std::size_t t = 0; t < S.dim(); ++t) {
    if (!S.ambient().is_nat(t)) continue;
    const std::int64_t exp = k * a[t] + b[t];
    if (exp >= 2) {
      out.points.push_back(e(S.dim(), t));
      ks.push_back(exp);
    }
  }
  for (std::size_t t = 0; t < S.dim(); ++t) {
    if (S.ambient().is_nat(t) && k * a[t] + b[t] == 1) out.points.push_back(e(S.dim(), t));
  }
  out.ints.push_back(static_cast<std::int64_t>(ks.size()));
  out.ints.insert(out.ints.end(), ks.begin(), ks.end());
  return {out};
}

// -------------------------------------------------- a^k b factoriality

// ab in R: a^2 b^2 in R gives a, b^2; then b^2 * 1 gives b.
TransportMap fc_square_trick(std::int64_t k) {
  return [k](const MonomialSubring& S, const Witness& w, const SearchBound&) {
    const Point &a = w.points[0], &b = w.points[1];
    return Cands{pts({a, k * b}), pts({b, Point(S.dim())})};
  };
}

Cands fc_k_to_vi(const MonomialSubring&, const Witness& w, const SearchBound&) { return {w}; }

Cands p45_iv_to_v(const MonomialSubring&, const Witness& w, const SearchBound&) {
  return {pts({w.points[0], w.points[1]}, {2}), pts({w.points[0], w.points[1]}, {3})};
}

// a^k b in R: a (a^(k-1) b), then a (a^(k-2) b), ..., down to b.
Cands p45_vi_to_i(const MonomialSubring&, const Witness& w, const SearchBound&) {
  const Point &a = w.points[0], &b = w.points[1];
  Cands out;
  for (std::int64_t j = w.ints[0]; j >= 1; --j) out.push_back(pts({a, (j - 1) * a + b}));
  return out;
}

// ------------------------------------------------- runs of powers a^k b

TransportMap run_from(std::int64_t lo, std::int64_t hi) {
  return [lo, hi](const MonomialSubring& S, const Witness& w, const SearchBound& bound) {
    return run_closure(S, w.points[0], w.points[1], lo, hi, bound.K);
  };
}

Cands p46_v_to_iii(const MonomialSubring& S, const Witness& w, const SearchBound& bound) {
  return run_closure(S, w.points[0], w.points[1], w.ints[0], bound.K, bound.K);
}

Cands p46_iv_to_v(const MonomialSubring&, const Witness& w, const SearchBound&) {
  return {pts({w.points[0], w.points[1]}, {2})};
}

// ---------------------------------------------------- implication DAG

std::vector<TransportEdge> build_implications() {
  std::vector<TransportEdge> out;
  const auto same = [&](const char* p, const char* q, const char* rule) {
    out.push_back({p, q, rule, identity()});
  };
  // Inclusions X R in Y A; rows Y = Irr, Sqf (two), columns X.
  same("SETINCL_IrrR_IrrA", "SETINCL_PrimeR_IrrA", "Prime R in Irr R");
  same("SETINCL_PrimeR_PrimeA", "SETINCL_PrimeR_IrrA", "Prime A = Irr A on monomials");
  same("SETINCL_IrrR_SqfA", "SETINCL_PrimeR_SqfA", "Prime R in Irr R");
  same("SETINCL_PrimeR_GprA", "SETINCL_PrimeR_SqfA", "Gpr A = Sqf A on monomials");
  same("SETINCL_SqfR_SqfA", "SETINCL_GprR_SqfA", "Gpr R in Sqf R");
  same("SETINCL_GprR_GprA", "SETINCL_GprR_SqfA", "Gpr A = Sqf A on monomials");
  same("SETINCL_IrrR_IrrA", "SETINCL_IrrR_SqfA", "Irr A in Sqf A");
  same("SETINCL_PrimeR_IrrA", "SETINCL_PrimeR_SqfA", "Irr A in Sqf A");
  same("SETINCL_PrimeR_PrimeA", "SETINCL_PrimeR_GprA", "Prime A in Gpr A");
  same("SETINCL_SqfR_SqfA", "SETINCL_IrrR_SqfA", "Irr R in Sqf R");
  same("SETINCL_GprR_SqfA", "SETINCL_PrimeR_SqfA", "Prime R in Gpr R");
  same("SETINCL_GprR_GprA", "SETINCL_PrimeR_GprA", "Prime R in Gpr R");
  // Fraction closure and R* = A* both give A* cap R = R*, which gives
  // R cap Irr A in Irr R.
  out.push_back({"P1_1_iv", "P1_2_i", "u | 1 in A for a unit u", unit_to_divis});
  out.push_back({"H_units_equal", "P1_2_i", "an A-unit of R outside R* witnesses R* != A*", identity()});
  out.push_back({"P1_2_i", "P1_3_iv", "a factor of an A-irreducible is an A-unit", irr_to_unit});
  // Divisibility => associates => rpr => irreducibility.
  out.push_back({"P1_3_i", "P1_3_ii", "associates divide each other", assoc_to_divis});
  out.push_back({"P1_3_ii", "P1_3_iii", "a common divisor is associated with 1 in A", rpr_to_assoc});
  out.push_back({"P1_3_iii", "P1_3_iv", "a unit factor u of an A-irreducible: (u, u, u)", irr_to_rpr});
  return out;
}

}  // namespace

std::string_view edge_status_name(EdgeStatus s) noexcept {
  switch (s) {
    case EdgeStatus::Holds: return "holds";
    case EdgeStatus::Strict: return "strict";
    case EdgeStatus::Consistent: return "consistent";
    case EdgeStatus::BoundArtifact: return "bound_artifact";
    case EdgeStatus::Skipped: return "skipped";
    case EdgeStatus::Violation: return "violation";
  }
  return "violation";
}

const Verdict& VerdictCache::get(const std::string& id) {
  auto it = verdicts_.find(id);
  if (it == verdicts_.end()) it = verdicts_.emplace(id, eval(id, S_, bound_)).first;
  return it->second;
}

EdgeResult check_edge(const TransportEdge& edge, VerdictCache& cache) {
  EdgeResult out{edge.premise, edge.conclusion, EdgeStatus::Holds, std::nullopt, std::nullopt, {}};
  const Verdict& q = cache.get(edge.conclusion);
  const Verdict& p = cache.get(edge.premise);
  if (q.outcome == Outcome::HypothesisViolated || p.outcome == Outcome::HypothesisViolated) {
    out.status = EdgeStatus::Skipped;
    out.detail = q.reason.value_or(p.reason.value_or(""));
    return out;
  }
  if (q.is_holds()) {
    out.status = p.is_fails() ? EdgeStatus::Strict : EdgeStatus::Holds;
    return out;
  }
  out.conclusion_witness = q.witness;
  const auto& S = cache.subring();
  const auto& bound = cache.bound();
  std::optional<Witness> chosen;
  std::optional<Replay> chosen_replay;
  for (const auto& cand : edge.map(S, *q.witness, bound)) {
    const Replay r = replay(edge.premise, S, cand, bound);
    if (!r.violated) continue;
    if (!chosen || (r.in_domain(bound) && !chosen_replay->in_domain(bound))) {
      chosen = cand;
      chosen_replay = r;
    }
    if (r.in_domain(bound)) break;
  }
  if (!chosen) {
    out.status = EdgeStatus::Violation;
    out.detail = "no transported witness replays for " + edge.premise;
    return out;
  }
  out.premise_witness = chosen;
  if (p.is_fails()) {
    out.status = EdgeStatus::Consistent;
  } else if (chosen_replay->in_domain(bound)) {
    out.status = EdgeStatus::Violation;
    out.detail = "transported witness lies within the bound but " + edge.premise + " holds";
  } else {
    out.status = EdgeStatus::BoundArtifact;
    out.detail = "transported witness has extent " + std::to_string(chosen_replay->extent) + " and exponent " +
                 std::to_string(chosen_replay->max_exp);
  }
  return out;
}

const std::vector<TransportEdge>& implication_edges() {
  static const std::vector<TransportEdge> edges = build_implications();
  return edges;
}

const std::vector<std::string>& equivalence_props() {
  static const std::vector<std::string> props = {"1_1", "1_2", "2_2", "3_4", "4_1",
                                                 "4_2", "4_3", "4_4", "4_5", "4_6"};
  return props;
}

std::vector<TransportEdge> equivalence_edges(const std::string& prop, std::int64_t p) {
  if (prop == "1_1") {
    return {{"P1_1_iii", "P1_1_iv", "b = a (b/a)", divis_iv_to_iii},
            {"P1_1_iv", "P1_1_iii", "a | ab", divis_iii_to_iv}};
  }
  if (prop == "1_2") {
    return {{"P1_2_i", "P1_2_ii", "same statement", identity()},
            {"P1_2_ii", "P1_2_i", "same statement", identity()},
            {"P1_2_ii", "P1_2_iii", "common divisor of A-coprime elements is an A-unit", rpr_to_unit},
            {"P1_2_iii", "P1_2_ii", "u is A-coprime to itself", unit_to_rpr}};
  }
  if (prop == "2_2") {
    const std::string iv = "P2_2_iv_p" + std::to_string(p);
    return {{"P2_2_ii", "P2_2_iii", "b | ab in A", self_to_divis},
            {"P2_2_iii", "P2_2_ii", "(b/a) a = b", divis_to_self},
            {"P2_2_iii", iv, "A^p in R", identity()},
            {iv, "P2_2_iii", "a b^p = (ab) b^(p-1)", self_to_powers(p)}};
  }
  if (prop == "3_4") {
    return {{"T3_4_ii_sqfc", "SETINCL_SqfR_SqfA", "v = x^2 y with y in Sqf A", sqf_to_sqfc},
            {"SETINCL_SqfR_SqfA", "T3_4_ii_sqfc", "peel square factors of x^2 y in R", sqfc_to_sqf},
            {"T3_4_ii_sqfc", "root_closed", "binary halving of v^k", root_to_sqfc}};
  }
  if (prop == "4_1") {
    return {{"P4_1_ii", "P4_1_i", "a = s_m^(2^m)..s_0", p41_i_to_ii},
            {"P4_1_iii", "P4_1_ii", "s_i = u_i q_1^c1_i..q_m^cm_i", p41_ii_to_iii},
            {"P4_1_ii", "P4_1_iii", "s_i = q_1^c1_i..q_n^cn_i", p41_iii_to_ii},
            {"P4_1_i", "P4_1_ii", "induction on n", p41_ii_to_i}};
  }
  if (prop == "4_2") {
    return {{"P4_2_i", "P4_2_ii", "q_j (q_1^k_1..q_n^k_n / q_j)", p42_ii_to_i},
            {"P4_2_ii", "P4_2_i", "factor ab into irreducibles", p42_i_to_ii}};
  }
  if (prop == "4_3") {
    return {{"P4_3_ii", "P4_3_i", "special case n = 2", p43_ii_to_i_special},
            {"P4_3_ii", "P4_3_iii", "special case a_j = q_j^k_j", p43_iii_to_ii_special},
            {"P4_3_i", "P4_3_ii", "induction on n", p43_ii_to_i},
            {"P4_3_iii", "P4_3_i", "factor a and b into irreducibles", p43_i_to_iii}};
  }
  if (prop == "4_4") {
    return {{"P4_4_i", "P4_4_ii", "peel q_1^k_1, then q_2^k_2, ...", p44_ii_to_i},
            {"P4_4_ii", "P4_4_i", "factor a and b into irreducibles", p44_i_to_ii}};
  }
  if (prop == "4_5") {
    return {{"P4_5_ii", "P4_5_i", "a^2 b^2, then b^2 * 1", fc_square_trick(2)},
            {"P4_5_iii", "P4_5_i", "a^3 b^3, then b^3 * 1", fc_square_trick(3)},
            {"P4_5_vi", "P4_5_v", "k > 1 is a case of k >= 1", fc_k_to_vi},
            {"P4_5_v", "P4_5_iv", "k = 2 or k = 3", p45_iv_to_v},
            {"P4_5_iv", "P4_5_ii", "first disjunct", identity()},
            {"P4_5_iv", "P4_5_iii", "second disjunct", identity()},
            {"P4_5_i", "P4_5_vi", "induction on k", p45_vi_to_i}};
  }
  if (prop == "4_6") {
    return {{"P4_6_iii", "P4_6_i", "extend ab, a^2 b to all powers", run_from(1, 2)},
            {"P4_6_iii", "P4_6_ii", "extend a^2 b, a^3 b to all powers", run_from(2, 3)},
            {"P4_6_iii", "P4_6_v", "extend a^k b, k >= k0 down to k = 1", p46_v_to_iii},
            {"P4_6_v", "P4_6_iv", "k0 = 2", p46_iv_to_v},
            {"P4_6_iv", "P4_6_iii", "k > 1 is a case of k >= 1", identity()},
            {"P4_6_i", "P4_6_iii", "k = 1, 2", identity()},
            {"P4_6_ii", "P4_6_iv", "k = 2, 3", identity()}};
  }
  throw DomainError("unknown equivalence suite '" + prop + "'");
}

std::vector<std::pair<std::string, std::string>> agreement_pairs(const std::string& prop, std::int64_t p) {
  (void)p;
  if (prop == "1_1") return {{"P1_1_iii", "P1_1_iv"}};
  if (prop == "1_2") return {{"P1_2_i", "P1_2_ii"}};
  if (prop == "2_2") return {{"P2_2_ii", "P2_2_iii"}};
  return {};
}

bool contains_pth_powers(const MonomialSubring& S, std::int64_t p) {
  for (std::size_t t = 0; t < S.dim(); ++t) {
    Point q(S.dim());
    q[t] = p;
    if (!S.member(q)) return false;
    if (!S.ambient().is_nat(t) && !S.member(-q)) return false;
  }
  return true;
}

std::optional<std::string> suite_hypothesis(const std::string& prop, VerdictCache& cache, std::int64_t p) {
  if (prop == "2_2" && !contains_pth_powers(cache.subring(), p)) {
    return "A^" + std::to_string(p) + " is not contained in R";
  }
  if (prop == "3_4") {
    if (!cache.get("H_units_equal").is_holds()) return "R* != A*";
    if (!cache.get("P1_1_iv").is_holds()) return "R_0 cap A != R";
  }
  if ((prop == "4_1" || prop == "4_2" || prop == "4_3" || prop == "4_4") && !cache.get("H_units_equal").is_holds()) {
    return "R* != A*";
  }
  if (prop == "4_6" || prop == "4_5") {
    if (cache.bound().K < 3) return "power bound K < 3 leaves no room for the equivalences";
  }
  return std::nullopt;
}

}  // namespace facsub
