#include "facsub/conditions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "facsub/error.hpp"

namespace facsub {
namespace {

using Finder = std::function<std::optional<Witness>(const MonomialSubring&, const SearchBound&)>;
using Checker = std::function<Replay(const MonomialSubring&, const Witness&, const SearchBound&)>;

struct Def {
  ConditionInfo info;
  Finder find;
  Checker check;
};

// ------------------------------------------------------------ helpers

Witness pts(std::vector<Point> p, std::vector<std::int64_t> ints = {}) {
  return Witness{std::move(p), std::move(ints), {}};
}

bool int_part_zero(const MonomialSubring& S, const Point& c) {
  for (std::size_t i = 0; i < S.dim(); ++i) {
    if (!S.ambient().is_nat(i) && c[i] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> nat_support(const MonomialSubring& S, const Point& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < S.dim(); ++i) {
    if (S.ambient().is_nat(i) && c[i] > 0) out.push_back(i);
  }
  return out;
}

Point unit_vector(std::size_t n, std::size_t t, std::int64_t scale = 1) {
  Point e(n);
  e[t] = scale;
  return e;
}

bool either_outside(const MonomialSubring& S, const Point& a, const Point& b) {
  return !S.member(a) || !S.member(b);
}

bool pairwise_non_associated(const AmbientLattice& A, const std::vector<Point>& qs) {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      if (A.associates(qs[i], qs[j])) return false;
    }
  }
  return true;
}

bool pairwise_rpr(const AmbientLattice& A, const std::vector<Point>& as) {
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = i + 1; j < as.size(); ++j) {
      if (!A.rpr(as[i], as[j])) return false;
    }
  }
  return true;
}

// Visits (c, a, k) for c in S within the box, k in ks, and a with a and
// c - k*a in the box; stops at the first witness.
template <typename F>
std::optional<Witness> over_splits(const MonomialSubring& S, const SearchBound& b,
                                   const std::vector<std::int64_t>& ks, F f) {
  for (const auto& c : S.members_in_box(b.B)) {
    for (const auto k : ks) {
      std::optional<Witness> found;
      for_each_split(S.ambient(), c, k, b.B, [&](const Point& a) {
        found = f(c, a, k);
        return found.has_value();
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

// Members c of S with zero unit part and nonempty natural support. Under
// R* = A* every unit is in S, so unit parts never affect membership.
template <typename F>
std::optional<Witness> over_unitless(const MonomialSubring& S, const SearchBound& b, F f) {
  for (const auto& c : S.members_in_box(b.B)) {
    if (!int_part_zero(S, c)) continue;
    const auto T = nat_support(S, c);
    if (T.empty()) continue;
    if (auto w = f(c, T)) return w;
  }
  return std::nullopt;
}

class Rp {
 public:
  Rp(const MonomialSubring& S, const Witness& w) : S_(S), w_(w) {}

  bool shape(std::size_t np, std::size_t ni) {
    if (w_.points.size() != np || w_.ints.size() != ni) {
      out_.detail = "witness needs " + std::to_string(np) + " points and " + std::to_string(ni) + " integers";
      return false;
    }
    return dims();
  }
  bool dims() {
    for (const auto& p : w_.points) {
      if (p.size() != S_.dim()) {
        out_.detail = "witness point has the wrong dimension";
        return false;
      }
    }
    return true;
  }
  const Point& p(std::size_t i) const { return w_.points[i]; }
  std::int64_t k(std::size_t i) const { return w_.ints[i]; }
  void touch(const Point& q) { out_.extent = std::max(out_.extent, q.max_abs()); }
  void power(std::int64_t k) { out_.max_exp = std::max(out_.max_exp, k); }
  Replay no(std::string why) {
    out_.violated = false;
    if (out_.detail.empty()) out_.detail = std::move(why);
    return out_;
  }
  Replay yes() {
    out_.violated = true;
    out_.detail.clear();
    return out_;
  }
  Replay bad() { return out_; }

 private:
  const MonomialSubring& S_;
  const Witness& w_;
  Replay out_;
};

// ------------------------------------------------- individual conditions

std::optional<Witness> find_divis_iii(const MonomialSubring& S, const SearchBound& b) {
  return over_splits(S, b, {1}, [&](const Point& c, const Point& a, std::int64_t) -> std::optional<Witness> {
    if (!S.member(a) || S.member(c - a)) return std::nullopt;
    return pts({a, c - a});
  });
}

Replay check_divis_iii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(2, 0)) return r.bad();
  const Point &a = r.p(0), &b = r.p(1);
  r.touch(a), r.touch(b), r.touch(a + b);
  if (!S.member(a)) return r.no("a not in R");
  if (!S.ambient().contains(b)) return r.no("b not in A");
  if (!S.member(a + b)) return r.no("ab not in R");
  if (S.member(b)) return r.no("b in R");
  return r.yes();
}

std::optional<Witness> find_divis_iv(const MonomialSubring& S, const SearchBound& b) {
  return over_splits(S, b, {1}, [&](const Point& c, const Point& a, std::int64_t) -> std::optional<Witness> {
    if (!S.member(a) || S.member(c - a)) return std::nullopt;
    return pts({a, c});
  });
}

Replay check_divis_iv(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(2, 0)) return r.bad();
  const Point &a = r.p(0), &b = r.p(1);
  r.touch(a), r.touch(b), r.touch(b - a);
  if (!S.member(a) || !S.member(b)) return r.no("a or b not in R");
  if (!S.ambient().contains(b - a)) return r.no("a does not divide b in A");
  if (S.member(b - a)) return r.no("a divides b in R");
  return r.yes();
}

std::optional<Witness> find_units(const MonomialSubring& S, const SearchBound& b) {
  for (const auto& u : S.members_in_box(b.B)) {
    if (S.ambient().is_unit(u) && !S.member(-u)) return pts({u});
  }
  return std::nullopt;
}

Replay check_units(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(1, 0)) return r.bad();
  const Point& u = r.p(0);
  r.touch(u);
  if (!S.member(u)) return r.no("u not in R");
  if (!S.ambient().is_unit(u)) return r.no("u not a unit of A");
  if (S.member(-u)) return r.no("u is a unit of R");
  return r.yes();
}

std::optional<Witness> find_units_equal(const MonomialSubring& S, const SearchBound& b) {
  for (const auto& u : S.ambient().box(b.B)) {
    if (S.ambient().is_unit(u) && (!S.member(u) || !S.member(-u))) return pts({u});
  }
  return std::nullopt;
}

Replay check_units_equal(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(1, 0)) return r.bad();
  const Point& u = r.p(0);
  r.touch(u);
  if (!S.ambient().is_unit(u)) return r.no("u not a unit of A");
  if (S.member(u) && S.member(-u)) return r.no("u is a unit of R");
  return r.yes();
}

std::optional<Witness> find_rpr(const MonomialSubring& S, const SearchBound& b) {
  // A common divisor of A-coprime elements has zero natural part.
  std::vector<Point> ds;
  for (const auto& d : S.members_in_box(b.B)) {
    if (S.ambient().is_unit(d) && !S.member(-d)) ds.push_back(d);
  }
  if (ds.empty()) return std::nullopt;
  const auto& members = S.members_in_box(b.B);
  for (const auto& a : members) {
    for (const auto& d : ds) {
      if (!S.member(a - d)) continue;
      for (const auto& bb : members) {
        if (S.ambient().rpr(a, bb) && S.member(bb - d)) return pts({a, bb, d});
      }
    }
  }
  return std::nullopt;
}

Replay check_rpr(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(3, 0)) return r.bad();
  const Point &a = r.p(0), &b = r.p(1), &d = r.p(2);
  r.touch(a), r.touch(b), r.touch(d);
  if (!S.member(a) || !S.member(b) || !S.member(d)) return r.no("a, b or d not in R");
  if (!S.ambient().rpr(a, b)) return r.no("a, b not relatively prime in A");
  if (S.member(-d)) return r.no("d is a unit of R");
  if (!S.member(a - d) || !S.member(b - d)) return r.no("d is not a common divisor in R");
  return r.yes();
}

std::optional<Witness> find_assoc(const MonomialSubring& S, const SearchBound& b) {
  if (!S.ambient().has_unit_directions()) return std::nullopt;
  const auto& members = S.members_in_box(b.B);
  for (const auto& a : members) {
    for (const auto& bb : members) {
      if (!S.ambient().associates(a, bb)) continue;
      if (!S.member(bb - a) || !S.member(a - bb)) return pts({a, bb});
    }
  }
  return std::nullopt;
}

Replay check_assoc(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(2, 0)) return r.bad();
  const Point &a = r.p(0), &b = r.p(1);
  r.touch(a), r.touch(b);
  if (!S.member(a) || !S.member(b)) return r.no("a or b not in R");
  if (!S.ambient().associates(a, b)) return r.no("a, b not associated in A");
  if (S.member(b - a) && S.member(a - b)) return r.no("a, b associated in R");
  return r.yes();
}

std::optional<Witness> find_irr_contain(const MonomialSubring& S, const SearchBound& b) {
  for (const auto& a : S.members_in_box(b.B)) {
    if (!S.ambient().is_irreducible(a)) continue;
    std::optional<Witness> found;
    for_each_split(S.ambient(), a, 1, b.B, [&](const Point& u) {
      const Point w = a - u;
      if (!S.member(u) || !S.member(w) || S.member(-u) || S.member(-w)) return false;
      found = pts({a, u, w});
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

Replay check_irr_contain(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(3, 0)) return r.bad();
  const Point &a = r.p(0), &u = r.p(1), &v = r.p(2);
  r.touch(a), r.touch(u), r.touch(v);
  if (!S.member(a) || !S.ambient().is_irreducible(a)) return r.no("a not in R and Irr A");
  if (!(u + v == a)) return r.no("a != u w");
  if (!S.member(u) || !S.member(v)) return r.no("u or w not in R");
  if (S.member(-u) || S.member(-v)) return r.no("u or w is a unit of R");
  return r.yes();
}

enum class Carrier { Self, Powers, Full };

bool in_carrier(const MonomialSubring& S, Carrier mode, std::int64_t p, const Point& b) {
  switch (mode) {
    case Carrier::Self: return S.member(b);
    case Carrier::Full: return S.ambient().contains(b);
    case Carrier::Powers:
      if (!S.ambient().contains(b)) return false;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] % p != 0) return false;
      }
      return true;
  }
  return false;
}

Finder find_bfc(Carrier mode, std::int64_t p) {
  return [mode, p](const MonomialSubring& S, const SearchBound& b) {
    return over_splits(S, b, {1}, [&](const Point& c, const Point& bb, std::int64_t) -> std::optional<Witness> {
      if (!in_carrier(S, mode, p, bb) || S.member(c - bb)) return std::nullopt;
      return pts({c - bb, bb});
    });
  };
}

Checker check_bfc(Carrier mode, std::int64_t p) {
  return [mode, p](const MonomialSubring& S, const Witness& w, const SearchBound&) {
    Rp r(S, w);
    if (!r.shape(2, 0)) return r.bad();
    const Point &a = r.p(0), &b = r.p(1);
    r.touch(a), r.touch(b), r.touch(a + b);
    if (!S.ambient().contains(a)) return r.no("a not in A");
    if (!in_carrier(S, mode, p, b)) return r.no("b not in the factor ring");
    if (!S.member(a + b)) return r.no("ab not in R");
    if (S.member(a)) return r.no("a in R");
    return r.yes();
  };
}

std::optional<Witness> find_sqfc(const MonomialSubring& S, const SearchBound& b) {
  return over_splits(S, b, {2}, [&](const Point& c, const Point& x, std::int64_t) -> std::optional<Witness> {
    const Point y = c - 2 * x;
    if (!S.ambient().is_squarefree(y) || !either_outside(S, x, y)) return std::nullopt;
    return pts({x, y});
  });
}

Replay check_sqfc(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(2, 0)) return r.bad();
  const Point &x = r.p(0), &y = r.p(1);
  r.touch(x), r.touch(y), r.touch(2 * x + y);
  r.power(2);
  if (!S.ambient().contains(x)) return r.no("x not in A");
  if (!S.ambient().is_squarefree(y)) return r.no("y not square-free in A");
  if (!S.member(2 * x + y)) return r.no("x^2 y not in R");
  if (!either_outside(S, x, y)) return r.no("x and y in R");
  return r.yes();
}

std::optional<Witness> find_root(const MonomialSubring& S, const SearchBound& b) {
  for (const auto& v : S.ambient().box(b.B)) {
    if (S.member(v)) continue;
    for (std::int64_t k = 2; k <= b.K; ++k) {
      const Point kv = k * v;
      if (!S.in_box(kv, b.B)) break;
      if (S.member(kv)) return pts({v}, {k});
    }
  }
  return std::nullopt;
}

Replay check_root(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(1, 1)) return r.bad();
  const Point& v = r.p(0);
  const std::int64_t k = r.k(0);
  r.touch(v), r.power(k);
  if (k < 2) return r.no("k < 2");
  r.touch(k * v);
  if (!S.ambient().contains(v)) return r.no("v not in A");
  if (!S.member(k * v)) return r.no("v^k not in R");
  if (S.member(v)) return r.no("v in R");
  return r.yes();
}

enum class Cls { Irr, Prime, Sqf, Gpr };

bool in_class_R(const MonomialSubring& S, Cls x, const Point& v, const SearchBound& b) {
  switch (x) {
    case Cls::Irr: return S.is_atom(v);
    case Cls::Prime: return !S.prime_counterexample(v, b);
    case Cls::Sqf: return S.is_squarefree(v);
    case Cls::Gpr: return !S.gpr_counterexample(v, b);
  }
  return false;
}

bool in_class_A(const AmbientLattice& A, Cls y, const Point& v) {
  return (y == Cls::Irr || y == Cls::Prime) ? A.is_irreducible(v) : A.is_squarefree(v);
}

Finder find_setincl(Cls x, Cls y) {
  return [x, y](const MonomialSubring& S, const SearchBound& b) -> std::optional<Witness> {
    for (const auto& v : S.members_in_box(b.B)) {
      if (S.member(-v) || in_class_A(S.ambient(), y, v)) continue;
      if (in_class_R(S, x, v, b)) return pts({v});
    }
    return std::nullopt;
  };
}

Checker check_setincl(Cls x, Cls y) {
  return [x, y](const MonomialSubring& S, const Witness& w, const SearchBound& b) {
    Rp r(S, w);
    if (!r.shape(1, 0)) return r.bad();
    const Point& v = r.p(0);
    r.touch(v);
    if (!S.member(v) || S.member(-v)) return r.no("v not a non-unit of R");
    if (in_class_A(S.ambient(), y, v)) return r.no("v in the A-side class");
    if (!in_class_R(S, x, v, b)) return r.no("v not in the R-side class");
    return r.yes();
  };
}

// Binary digits of k, least significant first, padded to `width`.
std::vector<std::int64_t> bits(std::int64_t k, std::size_t width) {
  std::vector<std::int64_t> out(width, 0);
  for (std::size_t i = 0; i < width && k > 0; ++i, k >>= 1) out[i] = k & 1;
  return out;
}

std::size_t bit_length(std::int64_t k) {
  std::size_t n = 0;
  while (k > 0) ++n, k >>= 1;
  return n;
}

std::optional<Witness> find_p41_ii(const MonomialSubring& S, const SearchBound& b) {
  return over_unitless(S, b, [&](const Point& c, const std::vector<std::size_t>& T) -> std::optional<Witness> {
    std::int64_t top = 0;
    for (auto t : T) top = std::max(top, c[t]);
    const std::size_t width = std::max<std::size_t>(1, bit_length(top));
    std::vector<Point> s(width, Point(S.dim()));
    for (auto t : T) {
      const auto d = bits(c[t], width);
      for (std::size_t i = 0; i < width; ++i) s[i][t] = d[i];
    }
    for (const auto& si : s) {
      if (!S.member(si)) return pts(s);
    }
    return std::nullopt;
  });
}

Replay check_p41_ii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (w.points.empty() || !w.ints.empty() || w.points.size() > 62) return r.no("witness needs points s_0..s_n");
  if (!r.dims()) return r.bad();
  Point sum(S.dim());
  bool outside = false;
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    const Point& s = w.points[i];
    r.touch(s);
    if (!S.ambient().is_squarefree(s)) return r.no("s_i not square-free in A");
    sum += (std::int64_t{1} << i) * s;
    outside = outside || !S.member(s);
  }
  r.touch(sum);
  if (!S.member(sum)) return r.no("product not in R");
  if (!outside) return r.no("every s_i in R");
  return r.yes();
}

std::optional<Witness> find_p41_iii(const MonomialSubring& S, const SearchBound& b) {
  return over_unitless(S, b, [&](const Point& c, const std::vector<std::size_t>& T) -> std::optional<Witness> {
    std::int64_t top = 0;
    for (auto t : T) top = std::max(top, c[t]);
    const std::size_t width = std::max<std::size_t>(1, bit_length(top));
    Witness w;
    for (auto t : T) {
      w.points.push_back(unit_vector(S.dim(), t));
      w.ints.push_back(c[t]);
      w.digits.push_back(bits(c[t], width));
    }
    for (std::size_t i = 0; i < width; ++i) {
      Point layer(S.dim());
      for (auto t : T) layer[t] = (c[t] >> i) & 1;
      if (!S.member(layer)) {
        w.ints.push_back(static_cast<std::int64_t>(i));
        return w;
      }
    }
    return std::nullopt;
  });
}

Replay check_p41_iii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  const std::size_t n = w.points.size();
  if (n == 0 || w.ints.size() != n + 1 || w.digits.size() != n) {
    return r.no("witness needs q_1..q_n, ints k_1..k_n and an index, and n digit rows");
  }
  if (!r.dims()) return r.bad();
  if (!pairwise_non_associated(S.ambient(), w.points)) return r.no("q's not pairwise non-associated");
  Point sum(S.dim());
  for (std::size_t j = 0; j < n; ++j) {
    const Point& q = w.points[j];
    r.touch(q);
    if (!S.ambient().is_irreducible(q)) return r.no("q_j not irreducible in A");
    const std::int64_t k = w.ints[j];
    if (k < 0) return r.no("negative exponent");
    std::int64_t value = 0;
    for (std::size_t i = 0; i < w.digits[j].size(); ++i) {
      const std::int64_t d = w.digits[j][i];
      if (d != 0 && d != 1) return r.no("digit not 0/1");
      if (i < 62) value += d << i;
    }
    if (value != k) return r.no("digit row is not the binary expansion of k_j");
    sum += k * q;
  }
  r.touch(sum);
  if (!S.member(sum)) return r.no("product not in R");
  const std::int64_t idx = w.ints[n];
  if (idx < 0) return r.no("negative digit index");
  Point layer(S.dim());
  for (std::size_t j = 0; j < n; ++j) {
    const auto& row = w.digits[j];
    if (static_cast<std::size_t>(idx) < row.size() && row[static_cast<std::size_t>(idx)] == 1) layer += w.points[j];
  }
  r.touch(layer);
  if (S.member(layer)) return r.no("digit layer in R");
  return r.yes();
}

std::optional<Witness> find_fc(const MonomialSubring& S, const SearchBound& b, std::int64_t k) {
  return over_splits(S, b, {k}, [&](const Point& c, const Point& a, std::int64_t kk) -> std::optional<Witness> {
    const Point bb = c - kk * a;
    if (!either_outside(S, a, bb)) return std::nullopt;
    return pts({a, bb});
  });
}

// a^k b in R with a or b outside R, for a fixed k.
Checker check_fc(std::int64_t k) {
  return [k](const MonomialSubring& S, const Witness& w, const SearchBound&) {
    Rp r(S, w);
    if (!r.shape(2, 0)) return r.bad();
    const Point &a = r.p(0), &b = r.p(1);
    r.touch(a), r.touch(b), r.touch(k * a + b), r.power(k);
    if (!S.ambient().contains(a) || !S.ambient().contains(b)) return r.no("a or b not in A");
    if (!S.member(k * a + b)) return r.no("a^k b not in R");
    if (!either_outside(S, a, b)) return r.no("a and b in R");
    return r.yes();
  };
}

std::optional<Witness> find_p42_ii(const MonomialSubring& S, const SearchBound& b) {
  return over_unitless(S, b, [&](const Point& c, const std::vector<std::size_t>& T) -> std::optional<Witness> {
    Witness w;
    bool outside = false;
    for (auto t : T) {
      w.points.push_back(unit_vector(S.dim(), t));
      w.ints.push_back(c[t]);
      outside = outside || !S.member(w.points.back());
    }
    if (!outside) return std::nullopt;
    return w;
  });
}

Replay check_p42_ii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  const std::size_t n = w.points.size();
  if (n == 0 || w.ints.size() != n || !w.digits.empty()) return r.no("witness needs q_1..q_n and k_1..k_n");
  if (!r.dims()) return r.bad();
  Point sum(S.dim());
  bool outside = false;
  for (std::size_t j = 0; j < n; ++j) {
    r.touch(w.points[j]);
    if (!S.ambient().is_irreducible(w.points[j])) return r.no("q_j not irreducible in A");
    if (w.ints[j] < 1) return r.no("k_j < 1");
    sum += w.ints[j] * w.points[j];
    outside = outside || !S.member(w.points[j]);
  }
  r.touch(sum);
  if (!S.member(sum)) return r.no("product not in R");
  if (!outside) return r.no("every q_j in R");
  return r.yes();
}

Point restrict_to(const Point& c, const std::vector<std::size_t>& T, std::uint64_t mask) {
  Point a(c.size());
  for (std::size_t j = 0; j < T.size(); ++j) {
    if (mask >> j & 1U) a[T[j]] = c[T[j]];
  }
  return a;
}

std::optional<Witness> find_p43_i(const MonomialSubring& S, const SearchBound& b) {
  return over_unitless(S, b, [&](const Point& c, const std::vector<std::size_t>& T) -> std::optional<Witness> {
    const std::uint64_t full = (std::uint64_t{1} << T.size()) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      const Point a = restrict_to(c, T, mask);
      const Point bb = c - a;
      if (either_outside(S, a, bb)) return pts({a, bb});
    }
    return std::nullopt;
  });
}

Replay check_p43_i(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(2, 0)) return r.bad();
  const Point &a = r.p(0), &b = r.p(1);
  r.touch(a), r.touch(b), r.touch(a + b);
  if (!S.ambient().contains(a) || !S.ambient().contains(b)) return r.no("a or b not in A");
  if (!S.ambient().rpr(a, b)) return r.no("a, b not relatively prime");
  if (!S.member(a + b)) return r.no("ab not in R");
  if (!either_outside(S, a, b)) return r.no("a and b in R");
  return r.yes();
}

constexpr std::size_t kMaxBlocks = 4;

std::optional<Witness> find_p43_ii(const MonomialSubring& S, const SearchBound& b) {
  return over_unitless(S, b, [&](const Point& c, const std::vector<std::size_t>& T) -> std::optional<Witness> {
    // Set partitions of T as restricted growth strings.
    const std::size_t m = T.size();
    std::vector<std::size_t> g(m, 0);
    for (;;) {
      const std::size_t blocks = *std::max_element(g.begin(), g.end()) + 1;
      if (blocks >= 2) {
        std::vector<Point> parts(blocks, Point(S.dim()));
        for (std::size_t j = 0; j < m; ++j) parts[g[j]][T[j]] = c[T[j]];
        for (const auto& part : parts) {
          if (!S.member(part)) return pts(parts);
        }
      }
      std::size_t i = m;
      bool advanced = false;
      while (i > 1) {
        --i;
        const std::size_t prefix_max = *std::max_element(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(i));
        if (g[i] <= prefix_max && g[i] + 1 < kMaxBlocks) {
          ++g[i];
          std::fill(g.begin() + static_cast<std::ptrdiff_t>(i) + 1, g.end(), 0);
          advanced = true;
          break;
        }
      }
      if (!advanced) return std::nullopt;
    }
  });
}

Replay check_p43_ii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (w.points.empty() || !w.ints.empty()) return r.no("witness needs points a_1..a_n");
  if (!r.dims()) return r.bad();
  Point sum(S.dim());
  bool outside = false;
  for (const auto& a : w.points) {
    r.touch(a);
    if (!S.ambient().contains(a)) return r.no("a_i not in A");
    sum += a;
    outside = outside || !S.member(a);
  }
  r.touch(sum);
  if (!pairwise_rpr(S.ambient(), w.points)) return r.no("a_i not pairwise relatively prime");
  if (!S.member(sum)) return r.no("product not in R");
  if (!outside) return r.no("every a_i in R");
  return r.yes();
}

std::optional<Witness> find_p43_iii(const MonomialSubring& S, const SearchBound& b) {
  return over_unitless(S, b, [&](const Point& c, const std::vector<std::size_t>& T) -> std::optional<Witness> {
    Witness w;
    bool outside = false;
    for (auto t : T) {
      w.points.push_back(unit_vector(S.dim(), t));
      w.ints.push_back(c[t]);
      outside = outside || !S.member(unit_vector(S.dim(), t, c[t]));
    }
    if (!outside) return std::nullopt;
    return w;
  });
}

Replay check_p43_iii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  const std::size_t n = w.points.size();
  if (n == 0 || w.ints.size() != n) return r.no("witness needs q_1..q_n and k_1..k_n");
  if (!r.dims()) return r.bad();
  if (!pairwise_non_associated(S.ambient(), w.points)) return r.no("q's not pairwise non-associated");
  Point sum(S.dim());
  bool outside = false;
  for (std::size_t j = 0; j < n; ++j) {
    r.touch(w.points[j]);
    if (!S.ambient().is_irreducible(w.points[j])) return r.no("q_j not irreducible in A");
    if (w.ints[j] < 1) return r.no("k_j < 1");
    const Point power = w.ints[j] * w.points[j];
    r.touch(power);
    sum += power;
    outside = outside || !S.member(power);
  }
  r.touch(sum);
  if (!S.member(sum)) return r.no("product not in R");
  if (!outside) return r.no("every q_j^k_j in R");
  return r.yes();
}

std::optional<Witness> find_p44_i(const MonomialSubring& S, const SearchBound& b) {
  return over_unitless(S, b, [&](const Point& c, const std::vector<std::size_t>& T) -> std::optional<Witness> {
    const std::uint64_t full = (std::uint64_t{1} << T.size()) - 1;
    for (std::int64_t k = 2; k <= b.K; ++k) {
      for (std::uint64_t mask = 1; mask <= full; ++mask) {
        Point a(S.dim());
        bool ok = true;
        for (std::size_t j = 0; j < T.size() && ok; ++j) {
          if (!(mask >> j & 1U)) continue;
          if (c[T[j]] % k != 0) ok = false;
          a[T[j]] = c[T[j]] / k;
        }
        if (!ok) continue;
        const Point bb = c - k * a;
        if (either_outside(S, a, bb)) return pts({a, bb}, {k});
      }
    }
    return std::nullopt;
  });
}

Replay check_p44_i(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(2, 1)) return r.bad();
  const Point &a = r.p(0), &b = r.p(1);
  const std::int64_t k = r.k(0);
  r.touch(a), r.touch(b), r.power(k);
  if (k < 2) return r.no("k < 2");
  r.touch(k * a + b);
  if (!S.ambient().contains(a) || !S.ambient().contains(b)) return r.no("a or b not in A");
  if (!S.ambient().rpr(a, b)) return r.no("a, b not relatively prime");
  if (!S.member(k * a + b)) return r.no("a^k b not in R");
  if (!either_outside(S, a, b)) return r.no("a and b in R");
  return r.yes();
}

std::optional<Witness> find_p44_ii(const MonomialSubring& S, const SearchBound& b) {
  return over_unitless(S, b, [&](const Point& c, const std::vector<std::size_t>& T) -> std::optional<Witness> {
    Witness w;
    std::vector<std::int64_t> ks;
    Point tail(S.dim());
    bool outside = false;
    for (auto t : T) {
      if (c[t] < 2) continue;
      w.points.push_back(unit_vector(S.dim(), t));
      ks.push_back(c[t]);
      outside = outside || !S.member(w.points.back());
    }
    for (auto t : T) {
      if (c[t] != 1) continue;
      w.points.push_back(unit_vector(S.dim(), t));
      tail[t] = 1;
    }
    outside = outside || !S.member(tail);
    if (!outside) return std::nullopt;
    w.ints.push_back(static_cast<std::int64_t>(ks.size()));
    w.ints.insert(w.ints.end(), ks.begin(), ks.end());
    return w;
  });
}

Replay check_p44_ii(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  const std::size_t n = w.points.size();
  if (n == 0 || w.ints.empty()) return r.no("witness needs q_1..q_n and ints [r, k_1..k_r]");
  const std::int64_t rr = w.ints[0];
  if (rr < 0 || static_cast<std::size_t>(rr) > n || w.ints.size() != static_cast<std::size_t>(rr) + 1) {
    return r.no("bad split index r");
  }
  if (!r.dims()) return r.bad();
  if (!pairwise_non_associated(S.ambient(), w.points)) return r.no("q's not pairwise non-associated");
  Point sum(S.dim()), tail(S.dim());
  bool outside = false;
  for (std::size_t j = 0; j < n; ++j) {
    const Point& q = w.points[j];
    r.touch(q);
    if (!S.ambient().is_irreducible(q)) return r.no("q_j not irreducible in A");
    if (j < static_cast<std::size_t>(rr)) {
      const std::int64_t k = w.ints[j + 1];
      if (k < 2) return r.no("k_j < 2");
      sum += k * q;
      outside = outside || !S.member(q);
    } else {
      sum += q;
      tail += q;
    }
  }
  r.touch(sum), r.touch(tail);
  if (!S.member(sum)) return r.no("product not in R");
  outside = outside || !S.member(tail);
  if (!outside) return r.no("q_1..q_r and the tail product in R");
  return r.yes();
}

std::optional<Witness> find_p45_iv(const MonomialSubring& S, const SearchBound& b) {
  return over_splits(S, b, {2, 3}, [&](const Point& c, const Point& a, std::int64_t k) -> std::optional<Witness> {
    const Point bb = c - k * a;
    if (!either_outside(S, a, bb)) return std::nullopt;
    return pts({a, bb});
  });
}

Replay check_p45_iv(const MonomialSubring& S, const Witness& w, const SearchBound&) {
  Rp r(S, w);
  if (!r.shape(2, 0)) return r.bad();
  const Point &a = r.p(0), &b = r.p(1);
  r.touch(a), r.touch(b);
  if (!S.ambient().contains(a) || !S.ambient().contains(b)) return r.no("a or b not in A");
  const Point p2 = 2 * a + b, p3 = 3 * a + b;
  const bool in2 = S.member(p2), in3 = S.member(p3);
  if (!in2 && !in3) return r.no("neither a^2 b nor a^3 b in R");
  if (in2 && (!in3 || p2.max_abs() <= p3.max_abs())) {
    r.touch(p2), r.power(2);
  } else {
    r.touch(p3), r.power(3);
  }
  if (!either_outside(S, a, b)) return r.no("a and b in R");
  return r.yes();
}

Finder find_fc_range(std::int64_t k_lo) {
  return [k_lo](const MonomialSubring& S, const SearchBound& b) {
    std::vector<std::int64_t> ks;
    for (std::int64_t k = k_lo; k <= b.K; ++k) ks.push_back(k);
    return over_splits(S, b, ks, [&](const Point& c, const Point& a, std::int64_t k) -> std::optional<Witness> {
      const Point bb = c - k * a;
      if (!either_outside(S, a, bb)) return std::nullopt;
      return pts({a, bb}, {k});
    });
  };
}

Checker check_fc_range(std::int64_t k_lo) {
  return [k_lo](const MonomialSubring& S, const Witness& w, const SearchBound&) {
    Rp r(S, w);
    if (!r.shape(2, 1)) return r.bad();
    const Point &a = r.p(0), &b = r.p(1);
    const std::int64_t k = r.k(0);
    r.touch(a), r.touch(b), r.power(k);
    if (k < k_lo) return r.no("k below range");
    r.touch(k * a + b);
    if (!S.ambient().contains(a) || !S.ambient().contains(b)) return r.no("a or b not in A");
    if (!S.member(k * a + b)) return r.no("a^k b not in R");
    if (!either_outside(S, a, b)) return r.no("a and b in R");
    return r.yes();
  };
}

// Premise "a^k b in R for all k in [lo, hi]" with a or b outside R.
bool premise_run(const MonomialSubring& S, const Point& a, const Point& b, std::int64_t lo, std::int64_t hi,
                 std::int64_t B) {
  for (std::int64_t k = lo; k <= hi; ++k) {
    const Point p = k * a + b;
    if ((B >= 0 && !S.in_box(p, B)) || !S.member(p)) return false;
  }
  return true;
}

// Runs with the range given relative to K: [lo, hi_fixed] or [lo, K].
Finder find_run(std::int64_t lo, std::int64_t hi_fixed) {
  return [lo, hi_fixed](const MonomialSubring& S, const SearchBound& b) {
    const std::int64_t hi = hi_fixed > 0 ? hi_fixed : b.K;
    return over_splits(S, b, {lo}, [&](const Point& c, const Point& a, std::int64_t) -> std::optional<Witness> {
      const Point bb = c - lo * a;
      if (!either_outside(S, a, bb)) return std::nullopt;
      if (!premise_run(S, a, bb, lo + 1, hi, b.B)) return std::nullopt;
      return pts({a, bb});
    });
  };
}

Checker check_run(std::int64_t lo, std::int64_t hi_fixed) {
  return [lo, hi_fixed](const MonomialSubring& S, const Witness& w, const SearchBound& b) {
    Rp r(S, w);
    if (!r.shape(2, 0)) return r.bad();
    const Point &a = r.p(0), &bb = r.p(1);
    const std::int64_t hi = hi_fixed > 0 ? hi_fixed : b.K;
    r.touch(a), r.touch(bb), r.power(hi);
    for (std::int64_t k = lo; k <= hi; ++k) r.touch(k * a + bb);
    if (!S.ambient().contains(a) || !S.ambient().contains(bb)) return r.no("a or b not in A");
    if (!premise_run(S, a, bb, lo, hi, -1)) return r.no("premise a^k b in R fails");
    if (!either_outside(S, a, bb)) return r.no("a and b in R");
    return r.yes();
  };
}

std::optional<Witness> find_p46_v(const MonomialSubring& S, const SearchBound& b) {
  // The weakest premise within the bound: k0 = K - 1.
  const std::int64_t k0 = b.K - 1;
  return over_splits(S, b, {k0}, [&](const Point& c, const Point& a, std::int64_t) -> std::optional<Witness> {
    const Point bb = c - k0 * a;
    if (!either_outside(S, a, bb)) return std::nullopt;
    if (!premise_run(S, a, bb, k0 + 1, b.K, b.B)) return std::nullopt;
    return pts({a, bb}, {k0});
  });
}

Replay check_p46_v(const MonomialSubring& S, const Witness& w, const SearchBound& b) {
  Rp r(S, w);
  if (!r.shape(2, 1)) return r.bad();
  const Point &a = r.p(0), &bb = r.p(1);
  const std::int64_t k0 = r.k(0);
  r.touch(a), r.touch(bb), r.power(b.K);
  // At least two consecutive powers must lie inside the bound.
  if (k0 < 1 || k0 > b.K - 1) return r.no("k0 outside [1, K-1]");
  for (std::int64_t k = k0; k <= b.K; ++k) r.touch(k * a + bb);
  if (!S.ambient().contains(a) || !S.ambient().contains(bb)) return r.no("a or b not in A");
  if (!premise_run(S, a, bb, k0, b.K, -1)) return r.no("premise a^k b in R fails");
  if (!either_outside(S, a, bb)) return r.no("a and b in R");
  return r.yes();
}

// ---------------------------------------------------------- registry

const char* const kSetNames[] = {"Irr", "Prime", "Sqf", "Gpr"};

std::string setincl_id(Cls x, Cls y) {
  return std::string("SETINCL_") + kSetNames[static_cast<int>(x)] + "R_" + kSetNames[static_cast<int>(y)] + "A";
}

const std::vector<std::pair<Cls, Cls>>& setincl_nodes() {
  static const std::vector<std::pair<Cls, Cls>> nodes = {
      {Cls::Irr, Cls::Irr},   {Cls::Prime, Cls::Irr}, {Cls::Prime, Cls::Prime},
      {Cls::Irr, Cls::Sqf},   {Cls::Prime, Cls::Sqf}, {Cls::Prime, Cls::Gpr},
      {Cls::Sqf, Cls::Sqf},   {Cls::Gpr, Cls::Sqf},   {Cls::Gpr, Cls::Gpr}};
  return nodes;
}

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Def bfc_def(const std::string& id, Carrier mode, std::int64_t p) {
  std::string carrier = mode == Carrier::Self ? "R" : mode == Carrier::Full ? "A" : "A^" + std::to_string(p);
  return Def{{id, "for a in A, b in " + carrier + ": ab in R\\{0} => a in R", "points [a, b]", false},
             find_bfc(mode, p), check_bfc(mode, p)};
}

Def fc_def(const std::string& id, std::int64_t k, bool gated) {
  const std::string power = k == 1 ? "ab" : "a^" + std::to_string(k) + "b";
  return Def{{id, "for a, b in A: " + power + " in R\\{0} => a, b in R", "points [a, b]", gated},
             [k](const MonomialSubring& S, const SearchBound& b) { return find_fc(S, b, k); }, check_fc(k)};
}

std::vector<Def> build_registry() {
  std::vector<Def> d;
  const std::string divis_iv = "for a, b in R: a |_A b => a |_R b";
  const std::string rpr = "for a, b in R: a rpr_A b => a rpr_R b";
  const std::string units = "for a in R: a in A* => a in R*";
  d.push_back({{"P1_1_iii", "for a in R, b in A: ab in R\\{0} => b in R", "points [a, b]", false},
               find_divis_iii, check_divis_iii});
  d.push_back({{"P1_1_iv", divis_iv, "points [a, b]", false}, find_divis_iv, check_divis_iv});
  d.push_back({{"P1_2_i", "R* = A* cap R", "points [u]", false}, find_units, check_units});
  d.push_back({{"P1_2_ii", units, "points [u]", false}, find_units, check_units});
  d.push_back({{"P1_2_iii", rpr, "points [a, b, d]", false}, find_rpr, check_rpr});
  d.push_back({{"P1_3_i", divis_iv, "points [a, b]", false}, find_divis_iv, check_divis_iv});
  d.push_back({{"P1_3_ii", "for a, b in R: a ~_A b => a ~_R b", "points [a, b]", false}, find_assoc,
               check_assoc});
  d.push_back({{"P1_3_iii", rpr, "points [a, b, d]", false}, find_rpr, check_rpr});
  d.push_back({{"P1_3_iv", "R cap Irr A subset Irr R", "points [a, u, w]", false}, find_irr_contain,
               check_irr_contain});
  d.push_back(bfc_def("D2_1_Bfc_self", Carrier::Self, 0));
  d.push_back(bfc_def("D2_1_Bfc_p2", Carrier::Powers, 2));
  d.push_back(bfc_def("D2_1_Bfc_p3", Carrier::Powers, 3));
  d.push_back(bfc_def("D2_1_Bfc_full", Carrier::Full, 0));
  d.push_back({{"P2_2_ii", "R_0 cap A = R (as: a |_A b => a |_R b on R)", "points [a, b]", false}, find_divis_iv,
               check_divis_iv});
  d.push_back(bfc_def("P2_2_iii", Carrier::Self, 0));
  d.push_back(bfc_def("P2_2_iv_p2", Carrier::Powers, 2));
  d.push_back(bfc_def("P2_2_iv_p3", Carrier::Powers, 3));
  d.push_back({{"T3_4_ii_sqfc", "for x in A, y in Sqf A: x^2 y in R\\{0} => x, y in R", "points [x, y]", false},
               find_sqfc, check_sqfc});
  d.push_back({{"root_closed", "for v in A, k >= 2: v^k in R => v in R", "points [v]; ints [k]", false}, find_root,
               check_root});
  for (const auto& [x, y] : setincl_nodes()) {
    const std::string id = setincl_id(x, y);
    d.push_back({{id, std::string(kSetNames[static_cast<int>(x)]) + " R subset " + kSetNames[static_cast<int>(y)] + " A",
                  "points [v]", false},
                 find_setincl(x, y), check_setincl(x, y)});
  }
  d.push_back({{"P4_1_i", "for a in A, b in Sqf A: a^2 b in R\\{0} => a, b in R", "points [a, b]", true}, find_sqfc,
               check_sqfc});
  d.push_back({{"P4_1_ii", "for s_0..s_n in Sqf A: s_n^(2^n)..s_1^2 s_0 in R => s_0..s_n in R",
                "points [s_0, ..., s_n]", true},
               find_p41_ii, check_p41_ii});
  d.push_back({{"P4_1_iii",
                "for pairwise non-associated q_1..q_n in Irr A, k_j >= 0: q_1^k_1..q_n^k_n in R => every binary "
                "digit layer q_1^c1_i..q_n^cn_i in R",
                "points [q_1..q_n]; ints [k_1..k_n, i]; digits [row per q_j]", true},
               find_p41_iii, check_p41_iii});
  {
    Def fc = fc_def("P4_2_i", 1, true);
    d.push_back(fc);
  }
  d.push_back({{"P4_2_ii", "for q_1..q_n in Irr A, k_j >= 1: q_1^k_1..q_n^k_n in R => q_1..q_n in R",
                "points [q_1..q_n]; ints [k_1..k_n]", true},
               find_p42_ii, check_p42_ii});
  d.push_back({{"P4_3_i", "for a rpr b in A: ab in R\\{0} => a, b in R", "points [a, b]", true}, find_p43_i,
               check_p43_i});
  d.push_back({{"P4_3_ii", "for pairwise rpr a_1..a_n in A: a_1..a_n in R\\{0} => a_1..a_n in R",
                "points [a_1..a_n]", true},
               find_p43_ii, check_p43_ii});
  d.push_back({{"P4_3_iii",
                "for pairwise non-associated q_1..q_n in Irr A, k_j >= 1: q_1^k_1..q_n^k_n in R => each q_j^k_j in R",
                "points [q_1..q_n]; ints [k_1..k_n]", true},
               find_p43_iii, check_p43_iii});
  d.push_back({{"P4_4_i", "for a rpr b in A, k > 1: a^k b in R\\{0} => a, b in R", "points [a, b]; ints [k]", true},
               find_p44_i, check_p44_i});
  d.push_back({{"P4_4_ii",
                "for pairwise non-associated q_1..q_n in Irr A, k_1..k_r > 1: q_1^k_1..q_r^k_r q_(r+1)..q_n in R => "
                "q_1..q_r, q_(r+1)..q_n in R",
                "points [q_1..q_n]; ints [r, k_1..k_r]", true},
               find_p44_ii, check_p44_ii});
  d.push_back(fc_def("P4_5_i", 1, false));
  d.push_back(fc_def("P4_5_ii", 2, false));
  d.push_back(fc_def("P4_5_iii", 3, false));
  d.push_back({{"P4_5_iv", "for a, b in A: (a^2 b or a^3 b in R\\{0}) => a, b in R", "points [a, b]", false},
               find_p45_iv, check_p45_iv});
  d.push_back({{"P4_5_v", "for a, b in A, k > 1: a^k b in R\\{0} => a, b in R", "points [a, b]; ints [k]", false},
               find_fc_range(2), check_fc_range(2)});
  d.push_back({{"P4_5_vi", "for a, b in A, k >= 1: a^k b in R\\{0} => a, b in R", "points [a, b]; ints [k]", false},
               find_fc_range(1), check_fc_range(1)});
  d.push_back({{"P4_6_i", "for a, b in A: ab, a^2 b in R\\{0} => a, b in R", "points [a, b]", false},
               find_run(1, 2), check_run(1, 2)});
  d.push_back({{"P4_6_ii", "for a, b in A: a^2 b, a^3 b in R\\{0} => a, b in R", "points [a, b]", false},
               find_run(2, 3), check_run(2, 3)});
  d.push_back({{"P4_6_iii", "for a, b in A: (a^k b in R\\{0} for all k >= 1) => a, b in R", "points [a, b]", false},
               find_run(1, 0), check_run(1, 0)});
  d.push_back({{"P4_6_iv", "for a, b in A: (a^k b in R\\{0} for all k > 1) => a, b in R", "points [a, b]", false},
               find_run(2, 0), check_run(2, 0)});
  d.push_back({{"P4_6_v", "for a, b in A: (exists k0, a^k b in R\\{0} for all k >= k0) => a, b in R",
                "points [a, b]; ints [k0]", false},
               find_p46_v, check_p46_v});
  d.push_back({{"T2_4_ii_mono", "Irr R subset Sqf A", "points [v]", false}, find_setincl(Cls::Irr, Cls::Sqf),
               check_setincl(Cls::Irr, Cls::Sqf)});
  d.push_back({{"T2_4_iii_mono", "Sqf R subset Sqf A", "points [v]", false}, find_setincl(Cls::Sqf, Cls::Sqf),
               check_setincl(Cls::Sqf, Cls::Sqf)});
  return d;
}

const std::vector<Def>& registry() {
  static const std::vector<Def> r = build_registry();
  return r;
}

const Def& units_equal_def() {
  static const Def d{{"H_units_equal", "R* = A*", "points [u]", false}, find_units_equal, check_units_equal};
  return d;
}

// Resolves fixed ids and the parametrized D2_1_Bfc_p<N> / P2_2_iv_p<N>.
std::optional<Def> resolve(std::string_view id) {
  for (const auto& d : registry()) {
    if (d.info.id == id) return d;
  }
  if (id == "H_units_equal") return units_equal_def();
  for (const std::string_view prefix : {std::string_view("D2_1_Bfc_p"), std::string_view("P2_2_iv_p")}) {
    if (id.substr(0, prefix.size()) != prefix) continue;
    const std::string_view digits = id.substr(prefix.size());
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      return std::nullopt;
    }
    const std::int64_t p = std::stoll(std::string(digits));
    if (!is_prime_number(p)) throw DomainError("invalid p in " + std::string(id) + ": p must be prime");
    return bfc_def(std::string(id), Carrier::Powers, p);
  }
  return std::nullopt;
}

void check_bound(const SearchBound& b) {
  if (b.B < 1) throw DomainError("bound B must be at least 1");
  if (b.K < 2) throw DomainError("power bound K must be at least 2");
}

}  // namespace

const std::vector<ConditionInfo>& catalog() {
  static const std::vector<ConditionInfo> infos = [] {
    std::vector<ConditionInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

std::optional<ConditionInfo> find_condition(std::string_view id) {
  try {
    if (auto d = resolve(id)) return d->info;
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

Verdict eval(std::string_view id, const MonomialSubring& S, const SearchBound& bound) {
  check_bound(bound);
  const auto def = resolve(id);
  if (!def) throw DomainError("unknown condition id '" + std::string(id) + "'");
  if (def->info.needs_units_equal && !S.units_equal()) {
    return Verdict::hypothesis_violated(def->info.id, bound, "R* != A*: some unit of A is not a unit of R");
  }
  if (auto w = def->find(S, bound)) return Verdict::fails(def->info.id, bound, std::move(*w));
  return Verdict::holds(def->info.id, bound);
}

Replay replay(std::string_view id, const MonomialSubring& S, const Witness& w, const SearchBound& bound) {
  check_bound(bound);
  const auto def = resolve(id);
  if (!def) throw DomainError("unknown condition id '" + std::string(id) + "'");
  try {
    return def->check(S, w, bound);
  } catch (const DomainError& e) {
    Replay r;
    r.detail = e.what();
    return r;
  }
}

HypothesisReport hypotheses(const MonomialSubring& S, const SearchBound& bound) {
  return HypothesisReport{eval("H_units_equal", S, bound), eval("P1_1_iv", S, bound), true};
}

}  // namespace facsub
