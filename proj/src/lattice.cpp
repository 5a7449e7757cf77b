#include "facsub/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "facsub/error.hpp"

namespace facsub {

// ---------------------------------------------------------------- Point

std::size_t Point::check_dim(std::size_t dim) {
  if (dim > kMaxDim) {
    throw DomainError("lattice dimension " + std::to_string(dim) + " exceeds the supported maximum " +
                      std::to_string(kMaxDim));
  }
  return dim;
}

Point::Point(std::initializer_list<std::int64_t> xs) : n_(static_cast<std::uint8_t>(check_dim(xs.size()))) {
  std::copy(xs.begin(), xs.end(), v_.begin());
}

Point::Point(const std::vector<std::int64_t>& xs) : n_(static_cast<std::uint8_t>(check_dim(xs.size()))) {
  std::copy(xs.begin(), xs.end(), v_.begin());
}

bool Point::is_zero() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (v_[i] != 0) return false;
  }
  return true;
}

std::int64_t Point::max_abs() const noexcept {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < n_; ++i) m = std::max(m, std::abs(v_[i]));
  return m;
}

std::string Point::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out << ',';
    out << v_[i];
  }
  out << ')';
  return out.str();
}

Point& Point::operator+=(const Point& o) {
  if (n_ != o.n_) throw DomainError("point dimension mismatch");
  for (std::size_t i = 0; i < n_; ++i) v_[i] += o.v_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  if (n_ != o.n_) throw DomainError("point dimension mismatch");
  for (std::size_t i = 0; i < n_; ++i) v_[i] -= o.v_[i];
  return *this;
}

bool operator<(const Point& a, const Point& b) noexcept {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (a.v_[i] != b.v_[i]) return a.v_[i] < b.v_[i];
  }
  return false;
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    h ^= static_cast<std::uint64_t>(p[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ------------------------------------------------------- AmbientLattice

struct AmbientLattice::BoxCache {
  std::mutex mu;
  std::map<std::int64_t, std::vector<Point>> boxes;
};

AmbientLattice::AmbientLattice(std::vector<CoordSign> signs, std::optional<std::vector<std::int64_t>> grading)
    : signs_(std::move(signs)), boxes_(std::make_shared<BoxCache>()) {
  if (signs_.empty()) throw DomainError("ambient dimension must be at least 1");
  if (signs_.size() > kMaxDim) {
    throw DomainError("ambient dimension exceeds the supported maximum " + std::to_string(kMaxDim));
  }
  if (grading) {
    if (grading->size() != signs_.size()) throw DomainError("grading length does not match the dimension");
    grading_ = std::move(*grading);
    for (std::size_t i = 0; i < signs_.size(); ++i) {
      if (is_nat(i) && grading_[i] <= 0) {
        throw DomainError("grading must be positive on natural coordinate " + std::to_string(i));
      }
      if (!is_nat(i) && grading_[i] != 0) {
        throw DomainError("grading must vanish on integer coordinate " + std::to_string(i));
      }
    }
  } else {
    grading_.resize(signs_.size());
    for (std::size_t i = 0; i < signs_.size(); ++i) grading_[i] = is_nat(i) ? 1 : 0;
  }
}

AmbientLattice AmbientLattice::naturals(std::size_t n) {
  return AmbientLattice(std::vector<CoordSign>(n, CoordSign::Nat));
}

bool AmbientLattice::has_unit_directions() const noexcept {
  return std::any_of(signs_.begin(), signs_.end(), [](CoordSign s) { return s == CoordSign::Int; });
}

std::int64_t AmbientLattice::grade(const Point& v) const {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < dim(); ++i) g += grading_[i] * v[i];
  return g;
}

bool AmbientLattice::contains(const Point& v) const {
  if (v.size() != dim()) throw DomainError("point dimension does not match the ambient lattice");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_nat(i) && v[i] < 0) return false;
  }
  return true;
}

std::int64_t AmbientLattice::nat_sum(const Point& v) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_nat(i)) s += v[i];
  }
  return s;
}

bool AmbientLattice::is_unit(const Point& v) const {
  if (!contains(v)) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_nat(i) && v[i] != 0) return false;
  }
  return true;
}

bool AmbientLattice::is_irreducible(const Point& v) const { return contains(v) && nat_sum(v) == 1; }

bool AmbientLattice::is_squarefree(const Point& v) const {
  if (!contains(v)) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_nat(i) && v[i] > 1) return false;
  }
  return true;
}

bool AmbientLattice::associates(const Point& a, const Point& b) const {
  if (!contains(a) || !contains(b)) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_nat(i) && a[i] != b[i]) return false;
  }
  return true;
}

bool AmbientLattice::rpr(const Point& a, const Point& b) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_nat(i) && std::min(a[i], b[i]) > 0) return false;
  }
  return true;
}

const std::vector<Point>& AmbientLattice::box(std::int64_t B) const {
  if (B < 0) throw DomainError("box radius must be non-negative");
  if (!boxes_) throw DomainError("box of an empty ambient lattice");
  std::lock_guard<std::mutex> lock(boxes_->mu);
  auto it = boxes_->boxes.find(B);
  if (it != boxes_->boxes.end()) return it->second;

  std::vector<Point> pts;
  Point p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = is_nat(i) ? 0 : -B;
  for (;;) {
    pts.push_back(p);
    bool carry = true;
    for (std::size_t i = dim(); carry && i > 0;) {
      --i;
      if (p[i] < B) {
        ++p[i];
        carry = false;
      } else {
        p[i] = is_nat(i) ? 0 : -B;
      }
    }
    if (carry) break;
  }
  auto weight = [](const Point& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += std::abs(v[i]);
    return s;
  };
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    const auto wa = weight(a);
    const auto wb = weight(b);
    if (wa != wb) return wa < wb;
    return b < a;
  });
  return boxes_->boxes.emplace(B, std::move(pts)).first->second;
}

// ------------------------------------------------------ MonomialSubring

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::size_t kGridCells = std::size_t{1} << 21;

}  // namespace

struct MonomialSubring::Memo {
  // Dense window: cell state 0 unknown, 1 non-member, 2 member.
  std::vector<std::int64_t> lo, extent;
  std::unique_ptr<std::atomic<std::uint8_t>[]> grid;
  std::size_t cells = 0;
  std::mutex mu;
  std::unordered_map<Point, bool, PointHash> overflow;

  std::mutex rep_mu;
  std::map<std::int64_t, std::vector<Point>> reps;
  std::map<std::int64_t, std::vector<Point>> box_members;

  std::mutex test_mu;
  TestCache prime_tests, gpr_tests;

  std::optional<std::size_t> index(const Point& r) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const std::int64_t off = r[i] - lo[i];
      if (off < 0 || off >= extent[i]) return std::nullopt;
      idx = idx * static_cast<std::size_t>(extent[i]) + static_cast<std::size_t>(off);
    }
    return idx;
  }

  std::uint8_t get(const Point& r) {
    if (auto idx = index(r)) return grid[*idx].load(std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(mu);
    auto it = overflow.find(r);
    if (it == overflow.end()) return 0;
    return it->second ? 2 : 1;
  }

  void put(const Point& r, bool value) {
    if (auto idx = index(r)) {
      grid[*idx].store(value ? 2 : 1, std::memory_order_relaxed);
      return;
    }
    std::lock_guard<std::mutex> lock(mu);
    overflow[r] = value;
  }
};

MonomialSubring::MonomialSubring(AmbientLattice ambient, std::vector<Point> gens, std::vector<Point> unit_gens)
    : ambient_(std::move(ambient)),
      gens_(std::move(gens)),
      unit_gens_(std::move(unit_gens)),
      memo_(std::make_unique<Memo>()) {
  const std::size_t n = ambient_.dim();
  if (n == 0) throw DomainError("ambient lattice is empty");
  for (const auto& g : gens_) {
    if (g.size() != n) throw DomainError("generator " + g.to_string() + " has the wrong dimension");
    if (!ambient_.contains(g)) {
      throw DomainError("generator " + g.to_string() + " has a negative natural coordinate");
    }
    if (g.is_zero()) throw DomainError("generator must be nonzero");
  }
  for (const auto& u : unit_gens_) {
    if (u.size() != n) throw DomainError("unit generator " + u.to_string() + " has the wrong dimension");
    if (!ambient_.is_unit(u)) {
      throw DomainError("unit generator " + u.to_string() + " is not an ambient unit (grade must be 0)");
    }
  }

  // Echelon basis of the unit subgroup with positive pivots.
  std::vector<Point> rows;
  for (const auto& u : unit_gens_) {
    if (!u.is_zero()) rows.push_back(u);
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] != 0 && (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const std::int64_t q = rows[i][col] / rows[r][col];
        rows[i] -= q * rows[r];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) {
        if (rows[r][col] < 0) rows[r] = -rows[r];
        unit_basis_.emplace_back(col, rows[r]);
        ++r;
        break;
      }
    }
  }

  // Search grading: the ambient one if it is positive on every generator,
  // otherwise c*lambda + w with w supported on integer coordinates and
  // orthogonal to the unit subgroup.
  auto positive_on_gens = [&](const std::vector<std::int64_t>& mu) {
    for (const auto& g : gens_) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s += mu[i] * g[i];
      if (s <= 0) return false;
    }
    return true;
  };
  if (positive_on_gens(ambient_.grading())) {
    mu_ = ambient_.grading();
  } else {
    std::vector<std::size_t> int_coords;
    for (std::size_t i = 0; i < n; ++i) {
      if (!ambient_.is_nat(i)) int_coords.push_back(i);
    }
    constexpr std::int64_t kW = 4;
    std::vector<std::vector<std::int64_t>> ws;
    std::vector<std::int64_t> w(int_coords.size(), -kW);
    if (!int_coords.empty()) {
      for (;;) {
        ws.push_back(w);
        std::size_t i = w.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (w[i] < kW) {
            ++w[i];
            done = false;
            break;
          }
          w[i] = -kW;
        }
        if (done) break;
      }
    }
    std::stable_sort(ws.begin(), ws.end(), [](const auto& a, const auto& b) {
      std::int64_t sa = 0, sb = 0;
      for (auto x : a) sa += std::abs(x);
      for (auto x : b) sb += std::abs(x);
      if (sa != sb) return sa < sb;
      return a > b;
    });
    for (std::int64_t c = 1; c <= 4 && mu_.empty(); ++c) {
      for (const auto& cand : ws) {
        std::vector<std::int64_t> mu(n);
        for (std::size_t i = 0; i < n; ++i) mu[i] = c * ambient_.grading()[i];
        for (std::size_t j = 0; j < int_coords.size(); ++j) mu[int_coords[j]] = cand[j];
        bool orthogonal = true;
        for (const auto& u : unit_gens_) {
          std::int64_t s = 0;
          for (std::size_t i = 0; i < n; ++i) s += mu[i] * u[i];
          if (s != 0) orthogonal = false;
        }
        if (orthogonal && positive_on_gens(mu)) {
          mu_ = std::move(mu);
          break;
        }
      }
    }
    if (mu_.empty()) {
      throw DomainError("no positive grading separates the generators from the units; "
                        "move invertible generators to unit_gens");
    }
  }

  // Dense memo window: natural coordinates from 0, integer ones centered.
  std::int64_t side = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(kGridCells), 1.0 / n)));
  while (side > 1) {
    std::size_t cells = 1;
    for (std::size_t i = 0; i < n; ++i) cells *= static_cast<std::size_t>(side);
    if (cells <= kGridCells) break;
    --side;
  }
  memo_->lo.resize(n);
  memo_->extent.assign(n, side);
  memo_->cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    memo_->lo[i] = ambient_.is_nat(i) ? 0 : -(side / 2);
    memo_->cells *= static_cast<std::size_t>(side);
  }
  memo_->grid = std::make_unique<std::atomic<std::uint8_t>[]>(memo_->cells);
  for (std::size_t i = 0; i < memo_->cells; ++i) memo_->grid[i].store(0, std::memory_order_relaxed);
}

MonomialSubring::~MonomialSubring() = default;

std::int64_t MonomialSubring::search_grade(const Point& v) const {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < dim(); ++i) g += mu_[i] * v[i];
  return g;
}

Point MonomialSubring::reduce(const Point& v) const {
  Point r = v;
  for (const auto& [col, row] : unit_basis_) {
    const std::int64_t q = floor_div(r[col], row[col]);
    if (q != 0) r -= q * row;
  }
  return r;
}

bool MonomialSubring::member(const Point& v) const {
  if (v.size() != dim()) throw DomainError("point dimension does not match the ambient lattice");
  if (!ambient_.contains(v)) return false;
  return member_reduced(reduce(v));
}

bool MonomialSubring::member_reduced(const Point& start) const {
  auto trivially = [&](const Point& p) -> int {
    if (p.is_zero()) return 1;
    if (!ambient_.contains(p) || search_grade(p) <= 0) return 0;
    return -1;
  };
  if (const int t = trivially(start); t >= 0) return t == 1;
  if (const auto known = memo_->get(start)) return known == 2;

  // Depth-first descent by generators; the search grade strictly drops, so
  // the stack is bounded and acyclic.
  struct Frame {
    Point p;
    std::size_t next;
  };
  std::vector<Frame> stack{{start, 0}};
  auto succeed = [&] {
    for (const auto& f : stack) memo_->put(f.p, true);
    return true;
  };
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == gens_.size()) {
      memo_->put(top.p, false);
      stack.pop_back();
      if (!stack.empty()) ++stack.back().next;
      continue;
    }
    const Point q = reduce(top.p - gens_[top.next]);
    const int t = trivially(q);
    if (t == 1) return succeed();
    if (t == 0) {
      ++top.next;
      continue;
    }
    const auto known = memo_->get(q);
    if (known == 2) return succeed();
    if (known == 1) {
      ++top.next;
      continue;
    }
    stack.push_back({q, 0});
  }
  return false;
}

void MonomialSubring::require_member(const Point& v, const char* what) const {
  if (!member(v)) throw DomainError(std::string(what) + " " + v.to_string() + " is not in the subring");
}

bool MonomialSubring::is_unit(const Point& u) const {
  require_member(u, "element");
  return reduce(u).is_zero();
}

bool MonomialSubring::divides(const Point& u, const Point& v) const {
  require_member(u, "divisor");
  require_member(v, "element");
  return member(v - u);
}

bool MonomialSubring::associates(const Point& u, const Point& v) const {
  require_member(u, "element");
  require_member(v, "element");
  return reduce(v - u).is_zero();
}

bool MonomialSubring::rpr(const Point& u, const Point& v) const {
  require_member(u, "element");
  require_member(v, "element");
  return !common_nonunit_divisor(u, v);
}

bool MonomialSubring::is_atom(const Point& v) const {
  require_member(v, "element");
  if (reduce(v).is_zero()) return false;
  return !decomposition(v);
}

bool MonomialSubring::is_squarefree(const Point& v) const {
  require_member(v, "element");
  return !square_factor(v);
}

const std::vector<Point>& MonomialSubring::representatives(std::int64_t g) const {
  std::lock_guard<std::mutex> lock(memo_->rep_mu);
  auto it = memo_->reps.lower_bound(g);
  if (it != memo_->reps.end() && it->first == g) return it->second;

  std::unordered_set<Point, PointHash> seen;
  std::vector<Point> out;
  const Point zero(dim());
  if (g >= 0) {
    seen.insert(zero);
    out.push_back(zero);
  }
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& gen : gens_) {
      Point q = reduce(out[head] + gen);
      if (search_grade(q) > g) continue;
      if (seen.insert(q).second) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Point& a, const Point& b) {
    const auto ga = search_grade(a);
    const auto gb = search_grade(b);
    if (ga != gb) return ga < gb;
    return a < b;
  });
  return memo_->reps.emplace(g, std::move(out)).first->second;
}

std::optional<std::pair<Point, Point>> MonomialSubring::decomposition(const Point& v) const {
  if (!member(v)) return std::nullopt;
  const std::int64_t gv = search_grade(v);
  for (const auto& u : representatives(gv - 1)) {
    if (u.is_zero()) continue;
    const Point w = v - u;
    if (member(w) && !reduce(w).is_zero()) return std::make_pair(u, w);
  }
  return std::nullopt;
}

std::optional<std::pair<Point, Point>> MonomialSubring::square_factor(const Point& v) const {
  if (!member(v)) return std::nullopt;
  const std::int64_t gv = search_grade(v);
  for (const auto& u : representatives(gv / 2)) {
    if (u.is_zero()) continue;
    const Point w = v - 2 * u;
    if (member(w)) return std::make_pair(u, w);
  }
  return std::nullopt;
}

std::optional<Point> MonomialSubring::common_nonunit_divisor(const Point& u, const Point& v) const {
  const std::int64_t g = std::min(search_grade(u), search_grade(v));
  for (const auto& d : representatives(g)) {
    if (d.is_zero()) continue;
    if (member(u - d) && member(v - d)) return d;
  }
  return std::nullopt;
}

std::vector<Point> MonomialSubring::atoms_up_to(std::int64_t grade_bound) const {
  if (grade_bound < 1) throw DomainError("grade bound must be at least 1");
  std::vector<Point> out;
  for (const auto& r : representatives(grade_bound)) {
    if (r.is_zero()) continue;
    if (!decomposition(r)) out.push_back(r);
  }
  return out;
}

std::vector<std::vector<Point>> MonomialSubring::atom_factorizations(const Point& v, std::size_t limit) const {
  require_member(v, "element");
  std::vector<std::vector<Point>> out;
  const std::int64_t gv = search_grade(v);
  if (gv <= 0) return out;
  const std::vector<Point> atoms = atoms_up_to(gv);
  std::vector<Point> current;
  std::function<void(const Point&, std::size_t)> go = [&](const Point& rest, std::size_t first) {
    if (out.size() >= limit) return;
    if (reduce(rest).is_zero()) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = first; i < atoms.size(); ++i) {
      const Point next = rest - atoms[i];
      if (!member(next)) continue;
      current.push_back(atoms[i]);
      go(next, i);
      current.pop_back();
    }
  };
  go(v, 0);
  return out;
}

const std::vector<Point>& MonomialSubring::members_in_box(std::int64_t B) const {
  const auto& box = ambient_.box(B);
  {
    std::lock_guard<std::mutex> lock(memo_->rep_mu);
    auto it = memo_->box_members.find(B);
    if (it != memo_->box_members.end()) return it->second;
  }
  std::vector<Point> out;
  for (const auto& p : box) {
    if (member(p)) out.push_back(p);
  }
  std::lock_guard<std::mutex> lock(memo_->rep_mu);
  return memo_->box_members.emplace(B, std::move(out)).first->second;
}

bool MonomialSubring::in_box(const Point& v, std::int64_t B) const {
  if (!ambient_.contains(v)) return false;
  return v.max_abs() <= B;
}

bool MonomialSubring::units_equal() const {
  std::size_t int_coords = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!ambient_.is_nat(i)) ++int_coords;
  }
  if (unit_basis_.size() != int_coords) return false;
  return std::all_of(unit_basis_.begin(), unit_basis_.end(),
                     [](const auto& b) { return b.second[b.first] == 1; });
}

std::optional<Witness> MonomialSubring::prime_counterexample(const Point& r, const SearchBound& bound) const {
  require_member(r, "element");
  if (reduce(r).is_zero()) throw DomainError("prime test on a unit");
  // r = u + w with non-units: r | u + w, while r | u would make w a unit.
  if (auto dec = decomposition(r)) return Witness{{dec->first, dec->second}, {}, {}};
  return cached_test(memo_->prime_tests, r, bound, [&] { return prime_search(r, bound); });
}

std::optional<Witness> MonomialSubring::gpr_counterexample(const Point& r, const SearchBound& bound) const {
  require_member(r, "element");
  if (reduce(r).is_zero()) throw DomainError("radical test on a unit");
  // r = 2u + w: 2(u + w) = r + w, while u + w - r = -u is not in S.
  if (auto sq = square_factor(r)) return Witness{{sq->first + sq->second}, {2}, {}};
  return cached_test(memo_->gpr_tests, r, bound, [&] { return gpr_search(r, bound); });
}

// Box-search witnesses only involve r through membership of differences
// with r, so they are shared across the unit class of r.
template <typename Search>
std::optional<Witness> MonomialSubring::cached_test(TestCache& cache, const Point& r, const SearchBound& bound,
                                                    Search search) const {
  const TestKey key{reduce(r), bound.B, bound.K};
  {
    std::lock_guard<std::mutex> lock(memo_->test_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto result = search();
  std::lock_guard<std::mutex> lock(memo_->test_mu);
  cache.emplace(key, result);
  return result;
}

std::optional<Witness> MonomialSubring::prime_search(const Point& r, const SearchBound& bound) const {
  for (const auto& c : members_in_box(bound.B)) {
    if (!member(c - r)) continue;
    std::optional<Witness> found;
    for_each_split(ambient_, c, 1, bound.B, [&](const Point& a) {
      const Point b = c - a;
      if (!member(a) || !member(b)) return false;
      if (member(a - r) || member(b - r)) return false;
      found = Witness{{a, b}, {}, {}};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Witness> MonomialSubring::gpr_search(const Point& r, const SearchBound& bound) const {
  for (const auto& x : members_in_box(bound.B)) {
    if (member(x - r)) continue;
    for (std::int64_t k = 2; k <= bound.K; ++k) {
      const Point kx = k * x;
      if (!in_box(kx, bound.B)) break;
      if (member(kx - r)) return Witness{{x}, {k}, {}};
    }
  }
  return std::nullopt;
}

bool for_each_split(const AmbientLattice& ambient, const Point& c, std::int64_t k, std::int64_t B,
                    const std::function<bool(const Point&)>& visit) {
  if (k < 1) throw DomainError("split multiplier must be positive");
  const std::size_t n = ambient.dim();
  std::vector<std::vector<std::int64_t>> ranges(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Need |a_i| <= B and |c_i - k a_i| <= B, plus sign constraints.
    std::int64_t lo = floor_div(c[i] - B + k - 1, k);
    std::int64_t hi = floor_div(c[i] + B, k);
    lo = std::max(lo, -B);
    hi = std::min(hi, B);
    if (ambient.is_nat(i)) {
      lo = std::max<std::int64_t>(lo, 0);
      hi = std::min(hi, floor_div(c[i], k));
      for (std::int64_t x = hi; x >= lo; --x) ranges[i].push_back(x);
    } else {
      for (std::int64_t x = lo; x <= hi; ++x) ranges[i].push_back(x);
      std::sort(ranges[i].begin(), ranges[i].end(), [](std::int64_t a, std::int64_t b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        return a > b;
      });
    }
    if (ranges[i].empty()) return false;
  }
  std::vector<std::size_t> idx(n, 0);
  Point a(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) a[i] = ranges[i][idx[i]];
    if (visit(a)) return true;
    std::size_t i = n;
    bool carry = true;
    while (carry && i > 0) {
      --i;
      if (++idx[i] < ranges[i].size()) {
        carry = false;
      } else {
        idx[i] = 0;
      }
    }
    if (carry) return false;
  }
}

std::unique_ptr<MonomialSubring> Instance::build() const {
  return std::make_unique<MonomialSubring>(ambient, gens, unit_gens);
}

}  // namespace facsub
