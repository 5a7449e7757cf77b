#pragma once

// Monomial subrings modeled as affine semigroups with a unit subgroup.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace facsub {

inline constexpr std::size_t kMaxDim = 6;

/// Integer lattice point of dimension <= kMaxDim, stored inline.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : n_(static_cast<std::uint8_t>(check_dim(dim))) {}
  Point(std::initializer_list<std::int64_t> xs);
  explicit Point(const std::vector<std::int64_t>& xs);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }
  std::vector<std::int64_t> to_vector() const { return {v_.begin(), v_.begin() + n_}; }
  bool is_zero() const noexcept;
  std::int64_t max_abs() const noexcept;
  std::string to_string() const;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(Point a) {
    for (std::size_t i = 0; i < a.n_; ++i) a.v_[i] = -a.v_[i];
    return a;
  }
  friend Point operator*(std::int64_t k, Point a) {
    for (std::size_t i = 0; i < a.n_; ++i) a.v_[i] *= k;
    return a;
  }
  friend bool operator==(const Point& a, const Point& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.v_[i] != b.v_[i]) return false;
    }
    return true;
  }
  friend bool operator<(const Point& a, const Point& b) noexcept;

 private:
  static std::size_t check_dim(std::size_t dim);

  std::array<std::int64_t, kMaxDim> v_{};
  std::uint8_t n_ = 0;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

enum class CoordSign { Nat, Int };

/// Exponent lattice of A: natural coordinates are ordinary variables,
/// integer coordinates are invertible ones (as x in k(x)[y]).
class AmbientLattice {
 public:
  AmbientLattice() = default;
  /// Throws DomainError if the grading is not positive on natural
  /// coordinates and zero on integer ones.
  AmbientLattice(std::vector<CoordSign> signs, std::optional<std::vector<std::int64_t>> grading = {});

  static AmbientLattice naturals(std::size_t n);

  std::size_t dim() const noexcept { return signs_.size(); }
  const std::vector<CoordSign>& signs() const noexcept { return signs_; }
  const std::vector<std::int64_t>& grading() const noexcept { return grading_; }
  bool is_nat(std::size_t i) const { return signs_[i] == CoordSign::Nat; }
  bool has_unit_directions() const noexcept;

  std::int64_t grade(const Point& v) const;
  /// Natural coordinates non-negative.
  bool contains(const Point& v) const;
  bool is_unit(const Point& v) const;
  bool is_irreducible(const Point& v) const;
  bool is_squarefree(const Point& v) const;
  bool divides(const Point& a, const Point& b) const { return contains(b - a); }
  bool associates(const Point& a, const Point& b) const;
  bool rpr(const Point& a, const Point& b) const;
  std::int64_t nat_sum(const Point& v) const;

  /// Ambient points with natural coordinates in [0, B] and integer ones in
  /// [-B, B], ordered by sum of |v_i| then lexicographically descending.
  const std::vector<Point>& box(std::int64_t B) const;

  friend bool operator==(const AmbientLattice& a, const AmbientLattice& b) {
    return a.signs_ == b.signs_ && a.grading_ == b.grading_;
  }

 private:
  std::vector<CoordSign> signs_;
  std::vector<std::int64_t> grading_;
  struct BoxCache;
  std::shared_ptr<BoxCache> boxes_;
};

struct SearchBound {
  std::int64_t B = 12;
  std::int64_t K = 6;
};

/// Visits every ambient point a with a and c - k*a both in the ambient box
/// of radius B. Coordinates are nested loops, first coordinate slowest;
/// natural coordinates descend, integer ones run 0, 1, -1, 2, -2, ...
/// Stops and returns true as soon as `visit` returns true.
bool for_each_split(const AmbientLattice& ambient, const Point& c, std::int64_t k, std::int64_t B,
                    const std::function<bool(const Point&)>& visit);

/// Witness components for a bounded search: points, integer parameters
/// (exponents, indices) and, where a condition needs them, 0/1 digit rows.
struct Witness {
  std::vector<Point> points;
  std::vector<std::int64_t> ints;
  std::vector<std::vector<std::int64_t>> digits;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// The semigroup S generated by `gens` over N and `unit_gens` over Z.
///
/// Membership is decided by descent along a positive search grading after
/// reducing modulo the unit subgroup; results are memoized. The memo is
/// internally synchronized, so concurrent queries are safe.
class MonomialSubring {
 public:
  /// Throws DomainError on a sign violation or when no positive search
  /// grading exists for the generators.
  MonomialSubring(AmbientLattice ambient, std::vector<Point> gens, std::vector<Point> unit_gens);
  ~MonomialSubring();
  MonomialSubring(const MonomialSubring&) = delete;
  MonomialSubring& operator=(const MonomialSubring&) = delete;

  const AmbientLattice& ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return ambient_.dim(); }
  const std::vector<Point>& gens() const noexcept { return gens_; }
  const std::vector<Point>& unit_gens() const noexcept { return unit_gens_; }
  /// Functional used for descent; equals the ambient grading unless some
  /// generator is an ambient unit.
  const std::vector<std::int64_t>& search_grading() const noexcept { return mu_; }
  std::int64_t search_grade(const Point& v) const;

  bool member(const Point& v) const;
  /// Representative of v modulo the unit subgroup; equal for points that
  /// differ by a unit of S.
  Point reduce(const Point& v) const;

  // The following throw DomainError when an argument is not in S.
  bool is_unit(const Point& u) const;
  bool divides(const Point& u, const Point& v) const;
  bool associates(const Point& u, const Point& v) const;
  bool rpr(const Point& u, const Point& v) const;
  bool is_atom(const Point& v) const;
  bool is_squarefree(const Point& v) const;

  /// Non-unit u, w in S with v = u + w (u a unit-reduced representative).
  std::optional<std::pair<Point, Point>> decomposition(const Point& v) const;
  /// Non-unit u and w in S with v = 2u + w.
  std::optional<std::pair<Point, Point>> square_factor(const Point& v) const;
  /// Non-unit d in S dividing both arguments.
  std::optional<Point> common_nonunit_divisor(const Point& u, const Point& v) const;

  /// Atoms with search grade <= grade_bound, one representative per unit
  /// class, in increasing grade.
  std::vector<Point> atoms_up_to(std::int64_t grade_bound) const;
  /// All factorizations of v into atoms (as sorted multisets of reduced
  /// representatives), up to `limit` of them.
  std::vector<std::vector<Point>> atom_factorizations(const Point& v, std::size_t limit = 16) const;

  /// Unit-reduced representatives of S with search grade <= g, by grade.
  const std::vector<Point>& representatives(std::int64_t g) const;
  /// Members of S inside the ambient box of radius B, in box order.
  const std::vector<Point>& members_in_box(std::int64_t B) const;
  bool in_box(const Point& v, std::int64_t B) const;

  /// True iff the unit subgroup of S is all of the ambient unit group.
  bool units_equal() const;

  /// Fails(a, b) if r | a + b but r divides neither; throws when r is not a
  /// non-unit member. A decomposition r = a + b is returned even when it
  /// leaves the box, so a bounded Holds always implies r is an atom.
  std::optional<Witness> prime_counterexample(const Point& r, const SearchBound& bound) const;
  /// Fails(x, k) if k x in r + S but x not in r + S. For r = 2u + w the
  /// witness (u + w, 2) is returned directly, so a bounded Holds implies r
  /// is square-free.
  std::optional<Witness> gpr_counterexample(const Point& r, const SearchBound& bound) const;

 private:
  using TestKey = std::tuple<Point, std::int64_t, std::int64_t>;
  using TestCache = std::map<TestKey, std::optional<Witness>>;

  bool member_reduced(const Point& r) const;
  std::optional<Witness> prime_search(const Point& r, const SearchBound& bound) const;
  std::optional<Witness> gpr_search(const Point& r, const SearchBound& bound) const;
  template <typename Search>
  std::optional<Witness> cached_test(TestCache& cache, const Point& r, const SearchBound& bound,
                                     Search search) const;
  void require_member(const Point& v, const char* what) const;

  AmbientLattice ambient_;
  std::vector<Point> gens_;
  std::vector<Point> unit_gens_;
  std::vector<std::int64_t> mu_;
  // Echelon basis of the unit subgroup: (pivot column, row).
  std::vector<std::pair<std::size_t, Point>> unit_basis_;

  struct Memo;
  std::unique_ptr<Memo> memo_;
};

/// Plain description of a subring, as read from and written to JSON.
struct Instance {
  AmbientLattice ambient;
  std::vector<Point> gens;
  std::vector<Point> unit_gens;

  std::unique_ptr<MonomialSubring> build() const;
  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace facsub
