#include "facsub/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "facsub/error.hpp"

namespace facsub {

std::uint64_t Exponent::degree() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool Exponent::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

bool Exponent::divides(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Exponent e(nvars);
  e[index] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

std::uint64_t MultiPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  if (var >= nvars_) throw DomainError("variable index out of range");
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

const Exponent& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw DomainError("exponent length does not match variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string(std::span<const std::string> vars) const {
  if (vars.size() != nvars_) throw DomainError("variable name count does not match");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (any) mono << '*';
      mono << vars[i];
      if (e[i] > 1) mono << '^' << e[i];
      any = true;
    }
    if (!any) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono.str();
    } else {
      out << mag.get_str() << '*' << mono.str();
    }
  }
  return out.str();
}

void MultiPoly::check_same_ring(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) throw DomainError("variable-count mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly pow(const MultiPoly& f, unsigned k) {
  MultiPoly result = MultiPoly::constant(f.nvars(), 1);
  MultiPoly base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() != g.nvars()) throw DomainError("variable-count mismatch");
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const Exponent& lg = g.leading_exponent();
  const Rational& cg = g.leading_coefficient();
  MultiPoly rest = f;
  MultiPoly quotient(f.nvars());
  Exponent t(f.nvars());
  // If g | f then every intermediate leading term is divisible by LT(g).
  while (!rest.is_zero()) {
    const Exponent& lr = rest.leading_exponent();
    if (!lg.divides(lr)) return std::nullopt;
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = lr[i] - lg[i];
    const MultiPoly step = MultiPoly::monomial(t, rest.leading_coefficient() / cg);
    quotient += step;
    rest -= step * g;
  }
  return quotient;
}

MultiPoly derivative(const MultiPoly& f, std::size_t var) {
  if (var >= f.nvars()) throw DomainError("derivative variable index out of range");
  MultiPoly d(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponent de = e;
    de[var] -= 1;
    d.add_term(de, c * e[var]);
  }
  return d;
}

MultiPoly normalize(const MultiPoly& f) {
  if (f.is_zero()) return f;
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : f.terms()) den_lcm = lcm(den_lcm, c.get_den());
  mpz_class num_gcd = 0;
  for (const auto& [e, c] : f.terms()) {
    const mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    num_gcd = gcd(num_gcd, scaled);
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(f.leading_coefficient()) < 0) scale = -scale;
  return f * scale;
}

MultiPoly det_fraction_free(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  const std::size_t nvars = m[0][0].nvars();
  PolyMatrix a = m;
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(nvars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return MultiPoly(nvars);
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw InternalError("Bareiss step was not an exact division");
        a[i][j] = std::move(*q);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

std::vector<std::string> split_names(std::string_view csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view piece = csv.substr(start, end - start);
    while (!piece.empty() && (piece.front() == ' ' || piece.front() == '\t')) piece.remove_prefix(1);
    while (!piece.empty() && (piece.back() == ' ' || piece.back() == '\t')) piece.remove_suffix(1);
    out.emplace_back(piece);
    start = end + 1;
  }
  return out;
}

}  // namespace facsub
