#pragma once

// Sparse multivariate polynomials over Q with exact arithmetic.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace facsub {

using Rational = mpq_class;

/// Exponent vector of a monomial; length is the ambient variable count.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t nvars) : e_(nvars, 0) {}
  explicit Exponent(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  std::size_t size() const noexcept { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& values() const noexcept { return e_; }

  std::uint64_t degree() const noexcept;
  bool is_zero() const noexcept;
  /// True if every entry of `*this` is <= the matching entry of `other`.
  bool divides(const Exponent& other) const noexcept;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

/// Graded lexicographic order with x1 > x2 > ... > xn; `a` sorts before `b`
/// when `a` is the larger monomial, so maps keyed with it iterate from the
/// leading term down.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Exponent& e, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Total degree; 0 for constants and for the zero polynomial.
  std::uint64_t total_degree() const noexcept;
  /// Degree in a single variable.
  std::uint32_t degree_in(std::size_t var) const;

  /// Leading term in grlex order. Precondition: nonzero.
  const Exponent& leading_exponent() const;
  const Rational& leading_coefficient() const;

  Rational coefficient(const Exponent& e) const;
  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;
  std::string to_string(std::span<const std::string> vars) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_ring(const MultiPoly& other) const;

  std::size_t nvars_;
  Terms terms_;
};

MultiPoly pow(const MultiPoly& f, unsigned k);

/// Quotient q with f = q * g, or nullopt when g does not divide f in Q[x].
/// Throws DomainError when g is zero.
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

/// Formal partial derivative with respect to variable `var`.
MultiPoly derivative(const MultiPoly& f, std::size_t var);

/// Scales f to a primitive integer polynomial whose grlex-leading coefficient
/// is positive. The zero polynomial is returned unchanged.
MultiPoly normalize(const MultiPoly& f);

/// Greatest common divisor, normalized as by `normalize`; gcd(f, 0) is
/// normalize(f). Throws DomainError if both arguments are zero.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

/// True iff f has no repeated nonconstant factor in Q[x1..xn], decided by
/// gcd(f, df/dx1, ..., df/dxn) being constant. Throws DomainError for f = 0.
bool is_squarefree(const MultiPoly& f);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant by fraction-free (Bareiss) elimination.
MultiPoly det_fraction_free(const PolyMatrix& m);

/// Parses `text` over the ordered variable names `vars`.
///
/// Accepts sums and differences of products of integer or rational literals
/// (`3/2`), declared variables, parenthesized subexpressions and
/// non-negative integer powers (`^`). A literal directly followed by a
/// variable or parenthesis multiplies (`3x` is `3*x`). Throws ParseError with
/// the byte offset of the first offending token.
MultiPoly parse_poly(std::string_view text, std::span<const std::string> vars);

/// Splits a comma-separated list of variable names, trimming blanks.
std::vector<std::string> split_names(std::string_view csv);

}  // namespace facsub
