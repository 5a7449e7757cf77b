#include <vector>

#include "facsub/error.hpp"
#include "facsub/poly.hpp"

namespace facsub {
namespace {

constexpr std::size_t kNoVar = static_cast<std::size_t>(-1);

std::size_t lowest_var(const MultiPoly& f) {
  std::size_t best = kNoVar;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size() && i < best; ++i) {
      if (e[i] > 0) {
        best = i;
        break;
      }
    }
  }
  return best;
}

// Coefficients of f viewed as a polynomial in x_v; entry d is free of x_v.
std::vector<MultiPoly> coeffs_in(const MultiPoly& f, std::size_t v) {
  std::vector<MultiPoly> out(f.degree_in(v) + 1, MultiPoly(f.nvars()));
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    rest[v] = 0;
    out[e[v]].add_term(rest, c);
  }
  return out;
}

MultiPoly var_power(std::size_t nvars, std::size_t v, std::uint32_t d) {
  Exponent e(nvars);
  e[v] = d;
  return MultiPoly::monomial(e, 1);
}

MultiPoly exact_quotient(const MultiPoly& f, const MultiPoly& g) {
  auto q = divide_exact(f, g);
  if (!q) throw InternalError("gcd does not divide its argument");
  return std::move(*q);
}

MultiPoly content_in(const MultiPoly& f, std::size_t v) {
  MultiPoly c(f.nvars());
  for (const auto& coeff : coeffs_in(f, v)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? normalize(coeff) : gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

MultiPoly primitive_in(const MultiPoly& f, std::size_t v) {
  return normalize(exact_quotient(f, content_in(f, v)));
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t v) {
  const std::uint32_t db = b.degree_in(v);
  const MultiPoly lcb = coeffs_in(b, v)[db];
  while (!a.is_zero()) {
    const std::uint32_t da = a.degree_in(v);
    if (da < db) break;
    const MultiPoly lca = coeffs_in(a, v)[da];
    a = lcb * a - lca * var_power(a.nvars(), v, da - db) * b;
  }
  return a;
}

}  // namespace

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() != g.nvars()) throw DomainError("variable-count mismatch");
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  const std::size_t nvars = f.nvars();
  if (f.is_constant() || g.is_constant()) return MultiPoly::constant(nvars, 1);

  const std::size_t vf = lowest_var(f);
  const std::size_t vg = lowest_var(g);
  const std::size_t v = std::min(vf, vg);
  if (vf != v) return gcd(f, content_in(g, v));
  if (vg != v) return gcd(content_in(f, v), g);

  const MultiPoly cf = content_in(f, v);
  const MultiPoly cg = content_in(g, v);
  const MultiPoly c = gcd(cf, cg);

  MultiPoly a = normalize(exact_quotient(f, cf));
  MultiPoly b = normalize(exact_quotient(g, cg));
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  for (;;) {
    MultiPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      b = MultiPoly::constant(nvars, 1);
      break;
    }
    a = std::move(b);
    b = primitive_in(r, v);
  }
  return normalize(c * primitive_in(b, v));
}

bool is_squarefree(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("square-freeness of the zero polynomial");
  if (f.is_constant()) return true;
  MultiPoly g = f;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    const MultiPoly d = derivative(f, i);
    if (d.is_zero()) continue;
    g = gcd(g, d);
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

}  // namespace facsub
