#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoclass/ffield.hpp"

namespace isoclass {

/// Power product in a fixed number of variables. The total degree and a
/// support bitmask are cached so that order comparisons and divisibility
/// tests, the hot operations in Buchberger's algorithm, stay cheap.
struct Monomial {
  std::vector<std::uint8_t> e;
  int deg = 0;
  std::uint64_t mask = 0;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {
    if (nvars < 0 || nvars > 64) throw std::invalid_argument("Monomial: variable count must be in [0, 64]");
  }
  explicit Monomial(std::vector<std::uint8_t> exps) : e(std::move(exps)) {
    if (e.size() > 64) throw std::invalid_argument("Monomial: variable count must be in [0, 64]");
    refresh();
  }

  void refresh() {
    deg = 0;
    mask = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      deg += e[i];
      if (e[i]) mask |= std::uint64_t(1) << i;
    }
  }

  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg || (a.mask & ~b.mask) != 0) return false;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::uint8_t(r.e[i] + b.e[i]);
  r.refresh();
  return r;
}

/// Quotient a / b; requires b | a.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::uint8_t(r.e[i] - b.e[i]);
  r.refresh();
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  r.refresh();
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  if (a.mask & b.mask) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] && b.e[i]) return false;
  }
  return true;
}

enum class MonomialOrder { lex, degrevlex };

/// Strict order: true when a < b. Variable 0 is the largest variable.
inline bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (ord == MonomialOrder::lex) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
  if (a.deg != b.deg) return a.deg < b.deg;
  for (std::size_t i = a.e.size(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

/// One nonzero term of a polynomial.
struct Term {
  Monomial m;
  int c = 0;  // in [1, p-1]

  bool operator==(const Term& o) const { return c == o.c && m == o.m; }
};

/// Sparse polynomial: terms sorted in strictly decreasing monomial order, so
/// terms.front() is the leading term. An empty vector is the zero polynomial.
using Polynomial = std::vector<Term>;

/// Sorts and combines raw terms into the canonical representation.
inline Polynomial poly_normalize(std::vector<Term> terms, const PrimeField& F, MonomialOrder ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return mono_less(b.m, a.m, ord); });
  Polynomial out;
  for (auto& t : terms) {
    int c = F.reduce(t.c);
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, c);
      if (out.back().c == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({std::move(t.m), c});
    }
  }
  return out;
}

/// Computes a + c * q * b where c is a scalar and q a monomial.
inline Polynomial poly_addmul(const Polynomial& a, int c, const Monomial& q, const Polynomial& b,
                              const PrimeField& F, MonomialOrder ord) {
  Polynomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = q.is_one() ? b[j].m : mono_mul(q, b[j].m);
    int bc = F.mul(c, b[j].c);
    if (i == a.size() || mono_less(a[i].m, bm, ord)) {
      if (bc != 0) out.push_back({std::move(bm), bc});
      ++j;
    } else if (a[i].m == bm) {
      int s = F.add(a[i].c, bc);
      if (s != 0) out.push_back({a[i].m, s});
      ++i;
      ++j;
    } else {
      out.push_back(a[i++]);
    }
  }
  return out;
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b, const PrimeField& F, MonomialOrder ord) {
  return poly_addmul(a, 1, Monomial(int(a.empty() ? (b.empty() ? 0 : b[0].m.e.size()) : a[0].m.e.size())), b, F,
                     ord);
}

inline Polynomial poly_scale(Polynomial a, int c, const PrimeField& F) {
  if (F.reduce(c) == 0) return {};
  for (auto& t : a) t.c = F.mul(t.c, c);
  return a;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const PrimeField& F, MonomialOrder ord) {
  Polynomial out;
  for (const Term& t : a) out = poly_addmul(out, t.c, t.m, b, F, ord);
  return out;
}

inline Polynomial poly_monic(Polynomial a, const PrimeField& F) {
  if (!a.empty() && a[0].c != 1) a = poly_scale(std::move(a), F.inv(a[0].c), F);
  return a;
}

/// Multivariate division remainder: no monomial of the result is divisible by
/// any leading monomial of G, and f - result lies in the ideal generated by G.
inline Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& G, const PrimeField& F,
                              MonomialOrder ord) {
  std::size_t head = 0;  // terms before head are already irreducible
  while (head < p.size()) {
    bool reduced = false;
    for (const Polynomial& g : G) {
      if (g.empty() || !mono_divides(g[0].m, p[head].m)) continue;
      Monomial q = mono_div(p[head].m, g[0].m);
      int c = F.neg(F.mul(p[head].c, F.inv(g[0].c)));
      Polynomial tail(p.begin() + std::ptrdiff_t(head), p.end());
      Polynomial next = poly_addmul(tail, c, q, g, F, ord);
      p.resize(head);
      p.insert(p.end(), next.begin(), next.end());
      reduced = true;
      break;
    }
    if (!reduced) ++head;
  }
  return p;
}

/// Human-readable printer, e.g. "f11*g12 + 2*h21 + 1".
inline std::string poly_to_string(const Polynomial& p, const std::vector<std::string>& var_names) {
  if (p.empty()) return "0";
  std::string out;
  for (const Term& t : p) {
    if (!out.empty()) out += " + ";
    std::string factors;
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      if (!t.m.e[i]) continue;
      if (!factors.empty()) factors += "*";
      factors += i < var_names.size() ? var_names[i] : "x" + std::to_string(i + 1);
      if (t.m.e[i] > 1) factors += "^" + std::to_string(int(t.m.e[i]));
    }
    if (factors.empty())
      out += std::to_string(t.c);
    else if (t.c == 1)
      out += factors;
    else
      out += std::to_string(t.c) + "*" + factors;
  }
  return out;
}

}  // namespace isoclass
