#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "isoclass/ffield.hpp"
#include "isoclass/linalg.hpp"

namespace isoclass {

/// Finite-dimensional algebra over F_p given by its structure constants:
/// e_i e_j = sum_k c[i][j][k] e_k (all indices 0-based internally).
struct Algebra {
  int p = 2;
  int n = 0;
  std::vector<int> c;  // dense tensor, entry (i,j,k) at ((i*n)+j)*n+k

  Algebra() = default;
  Algebra(int p_, int n_) : p(p_), n(n_), c(std::size_t(n_) * n_ * n_, 0) {}

  int& at(int i, int j, int k) { return c[(std::size_t(i) * n + j) * n + k]; }
  int at(int i, int j, int k) const { return c[(std::size_t(i) * n + j) * n + k]; }

  int q() const { return space_size(n, p); }

  bool abelian() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Algebra& o) const { return p == o.p && n == o.n && c == o.c; }
  bool operator<(const Algebra& o) const { return c < o.c; }
};

/// Bilinear product: (uv)_k = sum_{i,j} u_i v_j c_{ij}^k.
inline Vec product(const Algebra& A, const Vec& u, const Vec& v) {
  if (int(u.size()) != A.n || int(v.size()) != A.n)
    throw std::invalid_argument("product: dimension mismatch");
  PrimeField F(A.p);
  Vec r(A.n, 0);
  for (int i = 0; i < A.n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < A.n; ++j) {
      if (v[j] == 0) continue;
      int uij = F.mul(u[i], v[j]);
      for (int k = 0; k < A.n; ++k) r[k] = F.add(r[k], F.mul(uij, A.at(i, j, k)));
    }
  }
  return r;
}

/// Full product table over vector indices: table[u*q+v] = index of uv.
/// q^n <= 81 at desk scale, so the dense table is the cheapest route.
inline std::vector<int> product_table(const Algebra& A) {
  const int q = A.q();
  std::vector<Vec> vecs(q);
  for (int i = 0; i < q; ++i) vecs[i] = index_to_vec(i, A.n, A.p);
  std::vector<int> table(std::size_t(q) * q);
  for (int u = 0; u < q; ++u)
    for (int v = 0; v < q; ++v) table[std::size_t(u) * q + v] = vec_to_index(product(A, vecs[u], vecs[v]), A.p);
  return table;
}

/// Left annihilator of S: all u with uv = 0 for every v in S.
/// Computed by exhaustive scan; returns sorted vector indices.
inline std::vector<int> left_annihilator(const Algebra& A, const std::vector<int>& S) {
  const int q = A.q();
  std::vector<Vec> vecs(q);
  for (int i = 0; i < q; ++i) vecs[i] = index_to_vec(i, A.n, A.p);
  std::vector<int> out;
  for (int u = 0; u < q; ++u) {
    bool kills = true;
    for (int v : S)
      if (!vec_is_zero(product(A, vecs[u], vecs[v]))) {
        kills = false;
        break;
      }
    if (kills) out.push_back(u);
  }
  return out;
}

/// Right annihilator of S: all u with vu = 0 for every v in S.
inline std::vector<int> right_annihilator(const Algebra& A, const std::vector<int>& S) {
  const int q = A.q();
  std::vector<Vec> vecs(q);
  for (int i = 0; i < q; ++i) vecs[i] = index_to_vec(i, A.n, A.p);
  std::vector<int> out;
  for (int u = 0; u < q; ++u) {
    bool kills = true;
    for (int v : S)
      if (!vec_is_zero(product(A, vecs[v], vecs[u]))) {
        kills = false;
        break;
      }
    if (kills) out.push_back(u);
  }
  return out;
}

inline std::vector<int> whole_space(const Algebra& A) {
  std::vector<int> all(A.q());
  for (int i = 0; i < A.q(); ++i) all[i] = i;
  return all;
}

/// Two-sided annihilator = intersection of left and right annihilators.
inline std::vector<int> annihilator(const Algebra& A, const std::vector<int>& S) {
  std::vector<int> l = left_annihilator(A, S), r = right_annihilator(A, S), out;
  std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

/// A^2 as the literal set of products {uv}, sorted vector indices.
/// Zero is always present (0*0 = 0).
inline std::vector<int> derived_set(const Algebra& A) {
  const int q = A.q();
  std::vector<int> table = product_table(A);
  std::set<int> s;
  for (int x : table) s.insert(x);
  return std::vector<int>(s.begin(), s.end());
}

/// Linear span of the product set (the "generated subspace" reading of A^2).
inline std::vector<int> derived_span(const Algebra& A) {
  PrimeField F(A.p);
  std::set<int> span = {0};
  std::vector<int> frontier = derived_set(A);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(span.begin(), span.end());
    for (int a : cur)
      for (int b : frontier)
        for (int cscale = 1; cscale < A.p; ++cscale) {
          Vec w = vec_add(F, index_to_vec(a, A.n, A.p), vec_scale(F, cscale, index_to_vec(b, A.n, A.p)));
          if (span.insert(vec_to_index(w, A.p)).second) grew = true;
        }
  }
  return std::vector<int>(span.begin(), span.end());
}

/// |{w : vw = u}|, the fiber size of the adjoint action ad_v.
inline int adjoint_preimage_size(const Algebra& A, const Vec& v, const Vec& u) {
  const int q = A.q();
  int count = 0;
  for (int w = 0; w < q; ++w)
    if (product(A, v, index_to_vec(w, A.n, A.p)) == u) ++count;
  return count;
}

/// Three nonsingular linear maps; an isomorphism when f = g = h.
struct IsotopismTriple {
  Mat f, g, h;

  bool nonsingular() const { return mat_nonsingular(f) && mat_nonsingular(g) && mat_nonsingular(h); }
  bool is_isomorphism() const { return f == g && g == h; }
};

/// True iff f(e_i) g(e_j) = h(e_i e_j) on all basis pairs and f,g,h nonsingular.
inline bool verify_isotopism(const Algebra& A, const Algebra& A2, const IsotopismTriple& t) {
  if (A.p != A2.p || A.n != A2.n) throw std::invalid_argument("verify_isotopism: field/dimension mismatch");
  if (!t.nonsingular()) return false;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      Vec lhs = product(A2, t.f.row(i), t.g.row(j));
      Vec eij(A.n, 0);
      for (int k = 0; k < A.n; ++k) eij[k] = A.at(i, j, k);
      if (lhs != t.h.apply(eij)) return false;
    }
  return true;
}

/// Transport the structure of A along t: the result A' satisfies
/// u * v = h(f^{-1}(u) g^{-1}(v)), making t an isotopism from A to A'.
inline Algebra apply_isotopism(const Algebra& A, const IsotopismTriple& t) {
  if (!t.nonsingular()) throw std::domain_error("apply_isotopism: singular map in triple");
  Mat finv = mat_inverse(t.f), ginv = mat_inverse(t.g);
  Algebra A2(A.p, A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      Vec ei(A.n, 0), ej(A.n, 0);
      ei[i] = 1;
      ej[j] = 1;
      Vec w = t.h.apply(product(A, finv.apply(ei), ginv.apply(ej)));
      for (int k = 0; k < A.n; ++k) A2.at(i, j, k) = w[k];
    }
  return A2;
}

/// Compact key for dedup/canonical ordering: structure constants as a string.
inline std::string algebra_key(const Algebra& A) {
  std::string s;
  s.reserve(A.c.size());
  for (int x : A.c) s.push_back(char('0' + x));
  return s;
}

}  // namespace isoclass
