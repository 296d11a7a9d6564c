#pragma once

#include <vector>

#include "isoclass/ffield.hpp"

namespace isoclass {

/// Coordinate vector over F_p. Length is the ambient dimension.
using Vec = std::vector<int>;

/// Vectors are enumerated lexicographically by coordinate sequence:
/// index 0 is the zero vector, the first coordinate is most significant.
inline int vec_to_index(const Vec& v, int p) {
  int idx = 0;
  for (int c : v) idx = idx * p + c;
  return idx;
}

inline Vec index_to_vec(int idx, int n, int p) {
  Vec v(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    v[i] = idx % p;
    idx /= p;
  }
  return v;
}

inline int space_size(int n, int p) {
  int s = 1;
  for (int i = 0; i < n; ++i) s *= p;
  return s;
}

/// Square matrix over F_p acting by the row convention
/// alpha(e_i) = sum_j a_{ij} e'_j, i.e. row i is the image of e_i.
struct Mat {
  int p = 2;
  int n = 0;
  std::vector<int> a;  // row-major, n*n entries in [0, p)

  Mat() = default;
  Mat(int p_, int n_) : p(p_), n(n_), a(std::size_t(n_) * n_, 0) {}

  int& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  int at(int i, int j) const { return a[std::size_t(i) * n + j]; }

  static Mat identity(int p, int n) {
    Mat m(p, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Vec row(int i) const { return Vec(a.begin() + std::size_t(i) * n, a.begin() + std::size_t(i + 1) * n); }

  /// Image of a coordinate vector: (u M)_j = sum_i u_i a_{ij}.
  Vec apply(const Vec& u) const {
    PrimeField F(p);
    Vec r(n, 0);
    for (int i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < n; ++j) r[j] = F.add(r[j], F.mul(u[i], at(i, j)));
    }
    return r;
  }

  bool operator==(const Mat& o) const { return p == o.p && n == o.n && a == o.a; }
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
  PrimeField F(x.p);
  Mat r(x.p, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

/// Determinant by Gaussian elimination over F_p.
inline int mat_det(const Mat& m) {
  PrimeField F(m.p);
  Mat w = m;
  int det = 1;
  for (int col = 0; col < m.n; ++col) {
    int piv = -1;
    for (int r = col; r < m.n; ++r)
      if (w.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < m.n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, w.at(col, col));
    int ipiv = F.inv(w.at(col, col));
    for (int r = col + 1; r < m.n; ++r) {
      int factor = F.mul(w.at(r, col), ipiv);
      if (factor == 0) continue;
      for (int j = col; j < m.n; ++j) w.at(r, j) = F.sub(w.at(r, j), F.mul(factor, w.at(col, j)));
    }
  }
  return det;
}

inline bool mat_nonsingular(const Mat& m) { return mat_det(m) != 0; }

/// Inverse by Gauss-Jordan; throws on singular input.
inline Mat mat_inverse(const Mat& m) {
  PrimeField F(m.p);
  Mat w = m;
  Mat inv = Mat::identity(m.p, m.n);
  for (int col = 0; col < m.n; ++col) {
    int piv = -1;
    for (int r = col; r < m.n; ++r)
      if (w.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("mat_inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < m.n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    int ipiv = F.inv(w.at(col, col));
    for (int j = 0; j < m.n; ++j) {
      w.at(col, j) = F.mul(w.at(col, j), ipiv);
      inv.at(col, j) = F.mul(inv.at(col, j), ipiv);
    }
    for (int r = 0; r < m.n; ++r) {
      if (r == col || w.at(r, col) == 0) continue;
      int factor = w.at(r, col);
      for (int j = 0; j < m.n; ++j) {
        w.at(r, j) = F.sub(w.at(r, j), F.mul(factor, w.at(col, j)));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

/// All nonsingular n x n matrices over F_p, in lexicographic entry order.
inline std::vector<Mat> gl_matrices(int n, int p) {
  std::vector<Mat> out;
  Mat m(p, n);
  const int cells = n * n;
  std::vector<int> e(cells, 0);
  while (true) {
    m.a.assign(e.begin(), e.end());
    if (mat_nonsingular(m)) out.push_back(m);
    int i = cells - 1;
    while (i >= 0 && e[i] == p - 1) e[i--] = 0;
    if (i < 0) break;
    ++e[i];
  }
  return out;
}

inline Vec vec_add(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

inline Vec vec_scale(const PrimeField& F, int c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

}  // namespace isoclass
