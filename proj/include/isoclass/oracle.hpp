#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "isoclass/algebra.hpp"
#include "isoclass/budget.hpp"
#include "isoclass/linalg.hpp"

namespace isoclass {

inline long long gl_order(int n, int p) {
  long long pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  long long order = 1, pi = 1;
  for (int i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

/// All nonsingular f with f(e_i) f(e_j) = f(e_i e_j), by exhaustive scan of
/// GL(n, p). Results are in matrix lexicographic order.
inline std::vector<Mat> enumerate_isomorphisms(const Algebra& A, const Algebra& A2,
                                               long long budget = 1 << 20) {
  if (A.p != A2.p || A.n != A2.n) throw std::invalid_argument("enumerate_isomorphisms: mismatched algebras");
  long long space = 1;
  for (int i = 0; i < A.n * A.n; ++i) space *= A.p;
  if (space > budget) throw BudgetExceeded("enumerate_isomorphisms: matrix space exceeds budget");

  std::vector<Mat> out;
  for (const Mat& f : gl_matrices(A.n, A.p)) {
    bool ok = true;
    for (int i = 0; i < A.n && ok; ++i)
      for (int j = 0; j < A.n && ok; ++j) {
        Vec w(A.n);
        for (int s = 0; s < A.n; ++s) w[s] = A.at(i, j, s);
        ok = product(A2, f.row(i), f.row(j)) == f.apply(w);
      }
    if (ok) out.push_back(f);
  }
  return out;
}

namespace detail {

/// Solution of the linear system M X = B over F_p: a particular solution plus
/// a basis of ker M. X has one column per column of B; the kernel is shared.
struct AffineSolution {
  std::vector<Vec> particular;  // one length-nc vector per column of B
  std::vector<Vec> kernel;      // basis of ker M, length-nc vectors
};

inline std::optional<AffineSolution> solve_affine(const PrimeField& F, std::vector<Vec> M, std::vector<Vec> B) {
  const int rows = int(M.size());
  const int nc = rows ? int(M[0].size()) : 0;
  const int bw = rows ? int(B[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < nc && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (M[i][c]) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[pr], M[r]);
    std::swap(B[pr], B[r]);
    int inv = F.inv(M[r][c]);
    for (int j = 0; j < nc; ++j) M[r][j] = F.mul(M[r][j], inv);
    for (int j = 0; j < bw; ++j) B[r][j] = F.mul(B[r][j], inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !M[i][c]) continue;
      int k = M[i][c];
      for (int j = 0; j < nc; ++j) M[i][j] = F.sub(M[i][j], F.mul(k, M[r][j]));
      for (int j = 0; j < bw; ++j) B[i][j] = F.sub(B[i][j], F.mul(k, B[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    for (int j = 0; j < bw; ++j)
      if (B[i][j]) return std::nullopt;  // inconsistent

  AffineSolution sol;
  sol.particular.assign(bw, Vec(nc, 0));
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < bw; ++j) sol.particular[j][pivot_col[k]] = B[k][j];
  for (int c = 0; c < nc; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
    Vec v(nc, 0);
    v[c] = 1;
    for (int k = 0; k < r; ++k) v[pivot_col[k]] = F.neg(M[k][c]);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace detail

struct IsotopismScan {
  bool decided = false;
  long long count = -1;
  std::vector<IsotopismTriple> triples;  // empty when counting only
};

/// Full (f, g)-scan over GL(n,p)^2 with h solved linearly from the basis-pair
/// constraints h(e_i e_j) = f(e_i) g(e_j). Returns undecided when |GL|^3
/// exceeds the budget instead of attempting a partial scan.
inline IsotopismScan enumerate_isotopisms(const Algebra& A, const Algebra& A2, bool count_only = false,
                                          long long budget = 6'000'000) {
  if (A.p != A2.p || A.n != A2.n) throw std::invalid_argument("enumerate_isotopisms: mismatched algebras");
  const int n = A.n, p = A.p;
  PrimeField F(p);
  long long gl = gl_order(n, p);
  if (gl * gl * gl > budget) return {};

  // fixed coefficient matrix: row (i,j) holds the structure vector of e_i e_j
  std::vector<Vec> M;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec w(n);
      for (int s = 0; s < n; ++s) w[s] = A.at(i, j, s);
      M.push_back(std::move(w));
    }
  bool unconstrained = true;
  for (const Vec& w : M) unconstrained = unconstrained && vec_is_zero(w);

  std::vector<Mat> gls = gl_matrices(n, p);
  IsotopismScan out;
  out.decided = true;
  out.count = 0;
  for (const Mat& f : gls)
    for (const Mat& g : gls) {
      std::vector<Vec> B;
      bool feasible = true;
      for (int i = 0; i < n && feasible; ++i)
        for (int j = 0; j < n && feasible; ++j) {
          Vec u = product(A2, f.row(i), g.row(j));
          // a zero structure vector forces a zero product outright
          if (vec_is_zero(M[std::size_t(i) * n + j]) && !vec_is_zero(u)) feasible = false;
          B.push_back(std::move(u));
        }
      if (!feasible) continue;
      if (unconstrained && count_only) {
        out.count += gl;  // abelian source: any nonsingular h works
        continue;
      }
      auto sol = detail::solve_affine(F, M, B);
      if (!sol) continue;
      const int d = int(sol->kernel.size());
      // enumerate X = X0 + K * T over all T in F_p^(d x n); columns of X are
      // the columns of h, i.e. X[c][s] = h_{s c}
      long long combos = 1;
      for (int i = 0; i < d * n; ++i) combos *= p;
      for (long long t = 0; t < combos; ++t) {
        Mat h(p, n);
        long long rest = t;
        for (int c = 0; c < n; ++c) {
          Vec col = sol->particular[c];
          for (int k = 0; k < d; ++k) {
            int coef = int(rest % p);
            rest /= p;
            if (coef)
              for (int s = 0; s < n; ++s) col[s] = F.add(col[s], F.mul(coef, sol->kernel[k][s]));
          }
          for (int s = 0; s < n; ++s) h.at(s, c) = col[s];
        }
        if (!mat_nonsingular(h)) continue;
        ++out.count;
        if (!count_only) out.triples.push_back({f, g, h});
      }
    }
  return out;
}

enum class Tri { yes, no, undecided };

struct ExistenceResult {
  Tri status = Tri::undecided;
  std::optional<IsotopismTriple> witness;
  long long nodes = 0;
};

namespace detail {

/// Backtracking search for a single isotopism: rows of f and g are chosen
/// most-constrained-first; constraints on h are kept in echelon form and an
/// inconsistent or non-injective constraint set prunes the branch.
class IsotopismSearch {
 public:
  IsotopismSearch(const Algebra& A, const Algebra& A2, long long budget)
      : A_(A), A2_(A2), F_(A.p), n_(A.n), q_(A.q()), budget_(budget) {
    f_rows_.assign(n_, Vec());
    g_rows_.assign(n_, Vec());
    // slot order: (is_g, row index), most nonzero products first
    std::vector<std::pair<int, std::pair<int, int>>> slots;
    for (int i = 0; i < n_; ++i) {
      int cf = 0, cg = 0;
      for (int j = 0; j < n_; ++j)
        for (int s = 0; s < n_; ++s) {
          if (A.at(i, j, s)) ++cf;
          if (A.at(j, i, s)) ++cg;
        }
      slots.push_back({-cf, {0, i}});
      slots.push_back({-cg, {1, i}});
    }
    std::sort(slots.begin(), slots.end());
    for (auto& s : slots) order_.push_back(s.second);
  }

  ExistenceResult run() {
    ExistenceResult res;
    try {
      if (descend(0)) {
        res.status = Tri::yes;
        res.witness = witness_;
      } else {
        res.status = Tri::no;
      }
    } catch (const BudgetExceeded&) {
      res.status = Tri::undecided;
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  struct Constraint {
    Vec w, v;  // echelon on w; h(w) = v
  };

  bool independent_of(const std::vector<Vec>& basis, Vec v) const {
    for (const Vec& b : basis) {
      int lead = 0;
      while (lead < n_ && !b[lead]) ++lead;
      if (lead < n_ && v[lead]) {
        int k = F_.mul(v[lead], F_.inv(b[lead]));
        for (int j = 0; j < n_; ++j) v[j] = F_.sub(v[j], F_.mul(k, b[j]));
      }
    }
    return !vec_is_zero(v);
  }

  // reduces v into the echelon basis; returns false if it was dependent
  static bool echelon_insert(const PrimeField& F, std::vector<Vec>& basis, Vec v, int n) {
    for (const Vec& b : basis) {
      int lead = 0;
      while (lead < n && !b[lead]) ++lead;
      if (lead < n && v[lead]) {
        int k = F.mul(v[lead], F.inv(b[lead]));
        for (int j = 0; j < n; ++j) v[j] = F.sub(v[j], F.mul(k, b[j]));
      }
    }
    if (vec_is_zero(v)) return false;
    basis.push_back(std::move(v));
    return true;
  }

  // adds h(w) = v; false on conflict with linearity or injectivity
  bool add_constraint(std::vector<Constraint>& cons, Vec w, Vec v) const {
    for (const Constraint& c : cons) {
      int lead = 0;
      while (lead < n_ && !c.w[lead]) ++lead;
      if (lead < n_ && w[lead]) {
        int k = F_.mul(w[lead], F_.inv(c.w[lead]));
        for (int j = 0; j < n_; ++j) {
          w[j] = F_.sub(w[j], F_.mul(k, c.w[j]));
          v[j] = F_.sub(v[j], F_.mul(k, c.v[j]));
        }
      }
    }
    if (vec_is_zero(w)) return vec_is_zero(v);  // must agree with the span
    // injectivity: the image vectors must stay independent (echelonize the
    // existing images first; reduction against a non-echelon list is unsound)
    std::vector<Vec> images;
    for (const Constraint& c : cons) echelon_insert(F_, images, c.v, n_);
    if (!echelon_insert(F_, images, v, n_)) return false;
    cons.push_back({std::move(w), std::move(v)});
    return true;
  }

  // constraints induced by pairing slot (is_g, r) against all assigned rows
  bool propagate(std::vector<Constraint>& cons, int is_g, int r) const {
    for (int other = 0; other < n_; ++other) {
      int i = is_g ? other : r;
      int j = is_g ? r : other;
      if (f_rows_[i].empty() || g_rows_[j].empty()) continue;
      Vec w(n_);
      for (int s = 0; s < n_; ++s) w[s] = A_.at(i, j, s);
      Vec u = product(A2_, f_rows_[i], g_rows_[j]);
      if (vec_is_zero(w)) {
        if (!vec_is_zero(u)) return false;
      } else if (!add_constraint(cons, std::move(w), std::move(u))) {
        return false;
      }
    }
    return true;
  }

  bool descend(int depth) {
    if (++nodes_ > budget_) throw BudgetExceeded("isotopism search: node budget exceeded");
    if (depth == int(order_.size())) return finish();
    auto [is_g, r] = order_[depth];
    std::vector<Vec>& span = is_g ? g_span_ : f_span_;
    std::vector<Vec>& rows = is_g ? g_rows_ : f_rows_;
    const std::size_t span_size = span.size();
    for (int cand = 1; cand < q_; ++cand) {
      Vec v = index_to_vec(cand, n_, A_.p);
      // the span is kept in echelon form, so this insert is a sound
      // independence test; it stores the reduced vector
      if (!echelon_insert(F_, span, v, n_)) continue;
      rows[r] = std::move(v);
      std::vector<Constraint> saved = cons_;
      if (propagate(cons_, is_g, r) && descend(depth + 1)) return true;
      cons_ = std::move(saved);
      rows[r].clear();
      span.resize(span_size);
    }
    return false;
  }

  bool finish() {
    // extend the constrained partial map to a nonsingular h
    std::vector<Vec> w_basis, v_basis;
    for (const Constraint& c : cons_) {
      w_basis.push_back(c.w);  // constraint lhs vectors are already echelon
      echelon_insert(F_, v_basis, c.v, n_);
    }
    std::vector<std::pair<Vec, Vec>> pairs;
    for (const Constraint& c : cons_) pairs.push_back({c.w, c.v});
    for (int cand = 1; cand < q_ && int(pairs.size()) < n_; ++cand) {
      Vec w = index_to_vec(cand, n_, A_.p);
      if (!independent_of(w_basis, w)) continue;
      for (int img = 1; img < q_; ++img) {
        Vec v = index_to_vec(img, n_, A_.p);
        if (!independent_of(v_basis, v)) continue;
        echelon_insert(F_, w_basis, w, n_);
        echelon_insert(F_, v_basis, v, n_);
        pairs.push_back({std::move(w), std::move(v)});
        break;
      }
    }
    Mat W(A_.p, n_), V(A_.p, n_), f(A_.p, n_), g(A_.p, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        W.at(i, j) = pairs[i].first[j];
        V.at(i, j) = pairs[i].second[j];
        f.at(i, j) = f_rows_[i][j];
        g.at(i, j) = g_rows_[i][j];
      }
    Mat h = mat_mul(mat_inverse(W), V);
    IsotopismTriple t{f, g, h};
    if (!verify_isotopism(A_, A2_, t)) throw std::logic_error("isotopism search: completed map failed verification");
    witness_ = t;
    return true;
  }

  const Algebra &A_, &A2_;
  PrimeField F_;
  int n_, q_;
  long long budget_, nodes_ = 0;
  std::vector<std::pair<int, int>> order_;
  std::vector<Vec> f_rows_, g_rows_, f_span_, g_span_;
  std::vector<Constraint> cons_;
  std::optional<IsotopismTriple> witness_;
};

}  // namespace detail

/// Decides whether any isotopism A -> A2 exists, producing a verified witness
/// when one does. Budget overruns yield an explicit undecided status.
inline ExistenceResult isotopism_exists(const Algebra& A, const Algebra& A2,
                                        long long node_budget = 10'000'000) {
  if (A.p != A2.p || A.n != A2.n) throw std::invalid_argument("isotopism_exists: mismatched algebras");
  return detail::IsotopismSearch(A, A2, node_budget).run();
}

/// All n-dimensional Lie algebra structure tensors over F_p whose basis
/// products are zero or +/- a basis vector: alternating (e_i e_i = 0,
/// e_j e_i = -e_i e_j) and satisfying the Jacobi identity. This is the family
/// behind the census counts 32 (F2) and 123 (F3); the counts double as a
/// self-check of the convention. Supported for n = 3, p in {2, 3}.
inline std::vector<Algebra> enumerate_lie_algebras(int n, int p) {
  if (n != 3 || (p != 2 && p != 3)) throw std::invalid_argument("enumerate_lie_algebras: only n=3, p in {2,3}");
  PrimeField F(p);
  std::vector<std::array<int, 2>> upper = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<Vec> allowed = {Vec(3, 0)};  // zero or c * e_k with c nonzero
  for (int k = 0; k < 3; ++k)
    for (int c = 1; c < p; ++c) {
      Vec v(3, 0);
      v[k] = c;
      allowed.push_back(std::move(v));
    }
  long long total = 1;
  for (int i = 0; i < 3; ++i) total *= (long long)allowed.size();

  std::vector<Algebra> out;
  for (long long code = 0; code < total; ++code) {
    Algebra A(p, 3);
    long long rest = code;
    for (auto [i, j] : upper) {
      const Vec& v = allowed[std::size_t(rest % (long long)allowed.size())];
      rest /= (long long)allowed.size();
      for (int s = 0; s < 3; ++s) {
        A.at(i, j, s) = v[s];
        A.at(j, i, s) = F.neg(v[s]);
      }
    }
    // Jacobi on the only independent basis triple (alternation kills the rest)
    Vec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    Vec jac = vec_add(F, vec_add(F, product(A, e1, product(A, e2, e3)), product(A, e2, product(A, e3, e1))),
                      product(A, e3, product(A, e1, e2)));
    if (vec_is_zero(jac)) out.push_back(std::move(A));
  }
  return out;
}

}  // namespace isoclass
