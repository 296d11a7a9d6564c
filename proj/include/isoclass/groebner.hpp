#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "isoclass/algebra.hpp"
#include "isoclass/budget.hpp"
#include "isoclass/poly.hpp"

namespace isoclass {

inline constexpr long long kDefaultGroebnerBudget = 2'000'000;

/// Buchberger's algorithm with the two classical criteria (coprime leading
/// monomials; chain criterion) and normal selection (smallest lcm first).
/// The budget bounds the number of S-polynomial reductions; exceeding it
/// throws BudgetExceeded rather than returning a partial basis.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const PrimeField& F,
                                          MonomialOrder ord, long long budget = kDefaultGroebnerBudget) {
  std::vector<Polynomial> G;
  for (const Polynomial& g : gens)
    if (!g.empty()) G.push_back(poly_monic(g, F));

  struct PairRef {
    Monomial lcm;
    int i, j;
  };
  auto pair_less = [&](const PairRef& a, const PairRef& b) {
    if (a.lcm != b.lcm) return mono_less(a.lcm, b.lcm, ord);
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::vector<PairRef> queue;  // heap, smallest lcm on top
  auto heap_less = [&](const PairRef& a, const PairRef& b) { return pair_less(b, a); };
  std::set<std::pair<int, int>> pending;

  auto push_pairs_for = [&](int t) {
    for (int i = 0; i < t; ++i) {
      queue.push_back({mono_lcm(G[i][0].m, G[t][0].m), i, t});
      std::push_heap(queue.begin(), queue.end(), heap_less);
      pending.insert({i, t});
    }
  };
  for (int t = 1; t < int(G.size()); ++t) push_pairs_for(t);

  long long reductions = 0;
  while (!queue.empty()) {
    std::pop_heap(queue.begin(), queue.end(), heap_less);
    PairRef pr = queue.back();
    queue.pop_back();
    pending.erase({pr.i, pr.j});

    const Monomial &mi = G[pr.i][0].m, &mj = G[pr.j][0].m;
    if (mono_coprime(mi, mj)) continue;  // first criterion
    bool chained = false;               // second (chain) criterion
    for (int k = 0; k < int(G.size()) && !chained; ++k) {
      if (k == pr.i || k == pr.j || !mono_divides(G[k][0].m, pr.lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chained = true;
    }
    if (chained) continue;

    if (++reductions > budget) throw BudgetExceeded("buchberger: S-pair reduction budget exceeded");
    // S-polynomial of two monic polynomials: shift both to the lcm and subtract
    Polynomial s = poly_addmul(Polynomial{}, 1, mono_div(pr.lcm, mi), G[pr.i], F, ord);
    s = poly_addmul(s, F.neg(1), mono_div(pr.lcm, mj), G[pr.j], F, ord);
    Polynomial r = normal_form(std::move(s), G, F, ord);
    if (r.empty()) continue;
    G.push_back(poly_monic(std::move(r), F));
    push_pairs_for(int(G.size()) - 1);
  }
  return G;
}

/// Minimal + fully reduced basis: monic elements, no monomial of any element
/// divisible by another element's leading monomial, sorted by leading
/// monomial. This form is unique per ideal and monomial order.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G, const PrimeField& F,
                                            MonomialOrder ord) {
  std::vector<Polynomial> out;
  for (Polynomial& g : G)
    if (!g.empty()) out.push_back(poly_monic(std::move(g), F));
  // autoreduce to a fixpoint: every element in normal form w.r.t. the others
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (j != i) others.push_back(out[j]);
      Polynomial r = poly_monic(normal_form(out[i], others, F, ord), F);
      if (r == out[i]) continue;
      changed = true;
      if (r.empty()) {
        out.erase(out.begin() + std::ptrdiff_t(i));
        --i;
      } else {
        out[i] = std::move(r);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Polynomial& a, const Polynomial& b) { return mono_less(a[0].m, b[0].m, ord); });
  return out;
}

namespace detail {

/// Counts exponent vectors in the box [0, q-1]^nvars divisible by none of the
/// given leading monomials. Recurses variable by variable; memoizes on the
/// surviving, truncated monomial set.
class BoxCounter {
 public:
  BoxCounter(int nvars, int q) : nvars_(nvars), q_(q) {}

  long long count(std::vector<std::vector<std::uint8_t>> lms) {
    prune(lms);
    return rec(0, std::move(lms));
  }

 private:
  static void prune(std::vector<std::vector<std::uint8_t>>& lms) {
    std::sort(lms.begin(), lms.end());
    lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
    // drop monomials divisible by another (the divisor already excludes them)
    std::vector<std::vector<std::uint8_t>> kept;
    for (std::size_t i = 0; i < lms.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < lms.size() && !dominated; ++j) {
        if (i == j) continue;
        bool divides = true;
        for (std::size_t v = 0; v < lms[i].size(); ++v)
          if (lms[j][v] > lms[i][v]) {
            divides = false;
            break;
          }
        dominated = divides && lms[j] != lms[i];
      }
      if (!dominated) kept.push_back(lms[i]);
    }
    lms = std::move(kept);
  }

  long long rec(int idx, std::vector<std::vector<std::uint8_t>> lms) {
    for (const auto& lm : lms)
      if (std::all_of(lm.begin(), lm.end(), [](std::uint8_t x) { return x == 0; })) return 0;
    if (idx == nvars_) return 1;
    if (lms.empty()) {
      long long r = 1;
      for (int v = idx; v < nvars_; ++v) r *= q_;
      return r;
    }
    std::string key = std::to_string(idx) + ";";
    for (const auto& lm : lms) key.append(lm.begin() + idx, lm.end()), key += ';';
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    long long total = 0;
    for (int a = 0; a < q_; ++a) {
      std::vector<std::vector<std::uint8_t>> next;
      for (const auto& lm : lms) {
        if (lm[idx] > a) continue;  // cannot divide when this exponent is a
        auto t = lm;
        t[idx] = 0;
        next.push_back(std::move(t));
      }
      prune(next);
      total += rec(idx + 1, std::move(next));
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  int nvars_, q_;
  std::map<std::string, long long> memo_;
};

}  // namespace detail

/// Number of monomials outside the initial ideal of a Groebner basis whose
/// ideal contains all field equations x^q - x (so every exponent of a standard
/// monomial is below q). For these radical zero-dimensional ideals the count
/// equals the number of points of the variety.
inline long long standard_monomial_count(const std::vector<Polynomial>& gb, int nvars, int q) {
  std::vector<bool> pure_power(nvars, false);
  std::vector<std::vector<std::uint8_t>> lms;
  for (const Polynomial& g : gb) {
    if (g.empty()) continue;
    const Monomial& m = g[0].m;
    if (m.is_one()) return 0;  // unit ideal: empty variety
    if (int(m.e.size()) != nvars) throw std::invalid_argument("standard_monomial_count: variable count mismatch");
    int support = 0, var = -1;
    for (int v = 0; v < nvars; ++v)
      if (m.e[v]) ++support, var = v;
    if (support == 1) pure_power[var] = true;
    // monomials with an exponent >= q cannot divide anything inside the box
    if (std::all_of(m.e.begin(), m.e.end(), [&](std::uint8_t x) { return int(x) < q; }))
      lms.push_back(std::vector<std::uint8_t>(m.e.begin(), m.e.end()));
  }
  for (int v = 0; v < nvars; ++v)
    if (!pure_power[v])
      throw std::domain_error("standard_monomial_count: ideal is not zero-dimensional (variable " +
                              std::to_string(v) + " has no pure-power leading monomial)");
  return detail::BoxCounter(nvars, q).count(std::move(lms));
}

/// Polynomial system whose variety is a set of isotopisms or isomorphisms.
struct IdealSpec {
  int p = 2;
  int n = 1;
  int nvars = 0;
  std::vector<std::string> var_names;
  std::vector<Polynomial> gens;
  bool with_det = true;
};

namespace detail {

inline Term var_term(int nvars, int v, int c = 1) {
  Monomial m(nvars);
  m.e[v] = 1;
  m.refresh();
  return {std::move(m), c};
}

/// Reduces every exponent modulo the field equations x^q = x, i.e. a positive
/// exponent e becomes ((e - 1) mod (q - 1)) + 1. Used to keep determinant
/// powers small without running a full division.
inline Polynomial fold_exponents(Polynomial poly, const PrimeField& F, MonomialOrder ord, int q) {
  std::vector<Term> terms;
  for (Term& t : poly) {
    for (auto& x : t.m.e)
      if (x > 0) x = std::uint8_t((x - 1) % (q - 1) + 1);
    t.m.refresh();
    terms.push_back(std::move(t));
  }
  return poly_normalize(std::move(terms), F, ord);
}

/// det(M)^(q-1) - 1 for the n x n variable block starting at var offset,
/// expanded by the Leibniz formula (n <= 3).
inline Polynomial det_power_gen(int nvars, int offset, int n, const PrimeField& F, MonomialOrder ord) {
  std::vector<std::vector<int>> perms;
  std::vector<int> sign;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (idx[i] > idx[j]) ++inv;
    perms.push_back(idx);
    sign.push_back(inv % 2 ? F.neg(1) : 1);
  } while (std::next_permutation(idx.begin(), idx.end()));

  std::vector<Term> det_terms;
  for (std::size_t s = 0; s < perms.size(); ++s) {
    Monomial m(nvars);
    for (int i = 0; i < n; ++i) ++m.e[offset + i * n + perms[s][i]];
    m.refresh();
    det_terms.push_back({std::move(m), sign[s]});
  }
  Polynomial det = poly_normalize(std::move(det_terms), F, ord);

  int q = F.p();
  Polynomial power = det;
  for (int e = 1; e < q - 1; ++e) power = fold_exponents(poly_mul(power, det, F, ord), F, ord, q);
  Monomial one(nvars);
  return poly_add(power, {{one, F.neg(1)}}, F, ord);
}

inline void append_field_equations(IdealSpec& spec, const PrimeField& F, MonomialOrder ord) {
  for (int v = 0; v < spec.nvars; ++v) {
    Monomial hi(spec.nvars);
    hi.e[v] = std::uint8_t(F.p());
    hi.refresh();
    Monomial lo(spec.nvars);
    lo.e[v] = 1;
    lo.refresh();
    spec.gens.push_back(poly_normalize({{hi, 1}, {lo, F.neg(1)}}, F, ord));
  }
}

inline std::vector<std::string> block_names(int n, const std::vector<std::string>& blocks) {
  std::vector<std::string> names;
  for (const std::string& b : blocks)
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) names.push_back(b + std::to_string(i) + std::to_string(k));
  return names;
}

}  // namespace detail

/// Variables f_ik, g_jl, h_sm (n^2 each, in that order). The structural
/// generators state f(e_i) g(e_j) = h(e_i e_j) coordinatewise; the optional
/// determinant generators det(M)^(q-1) - 1 force all three maps nonsingular.
inline IdealSpec isotopism_ideal(const Algebra& A, const Algebra& A2, bool with_det = true,
                                 MonomialOrder ord = MonomialOrder::degrevlex) {
  if (A.p != A2.p || A.n != A2.n) throw std::invalid_argument("isotopism_ideal: mismatched algebras");
  if (with_det && A.n > 3) throw std::invalid_argument("isotopism_ideal: determinant generators need n <= 3");
  PrimeField F(A.p);
  const int n = A.n;
  IdealSpec spec;
  spec.p = A.p;
  spec.n = n;
  spec.nvars = 3 * n * n;
  spec.var_names = detail::block_names(n, {"f", "g", "h"});
  spec.with_det = with_det;
  auto fv = [&](int i, int k) { return i * n + k; };
  auto gv = [&](int j, int l) { return n * n + j * n + l; };
  auto hv = [&](int s, int m) { return 2 * n * n + s * n + m; };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        std::vector<Term> terms;
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            int c = A2.at(k, l, m);
            if (!c) continue;
            Monomial mono(spec.nvars);
            mono.e[fv(i, k)] = 1;
            mono.e[gv(j, l)] = 1;
            mono.refresh();
            terms.push_back({std::move(mono), c});
          }
        for (int s = 0; s < n; ++s) {
          int c = A.at(i, j, s);
          if (c) terms.push_back(detail::var_term(spec.nvars, hv(s, m), F.neg(c)));
        }
        Polynomial gen = poly_normalize(std::move(terms), F, ord);
        if (!gen.empty()) spec.gens.push_back(std::move(gen));
      }
  detail::append_field_equations(spec, F, ord);
  if (with_det)
    for (int block = 0; block < 3; ++block)
      spec.gens.push_back(detail::det_power_gen(spec.nvars, block * n * n, n, F, ord));
  return spec;
}

/// Same system with a single map f = g = h (n^2 variables f_ik).
inline IdealSpec isomorphism_ideal(const Algebra& A, const Algebra& A2, bool with_det = true,
                                   MonomialOrder ord = MonomialOrder::degrevlex) {
  if (A.p != A2.p || A.n != A2.n) throw std::invalid_argument("isomorphism_ideal: mismatched algebras");
  if (with_det && A.n > 3) throw std::invalid_argument("isomorphism_ideal: determinant generators need n <= 3");
  PrimeField F(A.p);
  const int n = A.n;
  IdealSpec spec;
  spec.p = A.p;
  spec.n = n;
  spec.nvars = n * n;
  spec.var_names = detail::block_names(n, {"f"});
  spec.with_det = with_det;
  auto fv = [&](int i, int k) { return i * n + k; };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        std::vector<Term> terms;
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            int c = A2.at(k, l, m);
            if (!c) continue;
            Monomial mono(spec.nvars);
            ++mono.e[fv(i, k)];  // i == j and k == l give a square
            ++mono.e[fv(j, l)];
            mono.refresh();
            terms.push_back({std::move(mono), c});
          }
        for (int s = 0; s < n; ++s) {
          int c = A.at(i, j, s);
          if (c) terms.push_back(detail::var_term(spec.nvars, fv(s, m), F.neg(c)));
        }
        Polynomial gen = poly_normalize(std::move(terms), F, ord);
        if (!gen.empty()) spec.gens.push_back(std::move(gen));
      }
  detail::append_field_equations(spec, F, ord);
  if (with_det) spec.gens.push_back(detail::det_power_gen(spec.nvars, 0, n, F, ord));
  return spec;
}

enum class CountStatus { decided, undecided };

struct SolutionCount {
  CountStatus status = CountStatus::undecided;
  long long count = -1;

  bool decided() const { return status == CountStatus::decided; }
};

/// |V(I)| via Buchberger + standard-monomial counting. A budget overrun is an
/// explicit undecided outcome, never a count.
inline SolutionCount solution_count(const IdealSpec& spec, MonomialOrder ord = MonomialOrder::degrevlex,
                                    long long budget = kDefaultGroebnerBudget) {
  PrimeField F(spec.p);
  try {
    // generator term lists may have been built under a different order
    std::vector<Polynomial> gens = spec.gens;
    for (Polynomial& g : gens) g = poly_normalize(std::move(g), F, ord);
    std::vector<Polynomial> gb = buchberger(gens, F, ord, budget);
    gb = reduce_basis(std::move(gb), F, ord);
    return {CountStatus::decided, standard_monomial_count(gb, spec.nvars, spec.p)};
  } catch (const BudgetExceeded&) {
    return {CountStatus::undecided, -1};
  }
}

}  // namespace isoclass
