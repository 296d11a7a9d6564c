#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoclass/algebra.hpp"
#include "isoclass/colorgraph.hpp"
#include "isoclass/latin.hpp"

namespace isoclass {

enum class GraphKind { G1, G2 };

/// A colored graph built from an algebra, with payload bookkeeping:
/// every vertex remembers the vector (or pair of vectors) it stands for.
struct AlgebraGraph {
  ColoredGraph graph;
  int p = 2, n = 0, q = 0;
  std::vector<int> payload_u;                 // vector index (or first of the pair)
  std::vector<int> payload_v;                 // second of the pair; -1 for non-cell vertices
  std::map<int, int> r_vertex, c_vertex, s_vertex;  // vector index -> vertex id
  std::map<std::pair<int, int>, int> t_vertex;
};

namespace detail {

inline std::string vec_name(int idx, int n, int p) {
  Vec v = index_to_vec(idx, n, p);
  std::string s;
  for (int c : v) s.push_back(char('0' + c));
  return s;
}

struct AlgebraScan {
  int q = 0;
  std::vector<int> table;           // product table over vector indices
  std::vector<bool> in_ann_left;    // u in Ann_{A^-}(A)
  std::vector<bool> in_ann_right;   // u in Ann_{A^+}(A)
  std::vector<bool> in_derived;     // u in A^2 (set or span reading)
};

inline AlgebraScan scan_algebra(const Algebra& A, bool span_variant) {
  AlgebraScan s;
  s.q = A.q();
  s.table = product_table(A);
  s.in_ann_left.assign(s.q, true);
  s.in_ann_right.assign(s.q, true);
  s.in_derived.assign(s.q, false);
  for (int u = 0; u < s.q; ++u)
    for (int v = 0; v < s.q; ++v) {
      int w = s.table[std::size_t(u) * s.q + v];
      if (w != 0) {
        s.in_ann_left[u] = false;
        s.in_ann_right[v] = false;
      }
      s.in_derived[w] = true;
    }
  if (span_variant)
    for (int u : derived_span(A)) s.in_derived[u] = true;
  return s;
}

}  // namespace detail

/// Builds the colored graph of an algebra. The derived set A^2 is taken as the
/// literal set of products by default; `span_variant` switches to its
/// linear span.
inline AlgebraGraph build_graph(const Algebra& A, GraphKind kind, bool span_variant = false) {
  AlgebraGraph out;
  out.p = A.p;
  out.n = A.n;
  out.q = A.q();
  const auto s = detail::scan_algebra(A, span_variant);
  ColoredGraph& g = out.graph;

  for (int u = 0; u < s.q; ++u)
    if (!s.in_ann_left[u]) {
      int id = g.add_vertex(kColorRow, "r" + detail::vec_name(u, A.n, A.p));
      out.r_vertex[u] = id;
      out.payload_u.push_back(u);
      out.payload_v.push_back(-1);
    }
  for (int u = 0; u < s.q; ++u)
    if (!s.in_ann_right[u]) {
      int id = g.add_vertex(kColorCol, "c" + detail::vec_name(u, A.n, A.p));
      out.c_vertex[u] = id;
      out.payload_u.push_back(u);
      out.payload_v.push_back(-1);
    }
  for (int u = 1; u < s.q; ++u)
    if (s.in_derived[u]) {
      int id = g.add_vertex(kColorSym, "s" + detail::vec_name(u, A.n, A.p));
      out.s_vertex[u] = id;
      out.payload_u.push_back(u);
      out.payload_v.push_back(-1);
    }
  for (int u = 0; u < s.q; ++u)
    for (int v = 0; v < s.q; ++v) {
      int w = s.table[std::size_t(u) * s.q + v];
      if (w == 0) continue;
      int id = g.add_vertex(kColorCell, "t" + detail::vec_name(u, A.n, A.p) + "," + detail::vec_name(v, A.n, A.p));
      out.t_vertex[{u, v}] = id;
      out.payload_u.push_back(u);
      out.payload_v.push_back(v);
      g.add_edge(out.r_vertex.at(u), id);
      g.add_edge(out.c_vertex.at(v), id);
      g.add_edge(out.s_vertex.at(w), id);
    }

  if (kind == GraphKind::G2) {
    // r_u c_u needs u outside both annihilators (both endpoints must exist)
    for (int u = 0; u < s.q; ++u) {
      if (!s.in_ann_left[u] && !s.in_ann_right[u]) g.add_edge(out.r_vertex.at(u), out.c_vertex.at(u));
      if (u != 0 && s.in_derived[u] && !s.in_ann_right[u]) g.add_edge(out.c_vertex.at(u), out.s_vertex.at(u));
      if (u != 0 && s.in_derived[u] && !s.in_ann_left[u]) g.add_edge(out.r_vertex.at(u), out.s_vertex.at(u));
    }
  }
  g.normalize();
  return out;
}

inline AlgebraGraph build_g1(const Algebra& A, bool span_variant = false) {
  return build_graph(A, GraphKind::G1, span_variant);
}
inline AlgebraGraph build_g2(const Algebra& A, bool span_variant = false) {
  return build_graph(A, GraphKind::G2, span_variant);
}

/// Signature predicted from the closed-form vertex/degree/edge formulas,
/// never from a built graph. Triangles are predicted to be 0 for G1 and
/// are not predicted for G2 (reported as -1).
inline Signature predicted_signature(const Algebra& A, GraphKind kind, bool span_variant = false) {
  const auto s = detail::scan_algebra(A, span_variant);
  const int q = s.q;

  // fiber sizes of the adjoint actions, from the product table
  // row_nonzero[u] = #{v : uv != 0}, col_nonzero[u] = #{v : vu != 0}
  std::vector<int> row_nonzero(q, 0), col_nonzero(q, 0);
  std::vector<long long> s_degree(q, 0);  // sum_v |ad_v^{-1}(u)|
  for (int u = 0; u < q; ++u)
    for (int v = 0; v < q; ++v) {
      int w = s.table[std::size_t(u) * q + v];
      if (w != 0) {
        ++row_nonzero[u];
        ++col_nonzero[v];
      }
      s_degree[w] += 1;  // w = ad_u(v); fiber of w under ad_u gains one
    }

  Signature sig;
  long long nR = 0, nC = 0, nS = 0, nT = 0;
  std::vector<int> degR, degC, degS;
  long long g1_edges = 0;
  for (int u = 0; u < q; ++u) {
    if (!s.in_ann_left[u]) {
      ++nR;
      long long d = row_nonzero[u];
      if (kind == GraphKind::G2) d += (!s.in_ann_right[u] ? 1 : 0) + (s.in_derived[u] ? 1 : 0);
      degR.push_back(int(d));
      g1_edges += row_nonzero[u];
    }
    if (!s.in_ann_right[u]) {
      ++nC;
      long long d = col_nonzero[u];
      if (kind == GraphKind::G2) d += (!s.in_ann_left[u] ? 1 : 0) + (s.in_derived[u] ? 1 : 0);
      degC.push_back(int(d));
      g1_edges += col_nonzero[u];
    }
    if (u != 0 && s.in_derived[u]) {
      ++nS;
      long long d = s_degree[u];
      if (kind == GraphKind::G2) d += (!s.in_ann_left[u] ? 1 : 0) + (!s.in_ann_right[u] ? 1 : 0);
      degS.push_back(int(d));
      g1_edges += s_degree[u];
    }
    nT += row_nonzero[u];
  }
  long long edges = g1_edges;
  if (kind == GraphKind::G2) {
    long long both = 0, s_not_left = 0, s_not_right = 0;
    for (int u = 0; u < q; ++u) {
      if (!s.in_ann_left[u] && !s.in_ann_right[u]) ++both;
      if (u != 0 && s.in_derived[u] && !s.in_ann_left[u]) ++s_not_left;
      if (u != 0 && s.in_derived[u] && !s.in_ann_right[u]) ++s_not_right;
    }
    edges += both + s_not_left + s_not_right;
  }

  if (nR) sig.color_counts.emplace_back(kColorRow, nR);
  if (nC) sig.color_counts.emplace_back(kColorCol, nC);
  if (nS) sig.color_counts.emplace_back(kColorSym, nS);
  if (nT) sig.color_counts.emplace_back(kColorCell, nT);
  sig.edges = edges;
  sig.triangles = (kind == GraphKind::G1) ? 0 : -1;
  std::sort(degR.begin(), degR.end());
  std::sort(degC.begin(), degC.end());
  std::sort(degS.begin(), degS.end());
  if (nR) sig.degrees.emplace_back(kColorRow, degR);
  if (nC) sig.degrees.emplace_back(kColorCol, degC);
  if (nS) sig.degrees.emplace_back(kColorSym, degS);
  if (nT) sig.degrees.emplace_back(kColorCell, std::vector<int>(std::size_t(nT), 3));
  return sig;
}

/// Vertex counts (|R|, |C|, |S|, |T|) in fixed color order.
inline std::array<long long, 4> vertex_tuple(const Signature& sig) {
  std::array<long long, 4> t = {0, 0, 0, 0};
  for (auto& [c, k] : sig.color_counts)
    if (c >= 0 && c < 4) t[std::size_t(c)] = k;
  return t;
}

/// The graph isomorphism induced by an isotopism t.
/// Requires t to be a verified isotopism (and f = g = h for G2).
inline std::vector<int> transport_isotopism_to_graph(const Algebra& A, const Algebra& A2, const IsotopismTriple& t,
                                                     const AlgebraGraph& gA, const AlgebraGraph& gA2,
                                                     GraphKind kind) {
  if (!verify_isotopism(A, A2, t)) throw std::invalid_argument("transport: triple is not an isotopism");
  if (kind == GraphKind::G2 && !t.is_isomorphism())
    throw std::invalid_argument("transport: G2 transport needs f = g = h");
  auto map_vec = [&](const Mat& m, int idx) {
    return vec_to_index(m.apply(index_to_vec(idx, A.n, A.p)), A.p);
  };
  std::vector<int> alpha(gA.graph.vertex_count(), -1);
  for (auto& [u, id] : gA.r_vertex) alpha[id] = gA2.r_vertex.at(map_vec(t.f, u));
  for (auto& [u, id] : gA.c_vertex) alpha[id] = gA2.c_vertex.at(map_vec(t.g, u));
  for (auto& [u, id] : gA.s_vertex) alpha[id] = gA2.s_vertex.at(map_vec(t.h, u));
  for (auto& [uv, id] : gA.t_vertex) alpha[id] = gA2.t_vertex.at({map_vec(t.f, uv.first), map_vec(t.g, uv.second)});
  if (!is_valid_isomorphism(gA.graph, gA2.graph, alpha))
    throw std::logic_error("transport: induced map failed graph-isomorphism check");
  return alpha;
}

/// Maps recovered from a graph isomorphism between algebra graphs:
/// total bijections on F_p^n, pi-completed on annihilators and outside A^2.
/// They are multiplicative by construction but need not be linear.
struct ExtractedMaps {
  std::vector<int> f, g, h;  // vector index -> vector index
  bool multiplicative = false;
  bool f_linear = false, g_linear = false, h_linear = false;
};

namespace detail {

inline bool is_bijection(const std::vector<int>& m) {
  std::vector<bool> hit(m.size(), false);
  for (int x : m) {
    if (x < 0 || x >= int(m.size()) || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

inline bool is_linear_map(const std::vector<int>& m, int n, int p) {
  PrimeField F(p);
  const int q = int(m.size());
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      Vec sum = vec_add(F, index_to_vec(a, n, p), index_to_vec(b, n, p));
      Vec msum = vec_add(F, index_to_vec(m[a], n, p), index_to_vec(m[b], n, p));
      if (m[vec_to_index(sum, p)] != vec_to_index(msum, p)) return false;
    }
  return true;
}

}  // namespace detail

namespace detail {

/// Completes a partial map with the order-preserving bijection between the
/// unused source and target indices. The proof's basis-preserving map pi
/// has to carry each leftover region onto the matching region of the target
/// space; the lexicographic pairing is the canonical such choice and
/// coincides with the coordinate identity whenever the regions coincide.
inline void complete_order_preserving(std::vector<int>& m) {
  const int q = int(m.size());
  std::vector<bool> used(q, false);
  for (int x : m)
    if (x >= 0) used[x] = true;
  int next = 0;
  for (int u = 0; u < q; ++u) {
    if (m[u] >= 0) continue;
    while (next < q && used[next]) ++next;
    if (next == q) return;  // partial map was not injective; caller reports failure
    m[u] = next;
    used[next] = true;
  }
}

}  // namespace detail

inline ExtractedMaps extract_maps_from_graph_iso(const Algebra& A, const Algebra& A2, const std::vector<int>& alpha,
                                                 const AlgebraGraph& gA, const AlgebraGraph& gA2, GraphKind kind) {
  if (!is_valid_isomorphism(gA.graph, gA2.graph, alpha))
    throw std::invalid_argument("extract_maps: alpha is not a valid graph isomorphism");
  const int q = gA.q;
  ExtractedMaps out;
  out.f.assign(q, -1);
  out.g.assign(q, -1);
  out.h.assign(q, -1);

  // invert the target graph's payload lookup
  std::map<int, int> r_payload, c_payload, s_payload;
  for (auto& [u, id] : gA2.r_vertex) r_payload[id] = u;
  for (auto& [u, id] : gA2.c_vertex) c_payload[id] = u;
  for (auto& [u, id] : gA2.s_vertex) s_payload[id] = u;

  for (auto& [u, id] : gA.r_vertex) out.f[u] = r_payload.at(alpha[id]);
  for (auto& [u, id] : gA.c_vertex) out.g[u] = c_payload.at(alpha[id]);
  for (auto& [u, id] : gA.s_vertex) out.h[u] = s_payload.at(alpha[id]);
  out.h[0] = 0;  // zero products must map to zero

  if (kind == GraphKind::G2) {
    // f = g = h: merge the r/c/s-derived values; the G2 within-element
    // edges force them to agree wherever two are defined
    std::vector<int> m(q, -1);
    m[0] = 0;
    for (int u = 0; u < q; ++u)
      for (int cand : {out.f[u], out.g[u], out.h[u]}) {
        if (cand < 0) continue;
        if (m[u] >= 0 && m[u] != cand) return out;  // inconsistent alpha; not multiplicative
        m[u] = cand;
      }
    detail::complete_order_preserving(m);
    out.f = out.g = out.h = m;
  } else {
    detail::complete_order_preserving(out.f);
    detail::complete_order_preserving(out.g);
    detail::complete_order_preserving(out.h);
  }
  if (!detail::is_bijection(out.f) || !detail::is_bijection(out.g) || !detail::is_bijection(out.h))
    return out;  // multiplicative stays false

  auto tA = product_table(A);
  auto tA2 = product_table(A2);
  out.multiplicative = true;
  for (int u = 0; u < q && out.multiplicative; ++u)
    for (int v = 0; v < q; ++v)
      if (tA2[std::size_t(out.f[u]) * q + out.g[v]] != out.h[tA[std::size_t(u) * q + v]]) {
        out.multiplicative = false;
        break;
      }
  out.f_linear = detail::is_linear_map(out.f, A.n, A.p);
  out.g_linear = detail::is_linear_map(out.g, A.n, A.p);
  out.h_linear = detail::is_linear_map(out.h, A.n, A.p);
  return out;
}

}  // namespace isoclass
