#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoclass/budget.hpp"

namespace isoclass {

/// Vertex-colored undirected graph. No self-loops, no duplicate edges.
struct ColoredGraph {
  std::vector<int> colors;
  std::vector<std::string> names;  // optional semantic vertex names
  std::vector<std::pair<int, int>> edges;

  int add_vertex(int color, std::string name = {}) {
    colors.push_back(color);
    names.push_back(std::move(name));
    return int(colors.size()) - 1;
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("ColoredGraph: self-loop");
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
  }

  void normalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  int vertex_count() const { return int(colors.size()); }
  int edge_count() const { return int(edges.size()); }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(colors.size());
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }
};

/// trace(M^3) computed from adjacency bitrows; equals 6x the triangle count.
inline long long adjacency_cube_trace(const ColoredGraph& g) {
  const int n = g.vertex_count();
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(std::size_t(n) * words, 0);
  for (auto [u, v] : g.edges) {
    rows[std::size_t(u) * words + v / 64] |= std::uint64_t(1) << (v % 64);
    rows[std::size_t(v) * words + u / 64] |= std::uint64_t(1) << (u % 64);
  }
  long long trace = 0;
  for (auto [u, v] : g.edges) {
    int common = 0;
    for (int w = 0; w < words; ++w)
      common += __builtin_popcountll(rows[std::size_t(u) * words + w] & rows[std::size_t(v) * words + w]);
    trace += 2 * common;  // each unordered edge appears twice in the trace sum
  }
  return trace;
}

inline long long triangle_count(const ColoredGraph& g) { return adjacency_cube_trace(g) / 6; }

/// Isomorphism-invariant summary: per-color vertex counts, edge count,
/// triangle count, per-color sorted degree multisets.
struct Signature {
  std::vector<std::pair<int, long long>> color_counts;  // sorted by color
  long long edges = 0;
  long long triangles = 0;
  std::vector<std::pair<int, std::vector<int>>> degrees;  // color -> sorted degree multiset

  bool operator==(const Signature&) const = default;

  std::string key() const {
    std::string s;
    for (auto& [c, k] : color_counts) s += std::to_string(c) + ":" + std::to_string(k) + ",";
    s += "|e" + std::to_string(edges) + "|t" + std::to_string(triangles) + "|";
    for (auto& [c, ds] : degrees) {
      s += std::to_string(c) + "[";
      for (int d : ds) s += std::to_string(d) + " ";
      s += "]";
    }
    return s;
  }
};

inline Signature signature(const ColoredGraph& g) {
  Signature s;
  std::map<int, long long> counts;
  std::map<int, std::vector<int>> degs;
  std::vector<int> deg(g.vertex_count(), 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    ++counts[g.colors[v]];
    degs[g.colors[v]].push_back(deg[v]);
  }
  for (auto& [c, ds] : degs) std::sort(ds.begin(), ds.end());
  s.color_counts.assign(counts.begin(), counts.end());
  s.degrees.assign(degs.begin(), degs.end());
  s.edges = g.edge_count();
  s.triangles = triangle_count(g);
  return s;
}

namespace detail {

/// One round-robin color refinement (1-WL) to a stable partition.
/// New color ids are assigned by sorted code order, so they are canonical:
/// isomorphic inputs with matching colorings get matching refined colorings.
inline std::vector<int> refine_colors(const std::vector<std::vector<int>>& adj, std::vector<int> col) {
  const int n = int(col.size());
  if (n == 0) return col;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> codes(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> code;
      code.reserve(adj[v].size() + 1);
      code.push_back(col[v]);
      for (int u : adj[v]) code.push_back(col[u]);
      std::sort(code.begin() + 1, code.end());
      codes[v] = {std::move(code), v};
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return codes[a].first < codes[b].first; });
    std::vector<int> next(n, 0);
    int classes = 1;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && codes[order[i]].first != codes[order[i - 1]].first) ++classes;
      next[order[i]] = classes - 1;
    }
    // one refinement round never coarsens, so an unchanged class count
    // means the partition is stable; return the canonical ids
    int old_classes = int(std::set<int>(col.begin(), col.end()).size());
    if (classes == old_classes) return next;
    col = std::move(next);
  }
}

struct CanonResult {
  std::string certificate;
  std::vector<int> labeling;  // vertex -> canonical position
};

/// Individualization-refinement canonical labeling with a node budget.
/// Pruning: (a) canonical node invariants compared against the best path,
/// (b) orbit pruning with discovered automorphisms that fix the current
/// individualized prefix pointwise.
class CanonSearch {
 public:
  CanonSearch(const ColoredGraph& g, long long budget) : g_(g), adj_(g.adjacency()), budget_(budget) {}

  CanonResult run() {
    std::vector<int> init = refine_colors(adj_, g_.colors);
    std::vector<int> prefix;
    descend(init, prefix, {});
    return {best_cert_, best_lab_};
  }

 private:
  const ColoredGraph& g_;
  std::vector<std::vector<int>> adj_;
  long long budget_;
  long long nodes_ = 0;

  std::vector<std::string> best_inv_;  // node invariants along the best path
  std::string best_cert_;
  bool have_best_ = false;
  std::vector<int> best_lab_;
  std::vector<std::vector<int>> automorphisms_;

  std::string node_invariant(const std::vector<int>& col) const {
    std::map<std::pair<int, int>, int> hist;  // (refined class, original color) -> size
    for (int v = 0; v < int(col.size()); ++v) ++hist[{col[v], g_.colors[v]}];
    std::string s;
    for (auto& [k, c] : hist)
      s += std::to_string(k.first) + "." + std::to_string(k.second) + "." + std::to_string(c) + ";";
    return s;
  }

  // -1: this path is worse than best so far; 0: tied; 1: better (new best prefix)
  int compare_prefix(const std::vector<std::string>& inv, std::size_t depth) const {
    if (!have_best_) return 1;
    for (std::size_t i = 0; i <= depth && i < best_inv_.size() && i < inv.size(); ++i) {
      if (inv[i] < best_inv_[i]) return 1;
      if (inv[i] > best_inv_[i]) return -1;
    }
    return 0;
  }

  void leaf(const std::vector<int>& col, const std::vector<std::string>& inv) {
    const int n = int(col.size());
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return col[a] < col[b]; });
    std::vector<int> lab(n);
    for (int i = 0; i < n; ++i) lab[order[i]] = i;
    std::string cert;
    cert += "n" + std::to_string(n) + ";";
    for (int i = 0; i < n; ++i) cert += std::to_string(g_.colors[order[i]]) + ",";
    std::vector<std::pair<int, int>> relabeled;
    relabeled.reserve(g_.edges.size());
    for (auto [u, v] : g_.edges) {
      int a = lab[u], b = lab[v];
      relabeled.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(relabeled.begin(), relabeled.end());
    for (auto [a, b] : relabeled) cert += std::to_string(a) + "-" + std::to_string(b) + ";";

    if (!have_best_) {
      have_best_ = true;
      best_inv_ = inv;
      best_cert_ = cert;
      best_lab_ = lab;
      return;
    }
    // equal invariant path: compare leaf strings, record automorphisms on ties
    if (inv == best_inv_) {
      if (cert == best_cert_) {
        std::vector<int> sigma(n);
        std::vector<int> inv_best(n);
        for (int v = 0; v < n; ++v) inv_best[best_lab_[v]] = v;
        for (int v = 0; v < n; ++v) sigma[v] = inv_best[lab[v]];
        automorphisms_.push_back(std::move(sigma));
      } else if (cert < best_cert_) {
        best_cert_ = cert;
        best_lab_ = lab;
      }
    } else if (inv < best_inv_) {
      best_inv_ = inv;
      best_cert_ = cert;
      best_lab_ = lab;
      automorphisms_.clear();
    }
  }

  /// Orbit partition of `cell` under discovered automorphisms fixing `prefix`.
  std::vector<int> orbit_reps(const std::vector<int>& cell, const std::vector<int>& prefix) {
    const int n = g_.vertex_count();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& sigma : automorphisms_) {
      bool fixes = true;
      for (int v : prefix)
        if (sigma[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(sigma[v]);
        if (a != b) parent[a] = b;
      }
    }
    std::set<int> seen;
    std::vector<int> reps;
    for (int v : cell)
      if (seen.insert(find(v)).second) reps.push_back(v);
    return reps;
  }

  void descend(std::vector<int> col, std::vector<int>& prefix, std::vector<std::string> inv) {
    if (++nodes_ > budget_) throw BudgetExceeded("canonical labeling: node budget exceeded");
    inv.push_back(node_invariant(col));
    int cmp = compare_prefix(inv, inv.size() - 1);
    if (cmp < 0) return;
    if (cmp > 0) {
      have_best_ = false;  // strictly better prefix invalidates the old best
      automorphisms_.clear();
    }

    // pick the first (smallest refined color id) non-singleton class
    const int n = int(col.size());
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[col[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (auto& [c, members] : classes)
      if (members.size() > 1) {
        target = &members;
        break;
      }
    if (!target) {
      leaf(col, inv);
      return;
    }
    for (int v : orbit_reps(*target, prefix)) {
      std::vector<int> next(n);
      for (int u = 0; u < n; ++u) next[u] = 2 * col[u] + (u == v ? 1 : 0);
      prefix.push_back(v);
      descend(refine_colors(adj_, next), prefix, inv);
      prefix.pop_back();
    }
  }
};

}  // namespace detail

inline constexpr long long kDefaultCanonBudget = 200000;

/// Canonical labeling: vertex -> canonical position, plus the certificate.
inline detail::CanonResult canonical_labeling(const ColoredGraph& g, long long budget = kDefaultCanonBudget) {
  if (g.vertex_count() == 0) return {"n0;", {}};
  detail::CanonSearch search(g, budget);
  return search.run();
}

/// Certificates are equal iff the graphs are color-isomorphic.
inline std::string canonical_certificate(const ColoredGraph& g, long long budget = kDefaultCanonBudget) {
  return canonical_labeling(g, budget).certificate;
}

inline bool is_valid_isomorphism(const ColoredGraph& g, const ColoredGraph& h, const std::vector<int>& map) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<bool> hit(h.vertex_count(), false);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int w = map[v];
    if (w < 0 || w >= h.vertex_count() || hit[w]) return false;
    hit[w] = true;
    if (g.colors[v] != h.colors[w]) return false;
  }
  std::set<std::pair<int, int>> hedges(h.edges.begin(), h.edges.end());
  for (auto [u, v] : g.edges) {
    int a = map[u], b = map[v];
    if (a > b) std::swap(a, b);
    if (!hedges.count({a, b})) return false;
  }
  return true;
}

/// Exact color-preserving isomorphism test; returns a witness bijection.
inline std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g, const ColoredGraph& h,
                                                        long long budget = kDefaultCanonBudget) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (!(signature(g) == signature(h))) return std::nullopt;
  auto cg = canonical_labeling(g, budget);
  auto ch = canonical_labeling(h, budget);
  if (cg.certificate != ch.certificate) return std::nullopt;
  std::vector<int> pos_to_h(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) pos_to_h[ch.labeling[v]] = v;
  std::vector<int> map(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) map[v] = pos_to_h[cg.labeling[v]];
  if (!is_valid_isomorphism(g, h, map)) throw std::logic_error("find_isomorphism: certificate/labeling mismatch");
  return map;
}

/// Adjacency text export (vertex id, color, neighbor list); debugging aid.
inline std::string export_adjacency_text(const ColoredGraph& g) {
  std::string out;
  auto adj = g.adjacency();
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += std::to_string(v) + " c" + std::to_string(g.colors[v]);
    if (!g.names[v].empty()) out += " " + g.names[v];
    out += " :";
    for (int u : adj[v]) out += " " + std::to_string(u);
    out += "\n";
  }
  return out;
}

}  // namespace isoclass
