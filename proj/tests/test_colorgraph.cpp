#include <catch2/catch_amalgamated.hpp>

#include "isoclass/colorgraph.hpp"
#include "test_util.hpp"

using namespace isoclass;

namespace {

ColoredGraph random_graph(TestRng& rng, int n, int colors, int edge_percent) {
  ColoredGraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(rng.below(colors));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < edge_percent) g.add_edge(u, v);
  g.normalize();
  return g;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
  ColoredGraph h;
  std::vector<int> inv(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) inv[perm[v]] = int(v);
  for (std::size_t v = 0; v < perm.size(); ++v) h.add_vertex(g.colors[inv[v]]);
  for (auto [u, v] : g.edges) h.add_edge(perm[u], perm[v]);
  h.normalize();
  return h;
}

std::vector<int> random_perm(TestRng& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

long long triangles_by_enumeration(const ColoredGraph& g) {
  auto adj = g.adjacency();
  long long count = 0;
  for (auto [u, v] : g.edges)
    for (int w : adj[u])
      if (w > v && std::binary_search(adj[v].begin(), adj[v].end(), w)) ++count;
  return count;
}

}  // namespace

TEST_CASE("empty graph has an all-zero signature") {
  ColoredGraph g;
  Signature s = signature(g);
  CHECK(s.color_counts.empty());
  CHECK(s.edges == 0);
  CHECK(s.triangles == 0);
}

TEST_CASE("a single 3-cycle has one triangle") {
  ColoredGraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex(0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.normalize();
  CHECK(triangle_count(g) == 1);
  CHECK(adjacency_cube_trace(g) == 6);
}

TEST_CASE("trace(M^3) equals 6x the enumerated triangle count") {
  TestRng rng(23);
  for (int it = 0; it < 60; ++it) {
    ColoredGraph g = random_graph(rng, 5 + rng.below(30), 3, 25);
    long long tri = triangles_by_enumeration(g);
    CHECK(adjacency_cube_trace(g) == 6 * tri);
    CHECK(triangle_count(g) == tri);
  }
}

TEST_CASE("signature is invariant under vertex relabeling") {
  TestRng rng(29);
  for (int it = 0; it < 50; ++it) {
    ColoredGraph g = random_graph(rng, 4 + rng.below(25), 4, 30);
    ColoredGraph h = relabel(g, random_perm(rng, g.vertex_count()));
    CHECK(signature(g) == signature(h));
  }
}

TEST_CASE("certificates agree exactly on relabeled copies") {
  TestRng rng(31);
  for (int it = 0; it < 40; ++it) {
    ColoredGraph g = random_graph(rng, 4 + rng.below(20), 3, 30);
    ColoredGraph h = relabel(g, random_perm(rng, g.vertex_count()));
    CHECK(canonical_certificate(g) == canonical_certificate(h));
  }
}

TEST_CASE("certificates equal iff find_isomorphism succeeds") {
  TestRng rng(37);
  std::vector<ColoredGraph> pool;
  for (int it = 0; it < 24; ++it) pool.push_back(random_graph(rng, 9, 2, 35));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      bool cert_equal = canonical_certificate(pool[i]) == canonical_certificate(pool[j]);
      auto iso = find_isomorphism(pool[i], pool[j]);
      CHECK(cert_equal == iso.has_value());
      if (iso) CHECK(is_valid_isomorphism(pool[i], pool[j], *iso));
    }
}

TEST_CASE("find_isomorphism on identical graphs returns an automorphism") {
  TestRng rng(41);
  ColoredGraph g = random_graph(rng, 12, 2, 40);
  auto iso = find_isomorphism(g, g);
  REQUIRE(iso.has_value());
  CHECK(is_valid_isomorphism(g, g, *iso));
}

TEST_CASE("signature mismatch means no isomorphism") {
  ColoredGraph g, h;
  g.add_vertex(0);
  g.add_vertex(0);
  g.add_edge(0, 1);
  g.normalize();
  h.add_vertex(0);
  h.add_vertex(1);
  h.add_edge(0, 1);
  h.normalize();
  CHECK_FALSE(find_isomorphism(g, h).has_value());
}

TEST_CASE("canonical search honors its node budget") {
  // large regular-ish graph with a tiny budget must fail hard, not answer
  ColoredGraph g;
  for (int v = 0; v < 40; ++v) g.add_vertex(0);
  for (int v = 0; v < 40; ++v) g.add_edge(v, (v + 1) % 40);
  g.normalize();
  CHECK_THROWS_AS(canonical_certificate(g, 2), BudgetExceeded);
}

TEST_CASE("self-loops are rejected") {
  ColoredGraph g;
  g.add_vertex(0);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
}
