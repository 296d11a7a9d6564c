#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "isoclass/pipeline.hpp"

namespace isoclass {

/// One verification criterion of the end-to-end self-test.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace selftest_detail {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return int(next() % std::uint64_t(n)); }
};

inline Algebra random_algebra(Rng& rng, int p, int n) {
  Algebra A(p, n);
  for (int& x : A.c) x = rng.below(p);
  return A;
}

inline Mat random_nonsingular(Rng& rng, int p, int n) {
  while (true) {
    Mat m(p, n);
    for (int& x : m.a) x = rng.below(p);
    if (mat_nonsingular(m)) return m;
  }
}

inline IsotopismTriple random_triple(Rng& rng, int p, int n) {
  return {random_nonsingular(rng, p, n), random_nonsingular(rng, p, n), random_nonsingular(rng, p, n)};
}

inline std::vector<int> map_set(const Mat& m, const std::vector<int>& S, int n, int p) {
  std::vector<int> out;
  out.reserve(S.size());
  for (int idx : S) out.push_back(vec_to_index(m.apply(index_to_vec(idx, n, p)), p));
  std::sort(out.begin(), out.end());
  return out;
}

/// Random subspace of F_p^n as a sorted index list (span of <= 2 vectors).
inline std::vector<int> random_subspace(Rng& rng, int n, int p) {
  PrimeField F(p);
  std::set<int> span = {0};
  int generators = rng.below(3);
  for (int g = 0; g < generators; ++g) {
    Vec v = index_to_vec(rng.below(space_size(n, p)), n, p);
    bool grew = true;
    span.insert(vec_to_index(v, p));
    while (grew) {
      grew = false;
      std::vector<int> items(span.begin(), span.end());
      for (int a : items)
        for (int b : items)
          for (int c = 1; c < p; ++c) {
            Vec w = vec_add(F, index_to_vec(a, n, p), vec_scale(F, c, index_to_vec(b, n, p)));
            if (span.insert(vec_to_index(w, p)).second) grew = true;
          }
    }
  }
  return {span.begin(), span.end()};
}

inline long long triangles_by_enumeration(const ColoredGraph& g) {
  auto adj = g.adjacency();
  std::vector<std::set<int>> nb(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) nb[v] = {adj[v].begin(), adj[v].end()};
  long long tri = 0;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b : adj[a]) {
      if (b <= a) continue;
      for (int c : adj[b])
        if (c > b && nb[a].count(c)) ++tri;
    }
  return tri;
}

inline bool signatures_match_ignoring_triangles(Signature a, Signature b) {
  a.triangles = b.triangles = 0;
  return a == b;
}

inline std::vector<int> random_perm(Rng& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

inline Polynomial random_poly(Rng& rng, const PrimeField& F, int nvars, MonomialOrder ord) {
  std::vector<Term> terms;
  int nterms = 1 + rng.below(3);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(nvars);
    for (int v = 0; v < nvars; ++v) m.e[v] = rng.below(3);
    m.refresh();
    terms.push_back({m, 1 + rng.below(F.p() - 1)});
  }
  return poly_normalize(terms, F, ord);
}

inline std::string plural(long long k, const char* what) { return std::to_string(k) + " " + what; }

// -- individual criteria ----------------------------------------------------

inline CheckResult check_square_classes() {
  CheckResult r{"partial-square isotopism class counts are 2, 8, 81", false, ""};
  std::array<std::size_t, 3> got = {pls_isotopism_classes(1).size(), pls_isotopism_classes(2).size(),
                                    pls_isotopism_classes(3).size()};
  r.pass = got == std::array<std::size_t, 3>{2, 8, 81};
  r.detail = "counts " + std::to_string(got[0]) + ", " + std::to_string(got[1]) + ", " + std::to_string(got[2]);
  return r;
}

inline CheckResult check_ring_classes_f2(int jobs) {
  CheckResult r{"ring classes over F2 are 2, 7, 72 with the nine expected merges", false, ""};
  ClassifyOptions opts;
  opts.jobs = jobs;
  std::array<std::size_t, 3> counts;
  RingClassification order3;
  for (int n = 1; n <= 3; ++n) {
    RingClassification rc = classify_quasigroup_rings(n, 2, opts);
    if (!rc.report.exact) {
      r.detail = "order-" + std::to_string(n) + " classification left pairs undecided";
      return r;
    }
    counts[std::size_t(n - 1)] = rc.report.classes.size();
    if (n == 3) order3 = std::move(rc);
  }
  if (counts != std::array<std::size_t, 3>{2, 7, 72}) {
    r.detail = "class counts " + std::to_string(counts[0]) + ", " + std::to_string(counts[1]) + ", " +
               std::to_string(counts[2]);
    return r;
  }
  auto canon = [](const char* s) { return format_pls(canonical_pls(parse_pls(s))); };
  const std::vector<std::pair<const char*, const char*>> expected = {
      {"120 200 000", "120 210 000"}, {"120 200 001", "120 210 001"}, {"120 200 003", "120 210 003"},
      {"120 010 300", "120 210 300"}, {"120 013 000", "123 210 000"}, {"120 010 302", "120 210 301"},
      {"120 203 001", "120 213 001"}, {"120 013 300", "120 213 300"}, {"120 013 302", "123 210 301"},
  };
  std::set<std::set<std::string>> want, got;
  for (auto [a, b] : expected) want.insert({canon(a), canon(b)});
  for (const auto& group : order3.merged_groups) got.insert({group.begin(), group.end()});
  r.pass = want == got;
  r.detail = "72 classes, " + plural((long long)order3.merged_groups.size(), "merged groups") +
             (r.pass ? ", all pairs as expected" : ", merge structure differs from the expected nine pairs");
  return r;
}

inline CheckResult check_order2_rings(int jobs) {
  CheckResult r{"order-2 rings: 7 isotopism classes over F2 and F3; completed squares merge only over F2", false,
                ""};
  ClassifyOptions opts;
  opts.jobs = jobs;
  std::vector<std::size_t> counts;
  for (int p : {2, 3}) {
    std::vector<Algebra> census;
    for (const auto& row : p2_table(p)) census.push_back(ring_of(parse_pls(row.pls), p));
    ClassificationReport rep = classify(census, Relation::isotopism, opts);
    if (!rep.exact) {
      r.detail = "classification over F" + std::to_string(p) + " left pairs undecided";
      return r;
    }
    counts.push_back(rep.classes.size());
  }
  Algebra A2 = ring_of(parse_pls("12 20"), 2), B2 = ring_of(parse_pls("12 21"), 2);
  Algebra A3 = ring_of(parse_pls("12 20"), 3), B3 = ring_of(parse_pls("12 21"), 3);
  IsotopismScan f2 = enumerate_isotopisms(A2, B2, true);
  IsotopismScan f3 = enumerate_isotopisms(A3, B3, true);
  std::size_t isom_f2 = enumerate_isomorphisms(A2, B2).size();
  r.pass = counts == std::vector<std::size_t>{7, 7} && f2.decided && f2.count == 4 && isom_f2 == 1 &&
           f3.decided && f3.count == 0;
  std::ostringstream d;
  d << "classes F2=" << counts[0] << " F3=" << counts[1] << "; completed-square counts: " << f2.count
    << " isotopisms / " << isom_f2 << " isomorphism over F2, " << f3.count << " over F3";
  r.detail = d.str();
  return r;
}

inline CheckResult check_tables() {
  CheckResult r{"pinned invariant tables reproduce bit-exactly", true, ""};
  long long rows = 0;
  for (const std::string& name : table_names()) {
    TableReport t = emit_table(name);
    rows += (long long)t.rows.size();
    if (!t.matches()) {
      r.pass = false;
      r.detail += name + ": " + t.diffs[0] + "; ";
    }
  }
  if (r.pass) r.detail = plural(rows, "rows recomputed, zero mismatches");
  return r;
}

inline CheckResult check_lie(int jobs) {
  CheckResult r{"order-3 Lie censuses: 32 and 123 members; 6/7 isomorphism classes; 4 isotopism groups", false,
                ""};
  ClassifyOptions opts;
  opts.jobs = jobs;
  LieClassification f2_isom = classify_lie(2, Relation::isomorphism, opts);
  LieClassification f2_isot = classify_lie(2, Relation::isotopism, opts);
  LieClassification f3_isom = classify_lie(3, Relation::isomorphism, opts);
  LieClassification f3_isot = classify_lie(3, Relation::isotopism, opts);
  std::size_t f3_groups = f3_isot.invariant_groups.size();
  r.pass = f2_isom.census.size() == 32 && f3_isom.census.size() == 123 && f2_isom.report.exact &&
           f2_isom.report.classes.size() == 6 && f3_isom.report.exact && f3_isom.report.classes.size() == 7 &&
           f2_isot.report.exact && f2_isot.report.classes.size() == 4 && f3_groups == 4 &&
           f3_isot.report.exact && f3_isot.report.classes.size() == 4;
  std::ostringstream d;
  d << "censuses " << f2_isom.census.size() << "/" << f3_isom.census.size() << "; isomorphism classes "
    << f2_isom.report.classes.size() << "/" << f3_isom.report.classes.size() << "; isotopism classes "
    << f2_isot.report.classes.size() << "/" << f3_isot.report.classes.size() << " (F3 exact, matching its "
    << f3_groups << " invariant groups)";
  r.detail = d.str();
  return r;
}

inline CheckResult check_engine_agreement() {
  CheckResult r{"polynomial and exhaustive engines report identical solution counts", true, ""};
  std::vector<std::vector<Algebra>> families;
  std::vector<Algebra> p2;
  for (const auto& row : p2_table(2)) p2.push_back(ring_of(parse_pls(row.pls), 2));
  families.push_back(p2);
  std::vector<Algebra> lie;
  for (const auto& row : l3_table(2)) lie.push_back(lie_representative(2, row));
  families.push_back(lie);
  long long pairs = 0;
  for (const auto& family : families)
    for (std::size_t i = 0; i < family.size() && r.pass; ++i)
      for (std::size_t j = i + 1; j < family.size() && r.pass; ++j) {
        ++pairs;
        IsotopismScan scan = enumerate_isotopisms(family[i], family[j], true);
        SolutionCount gt = solution_count(isotopism_ideal(family[i], family[j]));
        long long isom = (long long)enumerate_isomorphisms(family[i], family[j]).size();
        SolutionCount gm = solution_count(isomorphism_ideal(family[i], family[j]));
        if (!scan.decided || !gt.decided() || !gm.decided() || scan.count != gt.count || isom != gm.count) {
          r.pass = false;
          r.detail = "disagreement on pair " + std::to_string(i) + "," + std::to_string(j);
        }
      }
  if (r.pass) r.detail = plural(pairs, "representative pairs, both relations, all counts equal");
  return r;
}

inline CheckResult check_properties(std::uint64_t seed) {
  CheckResult r{"randomized property suites (>= 1000 cases each)", true, ""};
  Rng rng(seed);
  long long failures = 0;
  auto expect = [&](bool ok) {
    if (!ok) ++failures;
  };

  // annihilator and derived-set transport under random isotopisms
  for (int it = 0; it < 1000; ++it) {
    int p = it % 2 ? 3 : 2;
    Algebra A = random_algebra(rng, p, 2);
    IsotopismTriple t = random_triple(rng, p, 2);
    Algebra A2 = apply_isotopism(A, t);
    std::vector<int> S = random_subspace(rng, 2, p);
    expect(map_set(t.f, left_annihilator(A, S), 2, p) == left_annihilator(A2, map_set(t.g, S, 2, p)));
    expect(map_set(t.g, right_annihilator(A, S), 2, p) == right_annihilator(A2, map_set(t.f, S, 2, p)));
    expect(map_set(t.h, derived_set(A), 2, p) == derived_set(A2));
  }

  // isotopism transport yields a valid graph isomorphism, and extraction
  // recovers multiplicative bijections from it
  for (int it = 0; it < 1000; ++it) {
    int p = it % 2 ? 3 : 2;
    Algebra A = random_algebra(rng, p, 2);
    IsotopismTriple t = random_triple(rng, p, 2);
    Algebra A2 = apply_isotopism(A, t);
    AlgebraGraph gA = build_g1(A), gA2 = build_g1(A2);
    auto alpha = transport_isotopism_to_graph(A, A2, t, gA, gA2, GraphKind::G1);
    bool valid = is_valid_isomorphism(gA.graph, gA2.graph, alpha);
    expect(valid);
    if (valid) {
      ExtractedMaps maps = extract_maps_from_graph_iso(A, A2, alpha, gA, gA2, GraphKind::G1);
      expect(maps.multiplicative);
    }
  }

  // graph shape laws: G1 triangle-free, cell vertices of degree 3,
  // matrix-cube trace equals six times the enumerated triangle count
  for (int it = 0; it < 1000; ++it) {
    int p = it % 2 ? 3 : 2;
    Algebra A = random_algebra(rng, p, 2);
    AlgebraGraph g1 = build_g1(A), g2 = build_g2(A);
    expect(triangle_count(g1.graph) == 0);
    auto adj1 = g1.graph.adjacency();
    for (auto& [uv, id] : g1.t_vertex) expect(adj1[std::size_t(id)].size() == 3);
    expect(adjacency_cube_trace(g2.graph) == 6 * triangles_by_enumeration(g2.graph));
    // predicted signatures agree with measured ones
    expect(signatures_match_ignoring_triangles(predicted_signature(A, GraphKind::G1), signature(g1.graph)));
    expect(signatures_match_ignoring_triangles(predicted_signature(A, GraphKind::G2), signature(g2.graph)));
  }

  // predicted = measured on every census row of the pinned tables
  for (int p : {2, 3})
    for (const auto& row : p2_table(p)) {
      Algebra A = ring_of(parse_pls(row.pls), p);
      expect(signatures_match_ignoring_triangles(predicted_signature(A, GraphKind::G1),
                                                 signature(build_g1(A).graph)));
      expect(signatures_match_ignoring_triangles(predicted_signature(A, GraphKind::G2),
                                                 signature(build_g2(A).graph)));
    }
  for (const Algebra& A : enumerate_lie_algebras(3, 2)) {
    expect(signatures_match_ignoring_triangles(predicted_signature(A, GraphKind::G1),
                                               signature(build_g1(A).graph)));
    expect(signatures_match_ignoring_triangles(predicted_signature(A, GraphKind::G2),
                                               signature(build_g2(A).graph)));
  }

  // reduced bases are invariant under generator shuffles
  for (int it = 0; it < 1000; ++it) {
    int p = it % 2 ? 3 : 2;
    PrimeField F(p);
    MonomialOrder ord = it % 4 < 2 ? MonomialOrder::lex : MonomialOrder::degrevlex;
    int nvars = 1 + rng.below(3);
    std::vector<Polynomial> gens;
    int k = 1 + rng.below(3);
    for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, F, nvars, ord));
    std::vector<Polynomial> shuffled = gens;
    for (int i = int(shuffled.size()) - 1; i > 0; --i) std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
    auto gb1 = reduce_basis(buchberger(gens, F, ord), F, ord);
    auto gb2 = reduce_basis(buchberger(shuffled, F, ord), F, ord);
    expect(gb1 == gb2);
  }

  // square-action group laws and the permutation lift commuting square
  const auto squares = pls_isotopism_classes(3);
  for (int it = 0; it < 1000; ++it) {
    const PartialLatinSquare& L = squares[std::size_t(rng.below(int(squares.size())))];
    PermTriple t1{random_perm(rng, 3), random_perm(rng, 3), random_perm(rng, 3)};
    PermTriple t2{random_perm(rng, 3), random_perm(rng, 3), random_perm(rng, 3)};
    expect(act(PermTriple::identity(3), L) == L);
    expect(act(t2, act(t1, L)) == act(compose(t2, t1), L));
    int p = it % 2 ? 3 : 2;
    IsotopismTriple lifted = lift_magma_isotopism(t1, p, 3);
    expect(verify_isotopism(ring_of(L, p), ring_of(act(t1, L), p), lifted));
    expect(ring_of(act(t1, L), p) == apply_isotopism(ring_of(L, p), lifted));
  }

  r.pass = failures == 0;
  r.detail = failures == 0 ? "all suites clean" : plural(failures, "assertion failures");
  return r;
}

inline CheckResult check_filtering(int jobs) {
  CheckResult r{"invariant filtering cuts exact-engine calls and wall-clock on the order-3 ring census", false,
                ""};
  std::vector<Algebra> census;
  for (const auto& L : pls_isotopism_classes(3)) census.push_back(ring_of(L, 2));
  ClassifyOptions filtered_opts;
  filtered_opts.jobs = jobs;
  ClassifyOptions baseline_opts = filtered_opts;
  baseline_opts.use_invariant_filter = false;

  auto clock = [] { return std::chrono::steady_clock::now(); };
  auto t0 = clock();
  ClassificationReport filtered = classify(census, Relation::isotopism, filtered_opts);
  auto t1 = clock();
  ClassificationReport baseline = classify(census, Relation::isotopism, baseline_opts);
  auto t2 = clock();
  double filtered_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  double baseline_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();

  double pruning = 100.0 * double(filtered.pairs_total - filtered.exact_calls) / double(filtered.pairs_total);
  r.pass = filtered.classes == baseline.classes && filtered.exact_calls < baseline.exact_calls &&
           filtered_ms < baseline_ms;
  std::ostringstream d;
  d.precision(1);
  d << std::fixed << "exact calls " << filtered.exact_calls << " vs " << baseline.exact_calls << " ("
    << pruning << "% of pairs avoided), wall-clock " << filtered_ms / 1000.0 << "s vs " << baseline_ms / 1000.0
    << "s, identical classes: " << (filtered.classes == baseline.classes ? "yes" : "NO");
  r.detail = d.str();
  return r;
}

}  // namespace selftest_detail

/// Runs every end-to-end verification criterion. `seed` feeds only the
/// randomized property suites.
inline std::vector<CheckResult> run_selftest(int jobs = 0, std::uint64_t seed = 2026) {
  if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  using namespace selftest_detail;
  std::vector<CheckResult> out;
  out.push_back(check_square_classes());
  out.push_back(check_ring_classes_f2(jobs));
  out.push_back(check_order2_rings(jobs));
  out.push_back(check_tables());
  out.push_back(check_lie(jobs));
  out.push_back(check_engine_agreement());
  out.push_back(check_properties(seed));
  out.push_back(check_filtering(jobs));
  return out;
}

}  // namespace isoclass
