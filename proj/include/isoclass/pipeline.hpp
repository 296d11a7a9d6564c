#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "isoclass/algebra.hpp"
#include "isoclass/functor.hpp"
#include "isoclass/groebner.hpp"
#include "isoclass/latin.hpp"
#include "isoclass/oracle.hpp"
#include "isoclass/tables.hpp"

namespace isoclass {

enum class Relation { isomorphism, isotopism };
enum class Engine { groebner, oracle, auto_engine };

struct MergeWitness {
  int a = 0, b = 0;
  IsotopismTriple t;
};

struct ClassificationReport {
  Relation relation = Relation::isotopism;
  int census_size = 0;
  std::vector<std::vector<int>> classes;  // sorted member lists, ordered by first member
  std::vector<int> representatives;       // per class: member with lex-least structure constants
  std::vector<MergeWitness> witnesses;    // one verified witness per merge edge
  long long pairs_total = 0;
  long long pruned_by_signature = 0;
  long long split_by_certificate = 0;
  long long exact_calls = 0;
  long long undecided_pairs = 0;
  bool exact = true;  // false when any pair stayed undecided

  int class_of(int member) const {
    for (int c = 0; c < int(classes.size()); ++c)
      for (int m : classes[c])
        if (m == member) return c;
    return -1;
  }
};

struct ClassifyOptions {
  Engine engine = Engine::auto_engine;
  int jobs = 1;
  bool use_invariant_filter = true;
  long long graph_budget = kDefaultCanonBudget;
  long long groebner_budget = kDefaultGroebnerBudget;
  long long oracle_budget = 10'000'000;
  // canonical labeling of very large graphs costs more than an exact engine
  // call; above this vertex count the certificate filter is skipped
  int cert_vertex_limit = 128;
};

namespace detail {

struct ExactVerdict {
  Tri status = Tri::undecided;
  std::optional<IsotopismTriple> witness;
};

inline ExactVerdict exact_decide(const Algebra& A, const Algebra& B, Relation rel, Engine engine,
                                 const ClassifyOptions& opts) {
  if (engine == Engine::auto_engine) {
    // oracle everywhere it is exhaustive-feasible; polynomial engine for the
    // q = 3 isomorphism scans; backtracking oracle for q = 3 isotopism
    if (rel == Relation::isomorphism)
      engine = A.p == 2 ? Engine::oracle : Engine::groebner;
    else
      engine = Engine::oracle;
  }
  ExactVerdict out;
  if (rel == Relation::isomorphism) {
    if (engine == Engine::groebner) {
      SolutionCount c = solution_count(isomorphism_ideal(A, B), MonomialOrder::degrevlex, opts.groebner_budget);
      if (!c.decided()) return out;
      if (c.count == 0) {
        out.status = Tri::no;
        return out;
      }
    }
    std::vector<Mat> maps;
    try {
      maps = enumerate_isomorphisms(A, B);
    } catch (const BudgetExceeded&) {
      return out;
    }
    out.status = maps.empty() ? Tri::no : Tri::yes;
    if (!maps.empty()) out.witness = IsotopismTriple{maps[0], maps[0], maps[0]};
    return out;
  }
  if (engine == Engine::groebner) {
    SolutionCount c = solution_count(isotopism_ideal(A, B), MonomialOrder::degrevlex, opts.groebner_budget);
    if (!c.decided()) return out;
    if (c.count == 0) {
      out.status = Tri::no;
      return out;
    }
  }
  ExistenceResult r = isotopism_exists(A, B, opts.oracle_budget);
  out.status = r.status;
  out.witness = r.witness;
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Groups census members by equal graph signatures: G1 for isotopism, G2 for
/// isomorphism. (G2 is not isotopism-invariant, so it may only be used for
/// the finer relation.)
inline std::vector<std::vector<int>> invariant_partition(const std::vector<Algebra>& census, Relation rel) {
  GraphKind kind = rel == Relation::isotopism ? GraphKind::G1 : GraphKind::G2;
  std::map<std::string, std::vector<int>> buckets;
  for (int i = 0; i < int(census.size()); ++i)
    buckets[signature(build_graph(census[i], kind).graph).key()].push_back(i);
  std::vector<std::vector<int>> groups;
  for (auto& [k, v] : buckets) groups.push_back(std::move(v));
  std::sort(groups.begin(), groups.end());
  return groups;
}

/// Partitions a census into equivalence classes. Pipeline per pair: signature
/// comparison, then canonical-certificate comparison, then an exact engine.
/// Graph evidence only ever splits; every merge carries a verified witness.
inline ClassificationReport classify(const std::vector<Algebra>& census, Relation rel,
                                     const ClassifyOptions& opts = {}) {
  const int n = int(census.size());
  for (const Algebra& A : census)
    if (A.p != census[0].p || A.n != census[0].n)
      throw std::invalid_argument("classify: census must share p and n");

  ClassificationReport rep;
  rep.relation = rel;
  rep.census_size = n;

  GraphKind kind = rel == Relation::isotopism ? GraphKind::G1 : GraphKind::G2;
  std::vector<AlgebraGraph> graphs;
  std::vector<std::string> sig_keys;
  graphs.reserve(n);
  for (const Algebra& A : census) {
    graphs.push_back(build_graph(A, kind));
    sig_keys.push_back(signature(graphs.back().graph).key());
  }

  // candidate pairs after signature pruning
  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ++rep.pairs_total;
      if (opts.use_invariant_filter && sig_keys[i] != sig_keys[j])
        ++rep.pruned_by_signature;
      else
        candidates.push_back({i, j});
    }

  // canonical certificates, computed once per algebra that appears in a
  // candidate pair; a blown budget leaves the certificate unavailable
  std::vector<std::optional<std::string>> certs(n);
  std::vector<bool> cert_done(n, false);
  if (opts.use_invariant_filter)
    for (auto [i, j] : candidates)
      for (int v : {i, j}) {
        if (cert_done[v]) continue;
        cert_done[v] = true;
        if (graphs[v].graph.vertex_count() > opts.cert_vertex_limit) continue;
        try {
          certs[v] = canonical_certificate(graphs[v].graph, opts.graph_budget);
        } catch (const BudgetExceeded&) {
        }
      }

  std::vector<std::pair<int, int>> exact_pairs;
  for (auto [i, j] : candidates) {
    if (opts.use_invariant_filter && certs[i] && certs[j] && *certs[i] != *certs[j])
      ++rep.split_by_certificate;
    else
      exact_pairs.push_back({i, j});
  }

  // exact verdicts, computed independently per pair (parallelizable without
  // changing any reported statistic)
  std::vector<detail::ExactVerdict> verdicts(exact_pairs.size());
  rep.exact_calls = (long long)exact_pairs.size();
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || exact_pairs.size() < 2) {
    for (std::size_t k = 0; k < exact_pairs.size(); ++k)
      verdicts[k] = detail::exact_decide(census[exact_pairs[k].first], census[exact_pairs[k].second], rel,
                                         opts.engine, opts);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t k = next.fetch_add(1); k < exact_pairs.size(); k = next.fetch_add(1))
          verdicts[k] = detail::exact_decide(census[exact_pairs[k].first], census[exact_pairs[k].second], rel,
                                             opts.engine, opts);
      });
    for (auto& th : pool) th.join();
  }

  detail::UnionFind uf(n);
  for (std::size_t k = 0; k < exact_pairs.size(); ++k) {
    auto [i, j] = exact_pairs[k];
    const detail::ExactVerdict& v = verdicts[k];
    if (v.status == Tri::undecided) {
      ++rep.undecided_pairs;
      rep.exact = false;
      continue;
    }
    if (v.status == Tri::no) continue;
    if (!v.witness) throw std::logic_error("classify: positive verdict without witness");
    bool ok = verify_isotopism(census[i], census[j], *v.witness) &&
              (rel == Relation::isotopism || (v.witness->f == v.witness->g && v.witness->g == v.witness->h));
    if (!ok) throw std::logic_error("classify: witness failed re-verification");
    rep.witnesses.push_back({i, j, *v.witness});
    uf.merge(i, j);
  }

  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> classes;
  for (auto& [root, members] : by_root) classes.push_back(members);
  std::sort(classes.begin(), classes.end());
  rep.classes = std::move(classes);
  for (const auto& cls : rep.classes) {
    int best = cls[0];
    for (int m : cls)
      if (algebra_key(census[m]) < algebra_key(census[best])) best = m;
    rep.representatives.push_back(best);
  }
  return rep;
}

struct RingClassification {
  ClassificationReport report;
  std::vector<PartialLatinSquare> squares;             // canonical class representatives
  std::vector<std::vector<std::string>> merged_groups;  // PLS labels sharing a ring class
};

/// Rings of all order-n partial-Latin-square classes over F_p, classified by
/// isotopism; reports which distinct square classes merged.
inline RingClassification classify_quasigroup_rings(int n, int p, const ClassifyOptions& opts = {}) {
  RingClassification out;
  out.squares = pls_isotopism_classes(n);
  std::vector<Algebra> census;
  for (const auto& L : out.squares) census.push_back(ring_of(L, p));
  out.report = classify(census, Relation::isotopism, opts);
  for (const auto& cls : out.report.classes)
    if (cls.size() > 1) {
      std::vector<std::string> group;
      for (int m : cls) group.push_back(format_pls(out.squares[m]));
      out.merged_groups.push_back(std::move(group));
    }
  return out;
}

struct LieClassification {
  ClassificationReport report;
  std::vector<Algebra> census;
  std::vector<std::vector<int>> invariant_groups;  // relation-matched signature partition
};

/// The order-3 Lie algebra census over F_p classified under the given
/// relation. For p = 3 isotopism the report may be inexact (budgeted
/// backtracking); the invariant partition is always reported alongside.
inline LieClassification classify_lie(int p, Relation rel, const ClassifyOptions& opts = {}) {
  LieClassification out;
  out.census = enumerate_lie_algebras(3, p);
  out.invariant_groups = invariant_partition(out.census, rel);
  out.report = classify(out.census, rel, opts);
  return out;
}

// ---------------------------------------------------------------------------
// table reproduction

struct TableReport {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // freshly computed values
  std::vector<std::string> diffs;              // human-readable fixture mismatches

  bool matches() const { return diffs.empty(); }
};

namespace detail {

inline std::string tuple_str(const std::array<long long, 4>& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "," +
         std::to_string(v[3]) + ")";
}

inline void check_row(TableReport& rep, const std::string& key, const std::string& field, long long expected,
                      long long got) {
  if (expected != got)
    rep.diffs.push_back(key + ": " + field + " expected " + std::to_string(expected) + ", computed " +
                        std::to_string(got));
}

inline void quasigroup_table_rows(TableReport& rep, int p) {
  for (const auto& r : p2_table(p)) {
    Algebra A = ring_of(parse_pls(r.pls), p);
    Signature s1 = signature(build_g1(A).graph), s2 = signature(build_g2(A).graph);
    std::string key = std::string(r.pls) + " (F" + std::to_string(p) + ")";
    rep.rows.push_back({key, tuple_str(vertex_tuple(s1)), std::to_string(s1.edges), std::to_string(s2.edges),
                        std::to_string(s2.triangles)});
    if (tuple_str(vertex_tuple(s1)) != tuple_str(r.vertices) || tuple_str(vertex_tuple(s2)) != tuple_str(r.vertices))
      rep.diffs.push_back(key + ": vertex tuple mismatch");
    check_row(rep, key, "g1 edges", r.g1_edges, s1.edges);
    check_row(rep, key, "g2 edges", r.g2_edges, s2.edges);
    check_row(rep, key, "g2 triangles", r.g2_triangles, s2.triangles);
  }
}

}  // namespace detail

/// Recomputes one of the pinned invariant tables and diffs it against the
/// golden fixture. Names: p2-invariants, p3-invariants, l3-g1, l3-g2.
inline TableReport emit_table(const std::string& name) {
  TableReport rep;
  rep.name = name;
  if (name == "p2-invariants") {
    rep.header = {"pls", "vertices", "g1 edges", "g2 edges", "g2 triangles"};
    detail::quasigroup_table_rows(rep, 2);
    detail::quasigroup_table_rows(rep, 3);
    return rep;
  }
  if (name == "p3-invariants") {
    rep.header = {"pls", "vertices", "g1 edges"};
    for (const auto& r : p3_g1_table()) {
      Algebra A = ring_of(parse_pls(r.pls), 2);
      Signature s = signature(build_g1(A).graph);
      rep.rows.push_back({r.pls, detail::tuple_str(vertex_tuple(s)), std::to_string(s.edges)});
      if (detail::tuple_str(vertex_tuple(s)) != detail::tuple_str(r.vertices))
        rep.diffs.push_back(std::string(r.pls) + ": vertex tuple mismatch");
      detail::check_row(rep, r.pls, "g1 edges", r.g1_edges, s.edges);
    }
    return rep;
  }
  if (name == "l3-g1" || name == "l3-g2") {
    bool g1 = name == "l3-g1";
    rep.header = g1 ? std::vector<std::string>{"algebra", "vertices", "edges"}
                    : std::vector<std::string>{"algebra", "vertices", "edges", "triangles"};
    for (int p : {2, 3})
      for (const auto& r : l3_table(p)) {
        Algebra A = lie_representative(p, r);
        Signature s = signature(build_graph(A, g1 ? GraphKind::G1 : GraphKind::G2).graph);
        std::string key = std::string(r.label) + " (F" + std::to_string(p) + ")";
        std::vector<std::string> row = {key, detail::tuple_str(vertex_tuple(s)), std::to_string(s.edges)};
        if (!g1) row.push_back(std::to_string(s.triangles));
        rep.rows.push_back(std::move(row));
        if (detail::tuple_str(vertex_tuple(s)) != detail::tuple_str(r.vertices))
          rep.diffs.push_back(key + ": vertex tuple mismatch");
        detail::check_row(rep, key, "edges", g1 ? r.g1_edges : r.g2_edges, s.edges);
        if (!g1) detail::check_row(rep, key, "triangles", r.g2_triangles, s.triangles);
      }
    return rep;
  }
  throw std::invalid_argument("emit_table: unknown table '" + name + "'");
}

inline std::vector<std::string> table_names() { return {"p2-invariants", "p3-invariants", "l3-g1", "l3-g2"}; }

// ---------------------------------------------------------------------------
// serialization

inline nlohmann::json report_to_json(const ClassificationReport& rep,
                                     const std::vector<std::string>& labels = {}) {
  nlohmann::json j;
  j["relation"] = rep.relation == Relation::isotopism ? "isotopism" : "isomorphism";
  j["census_size"] = rep.census_size;
  j["class_count"] = rep.classes.size();
  j["exact"] = rep.exact;
  j["classes"] = nlohmann::json::array();
  for (std::size_t c = 0; c < rep.classes.size(); ++c) {
    nlohmann::json cls;
    cls["representative"] = rep.representatives[c];
    cls["members"] = rep.classes[c];
    if (!labels.empty()) {
      cls["representative_label"] = labels[std::size_t(rep.representatives[c])];
      std::vector<std::string> names;
      for (int m : rep.classes[c]) names.push_back(labels[std::size_t(m)]);
      cls["member_labels"] = names;
    }
    j["classes"].push_back(std::move(cls));
  }
  j["stats"] = {{"pairs_total", rep.pairs_total},
                {"pruned_by_signature", rep.pruned_by_signature},
                {"split_by_certificate", rep.split_by_certificate},
                {"exact_calls", rep.exact_calls},
                {"undecided_pairs", rep.undecided_pairs}};
  return j;
}

inline std::string table_to_csv(const TableReport& rep) {
  std::string out;
  auto append = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ",";
      bool quote = cells[i].find(',') != std::string::npos;
      if (quote) out += '"';
      out += cells[i];
      if (quote) out += '"';
    }
    out += "\n";
  };
  append(rep.header);
  for (const auto& row : rep.rows) append(row);
  return out;
}

}  // namespace isoclass
