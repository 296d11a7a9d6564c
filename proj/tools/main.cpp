// Command-line interface for deciding and classifying isotopism/isomorphism
// of finite-dimensional algebras over prime fields.
//
// Exit codes: 0 = decided true / success, 1 = decided false, 2 = error,
// 3 = undecided (a search or basis budget was exhausted).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoclass/algebra_io.hpp"
#include "isoclass/pipeline.hpp"
#include "isoclass/selftest.hpp"

using namespace isoclass;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;
constexpr int kExitUndecided = 3;

/// ISOCLASS_BUDGET scales every engine cap by the same factor relative to the
/// defaults (interpreted as the polynomial engine's pair budget).
ClassifyOptions budgeted_options() {
  ClassifyOptions opts;
  if (const char* env = std::getenv("ISOCLASS_BUDGET")) {
    long long b = std::atoll(env);
    if (b <= 0) throw std::invalid_argument("ISOCLASS_BUDGET must be a positive integer");
    double scale = double(b) / double(kDefaultGroebnerBudget);
    opts.groebner_budget = b;
    opts.oracle_budget = (long long)(double(opts.oracle_budget) * scale) + 1;
    opts.graph_budget = (long long)(double(opts.graph_budget) * scale) + 1;
  }
  return opts;
}

Engine parse_engine(const std::string& name) {
  if (name == "auto") return Engine::auto_engine;
  if (name == "oracle") return Engine::oracle;
  if (name == "groebner") return Engine::groebner;
  throw CLI::ValidationError("--engine", "must be auto, oracle or groebner");
}

json signature_to_json(const Signature& sig) {
  json j;
  j["vertices"] = vertex_tuple(sig);
  j["edges"] = sig.edges;
  j["triangles"] = sig.triangles;
  j["degrees"] = json::object();
  static const char* kColorNames[] = {"r", "c", "s", "t"};
  for (const auto& [color, multiset] : sig.degrees)
    j["degrees"][kColorNames[color]] = multiset;
  return j;
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) rows.push_back(m.row(i));
  return rows;
}

Mat mat_from_json(const json& j, int p) {
  int n = int(j.size());
  Mat m(p, n);
  for (int i = 0; i < n; ++i) {
    if (int(j[std::size_t(i)].size()) != n) throw std::invalid_argument("witness matrix is not square");
    for (int c = 0; c < n; ++c) m.at(i, c) = PrimeField(p).reduce(j[std::size_t(i)][std::size_t(c)].get<int>());
  }
  return m;
}

json triple_to_json(const IsotopismTriple& t) {
  return json{{"f", mat_to_json(t.f)}, {"g", mat_to_json(t.g)}, {"h", mat_to_json(t.h)}};
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write to " + out_path);
    out << j.dump(2) << "\n";
  }
}

/// Shared implementation of the `isotopic` and `isomorphic` commands.
int decide_command(const std::string& a_path, const std::string& b_path, Relation rel,
                   const std::string& engine_name, bool count, const std::string& out_path) {
  Algebra A = load_algebra(a_path), B = load_algebra(b_path);
  ClassifyOptions opts = budgeted_options();
  json j;
  j["relation"] = rel == Relation::isotopism ? "isotopism" : "isomorphism";

  if (count) {
    // exact solution counts, cross-checkable between the two engines
    Engine engine = parse_engine(engine_name);
    long long total = -1;
    if (engine == Engine::groebner) {
      SolutionCount c = solution_count(rel == Relation::isotopism ? isotopism_ideal(A, B)
                                                                  : isomorphism_ideal(A, B),
                                       MonomialOrder::degrevlex, opts.groebner_budget);
      if (c.decided()) total = c.count;
    } else if (rel == Relation::isotopism) {
      IsotopismScan scan = enumerate_isotopisms(A, B, true);
      if (scan.decided) total = scan.count;
    } else {
      total = (long long)enumerate_isomorphisms(A, B).size();
    }
    if (total < 0) {
      j["verdict"] = "undecided";
      emit(j, out_path);
      return kExitUndecided;
    }
    j["count"] = total;
    j["verdict"] = total > 0;
    emit(j, out_path);
    return total > 0 ? kExitTrue : kExitFalse;
  }

  detail::ExactVerdict v = detail::exact_decide(A, B, rel, parse_engine(engine_name), opts);
  if (v.status == Tri::undecided) {
    j["verdict"] = "undecided";
    emit(j, out_path);
    return kExitUndecided;
  }
  j["verdict"] = v.status == Tri::yes;
  if (v.witness) j["witness"] = triple_to_json(*v.witness);
  emit(j, out_path);
  return v.status == Tri::yes ? kExitTrue : kExitFalse;
}

int classify_command(const std::vector<Algebra>& census, const std::vector<std::string>& labels, Relation rel,
                     ClassifyOptions opts, const std::string& out_path, json extra = json::object()) {
  ClassificationReport rep = classify(census, rel, opts);
  json j = report_to_json(rep, labels);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(j, out_path);
  return rep.exact ? kExitTrue : kExitUndecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide and classify isotopism/isomorphism of finite-dimensional algebras over prime fields"};
  app.require_subcommand(1);

  std::string a_path, b_path, algebra_path, out_path, graph_name = "g1", engine_name = "auto";
  std::string order_name = "degrevlex", relation_name = "isotopism", table_name, witness_path;
  int order = 3, field = 2, jobs = 0;
  bool count = false, csv = false, no_det = false, span = false, as_isomorphism = false;
  std::uint64_t seed = 2026;

  auto* inv = app.add_subcommand("invariants", "graph signature of one algebra");
  inv->add_option("--algebra", algebra_path, "algebra JSON file")->required();
  inv->add_option("--graph", graph_name, "g1 or g2")->check(CLI::IsMember({"g1", "g2"}));
  inv->add_flag("--span", span, "use the linear span of the derived set");

  auto add_pair_options = [&](CLI::App* cmd) {
    cmd->add_option("--a", a_path, "first algebra JSON file")->required();
    cmd->add_option("--b", b_path, "second algebra JSON file")->required();
    cmd->add_option("--engine", engine_name, "auto, oracle or groebner");
    cmd->add_flag("--count", count, "report the exact number of solutions");
    cmd->add_option("--out", out_path, "write the JSON report to a file");
  };
  auto* isot = app.add_subcommand("isotopic", "decide whether two algebras are isotopic");
  add_pair_options(isot);
  auto* isom = app.add_subcommand("isomorphic", "decide whether two algebras are isomorphic");
  add_pair_options(isom);

  auto* gb = app.add_subcommand("groebner", "reduced basis and standard-monomial count for a pair");
  gb->add_option("--a", a_path, "first algebra JSON file")->required();
  gb->add_option("--b", b_path, "second algebra JSON file")->required();
  gb->add_option("--relation", relation_name, "isotopism or isomorphism")
      ->check(CLI::IsMember({"isotopism", "isomorphism"}));
  gb->add_option("--order", order_name, "monomial order")->check(CLI::IsMember({"lex", "degrevlex"}));
  gb->add_flag("--no-det", no_det, "drop the determinant constraints (admits singular triples)");
  gb->add_option("--out", out_path, "write the JSON report to a file");

  auto* cpls = app.add_subcommand("classify-pls", "canonical partial-square class representatives");
  cpls->add_option("--order", order, "square order (1-3)")->required();
  cpls->add_option("--out", out_path, "write the JSON report to a file");

  auto* crings = app.add_subcommand("classify-rings", "classify partial quasigroup rings by isotopism");
  crings->add_option("--order", order, "square order (1-3)")->required();
  crings->add_option("--field", field, "prime field size")->required();
  crings->add_option("--engine", engine_name, "auto, oracle or groebner");
  crings->add_option("--jobs", jobs, "worker threads (default: all cores)");
  crings->add_option("--out", out_path, "write the JSON report to a file");

  auto* clie = app.add_subcommand("classify-lie", "classify the order-3 Lie algebra census");
  clie->add_option("--field", field, "prime field size")->required();
  clie->add_flag("--isomorphism", as_isomorphism, "classify by isomorphism instead of isotopism");
  clie->add_option("--engine", engine_name, "auto, oracle or groebner");
  clie->add_option("--jobs", jobs, "worker threads (default: all cores)");
  clie->add_option("--out", out_path, "write the JSON report to a file");

  auto* tab = app.add_subcommand("tables", "recompute a pinned invariant table and diff it");
  tab->add_option("name", table_name, "p2-invariants, p3-invariants, l3-g1 or l3-g2")->required();
  tab->add_flag("--csv", csv, "emit CSV instead of JSON");

  auto* self = app.add_subcommand("selftest", "run the end-to-end verification suite");
  self->add_option("--jobs", jobs, "worker threads (default: all cores)");
  self->add_option("--seed", seed, "seed for the randomized property suites");

  auto* verify = app.add_subcommand("verify", "re-check a witness produced by isotopic/isomorphic");
  verify->add_option("--a", a_path, "first algebra JSON file")->required();
  verify->add_option("--b", b_path, "second algebra JSON file")->required();
  verify->add_option("--witness", witness_path, "JSON file holding the witness record")->required();
  verify->add_flag("--isomorphism", as_isomorphism, "additionally require f = g = h");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) {
      Algebra A = load_algebra(algebra_path);
      GraphKind kind = graph_name == "g1" ? GraphKind::G1 : GraphKind::G2;
      json j = signature_to_json(signature(build_graph(A, kind, span).graph));
      j["graph"] = graph_name;
      emit(j, "");
      return kExitTrue;
    }
    if (*isot) return decide_command(a_path, b_path, Relation::isotopism, engine_name, count, out_path);
    if (*isom) return decide_command(a_path, b_path, Relation::isomorphism, engine_name, count, out_path);

    if (*gb) {
      Algebra A = load_algebra(a_path), B = load_algebra(b_path);
      MonomialOrder ord = order_name == "lex" ? MonomialOrder::lex : MonomialOrder::degrevlex;
      IdealSpec ideal = relation_name == "isotopism" ? isotopism_ideal(A, B, !no_det, ord)
                                                     : isomorphism_ideal(A, B, !no_det, ord);
      ClassifyOptions opts = budgeted_options();
      PrimeField F(ideal.p);
      json j;
      j["relation"] = relation_name;
      j["order"] = order_name;
      j["variables"] = ideal.var_names;
      try {
        auto basis = reduce_basis(buchberger(ideal.gens, F, ord, opts.groebner_budget), F, ord);
        json polys = json::array();
        for (const Polynomial& g : basis) polys.push_back(poly_to_string(g, ideal.var_names));
        j["reduced_basis"] = polys;
        j["standard_monomials"] = standard_monomial_count(basis, ideal.nvars, ideal.p);
        emit(j, out_path);
        return kExitTrue;
      } catch (const BudgetExceeded&) {
        j["verdict"] = "undecided";
        emit(j, out_path);
        return kExitUndecided;
      }
    }

    if (*cpls) {
      json j;
      j["order"] = order;
      json reps = json::array();
      for (const auto& L : pls_isotopism_classes(order)) reps.push_back(format_pls(L));
      j["class_count"] = reps.size();
      j["representatives"] = reps;
      emit(j, out_path);
      return kExitTrue;
    }

    if (*crings) {
      ClassifyOptions opts = budgeted_options();
      opts.engine = parse_engine(engine_name);
      if (jobs > 0) opts.jobs = jobs;
      else opts.jobs = int(std::max(1u, std::thread::hardware_concurrency()));
      RingClassification rc = classify_quasigroup_rings(order, field, opts);
      std::vector<std::string> labels;
      for (const auto& L : rc.squares) labels.push_back(format_pls(L));
      json j = report_to_json(rc.report, labels);
      j["field"] = field;
      j["merged_groups"] = rc.merged_groups;
      emit(j, out_path);
      return rc.report.exact ? kExitTrue : kExitUndecided;
    }

    if (*clie) {
      ClassifyOptions opts = budgeted_options();
      opts.engine = parse_engine(engine_name);
      if (jobs > 0) opts.jobs = jobs;
      else opts.jobs = int(std::max(1u, std::thread::hardware_concurrency()));
      Relation rel = as_isomorphism ? Relation::isomorphism : Relation::isotopism;
      LieClassification lc = classify_lie(field, rel, opts);
      std::vector<std::string> labels;
      for (const Algebra& A : lc.census) labels.push_back(algebra_key(A));
      json j = report_to_json(lc.report, labels);
      j["field"] = field;
      j["invariant_groups"] = lc.invariant_groups;
      emit(j, out_path);
      return lc.report.exact ? kExitTrue : kExitUndecided;
    }

    if (*tab) {
      TableReport rep = emit_table(table_name);
      if (csv) {
        std::cout << table_to_csv(rep);
      } else {
        json j;
        j["name"] = rep.name;
        j["header"] = rep.header;
        j["rows"] = rep.rows;
        j["matches_fixture"] = rep.matches();
        j["diffs"] = rep.diffs;
        emit(j, "");
      }
      return rep.matches() ? kExitTrue : kExitFalse;
    }

    if (*self) {
      bool all_pass = true;
      for (const CheckResult& r : run_selftest(jobs, seed)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << ": " << r.name << " (" << r.detail << ")" << std::endl;
        all_pass = all_pass && r.pass;
      }
      return all_pass ? kExitTrue : kExitFalse;
    }

    if (*verify) {
      Algebra A = load_algebra(a_path), B = load_algebra(b_path);
      std::ifstream in(witness_path);
      if (!in) throw std::runtime_error("cannot open witness file: " + witness_path);
      json j;
      in >> j;
      const json& w = j.contains("witness") ? j.at("witness") : j;
      IsotopismTriple t{mat_from_json(w.at("f"), A.p), mat_from_json(w.at("g"), A.p),
                        mat_from_json(w.at("h"), A.p)};
      bool ok = verify_isotopism(A, B, t) && (!as_isomorphism || t.is_isomorphism());
      std::cout << json{{"valid", ok}}.dump(2) << "\n";
      return ok ? kExitTrue : kExitFalse;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
