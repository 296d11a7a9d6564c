#include <catch2/catch_amalgamated.hpp>

#include "isoclass/algebra_io.hpp"
#include "isoclass/pipeline.hpp"
#include "test_util.hpp"

using namespace isoclass;

namespace {

std::vector<Algebra> p2_census(int p) {
  std::vector<Algebra> census;
  for (const auto& row : p2_table(p)) census.push_back(ring_of(parse_pls(row.pls), p));
  return census;
}

int class_of_pls(const ClassificationReport& rep, int p, const char* pls) {
  const auto& rows = p2_table(p);
  for (int i = 0; i < int(rows.size()); ++i)
    if (std::string(rows[i].pls) == pls) return rep.class_of(i);
  FAIL("unknown pls label " << pls);
  return -1;
}

void check_report_shape(const ClassificationReport& rep, const std::vector<Algebra>& census) {
  // classes partition the census
  std::vector<int> seen(census.size(), 0);
  for (const auto& cls : rep.classes) {
    REQUIRE_FALSE(cls.empty());
    CHECK(std::is_sorted(cls.begin(), cls.end()));
    for (int m : cls) {
      REQUIRE(m >= 0);
      REQUIRE(m < int(census.size()));
      ++seen[m];
    }
  }
  for (int count : seen) CHECK(count == 1);
  // representatives are lex-least members of their class
  REQUIRE(rep.representatives.size() == rep.classes.size());
  for (std::size_t c = 0; c < rep.classes.size(); ++c) {
    const auto& cls = rep.classes[c];
    CHECK(std::find(cls.begin(), cls.end(), rep.representatives[c]) != cls.end());
    for (int m : cls) CHECK(algebra_key(census[rep.representatives[c]]) <= algebra_key(census[m]));
  }
  // every merge witness re-verifies
  for (const MergeWitness& w : rep.witnesses) {
    CHECK(verify_isotopism(census[w.a], census[w.b], w.t));
    if (rep.relation == Relation::isomorphism) CHECK(w.t.is_isomorphism());
    CHECK(rep.class_of(w.a) == rep.class_of(w.b));
  }
}

}  // namespace

TEST_CASE("one-dimensional census splits into two isotopism classes") {
  Algebra zero(2, 1);
  Algebra idem(2, 1);
  idem.at(0, 0, 0) = 1;
  ClassificationReport rep = classify({zero, idem}, Relation::isotopism);
  REQUIRE(rep.classes.size() == 2);
  CHECK(rep.exact);
  CHECK(rep.pairs_total == 1);
  CHECK(rep.pruned_by_signature == 1);
  CHECK(rep.exact_calls == 0);
  check_report_shape(rep, {zero, idem});
}

TEST_CASE("order-2 quasigroup rings over F2: seven isotopism classes") {
  std::vector<Algebra> census = p2_census(2);
  ClassificationReport rep = classify(census, Relation::isotopism);
  REQUIRE(rep.exact);
  CHECK(rep.classes.size() == 7);
  // the only merge is the pair of completed squares
  CHECK(class_of_pls(rep, 2, "12 20") == class_of_pls(rep, 2, "12 21"));
  REQUIRE(rep.witnesses.size() == 1);
  check_report_shape(rep, census);

  SECTION("the same pair is even isomorphic over F2") {
    ClassificationReport iso = classify(census, Relation::isomorphism);
    REQUIRE(iso.exact);
    CHECK(iso.classes.size() == 7);
    CHECK(class_of_pls(iso, 2, "12 20") == class_of_pls(iso, 2, "12 21"));
    check_report_shape(iso, census);
  }
}

TEST_CASE("order-2 quasigroup rings over F3: seven classes, different merge") {
  std::vector<Algebra> census = p2_census(3);
  ClassificationReport rep = classify(census, Relation::isotopism);
  REQUIRE(rep.exact);
  CHECK(rep.classes.size() == 7);
  // the completed squares do NOT merge over F3
  CHECK(class_of_pls(rep, 3, "12 20") != class_of_pls(rep, 3, "12 21"));
  check_report_shape(rep, census);
}

TEST_CASE("classify_quasigroup_rings reports the merged square labels") {
  RingClassification rc = classify_quasigroup_rings(2, 2);
  CHECK(rc.squares.size() == 8);
  CHECK(rc.report.classes.size() == 7);
  REQUIRE(rc.merged_groups.size() == 1);
  // members are canonical square representatives; compare through canonical form
  auto canon = [](const char* s) { return format_pls(canonical_pls(parse_pls(s))); };
  std::vector<std::string> want = {canon("12 20"), canon("12 21")};
  std::sort(want.begin(), want.end());
  std::vector<std::string> got = rc.merged_groups[0];
  std::sort(got.begin(), got.end());
  CHECK(got == want);
}

TEST_CASE("order-3 Lie algebras over F2") {
  LieClassification iso = classify_lie(2, Relation::isomorphism);
  REQUIRE(iso.census.size() == 32);
  REQUIRE(iso.report.exact);
  CHECK(iso.report.classes.size() == 6);
  check_report_shape(iso.report, iso.census);

  LieClassification isot = classify_lie(2, Relation::isotopism);
  REQUIRE(isot.report.exact);
  CHECK(isot.report.classes.size() == 4);
  check_report_shape(isot.report, isot.census);

  // isotopism classes coarsen isomorphism classes
  for (const auto& cls : iso.report.classes) {
    int target = isot.report.class_of(cls[0]);
    for (int m : cls) CHECK(isot.report.class_of(m) == target);
  }
}

TEST_CASE("order-3 Lie algebras over F3 fall into four isotopism classes") {
  LieClassification lc = classify_lie(3, Relation::isotopism, {.jobs = 4});
  REQUIRE(lc.census.size() == 123);
  CHECK(lc.invariant_groups.size() == 4);
  REQUIRE(lc.report.exact);
  CHECK(lc.report.classes.size() == 4);
  // the invariant partition is already the exact classification here
  std::vector<std::vector<int>> groups = lc.invariant_groups;
  std::sort(groups.begin(), groups.end());
  CHECK(groups == lc.report.classes);
}

TEST_CASE("reports are identical across worker counts") {
  std::vector<Algebra> census = p2_census(2);
  ClassificationReport a = classify(census, Relation::isotopism, {.jobs = 1});
  ClassificationReport b = classify(census, Relation::isotopism, {.jobs = 4});
  CHECK(a.classes == b.classes);
  CHECK(a.representatives == b.representatives);
  CHECK(a.pruned_by_signature == b.pruned_by_signature);
  CHECK(a.split_by_certificate == b.split_by_certificate);
  CHECK(a.exact_calls == b.exact_calls);
  CHECK(a.undecided_pairs == b.undecided_pairs);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    CHECK(a.witnesses[i].a == b.witnesses[i].a);
    CHECK(a.witnesses[i].b == b.witnesses[i].b);
  }
}

TEST_CASE("invariant filtering reduces exact work without changing the answer") {
  std::vector<Algebra> census = p2_census(2);
  ClassificationReport filtered = classify(census, Relation::isotopism);
  ClassificationReport baseline = classify(census, Relation::isotopism, {.use_invariant_filter = false});
  CHECK(filtered.classes == baseline.classes);
  CHECK(baseline.exact_calls == baseline.pairs_total);
  CHECK(filtered.exact_calls < baseline.exact_calls);
  CHECK(filtered.pruned_by_signature + filtered.split_by_certificate + filtered.exact_calls ==
        filtered.pairs_total);
}

TEST_CASE("engines agree on the classification") {
  std::vector<Algebra> census = p2_census(2);
  ClassificationReport by_oracle = classify(census, Relation::isotopism, {.engine = Engine::oracle});
  ClassificationReport by_groebner = classify(census, Relation::isotopism, {.engine = Engine::groebner});
  CHECK(by_oracle.classes == by_groebner.classes);
}

TEST_CASE("an exhausted budget is reported as undecided, never as an answer") {
  std::vector<Algebra> census = p2_census(2);
  ClassificationReport rep =
      classify(census, Relation::isomorphism, {.engine = Engine::groebner, .groebner_budget = 1});
  CHECK_FALSE(rep.exact);
  CHECK(rep.undecided_pairs > 0);
  CHECK(rep.witnesses.empty());  // nothing may merge without a verified witness
  CHECK(rep.classes.size() == 8);
}

TEST_CASE("classify rejects mixed censuses") {
  CHECK_THROWS_AS(classify({Algebra(2, 1), Algebra(3, 1)}, Relation::isotopism), std::invalid_argument);
  CHECK_THROWS_AS(classify({Algebra(2, 1), Algebra(2, 2)}, Relation::isotopism), std::invalid_argument);
}

TEST_CASE("pinned invariant tables reproduce from scratch") {
  for (const std::string& name : table_names()) {
    TableReport rep = emit_table(name);
    INFO(name);
    for (const std::string& d : rep.diffs) INFO(d);
    CHECK(rep.matches());
    CHECK_FALSE(rep.rows.empty());
    std::string csv = table_to_csv(rep);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == long(rep.rows.size()) + 1);
  }
  CHECK(emit_table("p3-invariants").rows.size() == 80);
  CHECK_THROWS_AS(emit_table("bogus"), std::invalid_argument);
}

TEST_CASE("report serialization") {
  std::vector<Algebra> census = p2_census(2);
  ClassificationReport rep = classify(census, Relation::isotopism);
  std::vector<std::string> labels;
  for (const auto& row : p2_table(2)) labels.push_back(row.pls);
  nlohmann::json j = report_to_json(rep, labels);
  CHECK(j["relation"] == "isotopism");
  CHECK(j["census_size"] == 8);
  CHECK(j["class_count"] == 7);
  CHECK(j["exact"] == true);
  CHECK(j["classes"].size() == 7);
  CHECK(j["stats"]["pairs_total"] == 28);
  // every member label appears exactly once across classes
  std::vector<std::string> seen;
  for (const auto& cls : j["classes"])
    for (const auto& name : cls["member_labels"]) seen.push_back(name.get<std::string>());
  std::sort(seen.begin(), seen.end());
  std::vector<std::string> want = labels;
  std::sort(want.begin(), want.end());
  CHECK(seen == want);
}

TEST_CASE("algebra JSON round trip") {
  TestRng rng(77);
  for (int t = 0; t < 20; ++t) {
    Algebra A = random_algebra(rng, t % 2 ? 2 : 3, 1 + rng.below(3));
    CHECK(algebra_from_json(algebra_to_json(A)) == A);
  }
  CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"p", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"p", 2}, {"dim", 0}}), std::invalid_argument);
  nlohmann::json bad = {{"p", 2}, {"dim", 1}, {"products", {{1, 1, 2, 1}}}};
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
}
