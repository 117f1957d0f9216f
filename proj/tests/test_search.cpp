#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "leinster/errors.hpp"
#include "leinster/group.hpp"
#include "leinster/search.hpp"
#include "leinster/verify.hpp"

using namespace leinster;
using namespace leinster::search;
using families::GroupKind;

namespace {

std::vector<std::vector<Natural>> params_of(const SweepResult& r) {
  std::vector<std::vector<Natural>> out;
  for (const auto& rec : r.records) out.push_back(rec.params);
  return out;
}

std::vector<Natural> tuple(std::initializer_list<unsigned> xs) { return {xs.begin(), xs.end()}; }

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("leinster_test_" + name);
  std::filesystem::remove(p);
  return p;
}

SweepConfig zm_quasi_config() {
  SweepConfig cfg;
  cfg.family = Family::zm;
  cfg.bounds["m"].hi = Natural(20);
  cfg.bounds["n"].hi = Natural(10);
  cfg.class_filter = {GroupKind::quasi_leinster};
  return cfg;
}

}  // namespace

TEST_CASE("family names and parameters") {
  CHECK(parse_family("gen-dihedral") == Family::gen_dihedral);
  CHECK(to_string(Family::dicyclic) == "dicyclic");
  CHECK_FALSE(parse_family("quaternion"));
  CHECK(sweep_parameters(Family::zm) == std::vector<std::string>{"m", "n", "r"});
  CHECK(sweep_parameters(Family::pq) == std::vector<std::string>{"p", "q"});
}

TEST_CASE("record line format") {
  SearchRecord r{Family::zm, tuple({7, 6, 3}), 42, 85, GroupKind::quasi_leinster, {"oracle-verified"}};
  CHECK(to_json_line(r) ==
        R"({"family":"zm","params":[7,6,3],"order":42,"D":85,"class":"QuasiLeinster","notes":["oracle-verified"]})");
  CHECK(parse_json_line(to_json_line(r)) == r);

  CHECK_FALSE(parse_json_line(""));
  CHECK_FALSE(parse_json_line("{"));
  CHECK_FALSE(parse_json_line(R"({"family":"zm"})"));
  CHECK_FALSE(parse_json_line(R"({"family":"zm","params":[7,6,3],"order":42,"D":-85,"class":"QuasiLeinster","notes":[]})"));
  CHECK_FALSE(parse_json_line(R"({"family":"nope","params":[1],"order":1,"D":1,"class":"AlmostLeinster","notes":[]})"));
}

TEST_CASE("record lines round-trip with big integers") {
  std::mt19937_64 rng(41);
  const std::vector<std::string> kinds = {"Leinster", "QuasiLeinster", "AlmostLeinster", "AbundantOther",
                                          "DeficientOther"};
  for (int i = 0; i < 500; ++i) {
    SearchRecord r;
    r.family = static_cast<Family>(rng() % 7);
    const auto arity = 1 + rng() % 3;
    for (std::size_t k = 0; k < arity; ++k) r.params.push_back(pow(Natural(rng()), 1 + rng() % 4));
    r.order = pow(Natural(rng() | 1), 1 + rng() % 5);
    r.divisor_sum = r.order * 2 + Natural(rng() % 1000);
    r.kind = *families::parse_group_kind(kinds[rng() % kinds.size()]);
    if (rng() % 2) r.notes.emplace_back(notes::kEdge);
    if (rng() % 2) r.notes.emplace_back("quote \" and backslash \\");
    const auto line = to_json_line(r);
    REQUIRE(line.find('\n') == std::string::npos);
    REQUIRE(parse_json_line(line) == r);
  }
}

TEST_CASE("table rendering") {
  const SearchRecord r{Family::dicyclic, tuple({3}), 12, 24, GroupKind::leinster, {}};
  const std::vector<SearchRecord> rows{r};
  const auto table = render_table(rows);
  CHECK(table.find("family") == 0);
  CHECK(table.find("Leinster") != std::string::npos);
}

TEST_CASE("classify examples") {
  const auto zm = run_classify(Family::zm, tuple({7, 6, 3}), true);
  CHECK(zm.order == Natural(42));
  CHECK(zm.divisor_sum == Natural(85));
  CHECK(zm.kind == GroupKind::quasi_leinster);
  CHECK(zm.has_note(notes::kOracleVerified));

  const auto aff = run_classify(Family::affine, tuple({7}), true);
  CHECK(aff.order == Natural(42));
  CHECK(aff.divisor_sum == Natural(85));
  CHECK(aff.kind == GroupKind::quasi_leinster);
  CHECK(aff.has_note(notes::kPaperLabelDiffers));
  CHECK(aff.has_note(notes::kOracleVerified));

  const auto dic = run_classify(Family::dicyclic, tuple({3}), true);
  CHECK(dic.order == Natural(12));
  CHECK(dic.divisor_sum == Natural(24));
  CHECK(dic.kind == GroupKind::leinster);

  CHECK(run_classify(Family::affine, tuple({4}), true).has_note(notes::kFormulaOnly));
  CHECK(run_classify(Family::dihedral, tuple({1}), false).has_note(notes::kEdge));
  CHECK(run_classify(Family::cyclic, tuple({1}), false).has_note(notes::kEdge));
  CHECK_FALSE(run_classify(Family::affine, tuple({2}), false).has_note(notes::kEdge));
  CHECK(run_classify(Family::pq, tuple({3, 7}), true).divisor_sum == Natural(29));
  CHECK(run_classify(Family::gen_dihedral, tuple({2, 2}), true).divisor_sum == Natural(51));
}

TEST_CASE("classify errors") {
  CHECK_THROWS_WITH_AS(run_classify(Family::zm, tuple({7, 6, 1}), false), doctest::Contains("gcd(m,r-1) != 1"),
                       UsageError);
  CHECK_THROWS_AS(run_classify(Family::zm, tuple({6, 2, 5}), false), UsageError);
  CHECK_THROWS_AS(run_classify(Family::zm, tuple({7, 6}), false), UsageError);
  CHECK_THROWS_AS(run_classify(Family::affine, tuple({6}), false), UsageError);
  CHECK_THROWS_AS(run_classify(Family::dicyclic, tuple({1}), false), UsageError);
  CHECK_THROWS_AS(run_classify(Family::pq, tuple({3, 5}), false), UsageError);
}

TEST_CASE("record class matches classify_group") {
  for (unsigned q = 2; q <= 60; ++q) {
    for (auto f : {Family::cyclic, Family::dihedral, Family::affine}) {
      try {
        const auto r = evaluate(f, tuple({q}));
        CHECK(r.kind == families::classify_group(r.divisor_sum, r.order).kind);
      } catch (const UsageError&) {
        CHECK(f == Family::affine);
      }
    }
  }
}

TEST_CASE("zm sweeps") {
  const auto general = run_sweep(zm_quasi_config());
  const std::vector<std::vector<Natural>> frozen = {tuple({7, 6, 3}),  tuple({7, 6, 5}),  tuple({13, 6, 4}),
                                                    tuple({13, 6, 10}), tuple({19, 6, 8}), tuple({19, 6, 12})};
  CHECK(params_of(general) == frozen);
  for (const auto& rec : general.records) {
    const auto t = families::zm_validate(rec.params[0], rec.params[1], rec.params[2]);
    CHECK(oracle::group_divisor_sum(oracle::build_zm(*t)) == rec.divisor_sum);
    CHECK(rec.kind == families::classify_group(rec.divisor_sum, rec.order).kind);
  }

  auto paper = zm_quasi_config();
  paper.paper_mode = true;
  paper.bounds.erase("n");
  CHECK(params_of(run_sweep(paper)) == std::vector<std::vector<Natural>>{tuple({7, 6, 3}), tuple({7, 6, 5})});

  SweepConfig r3;
  r3.family = Family::zm;
  r3.paper_mode = true;
  r3.bounds["m"].hi = Natural(30);
  r3.bounds["r"] = {Natural(3), Natural(3)};
  r3.class_filter = {GroupKind::quasi_leinster};
  CHECK(params_of(run_sweep(r3)) == std::vector<std::vector<Natural>>{tuple({7, 6, 3}), tuple({29, 28, 3})});

  auto dedupe = zm_quasi_config();
  dedupe.dedupe = true;
  CHECK(params_of(run_sweep(dedupe)) ==
        std::vector<std::vector<Natural>>{tuple({7, 6, 3}), tuple({13, 6, 4}), tuple({19, 6, 8})});
}

TEST_CASE("dicyclic and dihedral sweeps") {
  SweepConfig dic;
  dic.family = Family::dicyclic;
  dic.bounds["n"] = {Natural(2), Natural(100)};
  dic.class_filter = {GroupKind::leinster, GroupKind::quasi_leinster, GroupKind::almost_leinster};
  const auto found = run_sweep(dic);
  REQUIRE(found.records.size() == 1);
  CHECK(found.records[0].params == tuple({3}));
  CHECK(found.records[0].kind == GroupKind::leinster);

  SweepConfig dih;
  dih.family = Family::dihedral;
  dih.bounds["n"] = {Natural(2), Natural(1000)};
  dih.class_filter = {GroupKind::leinster, GroupKind::quasi_leinster, GroupKind::almost_leinster};
  CHECK(run_sweep(dih).records.empty());
}

TEST_CASE("edges are excluded unless asked for") {
  SweepConfig cfg;
  cfg.family = Family::dihedral;
  cfg.bounds["n"].hi = Natural(3);
  CHECK(params_of(run_sweep(cfg)) == std::vector<std::vector<Natural>>{tuple({2}), tuple({3})});
  cfg.include_edges = true;
  CHECK(run_sweep(cfg).records.front().params == tuple({1}));
}

TEST_CASE("sweep output does not depend on worker count") {
  auto cfg = zm_quasi_config();
  cfg.class_filter.clear();
  cfg.bounds["m"].hi = Natural(40);
  const auto one = run_sweep(cfg);
  for (unsigned w : {2u, 3u, 8u, 64u}) {
    cfg.workers = w;
    const auto many = run_sweep(cfg);
    REQUIRE(many.records == one.records);
  }
}

TEST_CASE("sweep budget and bounds") {
  SweepConfig cfg;
  cfg.family = Family::dihedral;
  cfg.bounds["n"].hi = Natural(1000);
  cfg.budget = 999;
  CHECK_THROWS_AS(run_sweep(cfg), ResourceError);
  cfg.budget = 1000;
  CHECK_NOTHROW(run_sweep(cfg));

  SweepConfig big;
  big.family = Family::zm;
  big.bounds["m"].hi = Natural::parse("137438691329");
  big.bounds["n"].hi = Natural(10);
  CHECK_THROWS_AS(run_sweep(big), ResourceError);

  SweepConfig missing;
  missing.family = Family::zm;
  CHECK_THROWS_AS(run_sweep(missing), UsageError);

  SweepConfig wrong_name;
  wrong_name.family = Family::dihedral;
  wrong_name.bounds["q"].hi = Natural(5);
  CHECK_THROWS_AS(run_sweep(wrong_name), UsageError);

  SweepConfig no_workers;
  no_workers.family = Family::dihedral;
  no_workers.bounds["n"].hi = Natural(5);
  no_workers.workers = 0;
  CHECK_THROWS_AS(run_sweep(no_workers), UsageError);
}

TEST_CASE("cache resume reproduces a cold sweep") {
  const auto path = temp_file("resume.jsonl");
  auto cfg = zm_quasi_config();
  cfg.class_filter.clear();
  const auto cold = run_sweep(cfg);

  cfg.cache = path;
  cfg.bounds["m"].hi = Natural(12);
  const auto partial = run_sweep(cfg);
  CHECK(partial.from_cache == 0);
  CHECK(partial.evaluated > 0);

  cfg.bounds["m"].hi = Natural(20);
  cfg.workers = 4;
  const auto resumed = run_sweep(cfg);
  CHECK(resumed.records == cold.records);
  CHECK(resumed.from_cache == partial.evaluated);
  CHECK(resumed.warnings.empty());

  const auto again = run_sweep(cfg);
  CHECK(again.evaluated == 0);
  CHECK(again.records == cold.records);
  std::filesystem::remove(path);
}

TEST_CASE("corrupt cache lines are skipped with a warning") {
  const auto path = temp_file("corrupt.jsonl");
  {
    std::ofstream out(path);
    out << "not json at all\n";
    out << R"({"family":"dihedral","params":[3],"order":6,"D":10,"class":"AbundantOther","notes":[]})" << '\n';
    out << R"({"family":"dihedral","params":[4],"order":8,"D":23,"class":"AbundantOther","notes":[]})" << '\n';
    out << R"({"family":"dihedral","params":[5],"order)" << '\n';
  }
  SweepConfig cfg;
  cfg.family = Family::dihedral;
  cfg.bounds["n"].hi = Natural(6);
  cfg.cache = path;
  const auto r = run_sweep(cfg);
  CHECK(r.warnings.size() >= 3);  // two unparsable lines, one record inconsistent with its D and order
  CHECK(r.from_cache == 1);
  SweepConfig cold = cfg;
  cold.cache.reset();
  CHECK(r.records == run_sweep(cold).records);
  std::filesystem::remove(path);
}

TEST_CASE("cache write failure is reported and the sweep continues") {
  SweepConfig cfg;
  cfg.family = Family::dihedral;
  cfg.bounds["n"].hi = Natural(5);
  cfg.cache = std::filesystem::path("/nonexistent-dir/cache.jsonl");
  const auto r = run_sweep(cfg);
  CHECK(r.records.size() == 4);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("perfect-plus-one report") {
  const auto r = run_perfect_plus_one(8);
  CHECK(r.solution_indices == std::vector<unsigned>{1, 2, 5, 7});
  CHECK(r.rows.size() == 8);
  CHECK(r.text.find("solutions: {1, 2, 5, 7}") != std::string::npos);
  const auto two = run_perfect_plus_one(2);
  CHECK(two.solution_indices == std::vector<unsigned>{1, 2});
  CHECK(two.rows[1].perfect + 1 == Natural(29));
  CHECK_THROWS_AS(run_perfect_plus_one(13), UsageError);
}

TEST_CASE("verify reports") {
  const auto r12 = run_verify(12);
  CHECK(r12.all_passed());
  CHECK(r12.text().find("Dic12") != std::string::npos);

  const auto r42 = run_verify(42);
  CHECK(r42.all_passed());
  CHECK(r42.text().find("ZM(7,6,3)") != std::string::npos);

  const auto r100 = run_verify(100);
  CHECK(r100.all_passed());
  CHECK(r100.results.size() >= 6);
  for (const auto& res : r100.results) {
    INFO(res.name);
    CHECK(res.checked > 0);
  }

  CHECK_THROWS_AS(run_verify(0), UsageError);
  CHECK_THROWS_AS(run_verify(oracle::kDefaultOrderCap + 1), ResourceError);
}
