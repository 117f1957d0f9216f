#include <doctest.h>

#include <cstdlib>
#include <string>

#include "leinster/leinster.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  leinster_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("number theory through the C API") {
  char* out = nullptr;
  REQUIRE(leinster_divisor_sum("28", &out) == LEINSTER_OK);
  CHECK(take(out) == "56");

  unsigned flags = 0;
  REQUIRE(leinster_classify_number("8", &flags) == LEINSTER_OK);
  CHECK((flags & LEINSTER_NUMBER_DEFICIENT));
  CHECK((flags & LEINSTER_NUMBER_ALMOST_PERFECT));
  CHECK_FALSE((flags & LEINSTER_NUMBER_PERFECT));

  int prime = 0;
  REQUIRE(leinster_is_prime("137438691329", &prime) == LEINSTER_OK);
  CHECK(prime == 1);
  REQUIRE(leinster_is_prime("2047", &prime) == LEINSTER_OK);
  CHECK(prime == 0);

  REQUIRE(leinster_mult_order("3", "7", &out) == LEINSTER_OK);
  CHECK(take(out) == "6");
  CHECK(leinster_mult_order("2", "6", &out) == LEINSTER_ERR_DOMAIN);
  CHECK(std::string(leinster_last_error()).size() > 0);

  CHECK(leinster_divisor_sum("0", &out) == LEINSTER_ERR_DOMAIN);
  CHECK(leinster_divisor_sum("12x", &out) == LEINSTER_ERR_USAGE);
  CHECK(leinster_divisor_sum(nullptr, &out) == LEINSTER_ERR_USAGE);
}

TEST_CASE("groups through the C API") {
  leinster_group* g = nullptr;
  REQUIRE(leinster_group_zm("7", "6", "3", &g) == LEINSTER_OK);
  CHECK(leinster_group_order(g) == 42);
  char* d = nullptr;
  REQUIRE(leinster_group_divisor_sum(g, &d) == LEINSTER_OK);
  CHECK(take(d) == "85");
  size_t subs = 0, normal = 0;
  REQUIRE(leinster_group_subgroup_counts(g, &subs, &normal) == LEINSTER_OK);
  CHECK(normal == 5);
  int nil = 1;
  REQUIRE(leinster_group_is_nilpotent(g, &nil) == LEINSTER_OK);
  CHECK(nil == 0);
  leinster_group_free(g);

  const size_t six[] = {6};
  REQUIRE(leinster_group_dicyclic(six, 1, 3, &g) == LEINSTER_OK);
  REQUIRE(leinster_group_divisor_sum(g, &d) == LEINSTER_OK);
  CHECK(take(d) == "24");

  leinster_group* c5 = nullptr;
  leinster_group* prod = nullptr;
  REQUIRE(leinster_group_cyclic(5, &c5) == LEINSTER_OK);
  REQUIRE(leinster_group_direct_product(g, c5, &prod) == LEINSTER_OK);
  REQUIRE(leinster_group_divisor_sum(prod, &d) == LEINSTER_OK);
  CHECK(take(d) == "144");
  leinster_group_free(prod);
  leinster_group_free(c5);
  leinster_group_free(g);

  const size_t two_two[] = {2, 2};
  REQUIRE(leinster_group_dihedral(two_two, 2, &g) == LEINSTER_OK);
  REQUIRE(leinster_group_divisor_sum(g, &d) == LEINSTER_OK);
  CHECK(take(d) == "51");
  leinster_group_free(g);

  REQUIRE(leinster_group_affine("7", &g) == LEINSTER_OK);
  REQUIRE(leinster_group_divisor_sum(g, &d) == LEINSTER_OK);
  CHECK(take(d) == "85");
  leinster_group_free(g);

  CHECK(leinster_group_zm("6", "2", "5", &g) == LEINSTER_ERR_DOMAIN);
  CHECK(leinster_group_cyclic(100000, &g) == LEINSTER_ERR_RESOURCE);
  const size_t two[] = {2};
  CHECK(leinster_group_dicyclic(two, 1, 1, &g) == LEINSTER_ERR_DOMAIN);
  CHECK(leinster_group_affine("4", &g) == LEINSTER_ERR_DOMAIN);
  leinster_group_free(nullptr);
  CHECK(leinster_order_cap() == 512);
}

TEST_CASE("classification records through the C API") {
  const char* params[] = {"7", "6", "3"};
  leinster_record* r = nullptr;
  REQUIRE(leinster_classify("zm", params, 3, 1, &r) == LEINSTER_OK);
  CHECK(std::string(leinster_record_class(r)) == "QuasiLeinster");
  char* s = nullptr;
  REQUIRE(leinster_record_divisor_sum(r, &s) == LEINSTER_OK);
  CHECK(take(s) == "85");
  REQUIRE(leinster_record_order(r, &s) == LEINSTER_OK);
  CHECK(take(s) == "42");
  REQUIRE(leinster_record_note_count(r) == 1);
  CHECK(std::string(leinster_record_note(r, 0)) == "oracle-verified");
  CHECK(leinster_record_note(r, 1) == nullptr);
  REQUIRE(leinster_record_json(r, &s) == LEINSTER_OK);
  CHECK(take(s) ==
        R"({"family":"zm","params":[7,6,3],"order":42,"D":85,"class":"QuasiLeinster","notes":["oracle-verified"]})");
  REQUIRE(leinster_record_table(r, &s) == LEINSTER_OK);
  CHECK(take(s).find("QuasiLeinster") != std::string::npos);
  leinster_record_free(r);

  const char* bad[] = {"7", "6", "1"};
  CHECK(leinster_classify("zm", bad, 3, 0, &r) == LEINSTER_ERR_USAGE);
  CHECK(std::string(leinster_last_error()).find("gcd(m,r-1) != 1") != std::string::npos);
  CHECK(leinster_classify("nosuch", bad, 1, 0, &r) == LEINSTER_ERR_USAGE);
}

TEST_CASE("sweeps through the C API") {
  leinster_sweep_config* cfg = nullptr;
  REQUIRE(leinster_sweep_config_new("zm", &cfg) == LEINSTER_OK);
  REQUIRE(leinster_sweep_config_set_bound(cfg, "m", nullptr, "30") == LEINSTER_OK);
  REQUIRE(leinster_sweep_config_set_bound(cfg, "r", "3", "3") == LEINSTER_OK);
  REQUIRE(leinster_sweep_config_set_paper_mode(cfg, 1) == LEINSTER_OK);
  REQUIRE(leinster_sweep_config_add_class(cfg, "quasi") == LEINSTER_OK);
  REQUIRE(leinster_sweep_config_set_workers(cfg, 3) == LEINSTER_OK);
  CHECK(leinster_sweep_config_add_class(cfg, "perfect") == LEINSTER_ERR_USAGE);
  CHECK(leinster_sweep_config_set_workers(cfg, 0) == LEINSTER_ERR_USAGE);
  CHECK(leinster_sweep_config_set_bound(cfg, "m", nullptr, "-3") == LEINSTER_ERR_USAGE);

  leinster_sweep* sweep = nullptr;
  REQUIRE(leinster_sweep_run(cfg, &sweep) == LEINSTER_OK);
  REQUIRE(leinster_sweep_size(sweep) == 2);
  char* s = nullptr;
  REQUIRE(leinster_record_json(leinster_sweep_record(sweep, 1), &s) == LEINSTER_OK);
  CHECK(take(s).find("\"params\":[29,28,3]") != std::string::npos);
  CHECK(leinster_sweep_record(sweep, 2) == nullptr);
  CHECK(leinster_sweep_warning_count(sweep) == 0);
  REQUIRE(leinster_sweep_table(sweep, &s) == LEINSTER_OK);
  CHECK(take(s).find("29") != std::string::npos);
  leinster_sweep_free(sweep);

  REQUIRE(leinster_sweep_config_set_budget(cfg, "5") == LEINSTER_OK);
  CHECK(leinster_sweep_run(cfg, &sweep) == LEINSTER_ERR_RESOURCE);
  leinster_sweep_config_free(cfg);

  CHECK(leinster_sweep_config_new("nosuch", &cfg) == LEINSTER_ERR_USAGE);
}

TEST_CASE("reports through the C API") {
  char* text = nullptr;
  unsigned idx[8] = {};
  size_t n = 0;
  REQUIRE(leinster_perfect_plus_one(8, &text, idx, 8, &n) == LEINSTER_OK);
  CHECK(take(text).find("solutions: {1, 2, 5, 7}") != std::string::npos);
  REQUIRE(n == 4);
  CHECK(idx[0] == 1);
  CHECK(idx[1] == 2);
  CHECK(idx[2] == 5);
  CHECK(idx[3] == 7);
  REQUIRE(leinster_perfect_plus_one(2, &text, nullptr, 0, &n) == LEINSTER_OK);
  leinster_string_free(text);
  CHECK(leinster_perfect_plus_one(13, &text, nullptr, 0, &n) == LEINSTER_ERR_USAGE);

  REQUIRE(leinster_verify(12, &text) == LEINSTER_OK);
  CHECK(take(text).find("all invariants passed") != std::string::npos);
  CHECK(leinster_verify(100000, &text) == LEINSTER_ERR_RESOURCE);
}
