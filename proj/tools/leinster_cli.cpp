// Command-line front end. Talks to the library only through leinster.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leinster/leinster.h"

namespace {

struct FreeString {
  void operator()(char* s) const { leinster_string_free(s); }
};
using OwnedString = std::unique_ptr<char, FreeString>;

struct FreeRecord {
  void operator()(leinster_record* r) const { leinster_record_free(r); }
};
struct FreeConfig {
  void operator()(leinster_sweep_config* c) const { leinster_sweep_config_free(c); }
};
struct FreeSweep {
  void operator()(leinster_sweep* s) const { leinster_sweep_free(s); }
};

int report(leinster_status status) {
  if (status != LEINSTER_OK) std::cerr << "error: " << leinster_last_error() << '\n';
  return static_cast<int>(status);
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

int run_classify(const std::string& family, const std::vector<std::string>& raw_params, bool verify, bool table) {
  const auto params = split_commas(raw_params);
  std::vector<const char*> ptrs;
  for (const auto& p : params) ptrs.push_back(p.c_str());

  leinster_record* raw = nullptr;
  if (auto st = leinster_classify(family.c_str(), ptrs.data(), ptrs.size(), verify ? 1 : 0, &raw); st != LEINSTER_OK) {
    return report(st);
  }
  std::unique_ptr<leinster_record, FreeRecord> rec(raw);
  char* text = nullptr;
  const auto st = table ? leinster_record_table(rec.get(), &text) : leinster_record_json(rec.get(), &text);
  if (st != LEINSTER_OK) return report(st);
  OwnedString owned(text);
  std::cout << owned.get() << (table ? "" : "\n");
  return 0;
}

struct SearchOptions {
  std::string family;
  std::optional<std::string> min_m, max_m, min_n, max_n, min_r, max_r, min_p, max_p, min_q, max_q;
  bool paper_mode = false;
  std::vector<std::string> classes;
  bool dedupe = false;
  bool include_edges = false;
  unsigned workers = 1;
  std::optional<std::string> cache;
  std::optional<std::string> budget;
  bool table = false;
};

int run_search(const SearchOptions& o) {
  leinster_sweep_config* raw_cfg = nullptr;
  if (auto st = leinster_sweep_config_new(o.family.c_str(), &raw_cfg); st != LEINSTER_OK) return report(st);
  std::unique_ptr<leinster_sweep_config, FreeConfig> cfg(raw_cfg);

  const struct {
    const char* name;
    const std::optional<std::string>& lo;
    const std::optional<std::string>& hi;
  } bounds[] = {{"m", o.min_m, o.max_m}, {"n", o.min_n, o.max_n}, {"r", o.min_r, o.max_r},
                {"p", o.min_p, o.max_p}, {"q", o.min_q, o.max_q}};
  for (const auto& b : bounds) {
    if (!b.lo && !b.hi) continue;
    const auto st = leinster_sweep_config_set_bound(cfg.get(), b.name, b.lo ? b.lo->c_str() : nullptr,
                                                    b.hi ? b.hi->c_str() : nullptr);
    if (st != LEINSTER_OK) return report(st);
  }
  for (const auto& k : split_commas(o.classes)) {
    if (auto st = leinster_sweep_config_add_class(cfg.get(), k.c_str()); st != LEINSTER_OK) return report(st);
  }
  leinster_sweep_config_set_paper_mode(cfg.get(), o.paper_mode);
  leinster_sweep_config_set_dedupe(cfg.get(), o.dedupe);
  leinster_sweep_config_set_include_edges(cfg.get(), o.include_edges);
  if (auto st = leinster_sweep_config_set_workers(cfg.get(), o.workers); st != LEINSTER_OK) return report(st);
  if (o.cache) leinster_sweep_config_set_cache(cfg.get(), o.cache->c_str());
  if (o.budget) {
    if (auto st = leinster_sweep_config_set_budget(cfg.get(), o.budget->c_str()); st != LEINSTER_OK) return report(st);
  }

  leinster_sweep* raw_sweep = nullptr;
  if (auto st = leinster_sweep_run(cfg.get(), &raw_sweep); st != LEINSTER_OK) return report(st);
  std::unique_ptr<leinster_sweep, FreeSweep> sweep(raw_sweep);

  for (size_t i = 0; i < leinster_sweep_warning_count(sweep.get()); ++i) {
    std::cerr << "warning: " << leinster_sweep_warning(sweep.get(), i) << '\n';
  }
  if (o.table) {
    char* text = nullptr;
    if (auto st = leinster_sweep_table(sweep.get(), &text); st != LEINSTER_OK) return report(st);
    OwnedString owned(text);
    std::cout << owned.get();
    return 0;
  }
  for (size_t i = 0; i < leinster_sweep_size(sweep.get()); ++i) {
    char* line = nullptr;
    if (auto st = leinster_record_json(leinster_sweep_record(sweep.get(), i), &line); st != LEINSTER_OK) {
      return report(st);
    }
    OwnedString owned(line);
    std::cout << owned.get() << '\n';
  }
  return 0;
}

int run_perfect_plus_one(unsigned count) {
  char* text = nullptr;
  const auto st = leinster_perfect_plus_one(count, &text, nullptr, 0, nullptr);
  if (st != LEINSTER_OK) return report(st);
  OwnedString owned(text);
  std::cout << owned.get();
  return 0;
}

int run_verify(std::size_t max_order) {
  char* text = nullptr;
  const auto st = leinster_verify(max_order, &text);
  if (text) {
    OwnedString owned(text);
    std::cout << owned.get();
  }
  return report(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal-subgroup divisor sums and Leinster-type classification of finite group families"};
  app.require_subcommand(1);
  app.footer("Environment: LEINSTER_ORDER_CAP overrides the brute-force oracle order cap (default 512).");

  std::string family;
  std::vector<std::string> params;
  bool verify = false;
  bool table = false;
  auto* classify = app.add_subcommand("classify", "Classify one group instance");
  classify->add_option("--family", family, "cyclic|zm|affine|dihedral|gen-dihedral|dicyclic|pq")->required();
  classify->add_option("--params", params, "Comma-separated decimal parameters")->required()->delimiter(',');
  classify->add_flag("--verify", verify, "Cross-check D against the brute-force oracle when the order fits");
  classify->add_flag("--table", table, "Aligned columns instead of JSON");

  SearchOptions so;
  auto* search = app.add_subcommand("search", "Exhaustive parameter sweep over one family");
  search->add_option("family", so.family, "cyclic|zm|affine|dihedral|gen-dihedral|dicyclic|pq")->required();
  search->add_option("--min-m", so.min_m);
  search->add_option("--max-m", so.max_m);
  search->add_option("--min-n", so.min_n);
  search->add_option("--max-n", so.max_n, "Upper bound on n (|A| for gen-dihedral)");
  search->add_option("--min-r", so.min_r);
  search->add_option("--max-r", so.max_r);
  search->add_option("--min-p", so.min_p);
  search->add_option("--max-p", so.max_p);
  search->add_option("--min-q", so.min_q);
  search->add_option("--max-q", so.max_q);
  search->add_flag("--paper-mode", so.paper_mode, "zm only: m prime and n = m - 1");
  search->add_option("--class", so.classes, "Keep only these classes (leinster, quasi, almost, abundant, deficient)");
  search->add_flag("--dedupe", so.dedupe, "zm only: one r per isomorphism orbit r -> r^t");
  search->add_flag("--include-edges", so.include_edges, "Keep trivial-group edge records");
  search->add_option("--workers", so.workers, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--cache", so.cache, "Append-only resume cache file");
  search->add_option("--budget", so.budget, "Maximum candidate tuples (default 10000000)");
  search->add_flag("--table", so.table, "Aligned columns instead of JSON lines");

  unsigned count = 0;
  auto* ppo = app.add_subcommand("perfect-plus-one", "Even perfect numbers P_i with P_i + 1 a prime power");
  ppo->add_option("--count", count, "How many even perfect numbers to check")->required();

  std::size_t max_order = 0;
  auto* ver = app.add_subcommand("verify", "Run the formula-versus-oracle invariant suite");
  ver->add_option("--max-order", max_order, "Largest corpus group order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (*classify) return run_classify(family, params, verify, table);
  if (*search) return run_search(so);
  if (*ppo) return run_perfect_plus_one(count);
  if (*ver) return run_verify(max_order);
  return 1;
}
