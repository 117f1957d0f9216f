#include "leinster/leinster.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "leinster/errors.hpp"
#include "leinster/families.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"
#include "leinster/search.hpp"
#include "leinster/verify.hpp"

using namespace leinster;

struct leinster_group {
  oracle::FiniteGroup group;
};

struct leinster_record {
  search::SearchRecord record;
};

struct leinster_sweep_config {
  search::SweepConfig config;
};

struct leinster_sweep {
  std::vector<leinster_record> records;
  std::vector<std::string> warnings;
};

namespace {

thread_local std::string last_error;

leinster_status fail(leinster_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
leinster_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(static_cast<leinster_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LEINSTER_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(LEINSTER_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw UsageError(std::string(what) + " must not be NULL");
}

Natural parse(const char* text, const char* what) {
  require(text, what);
  return Natural::parse(text);
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

leinster_status emit(char** out, const std::string& s) {
  require(out, "out");
  *out = copy_out(s);
  return LEINSTER_OK;
}

leinster_status emit_group(leinster_group** out, oracle::FiniteGroup g) {
  require(out, "out");
  *out = new leinster_group{std::move(g)};
  return LEINSTER_OK;
}

search::Family parse_family(const char* text) {
  require(text, "family");
  const auto f = search::parse_family(text);
  if (!f) throw UsageError(std::string("unknown family '") + text + "'");
  return *f;
}

}  // namespace

extern "C" {

const char* leinster_last_error(void) { return last_error.c_str(); }

void leinster_string_free(char* s) { std::free(s); }

size_t leinster_order_cap(void) { return oracle::order_cap(); }

leinster_status leinster_divisor_sum(const char* n, char** out) {
  return guarded([&] { return emit(out, numtheory::divisor_sum(parse(n, "n")).str()); });
}

leinster_status leinster_classify_number(const char* n, unsigned* flags) {
  return guarded([&] {
    require(flags, "flags");
    const auto c = numtheory::classify_number(parse(n, "n"));
    unsigned f = 0;
    if (c.perfect) f |= LEINSTER_NUMBER_PERFECT;
    if (c.abundant) f |= LEINSTER_NUMBER_ABUNDANT;
    if (c.deficient) f |= LEINSTER_NUMBER_DEFICIENT;
    if (c.almost_perfect) f |= LEINSTER_NUMBER_ALMOST_PERFECT;
    if (c.quasi_perfect) f |= LEINSTER_NUMBER_QUASI_PERFECT;
    *flags = f;
    return LEINSTER_OK;
  });
}

leinster_status leinster_is_prime(const char* n, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = numtheory::is_prime(parse(n, "n")) ? 1 : 0;
    return LEINSTER_OK;
  });
}

leinster_status leinster_mult_order(const char* r, const char* m, char** out) {
  return guarded([&] { return emit(out, numtheory::mult_order(parse(r, "r"), parse(m, "m")).str()); });
}

leinster_status leinster_group_cyclic(size_t n, leinster_group** out) {
  return guarded([&] { return emit_group(out, oracle::build_cyclic(n)); });
}

leinster_status leinster_group_zm(const char* m, const char* n, const char* r, leinster_group** out) {
  return guarded([&] {
    const Natural mm = parse(m, "m"), nn = parse(n, "n"), rr = parse(r, "r");
    if (auto why = families::zm_violation(mm, nn, rr)) throw DomainError("zm: " + *why);
    return emit_group(out, oracle::build_zm(*families::zm_validate(mm, nn, rr)));
  });
}

leinster_status leinster_group_dihedral(const size_t* factors, size_t count, leinster_group** out) {
  return guarded([&] {
    if (count > 0) require(factors, "factors");
    return emit_group(out, oracle::build_generalized_dihedral(std::span(factors, count)));
  });
}

leinster_status leinster_group_dicyclic(const size_t* factors, size_t count, size_t y, leinster_group** out) {
  return guarded([&] {
    if (count > 0) require(factors, "factors");
    return emit_group(out, oracle::build_generalized_dicyclic(std::span(factors, count),
                                                              static_cast<oracle::Element>(y)));
  });
}

leinster_status leinster_group_affine(const char* p, leinster_group** out) {
  return guarded([&] { return emit_group(out, oracle::build_affine_prime(parse(p, "p"))); });
}

leinster_status leinster_group_direct_product(const leinster_group* g, const leinster_group* h,
                                              leinster_group** out) {
  return guarded([&] {
    require(g, "g");
    require(h, "h");
    return emit_group(out, oracle::build_direct_product(g->group, h->group));
  });
}

size_t leinster_group_order(const leinster_group* g) { return g ? g->group.order() : 0; }

leinster_status leinster_group_divisor_sum(const leinster_group* g, char** out) {
  return guarded([&] {
    require(g, "g");
    return emit(out, oracle::group_divisor_sum(g->group).str());
  });
}

leinster_status leinster_group_subgroup_counts(const leinster_group* g, size_t* subgroups, size_t* normal) {
  return guarded([&] {
    require(g, "g");
    const auto lattice = oracle::all_subgroups(g->group);
    if (subgroups) *subgroups = lattice.size();
    if (normal) {
      *normal = static_cast<size_t>(
          std::count_if(lattice.begin(), lattice.end(), [](const auto& s) { return s.is_normal; }));
    }
    return LEINSTER_OK;
  });
}

leinster_status leinster_group_is_nilpotent(const leinster_group* g, int* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = oracle::is_nilpotent(g->group) ? 1 : 0;
    return LEINSTER_OK;
  });
}

void leinster_group_free(leinster_group* g) { delete g; }

leinster_status leinster_classify(const char* family, const char* const* params, size_t count, int verify,
                                  leinster_record** out) {
  return guarded([&] {
    require(out, "out");
    const auto f = parse_family(family);
    if (count > 0) require(params, "params");
    std::vector<Natural> values;
    for (size_t i = 0; i < count; ++i) values.push_back(parse(params[i], "param"));
    *out = new leinster_record{search::run_classify(f, values, verify != 0)};
    return LEINSTER_OK;
  });
}

leinster_status leinster_record_json(const leinster_record* r, char** out) {
  return guarded([&] {
    require(r, "record");
    return emit(out, search::to_json_line(r->record));
  });
}

const char* leinster_record_class(const leinster_record* r) {
  return r ? families::to_string(r->record.kind).data() : "";
}

leinster_status leinster_record_order(const leinster_record* r, char** out) {
  return guarded([&] {
    require(r, "record");
    return emit(out, r->record.order.str());
  });
}

leinster_status leinster_record_divisor_sum(const leinster_record* r, char** out) {
  return guarded([&] {
    require(r, "record");
    return emit(out, r->record.divisor_sum.str());
  });
}

size_t leinster_record_note_count(const leinster_record* r) { return r ? r->record.notes.size() : 0; }

const char* leinster_record_note(const leinster_record* r, size_t i) {
  return (r && i < r->record.notes.size()) ? r->record.notes[i].c_str() : nullptr;
}

leinster_status leinster_record_table(const leinster_record* r, char** out) {
  return guarded([&] {
    require(r, "record");
    return emit(out, search::render_table(std::span(&r->record, 1)));
  });
}

void leinster_record_free(leinster_record* r) { delete r; }

leinster_status leinster_sweep_config_new(const char* family, leinster_sweep_config** out) {
  return guarded([&] {
    require(out, "out");
    auto* cfg = new leinster_sweep_config{};
    cfg->config.family = parse_family(family);
    *out = cfg;
    return LEINSTER_OK;
  });
}

leinster_status leinster_sweep_config_set_bound(leinster_sweep_config* cfg, const char* name, const char* lo,
                                                const char* hi) {
  return guarded([&] {
    require(cfg, "cfg");
    require(name, "name");
    auto& b = cfg->config.bounds[name];
    if (lo) b.lo = Natural::parse(lo);
    if (hi) b.hi = Natural::parse(hi);
    return LEINSTER_OK;
  });
}

leinster_status leinster_sweep_config_set_paper_mode(leinster_sweep_config* cfg, int on) {
  return guarded([&] {
    require(cfg, "cfg");
    cfg->config.paper_mode = on != 0;
    return LEINSTER_OK;
  });
}

leinster_status leinster_sweep_config_add_class(leinster_sweep_config* cfg, const char* kind) {
  return guarded([&] {
    require(cfg, "cfg");
    require(kind, "kind");
    const auto k = families::parse_group_kind(kind);
    if (!k) throw UsageError(std::string("unknown class '") + kind + "'");
    cfg->config.class_filter.push_back(*k);
    return LEINSTER_OK;
  });
}

leinster_status leinster_sweep_config_set_dedupe(leinster_sweep_config* cfg, int on) {
  return guarded([&] {
    require(cfg, "cfg");
    cfg->config.dedupe = on != 0;
    return LEINSTER_OK;
  });
}

leinster_status leinster_sweep_config_set_include_edges(leinster_sweep_config* cfg, int on) {
  return guarded([&] {
    require(cfg, "cfg");
    cfg->config.include_edges = on != 0;
    return LEINSTER_OK;
  });
}

leinster_status leinster_sweep_config_set_workers(leinster_sweep_config* cfg, unsigned workers) {
  return guarded([&] {
    require(cfg, "cfg");
    if (workers < 1) throw UsageError("workers must be at least 1");
    cfg->config.workers = workers;
    return LEINSTER_OK;
  });
}

leinster_status leinster_sweep_config_set_cache(leinster_sweep_config* cfg, const char* path) {
  return guarded([&] {
    require(cfg, "cfg");
    if (path) {
      cfg->config.cache = std::filesystem::path(path);
    } else {
      cfg->config.cache.reset();
    }
    return LEINSTER_OK;
  });
}

leinster_status leinster_sweep_config_set_budget(leinster_sweep_config* cfg, const char* budget) {
  return guarded([&] {
    require(cfg, "cfg");
    cfg->config.budget = parse(budget, "budget");
    return LEINSTER_OK;
  });
}

void leinster_sweep_config_free(leinster_sweep_config* cfg) { delete cfg; }

leinster_status leinster_sweep_run(const leinster_sweep_config* cfg, leinster_sweep** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    auto result = search::run_sweep(cfg->config);
    auto* sweep = new leinster_sweep{};
    sweep->records.reserve(result.records.size());
    for (auto& r : result.records) sweep->records.push_back({std::move(r)});
    sweep->warnings = std::move(result.warnings);
    *out = sweep;
    return LEINSTER_OK;
  });
}

size_t leinster_sweep_size(const leinster_sweep* s) { return s ? s->records.size() : 0; }

const leinster_record* leinster_sweep_record(const leinster_sweep* s, size_t i) {
  return (s && i < s->records.size()) ? &s->records[i] : nullptr;
}

size_t leinster_sweep_warning_count(const leinster_sweep* s) { return s ? s->warnings.size() : 0; }

const char* leinster_sweep_warning(const leinster_sweep* s, size_t i) {
  return (s && i < s->warnings.size()) ? s->warnings[i].c_str() : nullptr;
}

leinster_status leinster_sweep_table(const leinster_sweep* s, char** out) {
  return guarded([&] {
    require(s, "sweep");
    std::vector<search::SearchRecord> recs;
    for (const auto& r : s->records) recs.push_back(r.record);
    return emit(out, search::render_table(recs));
  });
}

void leinster_sweep_free(leinster_sweep* s) { delete s; }

leinster_status leinster_perfect_plus_one(unsigned count, char** report, unsigned* indices, size_t capacity,
                                          size_t* n_indices) {
  return guarded([&] {
    const auto r = search::run_perfect_plus_one(count);
    if (indices) {
      for (size_t i = 0; i < r.solution_indices.size() && i < capacity; ++i) indices[i] = r.solution_indices[i];
    }
    if (n_indices) *n_indices = r.solution_indices.size();
    return report ? emit(report, r.text) : LEINSTER_OK;
  });
}

leinster_status leinster_verify(size_t max_order, char** report) {
  return guarded([&] {
    const auto r = search::run_verify(max_order);
    if (report) emit(report, r.text());
    if (!r.all_passed()) return fail(LEINSTER_ERR_VERIFY, "verification failed");
    return LEINSTER_OK;
  });
}

}  // extern "C"
