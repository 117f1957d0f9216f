#include <algorithm>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "leinster/errors.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"
#include "leinster/search.hpp"

namespace leinster::search {

namespace {

using families::GroupKind;

void expect_arity(Family f, std::span<const Natural> params, std::size_t n) {
  if (params.size() != n) {
    throw UsageError(std::string(to_string(f)) + " takes " + std::to_string(n) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

std::vector<std::size_t> to_factors(std::span<const Natural> params) {
  std::vector<std::size_t> out;
  for (const auto& p : params) {
    if (p.is_zero()) throw UsageError("gen-dihedral: cyclic factor orders must be positive");
    if (p > Natural(oracle::order_cap())) {
      throw ResourceError("gen-dihedral: factor " + p.str() + " exceeds oracle cap " +
                          std::to_string(oracle::order_cap()));
    }
    out.push_back(p.to_u64());
  }
  return out;
}

SearchRecord evaluate_unchecked(Family family, std::span<const Natural> params) {
  SearchRecord rec;
  rec.family = family;
  rec.params.assign(params.begin(), params.end());
  bool edge = false;

  switch (family) {
    case Family::cyclic: {
      expect_arity(family, params, 1);
      const Natural& n = params[0];
      if (n.is_zero()) throw UsageError("cyclic: n must be positive");
      rec.order = n;
      rec.divisor_sum = numtheory::divisor_sum(n);
      break;
    }
    case Family::zm: {
      expect_arity(family, params, 3);
      if (auto why = families::zm_violation(params[0], params[1], params[2])) throw UsageError("zm: " + *why);
      const auto t = *families::zm_validate(params[0], params[1], params[2]);
      rec.order = t.m() * t.n();
      rec.divisor_sum = families::zm_divisor_sum(t);
      break;
    }
    case Family::affine: {
      expect_arity(family, params, 1);
      const Natural& q = params[0];
      if (q < Natural(2) || !numtheory::prime_power_decompose(q)) {
        throw UsageError("affine: q = " + q.str() + " is not a prime power");
      }
      const auto cls = families::affine_classify(q);
      rec.order = cls.cls.order;
      rec.divisor_sum = cls.cls.divisor_sum;
      if (cls.label_differs) rec.notes.emplace_back(notes::kPaperLabelDiffers);
      if (!numtheory::is_prime(q)) rec.notes.emplace_back(notes::kFormulaOnly);
      break;
    }
    case Family::dihedral: {
      expect_arity(family, params, 1);
      const Natural& n = params[0];
      if (n.is_zero()) throw UsageError("dihedral: n must be positive");
      rec.order = n * 2;
      rec.divisor_sum = families::dihedral_divisor_sum(n);
      edge = n.is_one();
      break;
    }
    case Family::gen_dihedral: {
      const auto factors = to_factors(params);
      Natural a = 1;
      for (auto k : factors) a *= Natural(k);
      rec.order = a * 2;
      rec.divisor_sum = families::generalized_dihedral_divisor_sum(factors);
      edge = a.is_one();
      break;
    }
    case Family::dicyclic: {
      expect_arity(family, params, 1);
      const Natural& n = params[0];
      if (n < Natural(2)) throw UsageError("dicyclic: n must be at least 2 (|A| = 2n with n > 1)");
      rec.order = n * 4;
      rec.divisor_sum = families::dicyclic_divisor_sum(n);
      break;
    }
    case Family::pq: {
      expect_arity(family, params, 2);
      const Natural& p = params[0];
      const Natural& q = params[1];
      if (!numtheory::is_prime(p) || !numtheory::is_prime(q)) throw UsageError("pq: p and q must be prime");
      if (p >= q) throw UsageError("pq: need p < q");
      if (!divides(p, q - 1)) throw UsageError("pq: p must divide q-1");
      rec.order = p * q;
      rec.divisor_sum = families::pq_divisor_sum(p, q);
      break;
    }
  }
  rec.kind = families::classify_group(rec.divisor_sum, rec.order).kind;
  if (edge || rec.order.is_one()) rec.notes.emplace_back(notes::kEdge);
  return rec;
}

// Oracle group for a record, or nullopt when no builder applies or the order is over the cap.
std::optional<oracle::FiniteGroup> oracle_group(const SearchRecord& rec) {
  if (rec.order > Natural(oracle::order_cap())) return std::nullopt;
  const auto& p = rec.params;
  switch (rec.family) {
    case Family::cyclic:
      return oracle::build_cyclic(p[0].to_u64());
    case Family::zm:
      return oracle::build_zm(*families::zm_validate(p[0], p[1], p[2]));
    case Family::affine:
      if (!numtheory::is_prime(p[0])) return std::nullopt;
      return oracle::build_affine_prime(p[0]);
    case Family::dihedral: {
      const std::size_t n = p[0].to_u64();
      return oracle::build_generalized_dihedral(std::span(&n, 1));
    }
    case Family::gen_dihedral: {
      const auto factors = to_factors(p);
      return oracle::build_generalized_dihedral(factors);
    }
    case Family::dicyclic: {
      const std::size_t two_n = 2 * p[0].to_u64();
      return oracle::build_generalized_dicyclic(std::span(&two_n, 1), static_cast<oracle::Element>(two_n / 2));
    }
    case Family::pq: {
      // Nonabelian group of order pq as ZM(q, p, r) with r of order p mod q.
      Natural r = 2;
      while (powm(r, p[0], p[1]) != Natural(1)) ++r;
      return oracle::build_zm(*families::zm_validate(p[1], p[0], r));
    }
  }
  return std::nullopt;
}

std::string params_key(const std::vector<Natural>& params) {
  std::string key;
  for (const auto& p : params) key += p.str() + ',';
  return key;
}

struct Range {
  Natural lo;
  Natural hi;

  Natural count() const { return hi < lo ? Natural(0) : hi - lo + 1; }
};

Range bound_for(const SweepConfig& cfg, const std::string& name, const Natural& default_lo,
                std::optional<Natural> default_hi) {
  const auto it = cfg.bounds.find(name);
  const Bound given = it == cfg.bounds.end() ? Bound{} : it->second;
  if (!given.hi && !default_hi) {
    throw UsageError(std::string(to_string(cfg.family)) + " sweep needs --max-" + name);
  }
  return {std::max(given.lo.value_or(default_lo), default_lo), given.hi ? *given.hi : *default_hi};
}

// Minimal representative of r under r -> r^t (gcd(t, n) = 1), which preserves the ZM group.
Natural canonical_zm_r(const Natural& m, const Natural& n, const Natural& r) {
  if (m.is_one()) return r;
  Natural best = r;
  for (Natural t = 2; t <= n; ++t) {
    if (!gcd(t, n).is_one()) continue;
    best = std::min(best, powm(r, t, m));
  }
  return best;
}

// Invariant-factor lists k1 | k2 | ... | kt with product n, k1 >= 2.
void abelian_types(std::uint64_t n, std::uint64_t min_factor, std::vector<std::size_t>& current,
                   std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    out.push_back(current);
    return;
  }
  for (std::uint64_t k = min_factor; k <= n; k += min_factor) {
    if (n % k != 0) continue;
    // Remaining factors are multiples of k, so their product must be too.
    const std::uint64_t rest = n / k;
    if (rest != 1 && rest % k != 0) continue;
    current.push_back(k);
    abelian_types(rest, k, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<Natural>> enumerate_candidates(const SweepConfig& cfg) {
  std::vector<std::vector<Natural>> out;
  auto budget_check = [&](const Natural& estimate) {
    if (estimate > cfg.budget) {
      throw ResourceError("sweep would visit about " + estimate.str() + " tuples, budget is " + cfg.budget.str());
    }
  };

  switch (cfg.family) {
    case Family::cyclic:
    case Family::dihedral: {
      const auto n = bound_for(cfg, "n", 1, std::nullopt);
      budget_check(n.count());
      for (Natural v = n.lo; v <= n.hi; ++v) out.push_back({v});
      break;
    }
    case Family::dicyclic: {
      const auto n = bound_for(cfg, "n", 2, std::nullopt);
      budget_check(n.count());
      for (Natural v = n.lo; v <= n.hi; ++v) out.push_back({v});
      break;
    }
    case Family::affine: {
      const auto q = bound_for(cfg, "q", 2, std::nullopt);
      budget_check(q.count());
      for (Natural v = q.lo; v <= q.hi; ++v) {
        if (numtheory::prime_power_decompose(v)) out.push_back({v});
      }
      break;
    }
    case Family::gen_dihedral: {
      const auto n = bound_for(cfg, "n", 1, std::nullopt);
      budget_check(n.count());
      if (n.hi > Natural(oracle::order_cap())) {
        throw ResourceError("gen-dihedral sweep: |A| bound " + n.hi.str() + " exceeds oracle cap " +
                            std::to_string(oracle::order_cap()));
      }
      for (Natural v = n.lo; v <= n.hi; ++v) {
        std::vector<std::vector<std::size_t>> types;
        std::vector<std::size_t> current;
        abelian_types(v.to_u64(), 2, current, types);
        std::sort(types.begin(), types.end());
        for (const auto& t : types) out.emplace_back(t.begin(), t.end());
      }
      break;
    }
    case Family::pq: {
      const auto p = bound_for(cfg, "p", 2, std::nullopt);
      const auto q = bound_for(cfg, "q", 3, std::nullopt);
      budget_check(p.count() * q.count());
      for (Natural a = p.lo; a <= p.hi; ++a) {
        if (!numtheory::is_prime(a)) continue;
        for (Natural b = std::max(q.lo, a + 1); b <= q.hi; ++b) {
          if (divides(a, b - 1) && numtheory::is_prime(b)) out.push_back({a, b});
        }
      }
      break;
    }
    case Family::zm: {
      const auto m = bound_for(cfg, "m", 1, std::nullopt);
      const auto n = cfg.paper_mode ? Range{1, 0} : bound_for(cfg, "n", 1, std::nullopt);
      const auto r = bound_for(cfg, "r", 0, m.hi);
      const Natural r_span = std::min(r.count(), m.hi + 1);
      budget_check(m.count() * (cfg.paper_mode ? Natural(1) : n.count()) * r_span);
      for (Natural mv = m.lo; mv <= m.hi; ++mv) {
        if (cfg.paper_mode && (mv < Natural(2) || !numtheory::is_prime(mv))) continue;
        const Natural n_lo = cfg.paper_mode ? mv - 1 : n.lo;
        const Natural n_hi = cfg.paper_mode ? mv - 1 : n.hi;
        for (Natural nv = n_lo; nv <= n_hi; ++nv) {
          if (!gcd(mv, nv).is_one()) continue;
          const Natural r_lo = mv.is_one() ? std::max(r.lo, Natural(1)) : r.lo;
          const Natural r_hi = mv.is_one() ? std::min(r.hi, Natural(1)) : std::min(r.hi, mv - 1);
          for (Natural rv = r_lo; rv <= r_hi; ++rv) {
            if (families::zm_violation(mv, nv, rv)) continue;
            if (cfg.dedupe && canonical_zm_r(mv, nv, rv) != rv) continue;
            out.push_back({mv, nv, rv});
          }
        }
      }
      break;
    }
  }
  return out;
}

class CacheFile {
 public:
  CacheFile(const std::optional<std::filesystem::path>& path, Family family, std::vector<std::string>& warnings)
      : path_(path), warnings_(warnings) {
    if (!path_) return;
    std::ifstream in(*path_);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      auto rec = parse_json_line(line);
      if (!rec || families::classify_group(rec->divisor_sum, rec->order).kind != rec->kind) {
        warnings_.push_back("cache " + path_->string() + ":" + std::to_string(line_no) + ": corrupt line skipped");
        continue;
      }
      if (rec->family == family) {
        auto key = params_key(rec->params);
        entries_.emplace(std::move(key), std::move(*rec));
      }
    }
    out_.open(*path_, std::ios::app);
    if (!out_) report_failure();
  }

  const SearchRecord* find(const std::vector<Natural>& params) const {
    const auto it = entries_.find(params_key(params));
    return it == entries_.end() ? nullptr : &it->second;
  }

  void append(const SearchRecord& rec) {
    if (!path_ || failed_) return;
    std::lock_guard lock(mutex_);
    out_ << to_json_line(rec) << '\n' << std::flush;
    if (!out_) report_failure();
  }

 private:
  void report_failure() {
    if (!failed_) warnings_.push_back("cache " + path_->string() + ": write failed, continuing without cache");
    failed_ = true;
  }

  std::optional<std::filesystem::path> path_;
  std::vector<std::string>& warnings_;
  std::unordered_map<std::string, SearchRecord> entries_;
  std::ofstream out_;
  std::mutex mutex_;
  bool failed_ = false;
};

}  // namespace

SearchRecord evaluate(Family family, std::span<const Natural> params) {
  try {
    return evaluate_unchecked(family, params);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

SearchRecord run_classify(Family family, std::span<const Natural> params, bool verify) {
  SearchRecord rec = evaluate(family, params);
  if (!verify) return rec;
  const auto group = oracle_group(rec);
  if (!group) {
    if (!rec.has_note(notes::kFormulaOnly)) rec.notes.emplace_back(notes::kFormulaOnly);
    return rec;
  }
  const Natural oracle_d = oracle::group_divisor_sum(*group);
  if (oracle_d != rec.divisor_sum) {
    throw InvariantError(std::string(to_string(family)) + " " + params_key(rec.params) + ": formula D " +
                         rec.divisor_sum.str() + " != oracle D " + oracle_d.str());
  }
  rec.notes.emplace_back(notes::kOracleVerified);
  return rec;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.workers < 1) throw UsageError("workers must be at least 1");
  if (cfg.paper_mode && cfg.family != Family::zm) throw UsageError("--paper-mode applies to zm sweeps only");
  if (cfg.dedupe && cfg.family != Family::zm) throw UsageError("--dedupe applies to zm sweeps only");
  const auto names = sweep_parameters(cfg.family);
  for (const auto& [name, bound] : cfg.bounds) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw UsageError(std::string(to_string(cfg.family)) + " sweep has no parameter '" + name + "'");
    }
  }

  SweepResult result;
  const auto candidates = enumerate_candidates(cfg);
  CacheFile cache(cfg.cache, cfg.family, result.warnings);

  std::vector<std::optional<SearchRecord>> slots(candidates.size());
  std::vector<char> computed(candidates.size(), 0);
  const std::size_t workers = std::min<std::size_t>(cfg.workers, std::max<std::size_t>(candidates.size(), 1));
  const std::size_t chunk = (candidates.size() + workers - 1) / workers;

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](std::size_t begin, std::size_t end) {
    try {
      for (std::size_t i = begin; i < end; ++i) {
        if (const auto* hit = cache.find(candidates[i])) {
          slots[i] = *hit;
          continue;
        }
        slots[i] = evaluate(cfg.family, candidates[i]);
        computed[i] = 1;
        cache.append(*slots[i]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t begin = std::min(w * chunk, candidates.size());
    pool.emplace_back(work, begin, std::min(begin + chunk, candidates.size()));
  }
  work(0, std::min(chunk, candidates.size()));
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < slots.size(); ++i) {
    computed[i] ? ++result.evaluated : ++result.from_cache;
    auto& rec = *slots[i];
    if (!cfg.include_edges && rec.has_note(notes::kEdge)) continue;
    if (!cfg.class_filter.empty() &&
        std::find(cfg.class_filter.begin(), cfg.class_filter.end(), rec.kind) == cfg.class_filter.end()) {
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

PerfectPlusOneReport run_perfect_plus_one(unsigned count) {
  const auto hits = numtheory::perfect_plus_one(count);
  const auto exps = numtheory::mersenne_exponents();

  PerfectPlusOneReport report;
  std::ostringstream os;
  os << "i  r  P_i  P_i+1  verdict\n";
  for (unsigned i = 1; i <= count; ++i) {
    PerfectPlusOneRow row{i, exps[i - 1], *numtheory::even_perfect(exps[i - 1]), false};
    const auto hit = std::find_if(hits.begin(), hits.end(), [i](const auto& h) { return h.index == i; });
    row.prime_power = hit != hits.end();
    os << i << "  " << row.exponent << "  " << row.perfect << "  " << row.perfect + 1 << "  "
       << (row.prime_power ? "prime (exponent k=1)" : "not a prime power") << '\n';
    if (row.prime_power) report.solution_indices.push_back(i);
    report.rows.push_back(std::move(row));
  }
  os << "solutions: {";
  for (std::size_t k = 0; k < report.solution_indices.size(); ++k) {
    os << (k ? ", " : "") << report.solution_indices[k];
  }
  os << "}\n";
  report.text = os.str();
  return report;
}

}  // namespace leinster::search
