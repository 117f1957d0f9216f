#pragma once

// Family sweeps, single-instance classification and report generation.

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leinster/families.hpp"
#include "leinster/natural.hpp"

namespace leinster::search {

enum class Family { cyclic, zm, affine, dihedral, gen_dihedral, dicyclic, pq };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view text);
/// Parameter names a family is swept over, e.g. {"m", "n", "r"} for zm.
std::vector<std::string> sweep_parameters(Family f);

namespace notes {
inline constexpr std::string_view kPaperLabelDiffers = "paper-label-differs";
inline constexpr std::string_view kEdge = "edge";
inline constexpr std::string_view kFormulaOnly = "formula-only (no oracle)";
inline constexpr std::string_view kOracleVerified = "oracle-verified";
}  // namespace notes

struct SearchRecord {
  Family family = Family::cyclic;
  std::vector<Natural> params;
  Natural order;
  Natural divisor_sum;
  families::GroupKind kind = families::GroupKind::deficient_other;
  std::vector<std::string> notes;

  bool has_note(std::string_view note) const;
  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

/// One JSON object per line; integers are written as bare decimal literals of any length.
std::string to_json_line(const SearchRecord& r);
/// nullopt for anything that is not a well-formed record line.
std::optional<SearchRecord> parse_json_line(std::string_view line);
/// Aligned human-readable columns with a header row.
std::string render_table(std::span<const SearchRecord> records);

/// Computes the record for one parameter tuple via the closed forms.
/// Throws UsageError naming the violated condition for invalid parameters.
SearchRecord evaluate(Family family, std::span<const Natural> params);

/// evaluate() plus, with `verify`, an oracle cross-check of D when a builder
/// exists and the order fits the cap (InvariantError on disagreement).
SearchRecord run_classify(Family family, std::span<const Natural> params, bool verify);

/// Inclusive; a missing end falls back to the family default (lower) or is required (upper).
struct Bound {
  std::optional<Natural> lo;
  std::optional<Natural> hi;
};

struct SweepConfig {
  Family family = Family::cyclic;
  std::map<std::string, Bound> bounds;  // keyed by sweep_parameters() names
  bool paper_mode = false;              // zm only: m prime, n = m - 1
  std::vector<families::GroupKind> class_filter;  // empty keeps every class
  bool dedupe = false;                  // zm only: keep r minimal in {r^t : gcd(t,n) = 1}
  bool include_edges = false;
  unsigned workers = 1;
  std::optional<std::filesystem::path> cache;
  Natural budget = 10'000'000;  // maximum candidate tuples
};

struct SweepResult {
  std::vector<SearchRecord> records;  // sorted by parameter tuple
  std::vector<std::string> warnings;
  std::size_t evaluated = 0;   // tuples computed in this run
  std::size_t from_cache = 0;  // tuples answered by the cache
};

SweepResult run_sweep(const SweepConfig& cfg);

struct PerfectPlusOneRow {
  unsigned index = 0;
  unsigned exponent = 0;  // Mersenne exponent r with P_i = 2^(r-1)(2^r-1)
  Natural perfect;
  bool prime_power = false;
};

struct PerfectPlusOneReport {
  std::vector<PerfectPlusOneRow> rows;
  std::vector<unsigned> solution_indices;
  std::string text;
};

PerfectPlusOneReport run_perfect_plus_one(unsigned count);

}  // namespace leinster::search
