#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "wsets/interval_set.hpp"
#include "wsets/report.hpp"
#include "wsets/step_fn.hpp"

namespace wsets {

/// [-π, π) or [0, 2π).
enum class FundamentalDomain { symmetric, positive };

RPi domain_start(FundamentalDomain domain);
Interval domain_interval(FundamentalDomain domain);

/// m(ω) = Σ_k χ_S(ω + 2πk) on a fundamental domain of 2πZ; zero outside it.
struct MultiplicityFn {
  FundamentalDomain domain = FundamentalDomain::symmetric;
  StepFn<Count> step;

  Count operator()(const RPi& x) const { return step(x); }
  std::vector<StepFn<Count>::Cell> cells() const;
  Count max() const;
  std::optional<StepFn<Count>::Cell> first_cell_not(Count v) const;
  bool is_constant(Count v) const { return !first_cell_not(v).has_value(); }

  /// Builds from explicit (lo, hi, value) rows; rows may be empty (lo >= hi)
  /// and must otherwise tile the domain.
  static MultiplicityFn from_rows(FundamentalDomain domain, std::vector<std::tuple<RPi, RPi, Count>> rows);

  friend bool operator==(const MultiplicityFn&, const MultiplicityFn&) = default;
};

MultiplicityFn wrap_multiplicity(const IntervalSet& s, FundamentalDomain domain = FundamentalDomain::symmetric);

/// Cell of [0, 2π) and the sorted offsets k with cell + 2πk ⊆ S.
struct SheetCell {
  Interval cell;
  std::vector<std::int64_t> offsets;
};

/// Fragment endpoints of S folded into [0, 2π), plus 0 and 2π.
std::vector<RPi> wrap_cuts(const IntervalSet& s);
std::vector<SheetCell> sheet_cells(const IntervalSet& s, const std::vector<RPi>& cuts);

/// x ↦ x + 2π·offset on `piece`.
struct CongruenceBranch {
  IntervalSet piece;
  std::int64_t offset = 0;

  friend bool operator==(const CongruenceBranch&, const CongruenceBranch&) = default;
};

struct CongruenceMap {
  std::vector<CongruenceBranch> branches;  // sorted by offset
  IntervalSet source;
  IntervalSet target;
};

struct CongruenceFailure {
  Interval cell;
  Count source_count = 0;
  Count target_count = 0;
};

struct CongruenceResult {
  std::optional<CongruenceMap> map;
  std::optional<CongruenceFailure> failure;
  bool ok() const { return map.has_value(); }
};

/// How sheets over a common cell are paired: by height order, or with equal
/// heights (offset 0) paired before the rest.
enum class SheetMatching { by_height, identity_first };

/// G ≅ H under 2πZ translations iff their wrapped multiplicities agree; on
/// success the map pairs the i-th lowest sheet of G with the i-th lowest of H.
CongruenceResult translation_congruent(const IntervalSet& g, const IntervalSet& h,
                                       SheetMatching matching = SheetMatching::by_height);

/// Branch pieces partition the source; translated pieces partition the target.
VerificationReport check_congruence_map(const CongruenceMap& map);

struct DilationMultiplicity {
  int d = 2;
  StepFn<Count> counts;    // on dilation_domain(d), zero elsewhere
  IntervalSet zero_fiber;  // parts of S near 0 that meet infinitely many shells
  bool tiles() const;
};

DilationMultiplicity dilation_multiplicity(const IntervalSet& s, int d);

VerificationReport is_wavelet_set(const IntervalSet& s, int d);

/// m(ω) + 1 = Σ_{i<d} m(ω/d + 2πi/d) on [-π, π).
VerificationReport check_consistency(const MultiplicityFn& m, int d);

struct MerrillResult {
  VerificationReport report;
  IntervalSet wavelet_set;             // dE \ E
  std::optional<long> cover_exponent;  // J with ∪_{j<=J} d^j E ⊇ (-ε, ε)
  RPi epsilon;
};

MerrillResult check_merrill(const IntervalSet& e, int d, long max_exponent = 64);

/// F ⊆ E meeting every 2πZ orbit of [0, 2π) exactly once. Sheets are chosen
/// with offset 0 if present, else the least positive, else the greatest
/// negative. Throws WitnessError naming an uncovered cell.
IntervalSet congruence_section(const IntervalSet& e);

}  // namespace wsets
