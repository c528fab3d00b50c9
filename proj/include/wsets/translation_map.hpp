#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsets/congruence.hpp"

namespace wsets {

/// Extension bound for σ(x) = d^{-n} σ(d^n x): |n| <= 128.
inline constexpr long kExtensionBound = 128;

/// Piecewise 2πZ translation σ: source → target, extended d-homogeneously
/// to the real line.
struct TranslationMap {
  std::vector<CongruenceBranch> branches;
  IntervalSet source;
  IntervalSet target;
  int d = 2;

  static TranslationMap identity(const IntervalSet& s, int d);
  /// Offset (in units of 2π) of the branch containing x ∈ source.
  std::optional<std::int64_t> offset_at(const RPi& x) const;
};

/// σ(x) with the homogeneous extension; nullopt when no d^n·x (|n| <= bound)
/// lies in the source.
std::optional<RPi> try_sigma_eval(const TranslationMap& s, const RPi& x, long bound = kExtensionBound);
/// Throws std::domain_error naming the bound when x cannot be placed.
RPi sigma_eval(const TranslationMap& s, const RPi& x, long bound = kExtensionBound);

/// Points in [lo, hi] where the extended σ may change branch.
std::vector<RPi> sigma_breakpoints_in(const TranslationMap& s, const RPi& lo, const RPi& hi);

/// Branch domains partition the source, branch images partition the target.
VerificationReport check_translation_map(const TranslationMap& s);

/// σ∘σ = id, verified piecewise on the source.
VerificationReport is_involutive(const TranslationMap& s);

/// σ: W1 → W2 from the congruence of the two sets, pairing equal sheets
/// (offset 0) first. Throws WitnessError if the sets are not congruent.
TranslationMap derive_sigma(const IntervalSet& w1, const IntervalSet& w2, int d);

/// Branches as a normalized list for comparison: (offset, piece) sorted.
bool same_branches(const TranslationMap& a, const TranslationMap& b);

}  // namespace wsets
