#pragma once

#include <string>
#include <utility>

#include "wsets/congruence.hpp"
#include "wsets/interpolation.hpp"

namespace wsets {

/// base: E (d = 2) or E_k^d (d >= 3); shifted: E' (d = 2) or Ẽ_k^d.
enum class Variant { base, shifted };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

struct FamilyParams {
  int d = 2;
  int k = 2;
  Variant variant = Variant::base;

  /// Throws std::invalid_argument unless d >= 2 and k >= 2.
  void validate() const;
};

/// Periodic point 2πj / (d^k - 1), fixed by ω ↦ d^k ω modulo 2π.
RPi periodic_point(int d, int k, long j);

/// m_k^d from its case table: the symmetric table for d = 2, the I_1..I_7
/// table for d >= 3. The j = 2..k-1 rows are vacuous for k = 2.
MultiplicityFn multiplicity_closed_form(int d, int k);

/// Generalized scaling set for the family.
IntervalSet scaling_set(const FamilyParams& p);

/// W = dE \ E for the family's scaling set.
IntervalSet wavelet_set_family(const FamilyParams& p);

/// The swapped pieces of an interpolation pair: A1, A2 ⊆ W1 \ W2 and
/// B1, B2 ⊆ W2 \ W1, with σ(A1) = B2, σ(A2) = B1, A1 = d·B1, B2 = d·A2.
struct SwapPieces {
  Interval a1, a2, b1, b2;
};

/// The displayed swapped pieces of the family at (d, k).
SwapPieces family_swap_pieces(int d, int k);

/// The three-branch σ: W → W' (d = 2) or W_k^d → Ẽ-wavelet set (d >= 3):
/// identity on the intersection, +2π·d^{k-1} on A1, -2π·d^{k-2} on A2.
TranslationMap family_sigma(int d, int k);

/// Which coefficient values to attach to the swapped pieces.
///   corrected:           1/√2 magnitudes, (h1, h2) = (1, 0) on W1 ∩ W2.
///   printed_magnitude:   1/√(2π) magnitudes, (1, 0) on the intersection.
///   printed:             1/√(2π) magnitudes, (1, 1) on the intersection.
enum class CoefficientConvention { corrected, printed_magnitude, printed };

std::string to_string(CoefficientConvention c);

struct CoefficientPair {
  DilationPeriodicFn h1;
  DilationPeriodicFn h2;
};

/// h1 on W1 pieces, h2 on W2 pieces, with the sign pattern + on B1, - on B2.
CoefficientPair family_coefficients(int d, int k, CoefficientConvention c = CoefficientConvention::corrected);

/// Same pattern for an arbitrary pair: h1 = 1/√2 on W1 \ W2, h2 = +1/√2 on the
/// negative part of W2 \ W1 and -1/√2 on the positive part.
CoefficientPair swap_coefficients(const IntervalSet& w1, const IntervalSet& w2, int d,
                                  CoefficientConvention c = CoefficientConvention::corrected);

/// The one-parameter family (E_a, W_a) for d = 2, k = 3, with
/// -4π/7 <= a <= -π/2. Throws std::invalid_argument outside that range.
std::pair<IntervalSet, IntervalSet> convergence_family(const RPi& a);

/// a_n = -4π/7 + (4π/7 - π/2) / 2^n
RPi convergence_parameter(long n);

}  // namespace wsets
