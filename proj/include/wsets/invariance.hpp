#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsets/congruence.hpp"
#include "wsets/interpolation.hpp"

namespace wsets {

struct SelfSimilarOffset {
  std::int64_t k = 0;
  IntervalSet witness;  // F with F ⊆ supp and F + 2πk ⊆ supp
};

/// Nonzero k for which supp is partially self-similar w.r.t. 2πk.
struct SelfSimilaritySet {
  std::vector<SelfSimilarOffset> offsets;  // sorted by k

  bool empty() const { return offsets.empty(); }
  std::vector<std::int64_t> ks() const;
  const SelfSimilarOffset* find(std::int64_t k) const;
};

SelfSimilaritySet self_similarity_set(const IntervalSet& supp);

struct DivisorStep {
  Integer power;  // d^n
  bool divides_all = false;
};

struct OrderResult {
  std::optional<long> order;  // nullopt: infinite
  SelfSimilaritySet certificate;
  std::vector<DivisorStep> divisor_trace;

  bool infinite() const { return !order.has_value(); }
};

/// Largest n with d^n | k for every offset k of supp(ψ̂).
OrderResult invariance_order(const PiecewiseWavelet& psi);

/// Largest n with d^n | k (k != 0).
long divisor_exponent(std::int64_t k, int d);

struct ResidualPiece {
  Interval piece;     // ⊆ supp \ F
  std::int64_t l = 0; // piece - 2πl ⊆ F
  bool divisible = false;
};

struct InvarianceCertificate {
  IntervalSet section;
  std::vector<ResidualPiece> residual;
};

struct InvarianceCounterexample {
  std::int64_t k = 0;
  IntervalSet witness;
};

struct InvarianceWitness {
  long n = 0;
  std::optional<InvarianceCertificate> certificate;
  std::optional<InvarianceCounterexample> counterexample;
  bool certified() const { return certificate.has_value(); }
};

/// Works directly on the sheets of supp(ψ̂) over [0, 2π): a counterexample is
/// a cell carrying two sheets whose offsets differ by a non-multiple of d^n;
/// otherwise the section and residual offsets form the certificate. Throws
/// WitnessError when supp does not cover [0, 2π) modulo 2π.
InvarianceWitness invariance_witness(const PiecewiseWavelet& psi, long n);

/// Calderón sum on the dilation domain, translate sum on [0, 2π), and the
/// cross sums t_q for d ∤ q, all in Q(√2). Normalization: an MSF wavelet has
/// |ψ̂| = χ_W.
VerificationReport characterization_equations(const PiecewiseWavelet& psi);

/// For each ψ: certificates at every n <= min(order, bound), and a
/// counterexample at order + 1 when the order is finite.
VerificationReport nesting_check(const std::vector<PiecewiseWavelet>& psis, long bound = 8);

}  // namespace wsets
