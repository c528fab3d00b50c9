#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsets/qsqrt2.hpp"
#include "wsets/step_fn.hpp"
#include "wsets/translation_map.hpp"

namespace wsets {

/// scale · π^{-inv_sqrt_pi/2}. Power 0 is an ordinary Q(√2)-complex value;
/// power 1 carries the 1/√π factor of the printed coefficient magnitudes.
struct Coefficient {
  QSqrt2Complex scale;
  int inv_sqrt_pi = 0;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
  std::string str() const;
};

/// Finite sum Σ_e c_e·π^{-e/2}. π is transcendental, so this is zero iff
/// every c_e is zero and equality is termwise.
class SymbolicScalar {
 public:
  SymbolicScalar() = default;
  SymbolicScalar(const Coefficient& c);
  SymbolicScalar(const QSqrt2Complex& c) : SymbolicScalar(Coefficient{c, 0}) {}
  SymbolicScalar(long c) : SymbolicScalar(QSqrt2Complex(c)) {}

  bool is_zero() const { return terms_.empty(); }
  SymbolicScalar conj() const;
  /// Value when no π power remains.
  std::optional<QSqrt2Complex> as_constant() const;
  const std::map<int, QSqrt2Complex>& terms() const { return terms_; }

  SymbolicScalar& operator+=(const SymbolicScalar& o);
  friend SymbolicScalar operator+(SymbolicScalar a, const SymbolicScalar& b) { return a += b; }
  friend SymbolicScalar operator*(const SymbolicScalar& a, const SymbolicScalar& b);
  friend bool operator==(const SymbolicScalar&, const SymbolicScalar&) = default;

  /// e.g. "1", "1/pi", "sqrt2/2/sqrt(pi)".
  std::string str() const;

 private:
  void add_term(int power, const QSqrt2Complex& c);
  std::map<int, QSqrt2Complex> terms_;
};

struct CoefficientPiece {
  IntervalSet domain;
  Coefficient value;
};

/// h with h(d·x) = h(x): piece values on a dilation tile, extended along
/// dilation orbits.
struct DilationPeriodicFn {
  std::vector<CoefficientPiece> pieces;
  int d = 2;

  static DilationPeriodicFn constant_on(const IntervalSet& domain, const Coefficient& value, int d);

  IntervalSet domain() const;
  std::optional<Coefficient> eval(const RPi& x, long bound = kExtensionBound) const;
  /// Points in [lo, hi] where the extension may change value.
  std::vector<RPi> breakpoints_in(const RPi& lo, const RPi& hi) const;
};

struct WaveletPiece {
  IntervalSet domain;
  QSqrt2Complex value;
};

/// Frequency-domain ψ̂, piecewise constant with Q(√2)-complex values and
/// bounded support.
class PiecewiseWavelet {
 public:
  PiecewiseWavelet() = default;
  PiecewiseWavelet(StepFn<QSqrt2Complex> values, int d);

  /// χ_W
  static PiecewiseWavelet indicator(const IntervalSet& w, int d);
  /// Throws std::invalid_argument if two domains overlap.
  static PiecewiseWavelet from_pieces(const std::vector<WaveletPiece>& pieces, int d);

  int d() const { return d_; }
  const StepFn<QSqrt2Complex>& values() const { return values_; }
  const QSqrt2Complex& operator()(const RPi& x) const { return values_(x); }
  IntervalSet support() const { return values_.support(); }
  /// One piece per distinct nonzero value, ordered by leftmost point.
  std::vector<WaveletPiece> pieces() const;

  friend bool operator==(const PiecewiseWavelet&, const PiecewiseWavelet&) = default;

 private:
  StepFn<QSqrt2Complex> values_;
  int d_ = 2;
};

/// One cell of W1 with the matrix [[h1(ξ), h2(ξ)], [h2(σ⁻¹ξ), h1(σ⁻¹ξ)]]
/// (row-major) and M·M*.
struct UnitaryCell {
  Interval cell;
  std::int64_t sigma_offset = 0;
  bool covered = true;
  std::array<SymbolicScalar, 4> matrix;
  std::array<SymbolicScalar, 4> product;
  bool unitary() const;
};

/// Cells of W1 refined by the σ branches and the h pieces on both sides.
/// σ⁻¹ is evaluated as σ; callers check involutivity separately.
std::vector<UnitaryCell> unitary_cells(const DilationPeriodicFn& h1, const DilationPeriodicFn& h2,
                                       const TranslationMap& s);

VerificationReport check_unitary(const DilationPeriodicFn& h1, const DilationPeriodicFn& h2, const TranslationMap& s);

/// Involutivity of σ and unitarity of the coefficient matrix.
VerificationReport interpolation_preconditions(const DilationPeriodicFn& h1, const DilationPeriodicFn& h2,
                                               const TranslationMap& s);

/// ψ̂ = h1·χ_{W1} + h2·χ_{W2}. Throws PreconditionError when σ is not
/// involutive or the matrix is not unitary.
PiecewiseWavelet interpolate(const IntervalSet& w1, const IntervalSet& w2, const DilationPeriodicFn& h1,
                             const DilationPeriodicFn& h2, const TranslationMap& s);

}  // namespace wsets
