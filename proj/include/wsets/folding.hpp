#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wsets/interval_set.hpp"

namespace wsets {

/// Splits `piece` along the lattice start + 2πZ. Each result (k, frag) has
/// frag ⊆ [start, start + 2π) and frag + 2πk a sub-piece of `piece`.
std::vector<std::pair<std::int64_t, Interval>> wrap_fragments(const Interval& piece, const RPi& start);

/// Largest j with d^j <= m, for m > 0.
long shell_floor(const Rational& m, int d);

/// d^j as a rational, j of any sign.
Rational dpow(int d, long j);

/// Dilation fundamental domain [-dπ, -π) ∪ [π, dπ).
IntervalSet dilation_domain(int d);

/// Splits `piece` (whose closure must not contain 0) along the shells
/// d^j·F. Each result (j, frag) has frag ⊆ F and d^j·frag a sub-piece.
std::vector<std::pair<long, Interval>> shell_fragments(const Interval& piece, int d);

/// All d^j·x (j ∈ Z, |j| <= bound) inside [lo, hi]. x must be nonzero.
std::vector<RPi> dilation_orbit_in(const RPi& x, int d, const RPi& lo, const RPi& hi, long bound = 128);

/// Some n with |n| <= bound and d^n·x ∈ target, searching only the shells
/// that can reach target. x must be nonzero.
std::optional<long> dilation_exponent_into(const IntervalSet& target, const RPi& x, int d, long bound = 128);

}  // namespace wsets
