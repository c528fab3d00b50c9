#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsets/rpi.hpp"

namespace wsets {

/// Half-open [lo, hi) with lo < hi.
class Interval {
 public:
  Interval(RPi lo, RPi hi);

  const RPi& lo() const { return lo_; }
  const RPi& hi() const { return hi_; }
  RPi length() const { return hi_ - lo_; }
  bool contains(const RPi& x) const { return lo_ <= x && x < hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + ")"; }

 private:
  RPi lo_;
  RPi hi_;
};

enum class SetOp { union_, intersect, difference, symmetric_difference };

/// Finite disjoint union of half-open intervals, kept normalized: pieces are
/// sorted, pairwise disjoint and never adjacent. Two sets are equal iff their
/// normalized piece lists are equal.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(const Interval& piece) : pieces_{piece} {}
  /// Accepts any list of (lo, hi) pairs; empty or reversed pairs are dropped.
  IntervalSet(std::initializer_list<std::pair<RPi, RPi>> raw);

  static IntervalSet from_pairs(const std::vector<std::pair<RPi, RPi>>& raw);
  static IntervalSet from_intervals(std::vector<Interval> pieces);
  static IntervalSet span(const RPi& lo, const RPi& hi);

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  bool contains(const RPi& x) const;
  /// Piece containing x, if any.
  std::optional<Interval> piece_at(const RPi& x) const;
  RPi measure() const;
  /// Smallest lo / largest hi. Precondition: non-empty.
  const RPi& inf() const { return pieces_.front().lo(); }
  const RPi& sup() const { return pieces_.back().hi(); }
  RPi diameter() const { return empty() ? RPi() : sup() - inf(); }
  /// All piece endpoints in increasing order.
  std::vector<RPi> endpoints() const;

  bool subset_of(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  std::string str() const;

 private:
  explicit IntervalSet(std::vector<Interval> normalized, int) : pieces_(std::move(normalized)) {}
  std::vector<Interval> pieces_;
};

IntervalSet set_op(SetOp op, const IntervalSet& a, const IntervalSet& b);

inline IntervalSet operator|(const IntervalSet& a, const IntervalSet& b) { return set_op(SetOp::union_, a, b); }
inline IntervalSet operator&(const IntervalSet& a, const IntervalSet& b) { return set_op(SetOp::intersect, a, b); }
inline IntervalSet operator-(const IntervalSet& a, const IntervalSet& b) { return set_op(SetOp::difference, a, b); }
inline IntervalSet operator^(const IntervalSet& a, const IntervalSet& b) {
  return set_op(SetOp::symmetric_difference, a, b);
}

/// {factor·x : x ∈ s}. Throws std::invalid_argument for factor 0.
IntervalSet dilate(const IntervalSet& s, const Rational& factor);
IntervalSet translate(const IntervalSet& s, const RPi& t);
inline RPi measure(const IntervalSet& s) { return s.measure(); }

/// Splits every piece of `s` at the given points (sorted or not) and returns
/// the resulting atoms in increasing order.
std::vector<Interval> atoms(const IntervalSet& s, std::vector<RPi> cuts);

}  // namespace wsets
