#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wsets/interval_set.hpp"
#include "wsets/qsqrt2.hpp"

namespace wsets {

using Count = std::int64_t;

/// Piecewise-constant function on the real line with RPi breakpoints.
///
/// With breakpoints b_0 < ... < b_{n-1}, values_[0] holds the value on
/// (-inf, b_0), values_[i] the value on [b_{i-1}, b_i), and values_[n] the
/// value on [b_{n-1}, inf). The representation is normalized: adjacent cells
/// never carry equal values, so equality of functions is equality of
/// representations.
template <class V>
class StepFn {
 public:
  struct Cell {
    Interval span;
    V value;
  };

  explicit StepFn(V constant = V{}) : values_{std::move(constant)} {}

  /// `values.size()` must equal `breaks.size() + 1`; breaks strictly increasing.
  static StepFn from_cells(std::vector<RPi> breaks, std::vector<V> values) {
    if (values.size() != breaks.size() + 1) throw std::invalid_argument("StepFn: values/breaks size mismatch");
    for (std::size_t i = 1; i < breaks.size(); ++i) {
      if (!(breaks[i - 1] < breaks[i])) throw std::invalid_argument("StepFn: breakpoints not increasing");
    }
    StepFn f;
    f.breaks_ = std::move(breaks);
    f.values_ = std::move(values);
    f.normalize();
    return f;
  }

  /// Sum of value·χ_I over the given weighted intervals, on top of `base`.
  static StepFn from_weighted(const std::vector<std::pair<Interval, V>>& parts, V base = V{}) {
    std::vector<std::pair<RPi, V>> events;
    events.reserve(2 * parts.size());
    for (const auto& [iv, w] : parts) {
      events.emplace_back(iv.lo(), w);
      events.emplace_back(iv.hi(), V{} - w);
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RPi> breaks;
    std::vector<V> values{base};
    V running = base;
    for (std::size_t i = 0; i < events.size();) {
      const RPi at = events[i].first;
      for (; i < events.size() && events[i].first == at; ++i) running = running + events[i].second;
      breaks.push_back(at);
      values.push_back(running);
    }
    return from_cells(std::move(breaks), std::move(values));
  }

  /// value·χ_S
  static StepFn indicator(const IntervalSet& s, const V& value) {
    std::vector<std::pair<Interval, V>> parts;
    for (const auto& p : s.pieces()) parts.emplace_back(p, value);
    return from_weighted(parts);
  }

  const std::vector<RPi>& breaks() const { return breaks_; }
  const std::vector<V>& values() const { return values_; }

  const V& operator()(const RPi& x) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return values_[static_cast<std::size_t>(it - breaks_.begin())];
  }

  /// Cells of the restriction to [lo, hi), in increasing order.
  std::vector<Cell> cells(const RPi& lo, const RPi& hi) const {
    std::vector<Cell> out;
    if (!(lo < hi)) return out;
    RPi cur = lo;
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), lo);
    for (; it != breaks_.end() && *it < hi; ++it) {
      out.push_back({Interval(cur, *it), (*this)(cur)});
      cur = *it;
    }
    out.push_back({Interval(cur, hi), (*this)(cur)});
    return out;
  }

  /// Bounded cells whose value differs from `background`.
  std::vector<Cell> support_cells(const V& background = V{}) const {
    std::vector<Cell> out;
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
      if (!(values_[i + 1] == background)) out.push_back({Interval(breaks_[i], breaks_[i + 1]), values_[i + 1]});
    }
    return out;
  }

  /// {x : f(x) != background} for a function that equals background outside
  /// its breakpoint range.
  IntervalSet support(const V& background = V{}) const {
    std::vector<Interval> v;
    for (auto& c : support_cells(background)) v.push_back(c.span);
    return IntervalSet::from_intervals(std::move(v));
  }

  template <class F>
  auto map(F&& fn) const -> StepFn<std::decay_t<decltype(fn(std::declval<const V&>()))>> {
    using R = std::decay_t<decltype(fn(std::declval<const V&>()))>;
    std::vector<R> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(fn(v));
    return StepFn<R>::from_cells(breaks_, std::move(vals));
  }

  /// x ↦ f(x - t)
  StepFn shifted(const RPi& t) const {
    std::vector<RPi> b;
    b.reserve(breaks_.size());
    for (const auto& x : breaks_) b.push_back(x + t);
    return from_cells(std::move(b), values_);
  }

  /// x ↦ f(x / factor), factor > 0.
  StepFn dilated(const Rational& factor) const {
    if (factor <= 0) throw std::invalid_argument("StepFn::dilated needs a positive factor");
    std::vector<RPi> b;
    b.reserve(breaks_.size());
    for (const auto& x : breaks_) b.push_back(x * factor);
    return from_cells(std::move(b), values_);
  }

  friend bool operator==(const StepFn&, const StepFn&) = default;

 private:
  void normalize() {
    std::vector<RPi> b;
    std::vector<V> v{values_.front()};
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
      if (values_[i + 1] == v.back()) continue;
      b.push_back(breaks_[i]);
      v.push_back(values_[i + 1]);
    }
    breaks_ = std::move(b);
    values_ = std::move(v);
  }

  std::vector<RPi> breaks_;
  std::vector<V> values_;
};

/// Union of the two breakpoint grids.
template <class V, class W>
std::vector<RPi> refine(const StepFn<V>& f, const StepFn<W>& g) {
  std::vector<RPi> out;
  std::merge(f.breaks().begin(), f.breaks().end(), g.breaks().begin(), g.breaks().end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Pointwise op over the merged grid.
template <class V, class W, class F>
auto combine(const StepFn<V>& f, const StepFn<W>& g, F&& op)
    -> StepFn<std::decay_t<decltype(op(std::declval<const V&>(), std::declval<const W&>()))>> {
  using R = std::decay_t<decltype(op(std::declval<const V&>(), std::declval<const W&>()))>;
  std::vector<RPi> grid = refine(f, g);
  std::vector<R> vals;
  vals.reserve(grid.size() + 1);
  vals.push_back(op(f.values().front(), g.values().front()));
  for (const auto& x : grid) vals.push_back(op(f(x), g(x)));
  return StepFn<R>::from_cells(std::move(grid), std::move(vals));
}

template <class V>
StepFn<V> operator+(const StepFn<V>& f, const StepFn<V>& g) {
  return combine(f, g, [](const V& a, const V& b) { return a + b; });
}

template <class V>
StepFn<V> operator*(const StepFn<V>& f, const StepFn<V>& g) {
  return combine(f, g, [](const V& a, const V& b) { return a * b; });
}

}  // namespace wsets
