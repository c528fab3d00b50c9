#include "wsets/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsets {

Interval::Interval(RPi lo, RPi hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw std::invalid_argument("empty interval [" + lo_.str() + ", " + hi_.str() + ")");
}

namespace {

std::vector<Interval> normalize(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
  std::vector<Interval> out;
  out.reserve(v.size());
  for (auto& iv : v) {
    if (!out.empty() && iv.lo() <= out.back().hi()) {
      if (out.back().hi() < iv.hi()) out.back() = Interval(out.back().lo(), iv.hi());
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

bool apply(SetOp op, bool a, bool b) {
  switch (op) {
    case SetOp::union_: return a || b;
    case SetOp::intersect: return a && b;
    case SetOp::difference: return a && !b;
    case SetOp::symmetric_difference: return a != b;
  }
  return false;
}

}  // namespace

IntervalSet::IntervalSet(std::initializer_list<std::pair<RPi, RPi>> raw)
    : IntervalSet(from_pairs(std::vector<std::pair<RPi, RPi>>(raw))) {}

IntervalSet IntervalSet::from_pairs(const std::vector<std::pair<RPi, RPi>>& raw) {
  std::vector<Interval> v;
  v.reserve(raw.size());
  for (const auto& [lo, hi] : raw) {
    if (lo < hi) v.emplace_back(lo, hi);
  }
  return IntervalSet(normalize(std::move(v)), 0);
}

IntervalSet IntervalSet::from_intervals(std::vector<Interval> pieces) {
  return IntervalSet(normalize(std::move(pieces)), 0);
}

IntervalSet IntervalSet::span(const RPi& lo, const RPi& hi) {
  if (!(lo < hi)) return IntervalSet();
  return IntervalSet(Interval(lo, hi));
}

std::optional<Interval> IntervalSet::piece_at(const RPi& x) const {
  // first piece with hi > x
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const RPi& v, const Interval& iv) { return v < iv.hi(); });
  if (it != pieces_.end() && it->lo() <= x) return *it;
  return std::nullopt;
}

bool IntervalSet::contains(const RPi& x) const { return piece_at(x).has_value(); }

RPi IntervalSet::measure() const {
  RPi total;
  for (const auto& p : pieces_) total += p.length();
  return total;
}

std::vector<RPi> IntervalSet::endpoints() const {
  std::vector<RPi> out;
  out.reserve(2 * pieces_.size());
  for (const auto& p : pieces_) {
    out.push_back(p.lo());
    out.push_back(p.hi());
  }
  return out;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  return set_op(SetOp::difference, *this, other).empty();
}

std::string IntervalSet::str() const {
  if (pieces_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " u ";
    out += pieces_[i].str();
  }
  return out;
}

IntervalSet set_op(SetOp op, const IntervalSet& a, const IntervalSet& b) {
  std::vector<RPi> pts = a.endpoints();
  const auto eb = b.endpoints();
  pts.insert(pts.end(), eb.begin(), eb.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const auto& pa = a.pieces();
  const auto& pb = b.pieces();
  std::size_t ia = 0;
  std::size_t ib = 0;
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const RPi& x = pts[i];
    while (ia < pa.size() && pa[ia].hi() <= x) ++ia;
    while (ib < pb.size() && pb[ib].hi() <= x) ++ib;
    const bool in_a = ia < pa.size() && pa[ia].lo() <= x;
    const bool in_b = ib < pb.size() && pb[ib].lo() <= x;
    if (!apply(op, in_a, in_b)) continue;
    if (!out.empty() && out.back().hi() == x) {
      out.back() = Interval(out.back().lo(), pts[i + 1]);
    } else {
      out.emplace_back(x, pts[i + 1]);
    }
  }
  return IntervalSet::from_intervals(std::move(out));
}

IntervalSet dilate(const IntervalSet& s, const Rational& factor) {
  if (factor == 0) throw std::invalid_argument("dilation by zero");
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& p : s.pieces()) {
    RPi lo = p.lo() * factor;
    RPi hi = p.hi() * factor;
    if (factor < 0) std::swap(lo, hi);
    out.emplace_back(std::move(lo), std::move(hi));
  }
  return IntervalSet::from_intervals(std::move(out));
}

IntervalSet translate(const IntervalSet& s, const RPi& t) {
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& p : s.pieces()) out.emplace_back(p.lo() + t, p.hi() + t);
  return IntervalSet::from_intervals(std::move(out));
}

std::vector<Interval> atoms(const IntervalSet& s, std::vector<RPi> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> out;
  for (const auto& p : s.pieces()) {
    RPi cur = p.lo();
    auto it = std::upper_bound(cuts.begin(), cuts.end(), cur);
    for (; it != cuts.end() && *it < p.hi(); ++it) {
      out.emplace_back(cur, *it);
      cur = *it;
    }
    out.emplace_back(cur, p.hi());
  }
  return out;
}

}  // namespace wsets
