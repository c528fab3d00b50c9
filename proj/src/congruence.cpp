#include "wsets/congruence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wsets/folding.hpp"

namespace wsets {

namespace {

void sort_unique(std::vector<RPi>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// First cell of `f` inside `region` whose value is not `v`.
std::optional<StepFn<Count>::Cell> first_cell_not(const StepFn<Count>& f, const IntervalSet& region, Count v) {
  for (const auto& piece : region.pieces()) {
    for (auto& c : f.cells(piece.lo(), piece.hi())) {
      if (c.value != v) return c;
    }
  }
  return std::nullopt;
}

std::string count_detail(const StepFn<Count>::Cell& c) {
  return "multiplicity " + std::to_string(c.value) + " on " + c.span.str();
}

}  // namespace

RPi domain_start(FundamentalDomain domain) {
  return domain == FundamentalDomain::symmetric ? RPi(-1) : RPi(0);
}

Interval domain_interval(FundamentalDomain domain) {
  const RPi s = domain_start(domain);
  return Interval(s, s + RPi(2));
}

std::vector<StepFn<Count>::Cell> MultiplicityFn::cells() const {
  const Interval dom = domain_interval(domain);
  return step.cells(dom.lo(), dom.hi());
}

Count MultiplicityFn::max() const {
  Count best = 0;
  for (const auto& c : cells()) best = std::max(best, c.value);
  return best;
}

std::optional<StepFn<Count>::Cell> MultiplicityFn::first_cell_not(Count v) const {
  return wsets::first_cell_not(step, IntervalSet(domain_interval(domain)), v);
}

MultiplicityFn MultiplicityFn::from_rows(FundamentalDomain domain, std::vector<std::tuple<RPi, RPi, Count>> rows) {
  std::erase_if(rows, [](const auto& r) { return !(std::get<0>(r) < std::get<1>(r)); });
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
  const Interval dom = domain_interval(domain);
  RPi cursor = dom.lo();
  std::vector<RPi> breaks;
  std::vector<Count> values{0};
  for (const auto& [lo, hi, v] : rows) {
    if (lo != cursor) throw std::invalid_argument("multiplicity rows leave a gap or overlap at " + cursor.str());
    if (v < 0) throw std::invalid_argument("negative multiplicity");
    breaks.push_back(lo);
    values.push_back(v);
    cursor = hi;
  }
  if (cursor != dom.hi()) throw std::invalid_argument("multiplicity rows stop at " + cursor.str());
  breaks.push_back(cursor);
  values.push_back(0);
  return MultiplicityFn{domain, StepFn<Count>::from_cells(std::move(breaks), std::move(values))};
}

MultiplicityFn wrap_multiplicity(const IntervalSet& s, FundamentalDomain domain) {
  const RPi start = domain_start(domain);
  std::vector<std::pair<Interval, Count>> parts;
  for (const auto& p : s.pieces()) {
    for (auto& [k, frag] : wrap_fragments(p, start)) parts.emplace_back(frag, 1);
  }
  return MultiplicityFn{domain, StepFn<Count>::from_weighted(parts)};
}

std::vector<RPi> wrap_cuts(const IntervalSet& s) {
  std::vector<RPi> cuts{RPi(0), RPi(2)};
  for (const auto& p : s.pieces()) {
    for (auto& [k, frag] : wrap_fragments(p, RPi(0))) {
      cuts.push_back(frag.lo());
      cuts.push_back(frag.hi());
    }
  }
  sort_unique(cuts);
  return cuts;
}

std::vector<SheetCell> sheet_cells(const IntervalSet& s, const std::vector<RPi>& cuts_in) {
  std::vector<RPi> cuts = cuts_in;
  cuts.push_back(RPi(0));
  cuts.push_back(RPi(2));
  sort_unique(cuts);
  std::vector<std::pair<std::int64_t, Interval>> frags;
  for (const auto& p : s.pieces()) {
    auto f = wrap_fragments(p, RPi(0));
    frags.insert(frags.end(), f.begin(), f.end());
  }
  std::vector<SheetCell> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] < RPi(0) || RPi(2) < cuts[i + 1]) continue;
    SheetCell cell{Interval(cuts[i], cuts[i + 1]), {}};
    for (const auto& [k, f] : frags) {
      if (f.lo() <= cuts[i] && cuts[i + 1] <= f.hi()) cell.offsets.push_back(k);
    }
    std::sort(cell.offsets.begin(), cell.offsets.end());
    out.push_back(std::move(cell));
  }
  return out;
}

CongruenceResult translation_congruent(const IntervalSet& g, const IntervalSet& h, SheetMatching matching) {
  std::vector<RPi> cuts = wrap_cuts(g);
  const auto hc = wrap_cuts(h);
  cuts.insert(cuts.end(), hc.begin(), hc.end());
  sort_unique(cuts);
  const auto gs = sheet_cells(g, cuts);
  const auto hs = sheet_cells(h, cuts);

  std::map<std::int64_t, std::vector<Interval>> by_offset;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const auto& cell = gs[i].cell;
    std::vector<std::int64_t> from = gs[i].offsets;
    std::vector<std::int64_t> to = hs[i].offsets;
    if (from.size() != to.size()) {
      return CongruenceResult{std::nullopt, CongruenceFailure{cell, static_cast<Count>(from.size()),
                                                              static_cast<Count>(to.size())}};
    }
    auto emit = [&](std::int64_t gk, std::int64_t hk) {
      const RPi lift = two_pi_times(gk);
      by_offset[hk - gk].emplace_back(cell.lo() + lift, cell.hi() + lift);
    };
    if (matching == SheetMatching::identity_first) {
      std::vector<std::int64_t> common;
      std::set_intersection(from.begin(), from.end(), to.begin(), to.end(), std::back_inserter(common));
      for (auto k : common) emit(k, k);
      std::vector<std::int64_t> rf;
      std::vector<std::int64_t> rt;
      std::set_difference(from.begin(), from.end(), common.begin(), common.end(), std::back_inserter(rf));
      std::set_difference(to.begin(), to.end(), common.begin(), common.end(), std::back_inserter(rt));
      from = std::move(rf);
      to = std::move(rt);
    }
    for (std::size_t j = 0; j < from.size(); ++j) emit(from[j], to[j]);
  }

  CongruenceMap map{{}, g, h};
  for (auto& [offset, pieces] : by_offset) {
    map.branches.push_back({IntervalSet::from_intervals(std::move(pieces)), offset});
  }
  return CongruenceResult{std::move(map), std::nullopt};
}

VerificationReport check_congruence_map(const CongruenceMap& map) {
  VerificationReport report("congruence map partition check");
  IntervalSet src_union;
  IntervalSet dst_union;
  RPi src_total;
  RPi dst_total;
  for (const auto& b : map.branches) {
    const IntervalSet image = translate(b.piece, two_pi_times(b.offset));
    src_union = src_union | b.piece;
    dst_union = dst_union | image;
    src_total += b.piece.measure();
    dst_total += image.measure();
  }
  report.add("source_pieces_disjoint", src_total == src_union.measure(),
             "sum " + src_total.str() + " vs union " + src_union.measure().str());
  report.add("source_covered", src_union == map.source).witness = src_union ^ map.source;
  report.add("target_pieces_disjoint", dst_total == dst_union.measure(),
             "sum " + dst_total.str() + " vs union " + dst_union.measure().str());
  report.add("target_covered", dst_union == map.target).witness = dst_union ^ map.target;
  return report;
}

bool DilationMultiplicity::tiles() const {
  return zero_fiber.empty() && !first_cell_not(counts, dilation_domain(d), 1).has_value();
}

DilationMultiplicity dilation_multiplicity(const IntervalSet& s, int d) {
  if (d < 2) throw std::invalid_argument("dilation factor must be >= 2");
  const IntervalSet core = IntervalSet::span(RPi(-1), RPi(1));
  std::vector<Interval> zero_parts;
  std::vector<std::pair<Interval, Count>> parts;
  for (const auto& p : s.pieces()) {
    IntervalSet rest(p);
    if (p.lo() <= RPi() && RPi() <= p.hi()) {
      const IntervalSet z = rest & core;
      zero_parts.insert(zero_parts.end(), z.pieces().begin(), z.pieces().end());
      rest = rest - core;
    }
    for (const auto& q : rest.pieces()) {
      for (auto& [j, frag] : shell_fragments(q, d)) parts.emplace_back(frag, 1);
    }
  }
  return DilationMultiplicity{d, StepFn<Count>::from_weighted(parts), IntervalSet::from_intervals(zero_parts)};
}

VerificationReport is_wavelet_set(const IntervalSet& s, int d) {
  VerificationReport report("wavelet set check, dilation " + std::to_string(d));
  const MultiplicityFn m = wrap_multiplicity(s, FundamentalDomain::positive);
  const auto bad = m.first_cell_not(1);
  Check& t = report.add("translation_tiling", !bad, bad ? count_detail(*bad) : "multiplicity 1 on [0, 2pi)");
  if (bad) t.witness = IntervalSet(bad->span);

  const DilationMultiplicity dm = dilation_multiplicity(s, d);
  if (!dm.zero_fiber.empty()) {
    Check& c = report.add("dilation_tiling", false, "set accumulates at 0; infinitely many dilates overlap");
    c.witness = dm.zero_fiber;
  } else {
    const auto dbad = first_cell_not(dm.counts, dilation_domain(d), 1);
    Check& c = report.add("dilation_tiling", !dbad,
                          dbad ? count_detail(*dbad) : "multiplicity 1 on [-d pi, -pi) u [pi, d pi)");
    if (dbad) c.witness = IntervalSet(dbad->span);
  }
  return report;
}

VerificationReport check_consistency(const MultiplicityFn& m, int d) {
  if (m.domain != FundamentalDomain::symmetric) {
    throw std::invalid_argument("consistency equation is stated on [-pi, pi)");
  }
  if (d < 2) throw std::invalid_argument("dilation factor must be >= 2");
  VerificationReport report("consistency equation m(w) + 1 = sum_i m(w/d + 2 pi i/d), d = " + std::to_string(d));
  const RPi lo(-1);
  const RPi hi(1);
  std::vector<RPi> base{lo, hi};
  for (const auto& b : m.step.breaks()) {
    if (lo <= b && b <= hi) base.push_back(b);
  }
  std::vector<RPi> grid = base;
  const RPi period = RPi(2 * d);
  for (const auto& b : base) {
    for (int i = 0; i < d; ++i) {
      // ω with ω/d + 2πi/d = b, then every 2πd-translate inside [-π, π]
      const RPi w0 = b * Rational(d) - RPi(2 * i);
      Integer n = floor_of(Rational((lo - w0) / period));
      for (RPi w = w0 + period * Rational(n); w <= hi; w += period) {
        if (lo <= w) grid.push_back(w);
      }
    }
  }
  sort_unique(grid);
  std::size_t checked = 0;
  for (const auto& cell : atoms(IntervalSet::span(lo, hi), grid)) {
    const RPi& w = cell.lo();
    const Count lhs = m(w) + 1;
    Count rhs = 0;
    for (int i = 0; i < d; ++i) rhs += m(reduce_symmetric(w / Rational(d) + RPi(make_rational(2 * i, d))));
    ++checked;
    if (lhs != rhs) {
      Check& c = report.add("consistency_equation", false,
                            "m = " + std::to_string(lhs - 1) + ", lhs " + std::to_string(lhs) + " != rhs " +
                                std::to_string(rhs) + " on " + cell.str());
      c.witness = IntervalSet(cell);
      return report;
    }
  }
  report.add("consistency_equation", true, "holds on all " + std::to_string(checked) + " cells");
  return report;
}

MerrillResult check_merrill(const IntervalSet& e, int d, long max_exponent) {
  if (d < 2) throw std::invalid_argument("dilation factor must be >= 2");
  MerrillResult out;
  out.report.set_header("Merrill conditions, d = " + std::to_string(d));
  const IntervalSet de = dilate(e, Rational(d));
  out.wavelet_set = de - e;

  out.report.merge(check_consistency(wrap_multiplicity(e), d), "multiplicity");

  const IntervalSet missing = e - de;
  out.report.add("scaling_inclusion", missing.empty(), missing.empty() ? "E is contained in dE" : "E \\ dE nonempty")
      .witness = missing;

  std::optional<RPi> gap;
  for (const auto& x : e.endpoints()) {
    if (x.is_zero()) continue;
    const RPi ax = abs(x);
    if (!gap || ax < *gap) gap = ax;
  }
  if (!gap) {
    out.report.add("neighborhood_of_zero", false, "empty set");
    return out;
  }
  out.epsilon = *gap / Rational(2);
  const IntervalSet nbhd = IntervalSet::span(-out.epsilon, out.epsilon);
  IntervalSet cover = e;
  IntervalSet uncovered = nbhd - cover;
  for (long j = 0;; ++j) {
    if (uncovered.empty()) {
      out.cover_exponent = j;
      break;
    }
    if (j == max_exponent) break;
    cover = cover | dilate(e, dpow(d, j + 1));
    uncovered = nbhd - cover;
  }
  const std::string eps = out.epsilon.str();
  Check& c = out.report.add(
      "neighborhood_of_zero", out.cover_exponent.has_value(),
      out.cover_exponent ? "union of d^j E, j <= " + std::to_string(*out.cover_exponent) + ", covers (-" + eps + ", " + eps + ")"
                         : "(-" + eps + ", " + eps + ") not covered by d^j E, j <= " + std::to_string(max_exponent));
  if (!out.cover_exponent) c.witness = uncovered;
  return out;
}

IntervalSet congruence_section(const IntervalSet& e) {
  std::vector<Interval> chosen;
  for (const auto& sc : sheet_cells(e, wrap_cuts(e))) {
    const auto& ks = sc.offsets;
    if (ks.empty()) {
      throw WitnessError("2pi-translates of the set do not cover " + sc.cell.str(), IntervalSet(sc.cell));
    }
    std::int64_t pick;
    if (std::binary_search(ks.begin(), ks.end(), 0)) {
      pick = 0;
    } else if (auto pos = std::upper_bound(ks.begin(), ks.end(), 0); pos != ks.end()) {
      pick = *pos;
    } else {
      pick = ks.back();
    }
    const RPi lift = two_pi_times(pick);
    chosen.emplace_back(sc.cell.lo() + lift, sc.cell.hi() + lift);
  }
  return IntervalSet::from_intervals(std::move(chosen));
}

}  // namespace wsets
