#include "wsets/translation_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsets/folding.hpp"

namespace wsets {

TranslationMap TranslationMap::identity(const IntervalSet& s, int d) {
  TranslationMap m{{}, s, s, d};
  if (!s.empty()) m.branches.push_back({s, 0});
  return m;
}

std::optional<std::int64_t> TranslationMap::offset_at(const RPi& x) const {
  for (const auto& b : branches) {
    if (b.piece.contains(x)) return b.offset;
  }
  return std::nullopt;
}

std::optional<RPi> try_sigma_eval(const TranslationMap& s, const RPi& x, long bound) {
  if (x.is_zero()) return std::nullopt;
  const auto n = dilation_exponent_into(s.source, x, s.d, bound);
  if (!n) return std::nullopt;
  const auto k = s.offset_at(x * dpow(s.d, *n));
  if (!k) return std::nullopt;
  return x + two_pi_times(*k) * dpow(s.d, -*n);
}

RPi sigma_eval(const TranslationMap& s, const RPi& x, long bound) {
  auto y = try_sigma_eval(s, x, bound);
  if (!y) {
    throw std::domain_error("no dilate d^n x with |n| <= " + std::to_string(bound) + " lies in the source (x = " +
                            x.str() + ")");
  }
  return *y;
}

std::vector<RPi> sigma_breakpoints_in(const TranslationMap& s, const RPi& lo, const RPi& hi) {
  std::vector<RPi> out;
  for (const auto& b : s.branches) {
    for (const auto& e : b.piece.endpoints()) {
      if (e.is_zero()) continue;
      auto orbit = dilation_orbit_in(e, s.d, lo, hi);
      out.insert(out.end(), orbit.begin(), orbit.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationReport check_translation_map(const TranslationMap& s) {
  return check_congruence_map(CongruenceMap{s.branches, s.source, s.target});
}

VerificationReport is_involutive(const TranslationMap& s) {
  VerificationReport report("sigma o sigma = id on the source, d = " + std::to_string(s.d));
  std::size_t cells = 0;
  for (const auto& b : s.branches) {
    const RPi t1 = two_pi_times(b.offset);
    for (const auto& p : b.piece.pieces()) {
      // cut P where σ, applied to P + t1, changes branch
      std::vector<RPi> cuts;
      for (auto& c : sigma_breakpoints_in(s, p.lo() + t1, p.hi() + t1)) cuts.push_back(c - t1);
      for (const auto& cell : atoms(IntervalSet(p), cuts)) {
        ++cells;
        const RPi y = cell.lo() + t1;
        const auto z = try_sigma_eval(s, y);
        if (!z) {
          Check& c = report.add("involutive", false,
                                "sigma(" + y.str() + ") undefined within |n| <= " + std::to_string(kExtensionBound));
          c.witness = IntervalSet(cell);
          c.offset = b.offset;
          return report;
        }
        // σσ(x) = x + (z - x) on the whole cell: both steps are translations
        const RPi drift = *z - cell.lo();
        if (!drift.is_zero()) {
          Check& c = report.add("involutive", false, "sigma(sigma(x)) = x + " + drift.str() + " on " + cell.str());
          c.witness = IntervalSet(cell);
          c.offset = b.offset;
          return report;
        }
      }
    }
  }
  report.add("involutive", true, "identity on all " + std::to_string(cells) + " cells");
  return report;
}

TranslationMap derive_sigma(const IntervalSet& w1, const IntervalSet& w2, int d) {
  auto r = translation_congruent(w1, w2, SheetMatching::identity_first);
  if (!r.ok()) {
    const auto& f = *r.failure;
    throw WitnessError("sets are not 2pi translation congruent: multiplicities " + std::to_string(f.source_count) +
                           " vs " + std::to_string(f.target_count) + " on " + f.cell.str(),
                       IntervalSet(f.cell));
  }
  return TranslationMap{std::move(r.map->branches), w1, w2, d};
}

bool same_branches(const TranslationMap& a, const TranslationMap& b) {
  auto key = [](const TranslationMap& m) {
    std::vector<CongruenceBranch> v;
    for (const auto& br : m.branches) {
      if (!br.piece.empty()) v.push_back(br);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.offset < y.offset; });
    return v;
  };
  return a.d == b.d && key(a) == key(b);
}

}  // namespace wsets
