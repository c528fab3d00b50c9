#include "wsets/invariance.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "wsets/folding.hpp"

namespace wsets {

std::vector<std::int64_t> SelfSimilaritySet::ks() const {
  std::vector<std::int64_t> out;
  for (const auto& o : offsets) out.push_back(o.k);
  return out;
}

const SelfSimilarOffset* SelfSimilaritySet::find(std::int64_t k) const {
  for (const auto& o : offsets) {
    if (o.k == k) return &o;
  }
  return nullptr;
}

SelfSimilaritySet self_similarity_set(const IntervalSet& supp) {
  // Candidates k > 0: some pair of pieces p, q with (q - 2πk) ∩ p of positive
  // length, i.e. (q.lo - p.hi)/2π < k < (q.hi - p.lo)/2π.
  std::set<std::int64_t> candidates;
  const auto& ps = supp.pieces();
  for (const auto& p : ps) {
    for (const auto& q : ps) {
      const Rational lo = (q.lo() - p.hi()) / RPi(2);
      const Rational hi = (q.hi() - p.lo()) / RPi(2);
      Integer k = floor_of(lo) + 1;
      if (k < 1) k = 1;
      for (; k < hi; ++k) candidates.insert(k.get_si());
    }
  }
  SelfSimilaritySet out;
  std::vector<SelfSimilarOffset> negative;
  for (std::int64_t k : candidates) {
    IntervalSet overlap = supp & translate(supp, -two_pi_times(k));
    if (overlap.empty()) continue;
    negative.push_back({-k, translate(overlap, two_pi_times(k))});
    out.offsets.push_back({k, std::move(overlap)});
  }
  std::reverse(negative.begin(), negative.end());
  negative.insert(negative.end(), std::make_move_iterator(out.offsets.begin()),
                  std::make_move_iterator(out.offsets.end()));
  out.offsets = std::move(negative);
  return out;
}

long divisor_exponent(std::int64_t k, int d) {
  if (k == 0) throw std::invalid_argument("divisor_exponent of 0");
  long n = 0;
  while (k % d == 0) {
    k /= d;
    ++n;
  }
  return n;
}

OrderResult invariance_order(const PiecewiseWavelet& psi) {
  OrderResult r;
  r.certificate = self_similarity_set(psi.support());
  const int d = psi.d();
  if (r.certificate.empty()) {
    r.divisor_trace.push_back({Integer(1), true});
    return r;
  }
  long order = std::numeric_limits<long>::max();
  for (const auto& o : r.certificate.offsets) order = std::min(order, divisor_exponent(o.k, d));
  r.order = order;
  for (long n = 0; n <= order + 1; ++n) {
    const Integer p = ipow(d, static_cast<unsigned long>(n));
    bool all = true;
    for (const auto& o : r.certificate.offsets) all = all && mpz_divisible_p(Integer(o.k).get_mpz_t(), p.get_mpz_t());
    r.divisor_trace.push_back({p, all});
  }
  return r;
}

namespace {

bool divides(std::int64_t k, int d, long n) {
  const Integer p = ipow(d, static_cast<unsigned long>(n));
  return mpz_divisible_p(Integer(k).get_mpz_t(), p.get_mpz_t()) != 0;
}

std::int64_t section_sheet(const std::vector<std::int64_t>& ks) {
  if (std::binary_search(ks.begin(), ks.end(), 0)) return 0;
  if (auto pos = std::upper_bound(ks.begin(), ks.end(), 0); pos != ks.end()) return *pos;
  return ks.back();
}

Interval lifted(const Interval& cell, std::int64_t k) {
  const RPi t = two_pi_times(k);
  return Interval(cell.lo() + t, cell.hi() + t);
}

}  // namespace

InvarianceWitness invariance_witness(const PiecewiseWavelet& psi, long n) {
  if (n < 0) throw std::invalid_argument("invariance_witness: n must be >= 0");
  const int d = psi.d();
  const IntervalSet supp = psi.support();
  InvarianceWitness out;
  out.n = n;

  // Only-if direction: two sheets over one cell whose offsets differ by k.
  std::map<std::int64_t, std::vector<Interval>> bad;
  const auto cells = sheet_cells(supp, wrap_cuts(supp));
  for (const auto& sc : cells) {
    for (std::size_t i = 0; i < sc.offsets.size(); ++i) {
      for (std::size_t j = i + 1; j < sc.offsets.size(); ++j) {
        const std::int64_t k = sc.offsets[j] - sc.offsets[i];
        if (!divides(k, d, n)) bad[k].push_back(lifted(sc.cell, sc.offsets[i]));
      }
    }
  }
  if (!bad.empty()) {
    auto& [k, pieces] = *bad.begin();
    out.counterexample = InvarianceCounterexample{k, IntervalSet::from_intervals(pieces)};
    return out;
  }

  // If direction: section plus residual sheets at multiples of d^n.
  InvarianceCertificate cert;
  cert.section = congruence_section(supp);
  for (const auto& sc : cells) {
    const std::int64_t pick = section_sheet(sc.offsets);
    for (std::int64_t o : sc.offsets) {
      if (o == pick) continue;
      cert.residual.push_back({lifted(sc.cell, o), o - pick, divides(o - pick, d, n)});
    }
  }
  std::sort(cert.residual.begin(), cert.residual.end(),
            [](const ResidualPiece& a, const ResidualPiece& b) { return a.piece.lo() < b.piece.lo(); });
  out.certificate = std::move(cert);
  return out;
}

namespace {

void check_identically(VerificationReport& r, const std::string& name, const StepFn<QSqrt2>& f, const IntervalSet& on,
                       const QSqrt2& expect, const std::string& what) {
  for (const auto& p : on.pieces()) {
    for (const auto& c : f.cells(p.lo(), p.hi())) {
      if (!(c.value == expect)) {
        r.add(Check{name, false, what + " = " + c.value.str() + " on " + c.span.str(), IntervalSet(c.span), {}});
        return;
      }
    }
  }
  r.add(name, true, what + " = " + expect.str() + " on " + on.str());
}

}  // namespace

VerificationReport characterization_equations(const PiecewiseWavelet& psi) {
  VerificationReport r("wavelet equations, d = " + std::to_string(psi.d()) + ", normalization |psi^| = chi_W for MSF");
  const int d = psi.d();
  const auto pieces = psi.values().support_cells();

  // (a) Σ_j |ψ̂(d^j ξ)|² on [-dπ, -π) ∪ [π, dπ)
  {
    const IntervalSet dom = dilation_domain(d);
    std::vector<std::pair<Interval, QSqrt2>> parts;
    IntervalSet divergent;
    for (const auto& c : pieces) {
      const RPi& lo = c.span.lo();
      const RPi& hi = c.span.hi();
      if (lo <= RPi() && RPi() <= hi) {
        if (RPi() < hi) divergent = divergent | (dom & IntervalSet::span(RPi(), RPi(d)));
        if (lo < RPi()) divergent = divergent | (dom & IntervalSet::span(RPi(-d), RPi()));
        continue;
      }
      for (auto& [j, frag] : shell_fragments(c.span, d)) parts.emplace_back(frag, c.value.norm());
    }
    if (!divergent.empty()) {
      r.add(Check{"calderon", false, "sum over dilates diverges: support accumulates at 0", divergent, {}});
    } else {
      check_identically(r, "calderon", StepFn<QSqrt2>::from_weighted(parts), dom, QSqrt2(1),
                        "sum_j |psi^(d^j xi)|^2");
    }
  }

  // (b) Σ_k |ψ̂(ξ + 2πk)|² on [0, 2π)
  {
    std::vector<std::pair<Interval, QSqrt2>> parts;
    for (const auto& c : pieces) {
      for (auto& [k, frag] : wrap_fragments(c.span, RPi())) parts.emplace_back(frag, c.value.norm());
    }
    check_identically(r, "translates", StepFn<QSqrt2>::from_weighted(parts), IntervalSet::span(RPi(), RPi(2)),
                      QSqrt2(1), "sum_k |psi^(xi + 2pi k)|^2");
  }

  // (c) t_q = Σ_{j>=0} ψ̂(d^j ξ)·conj ψ̂(d^j ξ + 2π q d^j). A term is nonzero
  // only when m = q·d^j is an overlap offset of the support, and each such m
  // has exactly one q with d ∤ q.
  {
    const auto& f = psi.values();
    const auto conj_f = f.map([](const QSqrt2Complex& z) { return z.conj(); });
    std::map<std::int64_t, StepFn<QSqrt2Complex>> sums;
    for (const auto& o : self_similarity_set(psi.support()).offsets) {
      std::int64_t q = o.k;
      long j = 0;
      while (q % d == 0) {
        q /= d;
        ++j;
      }
      // g(x) = ψ̂(x)·conj ψ̂(x + 2πm), then ξ ↦ g(d^j ξ)
      const auto g = f * conj_f.shifted(-two_pi_times(o.k));
      const auto term = g.dilated(dpow(d, -j));
      auto [it, fresh] = sums.try_emplace(q, term);
      if (!fresh) it->second = it->second + term;
    }
    bool ok = true;
    for (const auto& [q, t] : sums) {
      const auto bad = t.support();
      if (!bad.empty()) {
        const auto cell = t.support_cells().front();
        r.add(Check{"cross_sums", false, "t_" + std::to_string(q) + " = " + cell.value.str() + " on " + cell.span.str(),
                    IntervalSet(cell.span), q});
        ok = false;
        break;
      }
    }
    if (ok) {
      r.add("cross_sums", true,
            sums.empty() ? "no overlapping translates: every t_q vanishes term by term"
                         : "t_q = 0 for " + std::to_string(sums.size()) + " values of q with nonzero terms");
    }
  }
  return r;
}

VerificationReport nesting_check(const std::vector<PiecewiseWavelet>& psis, long bound) {
  VerificationReport r("nesting of the invariance classes");
  for (std::size_t i = 0; i < psis.size(); ++i) {
    const std::string tag = "psi[" + std::to_string(i) + "]";
    const OrderResult ord = invariance_order(psis[i]);
    const long top = ord.order ? std::min(*ord.order, bound) : bound;
    for (long n = 0; n <= top; ++n) {
      const auto w = invariance_witness(psis[i], n);
      Check c{tag + ".certificate_n" + std::to_string(n), w.certified(),
              w.certified() ? "every offset divisible by d^" + std::to_string(n)
                            : "offset " + std::to_string(w.counterexample->k) + " not divisible by d^" + std::to_string(n),
              {}, {}};
      if (!w.certified()) {
        c.witness = w.counterexample->witness;
        c.offset = w.counterexample->k;
      }
      r.add(std::move(c));
    }
    if (ord.order) {
      const long n = *ord.order + 1;
      const auto w = invariance_witness(psis[i], n);
      r.add(tag + ".counterexample_n" + std::to_string(n), !w.certified(),
            w.certified() ? "certificate where a counterexample was expected"
                          : "offset " + std::to_string(w.counterexample->k) + " not divisible by d^" + std::to_string(n));
    }
  }
  return r;
}

}  // namespace wsets
