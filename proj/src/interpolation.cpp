#include "wsets/interpolation.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsets/folding.hpp"

namespace wsets {

std::string Coefficient::str() const { return SymbolicScalar(*this).str(); }

SymbolicScalar::SymbolicScalar(const Coefficient& c) { add_term(c.inv_sqrt_pi, c.scale); }

void SymbolicScalar::add_term(int power, const QSqrt2Complex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolicScalar SymbolicScalar::conj() const {
  SymbolicScalar out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
  return out;
}

std::optional<QSqrt2Complex> SymbolicScalar::as_constant() const {
  if (terms_.empty()) return QSqrt2Complex();
  if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
  return std::nullopt;
}

SymbolicScalar& SymbolicScalar::operator+=(const SymbolicScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymbolicScalar operator*(const SymbolicScalar& a, const SymbolicScalar& b) {
  SymbolicScalar out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string SymbolicScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string base = c == QSqrt2Complex(1) ? "1" : c.str();
    if (e == 0) {
      out += base;
      continue;
    }
    if (base.find_first_of("+*i") != std::string::npos) base = "(" + base + ")";
    const int m = e < 0 ? -e : e;
    std::string factor;
    if (m == 1) {
      factor = "sqrt(pi)";
    } else if (m == 2) {
      factor = "pi";
    } else if (m % 2 == 0) {
      factor = "pi^" + std::to_string(m / 2);
    } else {
      factor = "pi^(" + std::to_string(m) + "/2)";
    }
    out += base + (e > 0 ? "/" : "*") + factor;
  }
  return out;
}

DilationPeriodicFn DilationPeriodicFn::constant_on(const IntervalSet& domain, const Coefficient& value, int d) {
  return DilationPeriodicFn{{{domain, value}}, d};
}

IntervalSet DilationPeriodicFn::domain() const {
  IntervalSet u;
  for (const auto& p : pieces) u = u | p.domain;
  return u;
}

std::optional<Coefficient> DilationPeriodicFn::eval(const RPi& x, long bound) const {
  if (x.is_zero()) return std::nullopt;
  for (const auto& p : pieces) {
    if (dilation_exponent_into(p.domain, x, d, bound)) return p.value;
  }
  return std::nullopt;
}

std::vector<RPi> DilationPeriodicFn::breakpoints_in(const RPi& lo, const RPi& hi) const {
  std::vector<RPi> out;
  for (const auto& p : pieces) {
    for (const auto& e : p.domain.endpoints()) {
      if (e.is_zero()) continue;
      auto orbit = dilation_orbit_in(e, d, lo, hi);
      out.insert(out.end(), orbit.begin(), orbit.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PiecewiseWavelet::PiecewiseWavelet(StepFn<QSqrt2Complex> values, int d) : values_(std::move(values)), d_(d) {
  if (d < 2) throw std::invalid_argument("dilation factor must be >= 2");
  if (!values_.values().front().is_zero() || !values_.values().back().is_zero()) {
    throw std::invalid_argument("wavelet must have bounded support");
  }
}

PiecewiseWavelet PiecewiseWavelet::indicator(const IntervalSet& w, int d) {
  return PiecewiseWavelet(StepFn<QSqrt2Complex>::indicator(w, QSqrt2Complex(1)), d);
}

PiecewiseWavelet PiecewiseWavelet::from_pieces(const std::vector<WaveletPiece>& pieces, int d) {
  std::vector<std::pair<Interval, QSqrt2Complex>> parts;
  IntervalSet seen;
  RPi total;
  for (const auto& p : pieces) {
    seen = seen | p.domain;
    total += p.domain.measure();
    for (const auto& iv : p.domain.pieces()) parts.emplace_back(iv, p.value);
  }
  if (total != seen.measure()) throw std::invalid_argument("wavelet pieces overlap");
  return PiecewiseWavelet(StepFn<QSqrt2Complex>::from_weighted(parts), d);
}

std::vector<WaveletPiece> PiecewiseWavelet::pieces() const {
  std::vector<WaveletPiece> out;
  std::vector<std::vector<Interval>> spans;
  for (const auto& c : values_.support_cells()) {
    auto it = std::find_if(out.begin(), out.end(), [&](const WaveletPiece& p) { return p.value == c.value; });
    if (it == out.end()) {
      out.push_back({IntervalSet(), c.value});
      spans.push_back({c.span});
    } else {
      spans[static_cast<std::size_t>(it - out.begin())].push_back(c.span);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].domain = IntervalSet::from_intervals(std::move(spans[i]));
  return out;
}

bool UnitaryCell::unitary() const {
  return covered && product[0] == SymbolicScalar(1) && product[1].is_zero() && product[2].is_zero() &&
         product[3] == SymbolicScalar(1);
}

namespace {

std::vector<RPi> coefficient_cuts(const DilationPeriodicFn& h1, const DilationPeriodicFn& h2, const RPi& lo,
                                  const RPi& hi, const RPi& shift_back) {
  std::vector<RPi> cuts;
  for (const auto* h : {&h1, &h2}) {
    for (auto& c : h->breakpoints_in(lo, hi)) cuts.push_back(c - shift_back);
  }
  return cuts;
}

}  // namespace

std::vector<UnitaryCell> unitary_cells(const DilationPeriodicFn& h1, const DilationPeriodicFn& h2,
                                       const TranslationMap& s) {
  std::vector<UnitaryCell> out;
  IntervalSet branch_union;
  for (const auto& b : s.branches) {
    branch_union = branch_union | b.piece;
    const RPi t = two_pi_times(b.offset);
    for (const auto& p : b.piece.pieces()) {
      std::vector<RPi> cuts = coefficient_cuts(h1, h2, p.lo(), p.hi(), RPi());
      auto far = coefficient_cuts(h1, h2, p.lo() + t, p.hi() + t, t);
      cuts.insert(cuts.end(), far.begin(), far.end());
      for (const auto& cell : atoms(IntervalSet(p), cuts)) {
        UnitaryCell uc{cell, b.offset, true, {}, {}};
        const RPi x = cell.lo();
        const RPi y = x + t;
        const auto a = h1.eval(x);
        const auto bb = h2.eval(x);
        const auto c = h2.eval(y);
        const auto d = h1.eval(y);
        if (!a || !bb || !c || !d) {
          uc.covered = false;
          out.push_back(std::move(uc));
          continue;
        }
        auto& m = uc.matrix;
        m = {SymbolicScalar(*a), SymbolicScalar(*bb), SymbolicScalar(*c), SymbolicScalar(*d)};
        uc.product = {m[0] * m[0].conj() + m[1] * m[1].conj(), m[0] * m[2].conj() + m[1] * m[3].conj(),
                      m[2] * m[0].conj() + m[3] * m[1].conj(), m[2] * m[2].conj() + m[3] * m[3].conj()};
        out.push_back(std::move(uc));
      }
    }
  }
  for (const auto& gap : (s.source - branch_union).pieces()) out.push_back(UnitaryCell{gap, 0, false, {}, {}});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.cell.lo() < b.cell.lo(); });
  return out;
}

VerificationReport check_unitary(const DilationPeriodicFn& h1, const DilationPeriodicFn& h2,
                                 const TranslationMap& s) {
  VerificationReport report("matrix [[h1, h2], [h2 o sigma^-1, h1 o sigma^-1]] unitary on W1");
  const auto cells = unitary_cells(h1, h2, s);
  std::size_t bad = 0;
  for (const auto& uc : cells) {
    if (!uc.covered) {
      ++bad;
      report.add("coverage", false, "coefficients undefined on " + uc.cell.str()).witness = IntervalSet(uc.cell);
      continue;
    }
    if (uc.unitary()) continue;
    ++bad;
    const auto& p = uc.product;
    Check& c = report.add("unitary", false,
                          "|h1|^2 + |h2|^2 = " + p[0].str() + " on " + uc.cell.str() + "; M M* = [[" + p[0].str() +
                              ", " + p[1].str() + "], [" + p[2].str() + ", " + p[3].str() + "]]");
    c.witness = IntervalSet(uc.cell);
    c.offset = uc.sigma_offset;
  }
  if (bad == 0) report.add("unitary", true, "M M* = I on all " + std::to_string(cells.size()) + " cells");
  return report;
}

VerificationReport interpolation_preconditions(const DilationPeriodicFn& h1, const DilationPeriodicFn& h2,
                                               const TranslationMap& s) {
  VerificationReport report("interpolation preconditions");
  report.merge(check_translation_map(s), "sigma");
  report.merge(is_involutive(s), "sigma");
  report.merge(check_unitary(h1, h2, s), "matrix");
  return report;
}

PiecewiseWavelet interpolate(const IntervalSet& w1, const IntervalSet& w2, const DilationPeriodicFn& h1,
                             const DilationPeriodicFn& h2, const TranslationMap& s) {
  if (s.source != w1 || s.target != w2) throw std::invalid_argument("sigma does not map W1 onto W2");
  VerificationReport pre = interpolation_preconditions(h1, h2, s);
  if (!pre.passed()) throw PreconditionError("interpolation preconditions fail", std::move(pre));

  const IntervalSet region = w1 | w2;
  std::vector<RPi> cuts = region.endpoints();
  for (const auto& p : region.pieces()) {
    auto more = coefficient_cuts(h1, h2, p.lo(), p.hi(), RPi());
    cuts.insert(cuts.end(), more.begin(), more.end());
  }
  auto plain = [](const std::optional<Coefficient>& c, const RPi& x) {
    if (!c) throw std::domain_error("coefficient undefined at " + x.str());
    if (c->inv_sqrt_pi != 0) throw std::domain_error("coefficient " + c->str() + " is outside Q(sqrt2)");
    return c->scale;
  };
  std::vector<std::pair<Interval, QSqrt2Complex>> parts;
  for (const auto& cell : atoms(region, cuts)) {
    const RPi& x = cell.lo();
    QSqrt2Complex v;
    if (w1.contains(x)) v += plain(h1.eval(x), x);
    if (w2.contains(x)) v += plain(h2.eval(x), x);
    if (!v.is_zero()) parts.emplace_back(cell, v);
  }
  return PiecewiseWavelet(StepFn<QSqrt2Complex>::from_weighted(parts), s.d);
}

}  // namespace wsets
