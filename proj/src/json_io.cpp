#include "wsets/json_io.hpp"

#include <limits>

namespace wsets {

namespace {

Json encode_integer(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer decode_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw JsonError("not an integer: " + j.dump());
    return z;
  }
  throw JsonError("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw JsonError(std::string("expected an object with \"") + key + "\", got " + j.dump());
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw JsonError(std::string("field \"") + key + "\" must be an array");
  return a;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw JsonError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Json encode(const Rational& q) { return Json{{"num", encode_integer(q.get_num())}, {"den", encode_integer(q.get_den())}}; }
Json encode(const RPi& x) { return encode(x.coeff()); }
Json encode(const Interval& iv) { return Json{{"lo", encode(iv.lo())}, {"hi", encode(iv.hi())}}; }

Json encode(const IntervalSet& s) {
  Json a = Json::array();
  for (const auto& p : s.pieces()) a.push_back(encode(p));
  return a;
}

Json encode(const QSqrt2& x) { return Json{{"a", encode(x.a())}, {"b", encode(x.b())}}; }
Json encode(const QSqrt2Complex& z) { return Json{{"re", encode(z.re())}, {"im", encode(z.im())}}; }

Json encode(const Coefficient& c) {
  return Json{{"scale", encode(c.scale)}, {"inv_sqrt_pi", c.inv_sqrt_pi}, {"text", c.str()}};
}

Json encode(const SymbolicScalar& s) {
  Json terms = Json::array();
  for (const auto& [p, c] : s.terms()) terms.push_back(Json{{"inv_sqrt_pi", p}, {"scale", encode(c)}});
  return Json{{"text", s.str()}, {"terms", terms}};
}

Json encode(const MultiplicityFn& m) {
  Json cells = Json::array();
  for (const auto& c : m.cells()) {
    cells.push_back(Json{{"lo", encode(c.span.lo())}, {"hi", encode(c.span.hi())}, {"value", c.value}});
  }
  return Json{{"domain", m.domain == FundamentalDomain::symmetric ? "symmetric" : "positive"}, {"cells", cells}};
}

Json encode(const TranslationMap& s) {
  Json branches = Json::array();
  for (const auto& b : s.branches) branches.push_back(Json{{"offset_2pi", b.offset}, {"piece", encode(b.piece)}});
  return Json{{"d", s.d}, {"source", encode(s.source)}, {"target", encode(s.target)}, {"branches", branches}};
}

Json encode(const DilationPeriodicFn& h) {
  Json pieces = Json::array();
  for (const auto& p : h.pieces) pieces.push_back(Json{{"set", encode(p.domain)}, {"value", encode(p.value)}});
  return Json{{"d", h.d}, {"pieces", pieces}};
}

Json encode(const PiecewiseWavelet& psi) {
  Json pieces = Json::array();
  for (const auto& p : psi.pieces()) {
    pieces.push_back(Json{{"set", encode(p.domain)}, {"value", encode(p.value)}, {"text", p.value.str()}});
  }
  return Json{{"kind", "piecewise_wavelet"}, {"d", psi.d()}, {"pieces", pieces}};
}

Json encode(const Check& c) {
  Json j{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
  if (c.witness) j["witness"] = encode(*c.witness);
  if (c.offset) j["offset_2pi"] = *c.offset;
  return j;
}

Json encode(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) checks.push_back(encode(c));
  return Json{{"header", r.header()}, {"passed", r.passed()}, {"checks", checks}};
}

Json encode(const SelfSimilaritySet& s) {
  Json a = Json::array();
  for (const auto& o : s.offsets) a.push_back(Json{{"k", o.k}, {"witness", encode(o.witness)}});
  return a;
}

Json encode(const OrderResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.divisor_trace) {
    trace.push_back(Json{{"power", encode_integer(t.power)}, {"divides_all", t.divides_all}});
  }
  Json j;
  if (r.order) {
    j["order"] = *r.order;
  } else {
    j["order"] = "infinity";
  }
  j["offsets"] = r.certificate.ks();
  j["witnesses"] = encode(r.certificate);
  j["divisor_trace"] = trace;
  return j;
}

Json encode(const InvarianceWitness& w) {
  Json j{{"n", w.n}};
  if (w.certificate) {
    Json res = Json::array();
    for (const auto& p : w.certificate->residual) {
      res.push_back(Json{{"piece", encode(p.piece)}, {"l", p.l}, {"divisible", p.divisible}});
    }
    j["result"] = "certificate";
    j["section"] = encode(w.certificate->section);
    j["residual"] = res;
  } else {
    j["result"] = "counterexample";
    j["k"] = w.counterexample->k;
    j["witness"] = encode(w.counterexample->witness);
  }
  return j;
}

Rational decode_rational(const Json& j) {
  const Integer den = decode_integer(field(j, "den"));
  if (den == 0) throw JsonError("zero denominator");
  return make_rational(decode_integer(field(j, "num")), den);
}

RPi decode_rpi(const Json& j) { return RPi(decode_rational(j)); }

IntervalSet decode_interval_set(const Json& j) {
  if (!j.is_array()) throw JsonError("an interval set must be an array of {lo, hi}");
  std::vector<Interval> pieces;
  for (const auto& p : j) {
    RPi lo = decode_rpi(field(p, "lo"));
    RPi hi = decode_rpi(field(p, "hi"));
    if (!(lo < hi)) throw JsonError("empty or reversed interval [" + lo.str() + ", " + hi.str() + ")");
    pieces.emplace_back(lo, hi);
  }
  return IntervalSet::from_intervals(std::move(pieces));
}

QSqrt2 decode_qsqrt2(const Json& j) { return QSqrt2(decode_rational(field(j, "a")), decode_rational(field(j, "b"))); }

QSqrt2Complex decode_complex(const Json& j) {
  return QSqrt2Complex(decode_qsqrt2(field(j, "re")), decode_qsqrt2(field(j, "im")));
}

Coefficient decode_coefficient(const Json& j) {
  return Coefficient{decode_complex(field(j, "scale")), int_field(j, "inv_sqrt_pi")};
}

TranslationMap decode_translation_map(const Json& j) {
  TranslationMap s;
  s.d = int_field(j, "d");
  s.source = decode_interval_set(field(j, "source"));
  s.target = decode_interval_set(field(j, "target"));
  for (const auto& b : array_field(j, "branches")) {
    const Json& off = field(b, "offset_2pi");
    if (!off.is_number_integer()) throw JsonError("branch offset must be an integer");
    s.branches.push_back({decode_interval_set(field(b, "piece")), off.get<std::int64_t>()});
  }
  return s;
}

DilationPeriodicFn decode_periodic_fn(const Json& j) {
  DilationPeriodicFn h;
  h.d = int_field(j, "d");
  for (const auto& p : array_field(j, "pieces")) {
    h.pieces.push_back({decode_interval_set(field(p, "set")), decode_coefficient(field(p, "value"))});
  }
  return h;
}

PiecewiseWavelet decode_wavelet(const Json& j) {
  const int d = int_field(j, "d");
  if (d < 2) throw JsonError("dilation factor must be >= 2");
  std::vector<WaveletPiece> pieces;
  for (const auto& p : array_field(j, "pieces")) {
    pieces.push_back({decode_interval_set(field(p, "set")), decode_complex(field(p, "value"))});
  }
  try {
    return PiecewiseWavelet::from_pieces(pieces, d);
  } catch (const std::invalid_argument& e) {
    throw JsonError(e.what());
  }
}

Json set_document(const std::string& kind, int d, const IntervalSet& s) {
  return Json{{"kind", kind}, {"d", d}, {"set", encode(s)}};
}

int dilation_of_document(const Json& j) {
  const int d = int_field(j, "d");
  if (d < 2) throw JsonError("dilation factor must be >= 2");
  return d;
}

PiecewiseWavelet wavelet_from_document(const Json& j) {
  if (j.is_object() && j.contains("pieces")) return decode_wavelet(j);
  return PiecewiseWavelet::indicator(decode_interval_set(field(j, "set")), dilation_of_document(j));
}

IntervalSet set_from_document(const Json& j) {
  if (j.is_object() && j.contains("pieces")) return decode_wavelet(j).support();
  return decode_interval_set(field(j, "set"));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace wsets
