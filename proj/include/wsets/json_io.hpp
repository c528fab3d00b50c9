#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wsets/constructions.hpp"
#include "wsets/invariance.hpp"

namespace wsets {

using Json = nlohmann::ordered_json;

/// Malformed or out-of-schema JSON input.
class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All reals are exact: rationals as {"num", "den"} (integers, or decimal
// strings beyond 64 bits), interval endpoints in units of π.
Json encode(const Rational& q);
Json encode(const RPi& x);
Json encode(const Interval& iv);
Json encode(const IntervalSet& s);
Json encode(const QSqrt2& x);
Json encode(const QSqrt2Complex& z);
Json encode(const Coefficient& c);
Json encode(const SymbolicScalar& s);
Json encode(const MultiplicityFn& m);
Json encode(const TranslationMap& s);
Json encode(const DilationPeriodicFn& h);
Json encode(const PiecewiseWavelet& psi);
Json encode(const Check& c);
Json encode(const VerificationReport& r);
Json encode(const SelfSimilaritySet& s);
Json encode(const OrderResult& r);
Json encode(const InvarianceWitness& w);

Rational decode_rational(const Json& j);
RPi decode_rpi(const Json& j);
IntervalSet decode_interval_set(const Json& j);
QSqrt2 decode_qsqrt2(const Json& j);
QSqrt2Complex decode_complex(const Json& j);
Coefficient decode_coefficient(const Json& j);
TranslationMap decode_translation_map(const Json& j);
DilationPeriodicFn decode_periodic_fn(const Json& j);
PiecewiseWavelet decode_wavelet(const Json& j);

/// {"kind": kind, "d": d, "set": [...]}
Json set_document(const std::string& kind, int d, const IntervalSet& s);

/// Accepts a piecewise_wavelet document, or any set document read as χ_set.
PiecewiseWavelet wavelet_from_document(const Json& j);
/// The "set" of a set document, or the support of a wavelet document.
IntervalSet set_from_document(const Json& j);
int dilation_of_document(const Json& j);

/// Parses text, converting parser failures to JsonError.
Json parse_json(const std::string& text);

}  // namespace wsets
