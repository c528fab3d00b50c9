#include <doctest.h>

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "wsets/cli/commands.hpp"

using namespace wsets;
using namespace wsets::cli;

namespace {

Json parse(const CommandResult& r) { return parse_json(r.output); }

InputFile as_file(const std::string& name, const CommandResult& r) { return {name, r.output}; }

int run_args(std::vector<std::string> args) {
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream sink;
  auto* old_out = std::cout.rdbuf(sink.rdbuf());
  auto* old_err = std::cerr.rdbuf(sink.rdbuf());
  const int rc = run(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return rc;
}

}  // namespace

TEST_CASE("sha256 digests") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("rationals and sets round-trip through JSON") {
  CHECK(encode(RPi(-24, 7)).dump() == R"({"num":-24,"den":7})");
  const Rational big = make_rational(ipow(3, 60), ipow(2, 70) + 1);
  CHECK(decode_rational(encode(big)) == big);
  CHECK(encode(big)["num"].is_string());
  CHECK_THROWS_AS(decode_rational(parse_json(R"({"num": 1, "den": 0})")), JsonError);
  CHECK_THROWS_AS(decode_interval_set(parse_json(R"([{"lo": {"num": 1, "den": 1}, "hi": {"num": 1, "den": 1}}])")),
                  JsonError);
  CHECK_THROWS_AS(parse_json("{not json"), JsonError);

  std::mt19937_64 rng(555);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntervalSet s = IntervalSet::from_pairs(oracle::random_raw(rng, 6, 20, 11));
    const Json j = encode(s);
    CHECK(decode_interval_set(parse_json(j.dump())) == s);
    CHECK(encode(decode_interval_set(j)).dump() == j.dump());

    std::vector<WaveletPiece> pieces;
    for (const auto& p : s.pieces()) {
      QSqrt2Complex v(QSqrt2(make_rational(coef(rng), 4), make_rational(coef(rng), 3)),
                      QSqrt2(make_rational(coef(rng), 5), make_rational(coef(rng), 7)));
      if (!v.is_zero()) pieces.push_back({IntervalSet(p), v});
    }
    const PiecewiseWavelet psi = PiecewiseWavelet::from_pieces(pieces, 3);
    const Json pj = encode(psi);
    CHECK(decode_wavelet(parse_json(pj.dump())) == psi);
    CHECK(encode(decode_wavelet(pj)).dump() == pj.dump());
  }
}

TEST_CASE("construct output re-verifies after a JSON round trip") {
  for (int d = 2; d <= 5; ++d) {
    for (int k = 2; k <= 6; ++k) {
      for (Variant v : {Variant::base, Variant::shifted}) {
        CAPTURE(d);
        CAPTURE(k);
        const auto w = cmd_construct({"wavelet-set", d, k, v, false});
        CHECK(w.exit_code == kPass);
        const Json doc = parse(w);
        CHECK(doc["manifest"]["command"] == "construct");
        CHECK(set_from_document(doc) == wavelet_set_family({d, k, v}));
        CHECK(cmd_verify({as_file("w.json", w), {}, {}, Variant::base, {"waveletset"}, false}).exit_code == kPass);

        const auto e = cmd_construct({"scaling-set", d, k, v, false});
        CHECK(cmd_verify({as_file("e.json", e), {}, {}, Variant::base, {"merrill", "consistency"}, false}).exit_code ==
              kPass);
      }
      const auto s = cmd_construct({"sigma", d, k, Variant::base, false});
      CHECK(same_branches(decode_translation_map(parse(s)), family_sigma(d, k)));
      CHECK(cmd_verify({as_file("s.json", s), {}, {}, Variant::base, {}, false}).exit_code == kPass);

      const Json h = parse(cmd_construct({"coefficients", d, k, Variant::base, false}));
      const DilationPeriodicFn h1 = decode_periodic_fn(h["h1"]);
      const DilationPeriodicFn h2 = decode_periodic_fn(h["h2"]);
      CHECK(check_unitary(h1, h2, family_sigma(d, k)).passed());
    }
  }
  CHECK_THROWS_AS(cmd_construct({"wavelet-set", 2, 1, Variant::base, false}), UsageError);
  CHECK_THROWS_AS(cmd_construct({"bogus", 2, 3, Variant::base, false}), UsageError);
}

TEST_CASE("construct multiplicity emits the table") {
  const Json j = parse(cmd_construct({"multiplicity", 2, 3, Variant::base, false}));
  const auto& cells = j["function"]["cells"];
  REQUIRE(cells.size() == 7);
  CHECK(cells[3]["value"] == 2);
  CHECK(decode_rpi(cells[3]["lo"]) == RPi(-2, 7));
}

TEST_CASE("verify exit codes") {
  const InputFile bad{"bad.json", R"({"kind":"wavelet_set","d":2,"set":[{"lo":{"num":0,"den":1},"hi":{"num":2,"den":1}}]})"};
  const auto r = cmd_verify({bad, {}, {}, Variant::base, {}, false});
  CHECK(r.exit_code == kCheckFailed);
  CHECK(parse(r)["report"]["passed"] == false);
  CHECK(parse(r)["manifest"]["inputs"]["bad.json"].get<std::string>().rfind("sha256:", 0) == 0);

  CHECK(cmd_verify({{}, 2, 3, Variant::base, {}, false}).exit_code == kPass);
  CHECK(cmd_verify({{}, 3, 4, Variant::shifted, {}, false}).exit_code == kPass);
  const auto pm = cmd_verify({{}, 3, 4, Variant::base, {"unitary"}, true});
  CHECK(pm.exit_code == kCheckFailed);
  CHECK(pm.output.find("|h1|^2 + |h2|^2 = 1/pi") != std::string::npos);

  CHECK_THROWS_AS(cmd_verify({{}, 2, {}, Variant::base, {}, false}), UsageError);
  CHECK_THROWS_AS(cmd_verify({{}, 2, 3, Variant::base, {"nonsense"}, false}), UsageError);
  CHECK_THROWS_AS(cmd_verify({InputFile{"x.json", "[1,2"}, {}, {}, Variant::base, {}, false}), JsonError);
  CHECK_THROWS_AS(cmd_verify({bad, {}, {}, Variant::base, {"unitary"}, false}), UsageError);
}

TEST_CASE("interpolate and classify") {
  const auto p23 = cmd_interpolate({2, 3, {}, {}});
  CHECK(p23.exit_code == kPass);
  const Json j = parse(p23);
  CHECK(j["preconditions"]["passed"] == true);
  const PiecewiseWavelet psi = wavelet_from_document(j);
  CHECK(psi.support() == (wavelet_set_family({2, 3}) | wavelet_set_family({2, 3, Variant::shifted})));
  CHECK(parse(cmd_classify(as_file("p.json", p23)))["order"] == 1);
  CHECK(parse(cmd_classify(as_file("p.json", cmd_interpolate({2, 5, {}, {}}))))["order"] == 3);
  CHECK(parse(cmd_classify(as_file("p.json", cmd_interpolate({3, 4, {}, {}}))))["order"] == 2);

  const Json o22 = parse(cmd_classify(as_file("p.json", cmd_interpolate({2, 2, {}, {}}))));
  CHECK(o22["order"] == 0);
  bool odd = false;
  for (const auto& k : o22["offsets"]) odd = odd || k.get<long>() % 2 != 0;
  CHECK(odd);

  const auto w = cmd_construct({"wavelet-set", 2, 3, Variant::base, false});
  CHECK(parse(cmd_classify(as_file("w.json", w)))["order"] == "infinity");

  // two files: σ derived from the congruence gives the same wavelet
  const auto w2 = cmd_construct({"wavelet-set", 2, 3, Variant::shifted, false});
  const auto pf = cmd_interpolate({{}, {}, as_file("w.json", w), as_file("w2.json", w2)});
  CHECK(pf.exit_code == kPass);
  CHECK(wavelet_from_document(parse(pf)) == psi);

  // W with itself shifted by 2π is not a wavelet set pair with an involutive σ
  const InputFile shannon{"s.json", parse_json(R"({"kind":"wavelet_set","d":2,"set":[
      {"lo":{"num":-2,"den":1},"hi":{"num":-1,"den":1}},{"lo":{"num":1,"den":1},"hi":{"num":2,"den":1}}]})").dump()};
  const InputFile moved{"m.json", parse_json(R"({"kind":"wavelet_set","d":2,"set":[
      {"lo":{"num":-2,"den":1},"hi":{"num":-1,"den":1}},{"lo":{"num":3,"den":1},"hi":{"num":4,"den":1}}]})").dump()};
  CHECK(cmd_interpolate({{}, {}, shannon, moved}).exit_code == kCheckFailed);
}

TEST_CASE("plot output") {
  const auto w = cmd_construct({"wavelet-set", 2, 3, Variant::base, false});
  const auto csv = cmd_plot({as_file("w.json", w), 64}).output;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# {", 0) == 0);
  std::getline(in, line);
  CHECK(line == "xi,value_re,value_im,breakpoint");
  int breaks = 0;
  while (std::getline(in, line)) breaks += line.back() != ',' ? 1 : 0;
  CHECK(breaks == 12);

  const auto p = cmd_interpolate({2, 3, {}, {}});
  std::istringstream pin(cmd_plot({as_file("p.json", p), 256}).output);
  std::set<std::string> levels;
  std::getline(pin, line);
  std::getline(pin, line);
  while (std::getline(pin, line)) {
    const auto a = line.find(',');
    levels.insert(line.substr(a + 1, line.find(',', a + 1) - a - 1));
  }
  CHECK(levels == std::set<std::string>{"0", "1", "0.707106781187", "-0.707106781187"});

  const auto empty = cmd_plot({{"e.json", R"({"kind":"interval_set","d":2,"set":[]})"}, 16}).output;
  CHECK(std::count(empty.begin(), empty.end(), '\n') == 2);
  CHECK_THROWS_AS(cmd_plot({{"e.json", R"({"kind":"interval_set","d":2,"set":[]})"}, 0}), UsageError);
}

TEST_CASE("converge table") {
  const auto r = cmd_converge({1, true});
  CHECK(r.exit_code == kPass);
  const Json j = parse(r);
  CHECK(decode_rpi(j["rows"][0]["a"]) == RPi(-15, 28));
  CHECK(decode_rpi(j["rows"][0]["measure"]) == RPi(3, 14));
  CHECK(j["rows"][0]["order"] == 1);
  CHECK(j["limit"]["order"] == "infinity");
  CHECK_THROWS_AS(cmd_converge({0, false}), UsageError);
}

TEST_CASE("outputs are deterministic") {
  CHECK(cmd_construct({"sigma", 4, 5, Variant::base, false}).output ==
        cmd_construct({"sigma", 4, 5, Variant::base, false}).output);
  CHECK(cmd_interpolate({3, 5, {}, {}}).output == cmd_interpolate({3, 5, {}, {}}).output);
  CHECK(cmd_grid({{2, 3}, {2, 3}, true}).output == cmd_grid({{2, 3}, {2, 3}, true}).output);
  CHECK(cmd_converge({3, false}).output == cmd_converge({3, false}).output);
}

TEST_CASE("command line exit codes") {
  CHECK(run_args({"wsets", "construct", "wavelet-set", "--d", "2", "--k", "1"}) == kUsage);
  CHECK(run_args({"wsets", "construct", "nothing", "--d", "2", "--k", "3"}) == kUsage);
  CHECK(run_args({"wsets"}) == kUsage);
  CHECK(run_args({"wsets", "verify", "--d", "2", "--k", "3"}) == kPass);
  CHECK(run_args({"wsets", "verify", "--d", "3", "--k", "4", "--checks", "unitary", "--printed-coefficients"}) ==
        kCheckFailed);
  CHECK(run_args({"wsets", "classify", "/nonexistent/file.json"}) == kUsage);
  CHECK(run_args({"wsets", "grid", "--d", "2,3", "--k", "3"}) == kPass);
  CHECK(run_args({"wsets", "--help"}) == kPass);
}
