#include "wsets/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace wsets::cli {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_params(int d, int k) {
  try {
    FamilyParams{d, k}.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json family_parameters(int d, int k, Variant v) {
  return Json{{"d", d}, {"k", k}, {"variant", to_string(v)}};
}

Json read_document(const InputFile& f) { return parse_json(f.contents); }

CoefficientConvention convention_for(bool printed) {
  return printed ? CoefficientConvention::printed_magnitude : CoefficientConvention::corrected;
}

PiecewiseWavelet family_wavelet(int d, int k) {
  const TranslationMap s = family_sigma(d, k);
  const CoefficientPair h = family_coefficients(d, k);
  return interpolate(s.source, s.target, h.h1, h.h2, s);
}

Json coefficient_json(const CoefficientPair& h, CoefficientConvention c) {
  return Json{{"kind", "coefficients"}, {"convention", to_string(c)}, {"h1", encode(h.h1)}, {"h2", encode(h.h2)}};
}

std::string decimal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

CommandResult cmd_construct(const ConstructArgs& a) {
  require_params(a.d, a.k);
  RunManifest m{"construct", family_parameters(a.d, a.k, a.variant), {}};
  m.parameters["object"] = a.object;
  const FamilyParams p{a.d, a.k, a.variant};
  Json payload;
  if (a.object == "multiplicity") {
    payload = Json{{"kind", "multiplicity"}, {"d", a.d}, {"k", a.k}, {"function", encode(wrap_multiplicity(scaling_set(p)))}};
  } else if (a.object == "scaling-set") {
    payload = set_document("scaling_set", a.d, scaling_set(p));
  } else if (a.object == "wavelet-set") {
    payload = set_document("wavelet_set", a.d, wavelet_set_family(p));
  } else if (a.object == "sigma") {
    payload = Json{{"kind", "translation_map"}};
    payload.update(encode(family_sigma(a.d, a.k)));
  } else if (a.object == "coefficients") {
    const auto c = convention_for(a.printed_coefficients);
    m.parameters["convention"] = to_string(c);
    payload = coefficient_json(family_coefficients(a.d, a.k, c), c);
  } else {
    throw UsageError("unknown object '" + a.object + "'");
  }
  return {kPass, dump(with_manifest(m, payload))};
}

namespace {

void require_known(const std::vector<std::string>& checks) {
  for (const auto& c : checks) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
      throw UsageError("unknown check '" + c + "'");
    }
  }
}

bool wants(const std::vector<std::string>& checks, const char* name) {
  return std::find(checks.begin(), checks.end(), name) != checks.end();
}

VerificationReport verify_family(int d, int k, Variant v, const std::vector<std::string>& checks, bool printed) {
  VerificationReport r("d = " + std::to_string(d) + ", k = " + std::to_string(k) + ", variant = " + to_string(v));
  const FamilyParams p{d, k, v};
  const IntervalSet e = scaling_set(p);
  const IntervalSet w = wavelet_set_family(p);
  if (wants(checks, "waveletset")) r.merge(is_wavelet_set(w, d), "waveletset");
  if (wants(checks, "merrill")) r.merge(check_merrill(e, d).report, "merrill");
  if (wants(checks, "consistency")) {
    const MultiplicityFn m = wrap_multiplicity(e);
    VerificationReport c = check_consistency(m, d);
    c.add("closed_form", m == multiplicity_closed_form(d, k), "wrapped multiplicity of E against the case table");
    r.merge(c, "consistency");
  }
  const TranslationMap s = family_sigma(d, k);
  if (wants(checks, "involutive")) {
    VerificationReport c = check_translation_map(s);
    c.merge(is_involutive(s));
    r.merge(c, "involutive");
  }
  if (wants(checks, "unitary")) {
    const CoefficientPair h = family_coefficients(d, k, convention_for(printed));
    r.merge(check_unitary(h.h1, h.h2, s), "unitary");
  }
  if (wants(checks, "characterization")) {
    r.merge(characterization_equations(PiecewiseWavelet::indicator(w, d)), "characterization.msf");
    r.merge(characterization_equations(family_wavelet(d, k)), "characterization.interpolated");
  }
  return r;
}

VerificationReport verify_document(const Json& doc, std::vector<std::string> checks) {
  const bool is_wavelet = doc.is_object() && doc.contains("pieces");
  const bool is_map = doc.is_object() && doc.contains("branches");
  if (checks.empty()) {
    if (is_map) checks = {"involutive"};
    else if (is_wavelet) checks = {"characterization"};
    else checks = {"waveletset", "characterization"};
  }
  VerificationReport r("input document");
  for (const auto& c : checks) {
    if (is_map) {
      if (c != "involutive") throw UsageError("check '" + c + "' does not apply to a translation map");
      const TranslationMap s = decode_translation_map(doc);
      VerificationReport v = check_translation_map(s);
      v.merge(is_involutive(s));
      r.merge(v, c);
    } else if (c == "characterization") {
      r.merge(characterization_equations(wavelet_from_document(doc)), c);
    } else if (is_wavelet) {
      throw UsageError("check '" + c + "' needs a set document");
    } else if (c == "waveletset") {
      r.merge(is_wavelet_set(set_from_document(doc), dilation_of_document(doc)), c);
    } else if (c == "merrill") {
      r.merge(check_merrill(set_from_document(doc), dilation_of_document(doc)).report, c);
    } else if (c == "consistency") {
      r.merge(check_consistency(wrap_multiplicity(set_from_document(doc)), dilation_of_document(doc)), c);
    } else {
      throw UsageError("check '" + c + "' needs --d/--k input");
    }
  }
  return r;
}

}  // namespace

CommandResult cmd_verify(const VerifyArgs& a) {
  require_known(a.checks);
  RunManifest m{"verify", Json::object(), {}};
  m.parameters["checks"] = a.checks;
  VerificationReport r;
  if (a.input) {
    if (a.d || a.k) throw UsageError("give either --input or --d/--k, not both");
    m.add_input(a.input->path, a.input->contents);
    r = verify_document(read_document(*a.input), a.checks);
  } else {
    if (!a.d || !a.k) throw UsageError("verify needs --input or both --d and --k");
    require_params(*a.d, *a.k);
    m.parameters.update(family_parameters(*a.d, *a.k, a.variant));
    m.parameters["printed_coefficients"] = a.printed_coefficients;
    r = verify_family(*a.d, *a.k, a.variant, a.checks.empty() ? kAllChecks : a.checks, a.printed_coefficients);
  }
  return {r.passed() ? kPass : kCheckFailed, dump(with_manifest(m, Json{{"report", encode(r)}}))};
}

CommandResult cmd_interpolate(const InterpolateArgs& a) {
  RunManifest m{"interpolate", Json::object(), {}};
  IntervalSet w1, w2;
  TranslationMap s;
  CoefficientPair h;
  if (a.w1 || a.w2) {
    if (!a.w1 || !a.w2) throw UsageError("interpolate needs two wavelet-set files");
    if (a.d || a.k) throw UsageError("give either two files or --d/--k, not both");
    m.add_input(a.w1->path, a.w1->contents);
    m.add_input(a.w2->path, a.w2->contents);
    const Json j1 = read_document(*a.w1);
    const Json j2 = read_document(*a.w2);
    const int d = dilation_of_document(j1);
    if (dilation_of_document(j2) != d) throw UsageError("the two wavelet sets use different dilation factors");
    w1 = set_from_document(j1);
    w2 = set_from_document(j2);
    try {
      s = derive_sigma(w1, w2, d);
    } catch (const WitnessError& e) {
      VerificationReport r("interpolation preconditions");
      r.add(Check{"sigma.congruent", false, e.what(), e.witness(), {}});
      return {kCheckFailed, dump(with_manifest(m, Json{{"preconditions", encode(r)}}))};
    }
    h = swap_coefficients(w1, w2, d);
  } else {
    if (!a.d || !a.k) throw UsageError("interpolate needs --d and --k, or two files");
    require_params(*a.d, *a.k);
    m.parameters = Json{{"d", *a.d}, {"k", *a.k}};
    s = family_sigma(*a.d, *a.k);
    w1 = s.source;
    w2 = s.target;
    h = family_coefficients(*a.d, *a.k);
  }
  try {
    const PiecewiseWavelet psi = interpolate(w1, w2, h.h1, h.h2, s);
    Json payload = encode(psi);
    payload["preconditions"] = encode(interpolation_preconditions(h.h1, h.h2, s));
    payload["sigma"] = encode(s);
    payload["coefficients"] = coefficient_json(h, CoefficientConvention::corrected);
    return {kPass, dump(with_manifest(m, payload))};
  } catch (const PreconditionError& e) {
    return {kCheckFailed, dump(with_manifest(m, Json{{"preconditions", encode(e.report())}}))};
  }
}

CommandResult cmd_classify(const InputFile& input) {
  RunManifest m{"classify", Json::object(), {}};
  m.add_input(input.path, input.contents);
  const PiecewiseWavelet psi = wavelet_from_document(read_document(input));
  Json payload{{"kind", "order_result"}, {"d", psi.d()}};
  payload.update(encode(invariance_order(psi)));
  return {kPass, dump(with_manifest(m, payload))};
}

CommandResult cmd_plot(const PlotArgs& a) {
  if (a.resolution < 1) throw UsageError("--resolution must be positive");
  RunManifest m{"plot", Json{{"resolution", a.resolution}}, {}};
  m.add_input(a.input.path, a.input.contents);
  const PiecewiseWavelet psi = wavelet_from_document(read_document(a.input));
  std::string out = "# " + m.to_json().dump() + "\n";
  out += "xi,value_re,value_im,breakpoint\n";
  const auto& f = psi.values();
  if (f.breaks().empty()) return {kPass, out};
  const RPi lo = f.breaks().front();
  const RPi span = f.breaks().back() - lo;
  std::vector<std::pair<RPi, bool>> xs;
  for (const auto& b : f.breaks()) xs.emplace_back(b, true);
  for (long i = 0; i < a.resolution; ++i) xs.emplace_back(lo + span * make_rational(i, a.resolution), false);
  std::sort(xs.begin(), xs.end(), [](const auto& x, const auto& y) {
    return x.first < y.first || (x.first == y.first && x.second && !y.second);
  });
  xs.erase(std::unique(xs.begin(), xs.end(), [](const auto& x, const auto& y) { return x.first == y.first; }), xs.end());
  for (const auto& [x, is_break] : xs) {
    const QSqrt2Complex& v = f(x);
    out += decimal(x.to_double()) + "," + decimal(v.re().to_double()) + "," + decimal(v.im().to_double()) + "," +
           (is_break ? x.str() : "") + "\n";
  }
  return {kPass, out};
}

namespace {

struct ConvergeRow {
  long n = 0;
  RPi a;
  RPi measure;
  RPi predicted;
  std::optional<long> order;
  VerificationReport report;
};

ConvergeRow converge_row(long n, const RPi& a, const IntervalSet& w) {
  ConvergeRow row{n, a, {}, {}, {}, VerificationReport("a = " + a.str())};
  const auto [ea, wa] = convergence_family(a);
  row.measure = measure(w ^ wa);
  row.predicted = (a + RPi(4, 7)) * Rational(6);
  row.report.merge(check_merrill(ea, 2).report, "merrill");
  row.report.merge(is_wavelet_set(wa, 2), "waveletset");
  row.report.add("measure", row.measure == row.predicted, "measure(W ^ W_a) = " + row.measure.str());
  if (wa == w) {
    row.order = invariance_order(PiecewiseWavelet::indicator(w, 2)).order;
    return row;
  }
  const TranslationMap s = derive_sigma(w, wa, 2);
  const CoefficientPair h = swap_coefficients(w, wa, 2);
  row.report.merge(interpolation_preconditions(h.h1, h.h2, s), "interpolation");
  if (row.report.passed()) row.order = invariance_order(interpolate(w, wa, h.h1, h.h2, s)).order;
  return row;
}

std::string order_text(const std::optional<long>& o) { return o ? std::to_string(*o) : "infinity"; }

Json order_json(const std::optional<long>& o) { return o ? Json(*o) : Json("infinity"); }

}  // namespace

CommandResult cmd_converge(const ConvergeArgs& a) {
  if (a.steps < 1) throw UsageError("--steps must be >= 1");
  RunManifest m{"converge", Json{{"d", 2}, {"k", 3}, {"steps", a.steps}}, {}};
  const IntervalSet w = wavelet_set_family({2, 3, Variant::base});
  std::vector<ConvergeRow> rows;
  for (long n = 1; n <= a.steps; ++n) rows.push_back(converge_row(n, convergence_parameter(n), w));
  const ConvergeRow limit = converge_row(-1, RPi(-4, 7), w);

  bool ok = limit.report.passed() && !limit.order;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ok = ok && rows[i].report.passed() && rows[i].order == 1;
    if (i > 0) ok = ok && rows[i].measure < rows[i - 1].measure;
  }
  const int code = ok ? kPass : kCheckFailed;

  if (a.json) {
    Json table = Json::array();
    for (const auto& r : rows) {
      table.push_back(Json{{"n", r.n}, {"a", encode(r.a)}, {"a_text", r.a.str()}, {"measure", encode(r.measure)},
                           {"measure_text", r.measure.str()}, {"order", order_json(r.order)},
                           {"verified", r.report.passed()}});
    }
    Json lim{{"a", encode(limit.a)}, {"measure", encode(limit.measure)}, {"order", order_json(limit.order)},
             {"verified", limit.report.passed()}};
    return {code, dump(with_manifest(m, Json{{"rows", table}, {"limit", lim}, {"passed", ok}}))};
  }
  std::ostringstream os;
  os << "n\ta_n\tmeasure(W ^ W_n)\torder\tverified\n";
  for (const auto& r : rows) {
    os << r.n << '\t' << r.a.str() << '\t' << r.measure.str() << '\t' << order_text(r.order) << '\t'
       << (r.report.passed() ? "yes" : "no") << '\n';
  }
  os << "limit\t" << limit.a.str() << '\t' << limit.measure.str() << '\t' << order_text(limit.order) << '\t'
     << (limit.report.passed() ? "yes" : "no") << '\n';
  return {code, os.str()};
}

namespace {

struct GridRow {
  int d = 2;
  int k = 2;
  std::optional<long> order;
  VerificationReport report;
};

GridRow grid_row(int d, int k) {
  GridRow row{d, k, {}, VerificationReport("d = " + std::to_string(d) + ", k = " + std::to_string(k))};
  for (Variant v : {Variant::base, Variant::shifted}) {
    row.report.merge(verify_family(d, k, v, {"waveletset", "merrill", "consistency"}, false), to_string(v));
    const IntervalSet w = wavelet_set_family({d, k, v});
    row.report.add(to_string(v) + ".msf_order", !invariance_order(PiecewiseWavelet::indicator(w, d)).order,
                   "order of chi_W");
  }
  row.report.merge(verify_family(d, k, Variant::base, {"involutive", "unitary", "characterization"}, false),
                   "interpolation");
  row.order = invariance_order(family_wavelet(d, k)).order;
  row.report.add("order", row.order == k - 2, "order of the interpolated wavelet = " + order_text(row.order));
  return row;
}

}  // namespace

CommandResult cmd_grid(const GridArgs& a) {
  for (int d : a.ds) require_params(d, 2);
  for (int k : a.ks) require_params(2, k);
  RunManifest m{"grid", Json{{"d", a.ds}, {"k", a.ks}}, {}};
  std::vector<std::future<GridRow>> jobs;
  for (int d : a.ds) {
    for (int k : a.ks) jobs.push_back(std::async(std::launch::async, grid_row, d, k));
  }
  std::vector<GridRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const GridRow& r) { return r.report.passed(); });
  if (a.json) {
    Json table = Json::array();
    for (const auto& r : rows) {
      table.push_back(Json{{"d", r.d}, {"k", r.k}, {"order", order_json(r.order)}, {"report", encode(r.report)}});
    }
    return {ok ? kPass : kCheckFailed, dump(with_manifest(m, Json{{"rows", table}, {"passed", ok}}))};
  }
  std::ostringstream os;
  os << "d\tk\torder\tchecks\tresult\n";
  for (const auto& r : rows) {
    os << r.d << '\t' << r.k << '\t' << order_text(r.order) << '\t' << r.report.checks().size() << '\t';
    if (r.report.passed()) {
      os << "pass\n";
    } else {
      os << "FAIL " << r.report.first_failure()->name << ": " << r.report.first_failure()->detail << '\n';
    }
  }
  return {ok ? kPass : kCheckFailed, os.str()};
}

namespace {

InputFile read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

void emit(const CommandResult& r, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << r.output;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << r.output;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of wavelet sets and interpolated wavelets"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  ConstructArgs construct;
  std::string variant = "base";
  auto* c = app.add_subcommand("construct", "Emit a family object as JSON");
  c->add_option("object", construct.object, "multiplicity | scaling-set | wavelet-set | sigma | coefficients")
      ->required()
      ->check(CLI::IsMember({"multiplicity", "scaling-set", "wavelet-set", "sigma", "coefficients"}));
  c->add_option("--d", construct.d, "Dilation factor")->required();
  c->add_option("--k", construct.k, "Family index")->required();
  c->add_option("--variant", variant, "base | shifted")->check(CLI::IsMember({"base", "shifted"}));
  c->add_flag("--printed-coefficients", construct.printed_coefficients, "Use the 1/sqrt(2pi) magnitudes");

  VerifyArgs verify;
  std::string verify_input;
  std::string verify_checks;
  int vd = 0, vk = 0;
  auto* v = app.add_subcommand("verify", "Run checks; exit 0 iff all pass");
  v->add_option("--input", verify_input, "Set, wavelet or translation-map JSON");
  auto* vd_opt = v->add_option("--d", vd, "Dilation factor");
  auto* vk_opt = v->add_option("--k", vk, "Family index");
  v->add_option("--variant", variant, "base | shifted")->check(CLI::IsMember({"base", "shifted"}));
  v->add_option("--checks", verify_checks, "Comma-separated subset of " + [] {
    std::string s;
    for (const auto& n : kAllChecks) s += (s.empty() ? "" : ",") + n;
    return s;
  }());
  v->add_flag("--printed-coefficients", verify.printed_coefficients, "Use the 1/sqrt(2pi) magnitudes");

  InterpolateArgs interp;
  std::vector<std::string> interp_files;
  int id = 0, ik = 0;
  auto* ip = app.add_subcommand("interpolate", "Interpolated wavelet from a family pair or two wavelet-set files");
  auto* id_opt = ip->add_option("--d", id, "Dilation factor");
  auto* ik_opt = ip->add_option("--k", ik, "Family index");
  ip->add_option("files", interp_files, "Two wavelet-set JSON files")->expected(0, 2);

  std::string classify_input;
  auto* cl = app.add_subcommand("classify", "Translation-invariance order of a wavelet");
  cl->add_option("input", classify_input, "Wavelet or wavelet-set JSON")->required();

  PlotArgs plot;
  std::string plot_input;
  auto* pl = app.add_subcommand("plot", "CSV samples with exact breakpoints");
  pl->add_option("input", plot_input, "Wavelet or set JSON")->required();
  pl->add_option("--resolution", plot.resolution, "Number of evenly spaced samples");

  ConvergeArgs conv;
  auto* cv = app.add_subcommand("converge", "Perturbed interpolation pairs approaching an MSF wavelet");
  cv->add_option("--steps", conv.steps, "Number of family members");
  cv->add_flag("--json", conv.json, "JSON instead of a table");

  GridArgs grid;
  auto* gr = app.add_subcommand("grid", "Verify the whole (d, k) grid");
  gr->add_option("--d", grid.ds, "Dilation factors")->delimiter(',');
  gr->add_option("--k", grid.ks, "Family indices")->delimiter(',');
  gr->add_flag("--json", grid.json, "JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    CommandResult r;
    if (*c) {
      construct.variant = parse_variant(variant);
      r = cmd_construct(construct);
    } else if (*v) {
      if (!verify_input.empty()) verify.input = read_file(verify_input);
      if (*vd_opt) verify.d = vd;
      if (*vk_opt) verify.k = vk;
      verify.variant = parse_variant(variant);
      std::stringstream ss(verify_checks);
      for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) verify.checks.push_back(item);
      }
      r = cmd_verify(verify);
    } else if (*ip) {
      if (*id_opt) interp.d = id;
      if (*ik_opt) interp.k = ik;
      if (interp_files.size() == 1) throw UsageError("interpolate needs two wavelet-set files");
      if (interp_files.size() == 2) {
        interp.w1 = read_file(interp_files[0]);
        interp.w2 = read_file(interp_files[1]);
      }
      r = cmd_interpolate(interp);
    } else if (*cl) {
      r = cmd_classify(read_file(classify_input));
    } else if (*pl) {
      plot.input = read_file(plot_input);
      r = cmd_plot(plot);
    } else if (*cv) {
      r = cmd_converge(conv);
    } else {
      r = cmd_grid(grid);
    }
    emit(r, out_path);
    return r.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace wsets::cli
