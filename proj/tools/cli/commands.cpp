#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "realcurves/cohomology.hpp"
#include "realcurves/errors.hpp"
#include "realcurves/expr_parser.hpp"
#include "realcurves/picard.hpp"
#include "realcurves/witt.hpp"

namespace realcurves::cli {

namespace {

// Runs body and turns exceptions into the documented exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const OffCurveError& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const HypothesisError& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const InconsistentInvariants& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const InternalError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::domain_error& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  }
}

void check(bool ok, const std::string& what) {
  if (!ok) throw InternalError("cross-check failed: " + what);
}

Json group_json(const AbGroupDescriptor& g) { return Json{{"group", to_json(g)}, {"text", format(g)}}; }

Json candidates_json(const std::vector<GroupCandidate>& cands) {
  Json arr = Json::array();
  for (const auto& c : cands) arr.push_back(to_json(c));
  return arr;
}

// eta values the report must account for: the known one, or both candidates.
std::vector<int> eta_candidates(const CurveInvariants& inv, const EtaResult& eta) {
  if (eta.value) return {*eta.value};
  std::vector<int> out;
  for (int e = 0; e <= 1 && e <= inv.r + inv.c - 1; ++e) out.push_back(e);
  return out;
}

}  // namespace

// ---- analyze ----------------------------------------------------------------

Json analyze_report(const CurveSpec& spec, std::string_view input, const std::vector<int>& units) {
  Json report;
  report["command"] = "analyze";
  report["input"] = std::string(input);

  std::optional<ConicClass> conic;
  CurveInvariants inv;
  if (spec.kind() == CurveSpec::Kind::Conic) {
    conic = classify_conic(spec);
    inv = conic->invariants;
  } else {
    inv = hyperelliptic_invariants(spec);
  }

  Json curve;
  curve["kind"] = spec.kind() == CurveSpec::Kind::Conic ? "conic" : "hyperelliptic";
  curve["equation"] = spec.str();
  curve["conic_class"] = conic ? Json(std::string(to_string(conic->type))) : Json(nullptr);
  if (spec.kind() == CurveSpec::Kind::Hyperelliptic) {
    Json q = Json::array();
    for (const auto& c : spec.q().coefficients()) q.push_back(c.str());
    curve["q_coefficients"] = std::move(q);
  } else {
    curve["q_coefficients"] = nullptr;
  }
  report["curve"] = std::move(curve);
  report["invariants"] = to_json(inv);

  const CohomologyDims etale = etale_dims(inv);
  const CohomologyDims quotient = quotient_space_dims(inv);
  report["cohomology"] = Json{{"etale", to_json(etale)}, {"quotient_space", to_json(quotient)}};

  const AbGroupDescriptor witt = witt_group(inv);
  report["witt"] = group_json(witt);

  const EtaReport eta = eta_full(spec, inv);
  report["eta"] = to_json(eta.eta);
  report["eta_complex"] = eta.eta_complex ? to_json(*eta.eta_complex) : Json(nullptr);
  report["eta_undetermined"] = !eta.eta.known();

  // Cross-module checks; a failure here is a bug, reported with exit code 4.
  check(witt.free_rank == inv.s, "free rank of W(X) equals s");
  if (!inv.complete && inv.has_real_points()) check(witt.z2 == inv.g + inv.c, "u - s = g + c");
  if (inv.geometrically_connected && !inv.complete) check(quotient.h1 == etale.h1 - inv.s, "quotient h1 = etale h1 - s");
  if (eta.eta.value) check(*eta.eta.value <= inv.r + inv.c - 1, "eta <= r + c - 1");

  const std::vector<int> etas = eta_candidates(inv, eta.eta);
  if (inv.geometrically_connected) {
    report["pic_tors"] = candidates_json(pic_tors(inv, eta.eta));
  } else {
    // X is a complex curve Y viewed over R; c counts the points of Y at infinity.
    std::vector<GroupCandidate> cands;
    for (int e : etas) cands.push_back({e, pic_tors_complex(inv.g, inv.c, e)});
    report["pic_tors"] = candidates_json(cands);
  }

  Json unit_groups = Json::array();
  for (int n : units) {
    std::vector<GroupCandidate> cands;
    for (int e : etas) {
      // O(X)^* of a complex curve has no sign to account for.
      AbGroupDescriptor g = inv.geometrically_connected ? units_mod_n(e, n) : AbGroupDescriptor::cyclic(n, e);
      cands.push_back({e, g});
    }
    unit_groups.push_back(Json{{"n", n}, {"candidates", candidates_json(cands)}});
  }
  report["units"] = std::move(unit_groups);

  const LevelReport level = level_bounds(inv, eta.eta_complex);
  Json lvl;
  lvl["function_field"] = std::string(to_string(inv.level_of_function_field));
  lvl["coordinate_ring"] = std::string(to_string(level.level));
  lvl["reason"] = level.reason;
  report["level"] = std::move(lvl);
  return report;
}

namespace {

std::string eta_text(const Json& eta) {
  std::ostringstream os;
  os << (eta["eta"].is_null() ? std::string("undetermined") : std::to_string(eta["eta"].get<int>()));
  const Json& cert = eta["certificate"];
  os << "  [" << cert["kind"].get<std::string>();
  if (!cert["relation"].is_null()) os << ": " << cert["relation"].get<std::string>();
  if (!cert["order"].is_null()) os << ", order of p = " << cert["order"].get<int>();
  if (cert["kind"] == "TorsionExhausted") os << ", " << cert["cases_checked"].size() << " cases checked";
  os << "]";
  return os.str();
}

std::string candidates_text(const Json& cands) {
  if (cands.size() == 1) return cands[0]["text"].get<std::string>();
  std::string out;
  for (const auto& c : cands) {
    if (!out.empty()) out += "  |  ";
    out += "eta=" + std::to_string(c["eta"].get<int>()) + ": " + c["text"].get<std::string>();
  }
  return out;
}

std::string opt_int(const Json& j) { return j.is_null() ? "-" : std::to_string(j.get<int>()); }

}  // namespace

std::string render_analyze_text(const Json& r) {
  std::ostringstream os;
  const Json& inv = r["invariants"];
  const Json& curve = r["curve"];
  auto row = [&os](const std::string& label) -> std::ostream& { return os << std::left << std::setw(15) << label; };
  row("curve:") << curve["equation"].get<std::string>() << "  (" << curve["kind"].get<std::string>();
  if (!curve["conic_class"].is_null()) os << ", " << curve["conic_class"].get<std::string>();
  os << ")\n";
  row("invariants:") << "d=" << opt_int(inv["d"]) << " d'=" << opt_int(inv["d_prime"]) << " k=" << opt_int(inv["k"])
                     << " k'=" << opt_int(inv["k_prime"]) << " g=" << inv["g"] << " r=" << inv["r"] << " c=" << inv["c"]
                     << " s=" << inv["s"] << " t=" << inv["t"] << "\n";
  row("") << (inv["geometrically_connected"].get<bool>() ? "geometrically connected" : "geometrically disconnected")
          << ", level of R(X): " << inv["level_of_function_field"].get<std::string>() << "\n";
  auto dims = [](const Json& d) {
    std::ostringstream s;
    s << "h0=" << d["h0"] << " h1=" << d["h1"] << " h2=" << d["h2"] << " h>=3=" << d["h_stable"];
    return s.str();
  };
  row("H^i_et(X):") << dims(r["cohomology"]["etale"]) << "\n";
  row("H^i(X(C)/G):") << dims(r["cohomology"]["quotient_space"]) << "\n";
  row("W(X):") << r["witt"]["text"].get<std::string>() << "\n";
  row("eta(X):") << eta_text(r["eta"]) << "\n";
  row("eta(X_C):") << (r["eta_complex"].is_null() ? std::string("not computed") : eta_text(r["eta_complex"])) << "\n";
  row("Pic_tors(X):") << candidates_text(r["pic_tors"]) << "\n";
  for (const auto& u : r["units"]) {
    row("U_" + std::to_string(u["n"].get<int>()) + "(X):") << candidates_text(u["candidates"]) << "\n";
  }
  row("level O(X):") << r["level"]["coordinate_ring"].get<std::string>() << "  ("
                     << r["level"]["reason"].get<std::string>() << ")\n";
  return os.str();
}

int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    for (int n : options.units) {
      if (n < 2) throw ParseError("--units entries must be >= 2", 0);
    }
    std::optional<CurveSpec> spec;
    std::string input;
    if (options.coeffs) {
      if (!options.expression.empty()) throw ParseError("give either an expression or --coeffs, not both", 0);
      input = "--coeffs " + *options.coeffs;
      spec = parse_coefficient_list(*options.coeffs);
    } else {
      if (options.expression.empty()) throw ParseError("missing curve expression", 0);
      input = options.expression;
      spec = parse_curve(options.expression);
    }
    Json report = analyze_report(*spec, input, options.units);
    if (options.json) {
      out << report.dump(2) << "\n";
    } else {
      out << render_analyze_text(report);
    }
    return static_cast<int>(kExitOk);
  });
}

// ---- sample -----------------------------------------------------------------

int run_sample(const SampleOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    if (options.count < 1) throw ParseError("--count must be >= 1", 0);
    if (options.k && *options.k != 0 && *options.k != 2 && *options.k != 4) throw ParseError("--k must be 0, 2 or 4", 0);
    if (options.amax < 1 || options.cmax < 1 || options.bmax < 0) throw ParseError("box bounds must be positive", 0);
    const SampleSummary summary = run_sampling(options);
    const Json report = sample_report(options, summary);
    if (options.json) {
      out << report.dump(2) << "\n";
      return static_cast<int>(kExitOk);
    }
    const double n = static_cast<double>(options.count);
    out << "samples: " << options.count << "  seed: " << options.seed << "\n";
    out << std::fixed << std::setprecision(4);
    out << "  eta = 0        " << std::setw(8) << summary.known0 << "  " << summary.known0 / n << "\n";
    out << "  eta = 1        " << std::setw(8) << summary.known1 << "  " << summary.known1 / n << "\n";
    out << "  undetermined   " << std::setw(8) << summary.undetermined << "  " << summary.undetermined / n << "\n";
    for (const auto& tc : report["torsion_cases"]) {
      out << "  k=" << tc["k"] << ": " << tc["samples"] << " samples, " << tc["cases_per_sample"]
          << " torsion cases each, largest multiple " << tc["max_multiplier"] << "\n";
    }
    if (summary.known1 > 0) out << "eta = 1 certificates:\n";
    for (const auto& rec : summary.records) {
      if (rec.eta.value != 1) continue;
      out << "  #" << rec.index << "  k=" << rec.params.k << " a=" << rec.params.a << " b=" << rec.params.b
          << " c=" << rec.params.c << "  " << rec.eta.certificate.relation->str() << " (order "
          << *rec.eta.certificate.order << ")\n";
    }
    return static_cast<int>(kExitOk);
  });
}

// ---- ec ---------------------------------------------------------------------

WeierstrassCurve parse_weierstrass(std::string_view text) {
  if (text.find('v') != std::string_view::npos) {
    BiPoly p = parse_polynomial(text, "v");
    std::vector<BigRational> c(4);
    for (const auto& [e, coeff] : p.terms) {
      if (e[0] > 3) throw ParseError("Weierstrass cubic has degree > 3", 0);
      c[static_cast<size_t>(e[0])] = coeff;
    }
    if (c[3] != BigRational(1)) throw ParseError("Weierstrass cubic must be monic of degree 3", 0);
    return WeierstrassCurve(c[2], c[1], c[0]);
  }
  std::vector<BigRational> c;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      c.push_back(BigRational::parse(item));
    } catch (const std::exception&) {
      throw ParseError("bad curve coefficient '" + std::string(item) + "'", start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (c.size() != 3) throw ParseError("--curve takes c2,c1,c0 or a cubic in v", 0);
  return WeierstrassCurve(c[0], c[1], c[2]);
}

ECPoint parse_point(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::string lower;
  for (char ch : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "inf" || lower == "infinity" || lower == "o") return ECPoint::infinity();
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw ParseError("point must look like (v,u) or inf: '" + s + "'", 0);
  const std::string body = s.substr(1, s.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string::npos) throw ParseError("point must look like (v,u)", 0);
  try {
    return ECPoint(BigRational::parse(body.substr(0, comma)), BigRational::parse(body.substr(comma + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad point coordinates in '" + s + "'", 0);
  } catch (const std::domain_error&) {
    throw ParseError("bad point coordinates in '" + s + "'", 0);
  }
}

int run_ec(const EcOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    if (options.args.empty()) throw ParseError("ec needs an operation: add, double, multiple or torsion", 0);
    const WeierstrassCurve e = parse_weierstrass(options.curve);
    const std::string& op = options.args[0];
    auto need = [&](std::size_t n) {
      if (options.args.size() != n + 1) {
        throw ParseError("'" + op + "' takes " + std::to_string(n) + " operand(s)", 0);
      }
    };
    Json report;
    report["command"] = "ec";
    report["curve"] = Json{{"c2", e.c2().str()}, {"c1", e.c1().str()}, {"c0", e.c0().str()}};
    report["op"] = op;
    std::string text;
    if (op == "add") {
      need(2);
      ECPoint r = ec_add(e, parse_point(options.args[1]), parse_point(options.args[2]));
      report["result"] = to_json(r);
      text = r.str();
    } else if (op == "double") {
      need(1);
      ECPoint r = ec_double(e, parse_point(options.args[1]));
      report["result"] = to_json(r);
      text = r.str();
    } else if (op == "multiple") {
      need(2);
      long n = 0;
      try {
        std::size_t used = 0;
        n = std::stol(options.args[1], &used);
        if (used != options.args[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("multiplier must be an integer: '" + options.args[1] + "'", 0);
      }
      ECPoint r = multiple(e, n, parse_point(options.args[2]));
      report["result"] = to_json(r);
      text = r.str();
    } else if (op == "torsion") {
      need(1);
      if (options.bound < 1) throw ParseError("--bound must be >= 1", 0);
      TorsionVerdict v = torsion_order_bounded(e, parse_point(options.args[1]), options.bound);
      report["torsion"] = Json{{"order", v.order ? Json(*v.order) : Json(nullptr)}, {"bound", v.bound}};
      text = v.order ? "order " + std::to_string(*v.order) : "NotTorsionWithin(" + std::to_string(v.bound) + ")";
    } else {
      throw ParseError("unknown ec operation '" + op + "'", 0);
    }
    if (options.json) {
      out << report.dump(2) << "\n";
    } else {
      out << text << "\n";
    }
    return static_cast<int>(kExitOk);
  });
}

// ---- entry point ------------------------------------------------------------

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad integer list '" + text + "'", 0);
    }
  }
  if (out.empty()) throw ParseError("empty integer list", 0);
  return out;
}

}  // namespace

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of smooth real affine conics and hyperelliptic curves", "realcurves"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  std::string units_text = "2";
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: invariants, cohomology, W(X), eta, Pic_tors, U_n");
  analyze_cmd->add_option("expression", analyze.expression, "Curve, e.g. \"x^2 + y^2 - 1 = 0\" or \"y^2 = x^3 - x\"");
  analyze_cmd->add_option("--coeffs", analyze.coeffs, "Ascending coefficients a0,a1,...,ad of Q in y^2 = Q(x)");
  analyze_cmd->add_option("--units", units_text, "Comma-separated n for U_n (default 2)");
  analyze_cmd->add_flag("--json", analyze.json, "Emit JSON");

  SampleOptions sample;
  std::optional<int> sample_k;
  std::string pin_text = "none";
  auto* sample_cmd = app.add_subcommand("sample", "Estimate how often eta = 1 over random rational quartics");
  sample_cmd->add_option("--count", sample.count, "Number of samples")->required();
  sample_cmd->add_option("--seed", sample.seed, "RNG seed")->required();
  sample_cmd->add_option("--k", sample_k, "Fix the number of real roots (0, 2 or 4)");
  sample_cmd->add_option("--amax", sample.amax, "a drawn from [1, amax]");
  sample_cmd->add_option("--bmax", sample.bmax, "b drawn from [-bmax, bmax]");
  sample_cmd->add_option("--cmax", sample.cmax, "c drawn from [1, cmax]");
  sample_cmd->add_option("--pin", pin_text, "Pin a coincidence locus: b=0 or a=c");
  sample_cmd->add_flag("--json", sample.json, "Emit JSON");

  EcOptions ec;
  auto* ec_cmd = app.add_subcommand("ec", "Elliptic-curve arithmetic on u^2 = v^3 + c2 v^2 + c1 v + c0");
  ec_cmd->add_option("--curve", ec.curve, "c2,c1,c0 or a monic cubic in v")->required();
  ec_cmd->add_option("--bound", ec.bound, "Torsion search bound (default 12)");
  ec_cmd->add_flag("--json", ec.json, "Emit JSON");
  ec_cmd->add_option("args", ec.args, "add P Q | double P | multiple n P | torsion P")->allow_extra_args();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitParse;
  }

  if (analyze_cmd->parsed()) {
    return guarded(err, [&]() {
      analyze.units = parse_int_list(units_text);
      return run_analyze(analyze, out, err);
    });
  }
  if (sample_cmd->parsed()) {
    return guarded(err, [&]() {
      sample.k = sample_k;
      if (pin_text == "none") {
        sample.pin = Pin::None;
      } else if (pin_text == "b=0") {
        sample.pin = Pin::BZero;
      } else if (pin_text == "a=c") {
        sample.pin = Pin::AEqualsC;
      } else {
        throw ParseError("--pin must be none, b=0 or a=c", 0);
      }
      return run_sample(sample, out, err);
    });
  }
  return run_ec(ec, out, err);
}

}  // namespace realcurves::cli
