#include "ceresa/cli/run.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ceresa/cli/cache.hpp"
#include "ceresa/errors.hpp"
#include "ceresa/ffcert/certificate.hpp"
#include "ceresa/ffcert/counting.hpp"
#include "ceresa/ffcert/lpoly.hpp"
#include "ceresa/heights/northcott.hpp"
#include "ceresa/picard/torsion_locus.hpp"
#include "ceresa/version.hpp"

namespace ceresa {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A failure reported with a chosen exit code, e.g. a rejected certificate.
struct ExitWith : std::runtime_error {
  ExitWith(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

json str(const Rational& r) { return to_string(r); }
json str(const Integer& n) { return to_string(n); }

json poly_json(const IntPolynomial& f) {
  json a = json::array();
  for (const Integer& c : f.coefficients()) a.push_back(to_string(c));
  return a;
}

template <class F, class Tag>
json point_json(const PlanePoint<F, Tag>& p) {
  if (p.is_infinity()) return "O";
  std::ostringstream x, y;
  x << p.x();
  y << p.y();
  return json{{"x", x.str()}, {"y", y.str()}};
}

// Verdict on the canonical model of the Q-isomorphism class, so isomorphic inputs give equal output.
json canonical_verdict(const PicardCurve& c) {
  const ScaledModel cm = canonical_model(c);
  const CeresaVerdict v = decide_ceresa(cm.curve);
  const PicardInvariants inv = invariants(cm.curve);
  json out{{"canonical_model", {{"a", str(cm.curve.a())}, {"b", str(cm.curve.b())}}},
           {"status", to_string(v.status)},
           {"q_order", v.q_order ? json(*v.q_order) : json(nullptr)},
           {"edelta_torsion", to_string(v.edelta_torsion)},
           {"evidence", v.evidence},
           {"j", str(inv.j)}};
  return out;
}

std::string cache_key(const std::string& command, const std::vector<std::pair<std::string, std::string>>& params) {
  std::string key = command;
  for (const auto& [k, v] : params) key += ";" + k + "=" + v;
  return key;
}

// ---- table rendering ---------------------------------------------------------------------------

std::string cell(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render_table(const json& j, std::ostream& out) {
  if (!j.is_object()) {
    out << cell(j) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) {
    if (!(v.is_array() && !v.empty() && v[0].is_object())) width = std::max(width, k.size());
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v[0].is_object()) continue;
    out << std::left << std::setw(static_cast<int>(width)) << k << "  " << cell(v) << "\n";
  }
  for (const auto& [k, v] : j.items()) {
    if (!(v.is_array() && !v.empty() && v[0].is_object())) continue;
    out << "\n" << k << ":\n";
    std::vector<std::string> cols;
    for (const auto& [ck, cv] : v[0].items()) {
      (void)cv;
      cols.push_back(ck);
    }
    std::vector<std::size_t> w(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) w[i] = cols[i].size();
    for (const auto& row : v) {
      for (std::size_t i = 0; i < cols.size(); ++i) w[i] = std::max(w[i], cell(row.value(cols[i], json())).size());
    }
    for (std::size_t i = 0; i < cols.size(); ++i) out << std::left << std::setw(static_cast<int>(w[i] + 2)) << cols[i];
    out << "\n";
    for (const auto& row : v) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(w[i] + 2)) << cell(row.value(cols[i], json()));
      }
      out << "\n";
    }
  }
}

// ---- commands ----------------------------------------------------------------------------------

struct Options {
  std::string a, b, t, d, x, y;
  std::uint64_t v = 0, ell = 0, q = 0, p = 0, v_max = kDefaultSearchBound;
  unsigned i = 1, n_max = 12, B = 10;
  std::string bound = "inf";
  std::string out_path, cert_path;
  bool certify_roots = false;
};

PicardCurve curve_from(const Options& o) { return PicardCurve(rational_flag("a", o.a), rational_flag("b", o.b)); }

json cmd_decide(const Options& o, const std::optional<ResultCache>& cache) {
  const PicardCurve c = curve_from(o);
  const ScaledModel cm = canonical_model(c);
  const std::string key = cache_key("decide", {{"a", to_string(cm.curve.a())}, {"b", to_string(cm.curve.b())}});
  std::optional<json> value = cache ? cache->get(key) : std::nullopt;
  if (!value) {
    value = canonical_verdict(c);
    if (cache) cache->put(key, *value);
  }
  json out = *value;
  out["a"] = str(c.a());
  out["b"] = str(c.b());
  out["lambda"] = str(cm.lambda);
  return out;
}

json cmd_decide_t(const Options& o, const std::optional<ResultCache>& cache) {
  const Rational t = rational_flag("t", o.t);
  Options inner = o;
  inner.a = to_string(Rational(2 * t));
  inner.b = "1";
  json out = cmd_decide(inner, cache);
  out["t"] = str(t);
  return out;
}

json cmd_certify(const Options& o) {
  const PicardCurve c = curve_from(o);
  CertificateHints h;
  if (o.v) h.v = o.v;
  if (o.ell) h.ell = o.ell;
  if (o.q) h.q = o.q;
  const InfinitudeCertificate cert = certify_infinite(c, h, o.v_max);
  const std::string text = serialize(cert);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) throw std::runtime_error("cannot write " + o.out_path);
    f << text;
  }
  return json{{"a", str(cert.a)},
              {"b", str(cert.b)},
              {"v", cert.v},
              {"ell", cert.ell},
              {"q", cert.q},
              {"sigma", point_json(cert.lift.sigma)},
              {"sigma_order", cert.lift.sigma_order},
              {"lift_set_size", cert.lift.lift_set_size},
              {"det_value", str(cert.det.det_value)},
              {"det_value_twisted", str(cert.det.twisted_det_value)},
              {"unit_mod_ell", cert.det.unit_mod_ell},
              {"evidence", cert.evidence},
              {"certificate", text}};
}

json cmd_enumerate(const Options& o) {
  if (o.n_max < 2) throw UsageError("--nmax must be at least 2");
  json entries = json::array();
  for (const TorsionLocusEntry& e : enumerate_torsion_locus(o.n_max)) {
    json polys = json::array();
    json certs = json::array();
    for (const IntPolynomial& g : e.t_minimal_polynomials) {
      polys.push_back(to_string(g, "t"));
      if (o.certify_roots) certs.push_back(certify_exact_order(g, e.order));
    }
    json stripped = json::array();
    for (const IntPolynomial& g : e.stripped_factors) stripped.push_back(to_string(g, "t"));
    json row{{"order", e.order}, {"t_minimal_polynomials", polys}, {"stripped_factors", stripped}};
    if (o.certify_roots) row["certified_primes"] = certs;
    entries.push_back(row);
  }
  return json{{"n_max", o.n_max}, {"entries", entries}};
}

json cmd_height(const Options& o) {
  CurveQ e{Rational(1)};
  PointQ p;
  json out;
  if (!o.d.empty()) {
    if (o.x.empty() || o.y.empty()) throw UsageError("height: --d needs --x and --y");
    const Rational d = rational_flag("d", o.d);
    if (d == 0) throw std::invalid_argument("height: d must be nonzero");
    e = CurveQ(d);
    p = PointQ(rational_flag("x", o.x), rational_flag("y", o.y));
    if (!e.contains(p)) throw std::invalid_argument("height: point is not on y^2 = x^3 + d");
  } else {
    PicardCurve c = !o.t.empty() ? picard_from_t(rational_flag("t", o.t)) : curve_from(o);
    const AssociatedCurves ac = associated_curves(c);
    e = ac.EDelta;
    p = ac.Q;
    out["a"] = str(c.a());
    out["b"] = str(c.b());
  }
  const HeightValue h = canonical_height(e, p);
  out["d"] = str(e.d());
  out["point"] = point_json(p);
  out["value"] = h.value;
  out["error_bound"] = h.error_bound;
  out["torsion"] = torsion_j0_Q(e.d()).contains(e, p);
  return out;
}

double parse_bound(const std::string& s) {
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(x >= 0)) throw UsageError("--bound must be a nonnegative number or 'inf'");
  return x;
}

json cmd_scan(const Options& o) {
  if (o.B < 1) throw UsageError("--B must be at least 1");
  const double bound = parse_bound(o.bound);
  json rows = json::array();
  for (const NorthcottRow& r : northcott_scan(o.B, bound)) {
    rows.push_back(json{{"t", str(r.t)},
                        {"status", to_string(r.verdict.status)},
                        {"q_order", r.verdict.q_order ? json(*r.verdict.q_order) : json(nullptr)},
                        {"height", r.height.value},
                        {"error_bound", r.height.error_bound}});
  }
  return json{{"B", o.B}, {"bound", std::isinf(bound) ? json("inf") : json(bound)}, {"rows", rows}};
}

json cmd_count(const Options& o) {
  if (o.i < 1 || o.i > 3) throw UsageError("--i must be 1, 2 or 3");
  const auto [a, b] = reduce_model(curve_from(o), o.p);
  const CountRecord r = count_curve(a, b, o.i);
  return json{{"a", str(rational_flag("a", o.a))},
              {"b", str(rational_flag("b", o.b))},
              {"p", r.p},
              {"i", r.i},
              {"a_mod_p", r.a.value()},
              {"b_mod_p", r.b.value()},
              {"curve_count", r.curve_count}};
}

json cmd_lpoly(const Options& o) {
  const LPolyRecord r = lpoly(curve_from(o), o.p);
  return json{{"p", r.p},
              {"L_C", poly_json(r.L_C)},
              {"L_E", poly_json(r.L_E)},
              {"L_P", poly_json(r.L_P)},
              {"jacobian_order", str(r.L_C.evaluate(Integer(1)))}};
}

json cmd_frobdet(const Options& o) {
  const FrobeniusDetResult r = frobenius_det(curve_from(o), o.q, o.ell);
  return json{{"q", r.q},
              {"ell", r.ell},
              {"det_value", str(r.det_value)},
              {"det_value_twisted", str(r.twisted_det_value)},
              {"unit_mod_ell", r.unit_mod_ell}};
}

json cmd_check_cert(const Options& o) {
  std::ifstream in(o.cert_path);
  if (!in) throw ExitWith(kExitInternal, "cannot read " + o.cert_path);
  std::stringstream buf;
  buf << in.rdbuf();
  InfinitudeCertificate cert;
  try {
    cert = parse_certificate(buf.str());
  } catch (const std::invalid_argument& e) {
    throw ExitWith(kExitInternal, e.what());
  }
  const ValidationResult r = validate_certificate(cert);
  if (!r.ok) throw ExitWith(kExitInternal, r.failed_check);
  return json{{"valid", true}, {"a", str(cert.a)}, {"b", str(cert.b)}, {"v", cert.v}, {"ell", cert.ell}, {"q", cert.q}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ceresa cycle torsion for bielliptic Picard curves y^3 = x^4 + a x^2 + b", "ceresa"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  std::string cache_flag;
  bool table = false;
  bool json_flag = false;
  app.add_option("--cache", cache_flag, "Result cache directory (CERESA_CACHE_DIR takes precedence)");
  app.add_flag("--table", table, "Human-readable table instead of JSON");
  app.add_flag("--json", json_flag, "JSON output (default)");

  Options o;
  std::map<std::string, std::function<json()>> handlers;
  std::optional<ResultCache> cache;

  auto curve_opts = [&](CLI::App* s) {
    s->add_option("--a", o.a, "a as an integer or m/n")->required();
    s->add_option("--b", o.b, "b as an integer or m/n")->required();
  };

  auto* decide = app.add_subcommand("decide", "Decide torsion of the Ceresa cycle of y^3 = x^4 + a x^2 + b");
  curve_opts(decide);
  handlers["decide"] = [&] { return cmd_decide(o, cache); };

  auto* decide_t = app.add_subcommand("decide-t", "Decide for the one-parameter family (a, b) = (2t, 1)");
  decide_t->add_option("--t", o.t, "t as an integer or m/n")->required();
  handlers["decide-t"] = [&] { return cmd_decide_t(o, cache); };

  auto* certify = app.add_subcommand("certify", "Find or check an infinite-order certificate");
  curve_opts(certify);
  certify->add_option("--v", o.v, "Reduction prime for the lift sum");
  certify->add_option("--ell", o.ell, "Prime dividing the order of sigma");
  certify->add_option("--q", o.q, "Auxiliary prime for the Frobenius determinant");
  certify->add_option("--vmax", o.v_max, "Search bound for v and q")->capture_default_str();
  certify->add_option("--out", o.out_path, "Write the canonical certificate text to this file");
  handlers["certify"] = [&] { return cmd_certify(o); };

  auto* enumerate = app.add_subcommand("enumerate-torsion", "Torsion locus of the t-line up to order N");
  enumerate->add_option("--nmax", o.n_max, "Largest order N")->capture_default_str();
  enumerate->add_flag("--certify", o.certify_roots, "Certify exact orders by reduction at two primes");
  handlers["enumerate-torsion"] = [&] { return cmd_enumerate(o); };

  auto* height = app.add_subcommand("height", "Canonical height of (x, y) on y^2 = x^3 + d, or of Q on E^Delta");
  height->add_option("--d", o.d, "d of y^2 = x^3 + d");
  height->add_option("--x", o.x, "x coordinate");
  height->add_option("--y", o.y, "y coordinate");
  height->add_option("--a", o.a, "a of the Picard curve");
  height->add_option("--b", o.b, "b of the Picard curve");
  height->add_option("--t", o.t, "t of the family (2t, 1)");
  handlers["height"] = [&] {
    const bool by_point = !o.d.empty();
    const bool by_t = !o.t.empty();
    const bool by_ab = !o.a.empty() || !o.b.empty();
    if (by_point + by_t + by_ab != 1 || (by_ab && (o.a.empty() || o.b.empty()))) {
      throw UsageError("height: give exactly one of --d/--x/--y, --t, or --a/--b");
    }
    return cmd_height(o);
  };

  auto* scan = app.add_subcommand("scan", "Northcott scan over t = m/n with max(|m|, n) <= B");
  scan->add_option("--B", o.B, "Naive height bound for t")->capture_default_str();
  scan->add_option("--bound", o.bound, "Keep rows with canonical height <= bound ('inf' keeps all)")
      ->capture_default_str();
  handlers["scan"] = [&] { return cmd_scan(o); };

  auto* count = app.add_subcommand("count", "#C(F_{p^i})");
  curve_opts(count);
  count->add_option("--p", o.p, "Prime")->required();
  count->add_option("--i", o.i, "Extension degree 1, 2 or 3")->capture_default_str();
  handlers["count"] = [&] { return cmd_count(o); };

  auto* lp = app.add_subcommand("lpoly", "L-polynomials L_C = L_E * L_P at p");
  curve_opts(lp);
  lp->add_option("--p", o.p, "Prime")->required();
  handlers["lpoly"] = [&] { return cmd_lpoly(o); };

  auto* fd = app.add_subcommand("frobdet", "det(Fr_q - 1) on V and its ell-adic unit test");
  curve_opts(fd);
  fd->add_option("--q", o.q, "Prime of good reduction")->required();
  fd->add_option("--ell", o.ell, "Prime > 3")->required();
  handlers["frobdet"] = [&] { return cmd_frobdet(o); };

  auto* check = app.add_subcommand("check-cert", "Re-validate a certificate file");
  check->add_option("path", o.cert_path, "Certificate file")->required();
  handlers["check-cert"] = [&] { return cmd_check_cert(o); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  // Model-dependent outputs are keyed on the literal flags; decide/decide-t use canonical models.
  const bool literal_cache = name != "decide" && name != "decide-t" && name != "check-cert";
  try {
    cache = ResultCache::from_environment(cache_flag.empty() ? std::nullopt : std::optional<std::string>(cache_flag));
    json result;
    if (literal_cache && cache) {
      std::vector<std::pair<std::string, std::string>> params;
      for (const auto* opt : app.get_subcommands().front()->get_options()) {
        if (opt->count() > 0 && opt->get_name() != "--help") params.emplace_back(opt->get_name(), opt->as<std::string>());
      }
      const std::string key = cache_key(name, params);
      auto hit = cache->get(key);
      // --out must still produce its file.
      if (hit && o.out_path.empty()) {
        result = *hit;
      } else {
        result = handlers[name]();
        cache->put(key, result);
      }
    } else {
      result = handlers[name]();
    }
    if (table) {
      render_table(result, out);
    } else {
      out << result.dump(2) << "\n";
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ExitWith& e) {
    err << e.what() << "\n";
    return e.code;
  } catch (const DegenerateCurve& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const BadReduction& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InvalidHint& e) {
    err << e.what() << " [" << e.check() << "]\n";
    return kExitInvalidInput;
  } catch (const NoCertificateFound& e) {
    err << e.what() << "\n";
    return kExitNoCertificate;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace ceresa
