#include "hermitia/runner.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hermitia/builders.hpp"
#include "hermitia/metrics.hpp"
#include "hermitia/quaternion.hpp"

namespace hermitia {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::error: return "error";
  }
  return "error";
}

std::uint64_t seed_from_environment() {
  const char* s = std::getenv("HERMITIA_SEED");
  if (!s || !*s) return default_seed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 0);
  return (end && *end == '\0') ? static_cast<std::uint64_t>(v) : default_seed;
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string millis(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

struct Ctx {
  Ctx(const Model& m, const CheckSpec& s, const RunOptions& o) : model(m), spec(s), opt(o) {}

  const Model& model;
  const CheckSpec& spec;
  const RunOptions& opt;
  Json result = Json::object();
  std::vector<std::string> failures;
  std::set<std::string> consumed;
  std::vector<std::string> notes;
  bool inconclusive = false;

  [[noreturn]] void bad(const std::string& what) const { throw ManifestError("check " + spec.id + ": " + what); }

  const Json& raw(const char* key) const {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) bad(std::string("missing parameter '") + key + "'");
    return *it;
  }
  std::string str(const char* key) const {
    const Json& j = raw(key);
    if (!j.is_string()) bad(std::string("parameter '") + key + "' must be a string");
    return j.get<std::string>();
  }
  std::optional<std::string> opt_str(const char* key) const {
    if (!spec.params.contains(key)) return std::nullopt;
    return str(key);
  }
  long integer(const char* key, long dflt) const {
    if (!spec.params.contains(key)) return dflt;
    const Json& j = raw(key);
    if (!j.is_number_integer()) bad(std::string("parameter '") + key + "' must be an integer");
    return j.get<long>();
  }
  double number(const char* key, double dflt) const {
    if (!spec.params.contains(key)) return dflt;
    const Json& j = raw(key);
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return std::stod(j.get<std::string>());
    bad(std::string("parameter '") + key + "' must be a number");
  }
  std::vector<std::string> names(const char* key) const {
    std::vector<std::string> out;
    if (!spec.params.contains(key)) return out;
    const Json& j = raw(key);
    if (!j.is_array()) bad(std::string("parameter '") + key + "' must be an array of names");
    for (const auto& x : j) {
      if (!x.is_string()) bad(std::string("parameter '") + key + "' must be an array of names");
      out.push_back(x.get<std::string>());
    }
    return out;
  }
  Valuation valuation() const { return model.valuation(opt_str("valuation").value_or("default")); }

  const ComplexStructure& structure(const char* key = "structure") const { return model.structure(str(key)); }
  Form form(const char* key = "form") const { return model.form(str(key)); }
  std::string text(const Form& f) const { return f.to_string(model.presentation().basis); }

  bool has_expect(const std::string& key) const { return spec.expect.contains(key); }
  const Json& expect(const std::string& key) {
    consumed.insert(key);
    return spec.expect.at(key);
  }
  std::string expect_str(const std::string& key) {
    const Json& j = expect(key);
    if (!j.is_string()) bad("expectation '" + key + "' must be a string");
    return j.get<std::string>();
  }

  /// Records a boolean outcome and compares it with the expectation (or the default).
  void want(const std::string& key, bool actual, std::optional<bool> dflt = true) {
    result[key] = actual;
    bool expected;
    if (has_expect(key)) {
      const Json& j = expect(key);
      if (!j.is_boolean()) bad("expectation '" + key + "' must be a boolean");
      expected = j.get<bool>();
    } else if (dflt) {
      expected = *dflt;
    } else {
      return;
    }
    if (actual != expected) failures.push_back(key + ": expected " + yes_no(expected) + ", got " + yes_no(actual));
  }
  void mismatch(const std::string& msg) { failures.push_back(msg); }
};

Json sig_json(const Signature& s) { return s.to_string(); }

Json strings(const std::vector<std::vector<std::string>>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(r);
  return j;
}

Json subchecks(const StructureReport& r) {
  Json j = Json::array();
  for (const auto& c : r.checks) {
    Json o{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) o["detail"] = c.detail;
    j.push_back(std::move(o));
  }
  return j;
}

RationalMatrix rational(const Model& m, const Json& ref) { return RationalMatrix::from_scalar(m.matrix(ref)); }

void predicate(Ctx& c, PredicateReport (*fn)(const HermitianCandidate&)) {
  HermitianCandidate cand(c.structure(), c.form());
  PredicateReport r = fn(cand);
  if (!r.holds) c.result["residual"] = c.text(r.residual);
  c.want("holds", r.holds);
}

void run_kind(Ctx& c) {
  const Model& model = c.model;
  switch (c.spec.kind) {
    case CheckKind::jacobi: {
      const JacobiReport& j = model.jacobi();
      if (j.witness) {
        const unsigned k = *j.witness;
        c.result["witness"] = "d(d" + model.presentation().basis[k] + ") = " + c.text(j.dd[k]);
      }
      c.want("pass", j.pass);
      break;
    }
    case CheckKind::integrable: {
      NijenhuisReport n = c.structure().nijenhuis();
      if (n.witness) {
        const auto& b = model.presentation().basis;
        std::string v;
        for (const auto& x : n.value) v += (v.empty() ? "" : ", ") + x.to_string();
        c.result["witness"] = "N(" + b[n.witness->first] + "," + b[n.witness->second] + ") = [" + v + "]";
      }
      c.want("integrable", n.pass);
      break;
    }
    case CheckKind::hermitian: {
      bool ok = true;
      try {
        HermitianCandidate cand(c.structure(), c.form());
      } catch (const DomainError& e) {
        ok = false;
        c.result["reason"] = e.what();
      }
      c.want("hermitian", ok);
      break;
    }
    case CheckKind::kahler: predicate(c, is_kahler); break;
    case CheckKind::balanced: predicate(c, is_balanced); break;
    case CheckKind::pluriclosed: predicate(c, is_pluriclosed); break;
    case CheckKind::astheno_kahler: predicate(c, is_astheno_kahler); break;
    case CheckKind::k_pluriclosed: {
      HermitianCandidate cand(c.structure(), c.form());
      const long k = c.integer("k", 1);
      if (k < 1) c.bad("k must be positive");
      PredicateReport r = is_k_pluriclosed(cand, static_cast<unsigned>(k));
      c.result["k"] = k;
      if (!r.holds) c.result["residual"] = c.text(r.residual);
      c.want("holds", r.holds);
      break;
    }
    case CheckKind::lee_form: {
      HermitianCandidate cand(c.structure(), c.form());
      LeeFormSolution s = lee_form(cand);
      if (s.theta) {
        c.result["theta"] = c.text(*s.theta);
        c.want("unique", s.unique, std::nullopt);
        c.want("closed", s.d_theta_zero, std::nullopt);
      }
      c.want("exists", s.theta.has_value());
      break;
    }
    case CheckKind::bismut_torsion: {
      HermitianCandidate cand(c.structure(), c.form());
      BismutTorsion t = bismut_torsion(cand);
      c.result["torsion"] = c.text(t.torsion);
      if (c.has_expect("torsion")) {
        const Form e = model.form(c.expect_str("torsion"));
        bool up_to_sign = false;
        if (c.has_expect("up_to_sign")) up_to_sign = c.expect("up_to_sign").get<bool>();
        if (t.torsion == e) {
          c.result["sign"] = "+";
        } else if (up_to_sign && t.torsion == e.scaled(Scalar(-1))) {
          c.result["sign"] = "-";
          c.notes.push_back("torsion equals the negative of the expected form");
        } else {
          c.mismatch("torsion: expected " + c.text(e) + ", got " + c.text(t.torsion));
        }
      }
      if (!t.d_torsion.is_zero()) c.result["d_torsion"] = c.text(t.d_torsion);
      c.want("closed", t.d_torsion.is_zero());
      break;
    }
    case CheckKind::differential: {
      const Form d = model.algebra().d(c.form());
      c.result["d"] = c.text(d);
      if (c.has_expect("equals")) {
        const Form e = model.form(c.expect_str("equals"));
        c.want("equals_expected", d == e, std::nullopt);
        if (!(d == e)) c.mismatch("d: expected " + c.text(e) + ", got " + c.text(d));
      }
      c.want("zero", d.is_zero(), std::nullopt);
      break;
    }
    case CheckKind::form_equals: {
      const Form a = model.form(c.str("lhs")), b = model.form(c.str("rhs"));
      const Form diff = a - b;
      if (!diff.is_zero()) c.result["difference"] = c.text(diff);
      c.want("equal", diff.is_zero());
      break;
    }
    case CheckKind::bidegree: {
      const ComplexStructure& j = c.structure();
      const Form a = c.form();
      auto parts = j.bidegree(a);
      Json comps = Json::array();
      Form sum(a.space());
      for (const auto& [pq, f] : parts) {
        comps.push_back({pq.first, pq.second});
        sum += f;
      }
      c.result["components"] = comps;
      c.want("sums_back", sum == a);
      if (c.has_expect("pure")) {
        const Json& e = c.expect("pure");
        if (!e.is_array() || e.size() != 2) c.bad("expectation 'pure' must be [p, q]");
        const bool pure = parts.size() == 1 && parts.begin()->first == Bidegree{e[0].get<unsigned>(), e[1].get<unsigned>()};
        if (!pure) c.mismatch("bidegree: expected pure " + e.dump() + ", got " + comps.dump());
      }
      if (c.has_expect("components")) {
        if (c.expect("components") != comps)
          c.mismatch("components: expected " + c.spec.expect["components"].dump() + ", got " + comps.dump());
      }
      break;
    }
    case CheckKind::del_closed: {
      const long k = c.integer("power", 1);
      if (k < 1) c.bad("power must be positive");
      const Form a = c.form().pow(static_cast<unsigned>(k));
      const Form d = c.structure().del(a);
      c.result["power"] = k;
      if (!d.is_zero()) c.result["del"] = c.text(d);
      c.want("zero", d.is_zero());
      break;
    }
    case CheckKind::signature: {
      ScalarMatrix h;
      if (auto b = c.opt_str("bilinear")) {
        h = model.bilinear(*b);
      } else {
        h = hermitian_gram(c.structure(), c.form());
      }
      const Signature s = hermitian_signature(h, c.valuation());
      c.result["gram"] = strings(h.to_strings());
      c.result["signature"] = sig_json(s);
      if (c.has_expect("signature")) {
        const std::string e = c.expect_str("signature");
        if (e != s.to_string()) c.mismatch("signature: expected " + e + ", got " + s.to_string());
      }
      c.want("indefinite", s.positive > 0 && s.negative > 0, std::nullopt);
      c.want("degenerate", s.zero > 0, std::nullopt);
      break;
    }
    case CheckKind::positivity_falsify: {
      const long p = c.integer("p", 1);
      const long samples = c.integer("samples", 10000);
      if (p < 1 || samples < 1) c.bad("p and samples must be positive");
      PositivitySample s = positivity_falsify(c.structure(), c.form(), static_cast<unsigned>(p), c.valuation(),
                                              static_cast<std::size_t>(samples), c.opt.seed);
      c.result["samples"] = s.samples;
      c.result["value"] = decimal(s.value);
      if (s.violation) {
        Json w = Json::array();
        for (const auto& v : s.witness) {
          Json vec = Json::array();
          for (const auto& z : v) vec.push_back({decimal(z.real()), decimal(z.imag())});
          w.push_back(std::move(vec));
        }
        c.result["witness"] = std::move(w);
      }
      if (c.has_expect("violation")) {
        c.want("violation", s.violation, std::nullopt);
        if (!s.violation)
          c.notes.push_back("no violation in " + std::to_string(s.samples) + " samples; positivity is sampled, not proved");
      } else {
        c.result["violation"] = s.violation;
        if (s.violation) c.mismatch("violation found: the form is not weakly positive");
        else c.inconclusive = true;
      }
      break;
    }
    case CheckKind::strong_positivity: {
      const Json& terms = c.raw("terms");
      if (!terms.is_array()) c.bad("terms must be an array");
      std::vector<StrongTerm> dec;
      for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("coef") || !t.contains("factors")) c.bad("terms need coef and factors");
        StrongTerm st;
        st.coef = model.scalar(t["coef"].get<std::string>());
        for (const auto& f : t["factors"]) st.factors.push_back(model.form(f.get<std::string>()));
        dec.push_back(std::move(st));
      }
      CertificateResult r = strong_positivity_certificate(c.structure(), c.form(), dec, c.valuation());
      if (!r.problem.empty()) c.result["problem"] = r.problem;
      if (!r.residual.is_zero()) c.result["residual"] = c.text(r.residual);
      c.want("holds", r.holds);
      break;
    }
    case CheckKind::hypercomplex: {
      StructureReport r = check_hypercomplex(model.structure(c.str("I")), model.structure(c.str("J")),
                                             model.structure(c.str("K")));
      c.result["subchecks"] = subchecks(r);
      c.want("pass", r.pass);
      break;
    }
    case CheckKind::pseudo_hyperkahler: {
      StructureReport r = check_pseudo_hyperkahler(model.structure(c.str("I")), model.structure(c.str("J")),
                                                   model.structure(c.str("K")), c.form("omega_I"),
                                                   c.form("omega_J"), c.form("omega_K"));
      c.result["subchecks"] = subchecks(r);
      c.want("pass", r.pass);
      break;
    }
    case CheckKind::hkt: {
      HktReport r = check_hkt(model.structure(c.str("I")), model.structure(c.str("J")), c.form(), c.valuation());
      c.result["h"] = strings(r.h.to_strings());
      c.result["signature"] = sig_json(r.signature);
      if (!r.del_zero) c.result["del_omega"] = c.text(r.del_omega);
      c.want("del_zero", r.del_zero, std::nullopt);
      c.want("positive", r.positive, std::nullopt);
      c.want("holds", r.holds);
      break;
    }
    case CheckKind::quaternionic_balanced: {
      QuaternionicBalancedReport r = check_quaternionic_balanced(model.structure(c.str("I")), c.form());
      c.result["exponent"] = r.exponent;
      if (!r.residual.is_zero()) c.result["residual"] = c.text(r.residual);
      c.want("holds", r.holds);
      break;
    }
    case CheckKind::del_exact: {
      std::optional<Form> claimed;
      if (auto p = c.opt_str("primitive")) claimed = model.form(*p);
      DelExactReport r = del_exact(c.structure(), c.form(), claimed);
      if (r.primitive) c.result["primitive"] = c.text(*r.primitive);
      if (!r.detail.empty()) c.result["detail"] = r.detail;
      c.want("exact", r.exact);
      break;
    }
    case CheckKind::hkt_obstruction: {
      ObstructionReport r = hkt_obstruction(model.structure(c.str("I")), model.structure(c.str("J")),
                                            c.form("alpha"), c.form("beta"));
      c.result["value"] = r.value.to_string();
      c.result["factor"] = r.factor.to_string();
      c.result["normalized"] = r.normalized.to_string();
      c.result["parameters"] = r.parameters;
      c.result["a"] = strings(r.a.to_strings());
      for (const char* key : {"value", "normalized"}) {
        if (!c.has_expect(key)) continue;
        const Scalar e = parse_expr(c.expect_str(key), r.table);
        const Scalar& got = std::string(key) == "value" ? r.value : r.normalized;
        if (!(e == got)) c.mismatch(std::string(key) + ": expected " + e.to_string() + ", got " + got.to_string());
      }
      c.want("beta_closed", r.beta_closed);
      break;
    }
    case CheckKind::automorphism: {
      std::vector<std::pair<std::string, ScalarMatrix>> autos, endos, grams;
      autos.emplace_back(c.str("matrix"), model.matrix(c.raw("matrix")));
      for (const auto& n : c.names("others")) autos.emplace_back(n, model.matrix(Json(n)));
      for (const auto& n : c.names("commutes")) endos.emplace_back(n, model.matrix(Json(n)));
      for (const auto& n : c.names("preserves")) grams.emplace_back(n, model.matrix(Json(n)));
      StructureReport r = verify_automorphism_compat(autos, endos, grams);
      bool ok = true;
      const bool want_det = !c.spec.params.contains("unimodular") || c.raw("unimodular").get<bool>();
      for (const auto& s : r.checks)
        if (!s.pass && (want_det || s.name.rfind("det ", 0) != 0)) ok = false;
      c.result["subchecks"] = subchecks(r);
      c.want("pass", ok);
      break;
    }
    case CheckKind::char_poly: {
      const UPoly p = char_poly(rational(model, c.raw("matrix")));
      c.result["poly"] = p.to_string();
      if (c.has_expect("poly")) {
        const UPoly e = parse_upoly(c.expect_str("poly"));
        if (!(e == p)) c.mismatch("poly: expected " + e.to_string() + ", got " + p.to_string());
      }
      break;
    }
    case CheckKind::spectral_radius: {
      const Rational lo = parse_decimal(c.str("lo")), hi = parse_decimal(c.str("hi"));
      SpectralRadius s = certify_spectral_radius(rational(model, c.raw("matrix")), lo, hi);
      c.result["rho"] = decimal(s.rho);
      c.result["interval"] = {c.str("lo"), c.str("hi")};
      c.want("certified", s.certified);
      break;
    }
    case CheckKind::classify: {
      Classification k = classify(rational(model, c.raw("matrix")), rational(model, c.raw("gram")));
      c.result["type"] = to_string(k.type);
      c.result["char_poly"] = k.char_poly.to_string();
      c.result["certificate"] = k.certificate;
      if (k.type == IsometryType::hyperbolic) {
        c.result["lambda_interval"] = {decimal(k.lambda_lo), decimal(k.lambda_hi)};
        c.result["lambda"] = decimal(k.lambda);
        if (!k.eigenvector_exact.empty()) c.result["eigenvector"] = k.eigenvector_exact;
        if (k.discriminant) c.result["discriminant"] = k.discriminant->get_str();
        c.result["eigen_residual"] = decimal(k.eigen_residual);
      }
      if (k.type == IsometryType::parabolic) c.result["repeated_factor"] = k.repeated_factor.to_string();
      c.result["orthochronous"] = k.orthochronous;
      if (c.has_expect("type")) {
        const std::string e = c.expect_str("type");
        if (e != to_string(k.type)) c.mismatch("type: expected " + e + ", got " + to_string(k.type));
      }
      break;
    }
    case CheckKind::invariant_classes: {
      InvariantClasses r = invariant_classes(rational(model, c.raw("matrix")), rational(model, c.raw("gram")));
      c.result["kernel_dim"] = r.basis.cols();
      c.result["basis"] = strings(r.basis.transpose().to_strings());
      std::vector<std::string> q;
      for (const auto& x : r.q_values) q.push_back(x.get_str());
      c.result["q_values"] = q;
      c.result["hyperbolic"] = r.hyperbolic;
      c.result["note"] = r.note;
      c.want("verified", r.verified);
      break;
    }
    case CheckKind::power_iterate: {
      const Json& sv = c.raw("seed_vector");
      std::vector<double> seed;
      for (const auto& x : sv) seed.push_back(x.is_string() ? std::stod(x.get<std::string>()) : x.get<double>());
      const double tol = c.number("tol", 1e-10);
      const long iters = c.integer("max_iters", 200);
      PowerIteration r = power_iterate(rational(model, c.raw("matrix")), rational(model, c.raw("gram")), seed, tol,
                                       static_cast<std::size_t>(iters));
      c.result["lambda"] = decimal(r.lambda);
      std::vector<std::string> eta;
      for (double x : r.eta) eta.push_back(decimal(x));
      c.result["eta"] = eta;
      c.result["q_value"] = decimal(r.q_value);
      c.result["iterations"] = r.iterations;
      c.result["residual"] = decimal(r.residuals.empty() ? 0.0 : r.residuals.back());
      c.result["perturbations"] = r.perturbations;
      c.want("converged", r.converged);
      break;
    }
  }
}

CheckResult run_one(const Model& model, const CheckSpec& spec, const RunOptions& opt) {
  CheckResult out;
  out.id = spec.id;
  out.kind = spec.kind;
  out.informational = spec.informational;
  const auto t0 = std::chrono::steady_clock::now();
  Ctx c(model, spec, opt);
  try {
    run_kind(c);
    for (auto it = spec.expect.begin(); it != spec.expect.end(); ++it)
      if (!c.consumed.count(it.key())) c.bad("unsupported expectation '" + it.key() + "'");
    out.result = std::move(c.result);
    if (!c.failures.empty()) {
      out.verdict = Verdict::fail;
      std::string msg;
      for (const auto& f : c.failures) msg += (msg.empty() ? "" : "; ") + f;
      out.message = msg;
    } else {
      out.verdict = c.inconclusive ? Verdict::inconclusive : Verdict::pass;
      std::string msg;
      for (const auto& n : c.notes) msg += (msg.empty() ? "" : "; ") + n;
      out.message = msg;
    }
  } catch (const std::exception& e) {
    out.verdict = Verdict::error;
    out.message = e.what();
    out.result = std::move(c.result);
  }
  out.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.informational && c.verdict != Verdict::pass) return false;
  return true;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = report_schema;
  j["manifest"] = manifest;
  j["seed"] = seed;
  Json arr = Json::array();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& c : checks) {
    Json o;
    o["id"] = c.id;
    o["kind"] = to_string(c.kind);
    o["verdict"] = to_string(c.verdict);
    if (c.informational) o["informational"] = true;
    if (!c.message.empty()) o["message"] = c.message;
    o["result"] = c.result;
    if (timing) o["time_ms"] = millis(c.time_ms);
    arr.push_back(std::move(o));
    ++counts[static_cast<int>(c.verdict)];
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"inconclusive", counts[2]}, {"error", counts[3]}};
  j["overall"] = passed() ? "pass" : "fail";
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "manifest " << manifest << " (seed " << seed << ")\n";
  for (const auto& c : checks) {
    std::string v = to_string(c.verdict);
    for (auto& ch : v) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << "  " << v << "  " << c.id << " [" << to_string(c.kind) << "]";
    if (c.informational) os << " (informational)";
    if (!c.message.empty()) os << ": " << c.message;
    if (timing) os << "  (" << millis(c.time_ms) << " ms)";
    os << "\n";
  }
  os << "overall: " << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

Report run_checks(const Manifest& m, const RunOptions& options) {
  std::unique_ptr<Model> model;
  try {
    model = std::make_unique<Model>(m);
  } catch (const ParseError&) {
    throw;
  } catch (const ManifestError&) {
    throw;
  } catch (const Error& e) {
    throw ManifestError(std::string("manifest: ") + e.what());
  }

  std::vector<const CheckSpec*> order;
  CheckSpec implicit;
  implicit.id = "jacobi";
  implicit.kind = CheckKind::jacobi;
  const CheckSpec* jac = nullptr;
  for (const auto& c : m.checks)
    if (c.kind == CheckKind::jacobi) {
      jac = &c;
      break;
    }
  if (!jac && m.find_check("jacobi")) implicit.id = "jacobi-implicit";
  order.push_back(jac ? jac : &implicit);
  for (const auto& c : m.checks)
    if (c.kind == CheckKind::integrable) order.push_back(&c);
  for (const auto& c : m.checks)
    if (c.kind != CheckKind::integrable && &c != jac) order.push_back(&c);

  if (options.only) {
    const CheckSpec* sel = nullptr;
    for (const auto* c : order)
      if (c->id == *options.only) sel = c;
    if (!sel) throw ManifestError("no check with id '" + *options.only + "'");
    order = {sel};
  }

  Report r;
  r.manifest = m.name;
  r.seed = options.seed;
  r.timing = options.timing;
  for (const auto* c : order) r.checks.push_back(run_one(*model, *c, options));
  return r;
}

int exit_code(const Report& r) { return r.passed() ? 0 : 1; }

}  // namespace hermitia
