#include "hermitia/manifest.hpp"

#include <algorithm>

namespace hermitia {

namespace {

const std::vector<std::pair<CheckKind, std::string>>& kind_table() {
  static const std::vector<std::pair<CheckKind, std::string>> t = {
      {CheckKind::jacobi, "jacobi"},
      {CheckKind::integrable, "integrable"},
      {CheckKind::hermitian, "hermitian"},
      {CheckKind::kahler, "kahler"},
      {CheckKind::balanced, "balanced"},
      {CheckKind::pluriclosed, "pluriclosed"},
      {CheckKind::astheno_kahler, "astheno_kahler"},
      {CheckKind::k_pluriclosed, "k_pluriclosed"},
      {CheckKind::lee_form, "lee_form"},
      {CheckKind::bismut_torsion, "bismut_torsion"},
      {CheckKind::differential, "differential"},
      {CheckKind::form_equals, "form_equals"},
      {CheckKind::bidegree, "bidegree"},
      {CheckKind::del_closed, "del_closed"},
      {CheckKind::signature, "signature"},
      {CheckKind::positivity_falsify, "positivity_falsify"},
      {CheckKind::strong_positivity, "strong_positivity"},
      {CheckKind::hypercomplex, "hypercomplex"},
      {CheckKind::pseudo_hyperkahler, "pseudo_hyperkahler"},
      {CheckKind::hkt, "hkt"},
      {CheckKind::quaternionic_balanced, "quaternionic_balanced"},
      {CheckKind::del_exact, "del_exact"},
      {CheckKind::hkt_obstruction, "hkt_obstruction"},
      {CheckKind::automorphism, "automorphism"},
      {CheckKind::char_poly, "char_poly"},
      {CheckKind::spectral_radius, "spectral_radius"},
      {CheckKind::classify, "classify"},
      {CheckKind::invariant_classes, "invariant_classes"},
      {CheckKind::power_iterate, "power_iterate"},
  };
  return t;
}

[[noreturn]] void fail(const std::string& what) { throw ManifestError("manifest: " + what); }

const Json& require(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing '" + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where + " must be a string");
  return j.get<std::string>();
}

// Integers and strings are both accepted for exact entries.
std::string exact_text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail(where + " must be a string or an integer");
}

void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) fail(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      fail(where + ": unknown key '" + it.key() + "'");
}

MatrixSpec matrix_spec(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where + " must be an array of rows");
  MatrixSpec m;
  for (const auto& row : j) {
    if (!row.is_array()) fail(where + " rows must be arrays");
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(exact_text(x, where + " entry"));
    if (!m.empty() && r.size() != m[0].size()) fail(where + " has ragged rows");
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<std::pair<std::string, MatrixSpec>> matrices(const Json& j, const std::string& where) {
  std::vector<std::pair<std::string, MatrixSpec>> out;
  if (!j.is_object()) fail(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    only_keys(it.value(), {"matrix"}, where + "." + it.key());
    out.emplace_back(it.key(), matrix_spec(require(it.value(), "matrix", where + "." + it.key()),
                                           where + "." + it.key() + ".matrix"));
  }
  return out;
}

Json matrix_json(const MatrixSpec& m) {
  Json rows = Json::array();
  for (const auto& r : m) rows.push_back(r);
  return Json{{"matrix", rows}};
}

}  // namespace

std::string to_string(CheckKind k) {
  for (const auto& [kind, name] : kind_table())
    if (kind == k) return name;
  return "jacobi";
}

CheckKind parse_check_kind(std::string_view name) {
  for (const auto& [kind, n] : kind_table())
    if (n == name) return kind;
  fail("unknown check kind '" + std::string(name) + "'");
}

const std::vector<std::string>& check_kind_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& kv : kind_table()) v.push_back(kv.second);
    return v;
  }();
  return names;
}

const CheckSpec* Manifest::find_check(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

Manifest manifest_from_json(const Json& j) {
  only_keys(j, {"schema", "name", "comment", "symbols", "basis", "differential", "endomorphisms", "bilinears",
                "forms", "valuations", "checks"},
            "top level");
  if (as_string(require(j, "schema", "top level"), "schema") != manifest_schema)
    fail("unsupported schema '" + j["schema"].get<std::string>() + "'");
  Manifest m;
  m.name = as_string(require(j, "name", "top level"), "name");
  if (j.contains("comment")) m.comment = as_string(j["comment"], "comment");

  if (j.contains("symbols")) {
    if (!j["symbols"].is_array()) fail("symbols must be an array");
    for (const auto& s : j["symbols"]) {
      only_keys(s, {"name", "power", "relation", "sign"}, "symbol");
      SymbolSpec spec;
      spec.name = as_string(require(s, "name", "symbol"), "symbol name");
      if (s.contains("power")) {
        if (!s["power"].is_number_unsigned() || s["power"].get<unsigned>() < 2)
          fail("symbol '" + spec.name + "': power must be an integer >= 2");
        spec.power = s["power"].get<unsigned>();
        spec.relation = exact_text(require(s, "relation", "symbol " + spec.name), "relation");
      } else if (s.contains("relation")) {
        fail("symbol '" + spec.name + "': relation without power");
      }
      if (s.contains("sign")) {
        try {
          spec.sign = parse_sign_hint(as_string(s["sign"], "sign"));
        } catch (const Error& e) {
          fail("symbol '" + spec.name + "': " + e.what());
        }
      }
      m.symbols.push_back(std::move(spec));
    }
  }

  const Json& basis = require(j, "basis", "top level");
  if (!basis.is_array() || basis.empty()) fail("basis must be a nonempty array");
  for (const auto& b : basis) m.basis.push_back(as_string(b, "basis entry"));

  if (j.contains("differential")) {
    const Json& d = j["differential"];
    if (!d.is_object()) fail("differential must be an object");
    for (auto it = d.begin(); it != d.end(); ++it) {
      if (std::find(m.basis.begin(), m.basis.end(), it.key()) == m.basis.end())
        fail("differential of unknown generator '" + it.key() + "'");
      m.differential.emplace_back(it.key(), exact_text(it.value(), "differential." + it.key()));
    }
  }
  if (j.contains("endomorphisms")) m.endomorphisms = matrices(j["endomorphisms"], "endomorphisms");
  if (j.contains("bilinears")) m.bilinears = matrices(j["bilinears"], "bilinears");
  if (j.contains("forms")) {
    const Json& f = j["forms"];
    if (!f.is_object()) fail("forms must be an object");
    for (auto it = f.begin(); it != f.end(); ++it)
      m.forms.emplace_back(it.key(), exact_text(it.value(), "forms." + it.key()));
  }
  if (j.contains("valuations")) {
    const Json& v = j["valuations"];
    if (!v.is_object()) fail("valuations must be an object");
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!it.value().is_object()) fail("valuation '" + it.key() + "' must be an object");
      std::vector<std::pair<std::string, std::string>> set;
      for (auto s = it.value().begin(); s != it.value().end(); ++s) {
        if (s.value().is_string()) set.emplace_back(s.key(), s.value().get<std::string>());
        else if (s.value().is_number()) set.emplace_back(s.key(), s.value().dump());
        else fail("valuation value for '" + s.key() + "' must be a number or string");
      }
      m.valuations.emplace_back(it.key(), std::move(set));
    }
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) fail("checks must be an array");
    for (const auto& c : j["checks"]) {
      only_keys(c, {"id", "kind", "params", "expect", "informational"}, "check");
      CheckSpec spec;
      spec.id = as_string(require(c, "id", "check"), "check id");
      if (m.find_check(spec.id)) fail("duplicate check id '" + spec.id + "'");
      spec.kind = parse_check_kind(as_string(require(c, "kind", "check " + spec.id), "check kind"));
      if (c.contains("params")) {
        if (!c["params"].is_object()) fail("check " + spec.id + ": params must be an object");
        spec.params = c["params"];
      }
      if (c.contains("expect")) {
        if (!c["expect"].is_object()) fail("check " + spec.id + ": expect must be an object");
        spec.expect = c["expect"];
      }
      if (c.contains("informational")) {
        if (!c["informational"].is_boolean()) fail("check " + spec.id + ": informational must be a boolean");
        spec.informational = c["informational"].get<bool>();
      }
      m.checks.push_back(std::move(spec));
    }
  }
  return m;
}

Manifest parse_manifest(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // nlohmann reports the 1-based position of the last byte read
    throw ParseError("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
  return manifest_from_json(j);
}

Json to_json(const Manifest& m) {
  Json j;
  j["schema"] = manifest_schema;
  j["name"] = m.name;
  if (!m.comment.empty()) j["comment"] = m.comment;
  if (!m.symbols.empty()) {
    Json syms = Json::array();
    for (const auto& s : m.symbols) {
      Json o;
      o["name"] = s.name;
      if (s.power) {
        o["power"] = s.power;
        o["relation"] = s.relation;
      }
      if (s.sign != SignHint::unknown) o["sign"] = to_string(s.sign);
      syms.push_back(std::move(o));
    }
    j["symbols"] = std::move(syms);
  }
  j["basis"] = m.basis;
  Json d = Json::object();
  for (const auto& [g, e] : m.differential) d[g] = e;
  j["differential"] = std::move(d);
  if (!m.endomorphisms.empty()) {
    Json e = Json::object();
    for (const auto& [n, mat] : m.endomorphisms) e[n] = matrix_json(mat);
    j["endomorphisms"] = std::move(e);
  }
  if (!m.bilinears.empty()) {
    Json e = Json::object();
    for (const auto& [n, mat] : m.bilinears) e[n] = matrix_json(mat);
    j["bilinears"] = std::move(e);
  }
  if (!m.forms.empty()) {
    Json f = Json::object();
    for (const auto& [n, e] : m.forms) f[n] = e;
    j["forms"] = std::move(f);
  }
  if (!m.valuations.empty()) {
    Json v = Json::object();
    for (const auto& [n, set] : m.valuations) {
      Json s = Json::object();
      for (const auto& [k, x] : set) s[k] = x;
      v[n] = std::move(s);
    }
    j["valuations"] = std::move(v);
  }
  Json checks = Json::array();
  for (const auto& c : m.checks) {
    Json o;
    o["id"] = c.id;
    o["kind"] = to_string(c.kind);
    if (!c.params.empty()) o["params"] = c.params;
    if (!c.expect.empty()) o["expect"] = c.expect;
    if (c.informational) o["informational"] = true;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string emit_manifest(const Manifest& m) { return to_json(m).dump(2) + "\n"; }

RationalMatrix parse_rational_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) fail("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(parse_rational(exact_text(x, "matrix entry")));
    rows.push_back(std::move(r));
  }
  try {
    return RationalMatrix::from_rows(rows);
  } catch (const DomainError& e) {
    fail(e.what());
  }
}

RationalMatrix parse_rational_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
  return parse_rational_matrix(j);
}

Model::Model(const Manifest& m) : m_(m) {
  auto table = SymbolTable::extend(SymbolTable::builtin());
  for (const auto& s : m_.symbols) {
    if (s.power == 0) {
      table->declare(s.name, s.sign);
      continue;
    }
    Scalar rhs = parse_expr(s.relation, table);
    if (!rhs.is_polynomial()) fail("relation of '" + s.name + "' must be a polynomial");
    Polynomial p = rhs.numerator() * Rational(1 / rhs.denominator().constant_value());
    table->declare_algebraic(s.name, s.power, p, s.sign);
  }
  table_ = table;
  p_ = Presentation::make(m_.name, m_.basis, table_);
  for (const auto& [gen, expr] : m_.differential) {
    const auto k = static_cast<unsigned>(std::find(m_.basis.begin(), m_.basis.end(), gen) - m_.basis.begin());
    p_.set_differential(k, p_.parse(expr));
  }
  for (const auto& [name, spec] : m_.endomorphisms) {
    if (spec.size() != p_.dim() || spec[0].size() != p_.dim())
      fail("endomorphism '" + name + "' must be " + std::to_string(p_.dim()) + "x" + std::to_string(p_.dim()));
    ScalarMatrix a(p_.dim(), p_.dim());
    for (unsigned r = 0; r < p_.dim(); ++r)
      for (unsigned c = 0; c < p_.dim(); ++c) a(r, c) = parse_expr(spec[r][c], table_);
    p_.endomorphisms[name] = std::move(a);
  }
  for (const auto& [name, spec] : m_.bilinears) {
    if (spec.size() != p_.dim() || spec[0].size() != p_.dim())
      fail("bilinear '" + name + "' must be " + std::to_string(p_.dim()) + "x" + std::to_string(p_.dim()));
    ScalarMatrix a(p_.dim(), p_.dim());
    for (unsigned r = 0; r < p_.dim(); ++r)
      for (unsigned c = 0; c < p_.dim(); ++c) a(r, c) = parse_expr(spec[r][c], table_);
    p_.bilinears[name] = std::move(a);
  }
  for (const auto& [name, expr] : m_.forms) {
    if (p_.find_form(name)) fail("duplicate form '" + name + "'");
    FormContext ctx = p_.context();
    ctx.differential = [this](const Form& a) { return raw_d(p_, a); };
    Form f(p_.space);
    f += parse_form(expr, ctx);
    p_.forms.emplace_back(name, std::move(f));
  }
  jacobi_ = jacobi_check(p_);
  if (jacobi_.pass) algebra_.emplace(LieAlgebra::verify(p_));
}

const LieAlgebra& Model::algebra() const {
  if (!algebra_) throw DomainError("the Jacobi identity fails; no checks on this algebra are possible");
  return *algebra_;
}

const ComplexStructure& Model::structure(const std::string& name) const {
  auto it = structures_.find(name);
  if (it != structures_.end()) return *it->second;
  auto cs = std::make_unique<ComplexStructure>(algebra(), name, endomorphism(name));
  return *structures_.emplace(name, std::move(cs)).first->second;
}

const ScalarMatrix& Model::endomorphism(const std::string& name) const {
  auto it = p_.endomorphisms.find(name);
  if (it == p_.endomorphisms.end()) throw DomainError("unknown endomorphism '" + name + "'");
  return it->second;
}

const ScalarMatrix& Model::bilinear(const std::string& name) const {
  auto it = p_.bilinears.find(name);
  if (it == p_.bilinears.end()) throw DomainError("unknown bilinear form '" + name + "'");
  return it->second;
}

ScalarMatrix Model::matrix(const Json& ref) const {
  if (ref.is_string()) {
    const std::string name = ref.get<std::string>();
    if (p_.endomorphisms.count(name)) return p_.endomorphisms.at(name);
    if (p_.bilinears.count(name)) return p_.bilinears.at(name);
    throw DomainError("unknown matrix '" + name + "'");
  }
  MatrixSpec spec = matrix_spec(ref, "inline matrix");
  ScalarMatrix a(spec.size(), spec.empty() ? 0 : spec[0].size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = parse_expr(spec[r][c], table_);
  return a;
}

Form Model::form(const std::string& name_or_expr) const {
  const Presentation& p = algebra_ ? algebra_->presentation() : p_;
  if (const Form* f = p.find_form(name_or_expr)) return *f;
  return algebra_ ? algebra_->parse(name_or_expr) : p_.parse(name_or_expr);
}

Scalar Model::scalar(const std::string& expr) const { return parse_expr(expr, table_); }

Valuation Model::valuation(const std::string& set) const {
  for (const auto& [name, values] : m_.valuations) {
    if (name != set) continue;
    Valuation v;
    for (const auto& [sym, text] : values) {
      try {
        v[sym] = std::stod(text);
      } catch (const std::exception&) {
        throw DomainError("valuation '" + set + "': value of '" + sym + "' is not a number");
      }
    }
    return v;
  }
  if (set == "default") return {};
  throw DomainError("unknown valuation set '" + set + "'");
}

}  // namespace hermitia
