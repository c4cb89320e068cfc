#include "hermitia/builders.hpp"

#include <cmath>
#include <cstdio>

#include "hermitia/error.hpp"

namespace hermitia {

namespace {

std::vector<std::string> numbered(const std::string& prefix, unsigned n) {
  std::vector<std::string> v;
  for (unsigned k = 1; k <= n; ++k) v.push_back(prefix + std::to_string(k));
  return v;
}

MatrixSpec spec_of(const ScalarMatrix& m) { return m.to_strings(); }

MatrixSpec spec_of(const std::vector<std::vector<int>>& rows) {
  MatrixSpec s;
  for (const auto& r : rows) {
    std::vector<std::string> out;
    for (int x : r) out.push_back(std::to_string(x));
    s.push_back(std::move(out));
  }
  return s;
}

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CheckSpec check(std::string id, CheckKind kind, Json params, Json expect) {
  CheckSpec c;
  c.id = std::move(id);
  c.kind = kind;
  c.params = std::move(params);
  c.expect = std::move(expect);
  return c;
}

void add_differential(Manifest& m, const LieAlgebra& g) {
  for (unsigned k = 0; k < g.dim(); ++k) {
    const Form& dk = g.presentation().differential[k];
    if (!dk.is_zero()) m.differential.emplace_back(g.basis()[k], g.to_string(dk));
  }
}

Manifest at4() {
  auto table = SymbolTable::extend(SymbolTable::builtin());
  table->declare("a");
  Scalar::TablePtr t = table;
  const Scalar a = Scalar::symbol(t, "a");
  ScalarMatrix d(4, 4);
  d(0, 0) = a;
  d(1, 1) = a;
  d(2, 2) = -a;
  d(3, 3) = -a;
  LieAlgebra g = almost_abelian(d, 1, nullptr, numbered("f", 6), "AT4");

  Manifest m;
  m.name = "AT4";
  m.comment =
      "Almost abelian model of the suspension of the 4-torus: ad(f5) = diag(a,a,-a,-a) on span(f1..f4), "
      "f6 closed. The weight a stands for log|lambda| and is kept as a free symbol.";
  m.symbols.push_back({"a", 0, "", SignHint::unknown});
  m.basis = g.basis();
  add_differential(m, g);
  m.endomorphisms.emplace_back("J", spec_of(quarter_turn(6, {{1, 2}, {3, 4}, {5, 6}})));
  m.forms = {{"omega0", "f1^f2 + f3^f4 + f5^f6"}, {"eta1", "f1 + i*f2"}};
  m.valuations.push_back({"default", {{"a", g17(std::log(2.0 + std::sqrt(3.0)))}}});
  const Json jw = {{"structure", "J"}, {"form", "omega0"}};
  m.checks = {
      check("J-integrable", CheckKind::integrable, {{"structure", "J"}}, {{"integrable", true}}),
      check("omega0-hermitian", CheckKind::hermitian, jw, {{"hermitian", true}}),
      check("omega0-bidegree", CheckKind::bidegree, jw, {{"pure", {1, 1}}}),
      check("d-omega0", CheckKind::differential, {{"form", "omega0"}}, {{"equals", "-2*a*f1^f2^f5 + 2*a*f3^f4^f5"}}),
      check("not-kahler", CheckKind::kahler, jw, {{"holds", false}}),
      check("balanced", CheckKind::balanced, jw, {{"holds", true}}),
      check("no-lee-form", CheckKind::lee_form, jw, {{"exists", false}}),
      check("not-pluriclosed", CheckKind::pluriclosed, jw, {{"holds", false}}),
      check("not-1-pluriclosed", CheckKind::k_pluriclosed, {{"structure", "J"}, {"form", "omega0"}, {"k", 1}},
            {{"holds", false}}),
      check("omega0-gram", CheckKind::signature, jw, {{"signature", "(3,0,0)"}}),
      check("omega0-sampled-positive", CheckKind::positivity_falsify,
            {{"structure", "J"}, {"form", "omega0"}, {"p", 1}, {"samples", 2000}}, {{"violation", false}}),
      check("omega0-squared-sampled-positive", CheckKind::positivity_falsify,
            {{"structure", "J"}, {"form", "omega0^2"}, {"p", 2}, {"samples", 2000}}, {{"violation", false}}),
      check("negative-line-detected", CheckKind::positivity_falsify,
            {{"structure", "J"}, {"form", "-i*eta1^conj(eta1)"}, {"p", 1}, {"samples", 200}},
            {{"violation", true}}),
  };
  return m;
}

Manifest fp_solv8() {
  Manifest m;
  m.name = "fp_solv8";
  m.comment =
      "Three-step solvable Lie algebra with a left-invariant pluriclosed metric. b = 2*pi/log(2+sqrt(3)) is kept "
      "free; every checked identity is polynomial in b.";
  m.symbols.push_back({"b", 0, "", SignHint::positive});
  m.basis = numbered("e", 8);
  m.differential = {{"e1", "e2^e3"},       {"e2", "-e2^e8"},      {"e3", "e3^e8"},       {"e4", "b*e5^e8"},
                    {"e5", "-b*e4^e8"},    {"e6", "b*e7^e8"},     {"e7", "-b*e6^e8"}};
  m.endomorphisms.emplace_back("I", spec_of(quarter_turn(8, {{1, -2}, {3, 8}, {4, 5}, {6, 7}})));
  m.forms = {{"omega", "-e1^e2 + e3^e8 + e4^e5 + e6^e7"}};
  m.valuations.push_back({"default", {{"b", g17(2.0 * M_PI / std::log(2.0 + std::sqrt(3.0)))}}});
  const Json iw = {{"structure", "I"}, {"form", "omega"}};
  m.checks = {
      check("I-integrable", CheckKind::integrable, {{"structure", "I"}}, {{"integrable", true}}),
      check("omega-hermitian", CheckKind::hermitian, iw, {{"hermitian", true}}),
      check("omega-gram", CheckKind::signature, iw, {{"signature", "(4,0,0)"}}),
      check("not-kahler", CheckKind::kahler, iw, {{"holds", false}}),
      check("pluriclosed", CheckKind::pluriclosed, iw, {{"holds", true}}),
      check("bismut-torsion", CheckKind::bismut_torsion, iw,
            {{"torsion", "-e1^e2^e3"}, {"up_to_sign", true}, {"closed", true}}),
  };
  return m;
}

Manifest pseudo_hk12() {
  Manifest m;
  m.name = "pseudoHK12";
  m.comment =
      "Almost abelian model (R x R^8) x R^3 with ad(f9) = diag(1,-1,1,-1,1,-1,1,-1). The negative weights sit "
      "on f2, f4, f6, f8; index 7 cannot carry both signs and the choice 2,4,6,8 is the one compatible with I, J "
      "and d^2 = 0. The sixth (1,0)-form is f11 - i*f12; without the factor i it would not be of type (1,0).";
  m.basis = numbered("f", 12);
  for (unsigned k = 1; k <= 8; ++k)
    m.differential.emplace_back("f" + std::to_string(k),
                                std::string(k % 2 ? "" : "-") + "f" + std::to_string(k) + "^f9");
  const ScalarMatrix i = quarter_turn(12, {{1, 3}, {2, 4}, {5, -7}, {6, -8}, {9, 10}, {11, -12}});
  const ScalarMatrix j = quarter_turn(12, {{1, 5}, {2, 6}, {3, 7}, {4, 8}, {9, 11}, {10, 12}});
  m.endomorphisms = {{"I", spec_of(i)}, {"J", spec_of(j)}, {"K", spec_of(i * j)}};
  m.forms = {
      {"omega_I", "2*(-f1^f2 - f3^f4 + f5^f6 + f7^f8 + f9^f10 - f11^f12)"},
      {"omega_J", "2*(f1^f8 + f4^f5 - f2^f7 - f3^f6 + f9^f11 + f10^f12)"},
      {"omega_K", "2*(f1^f6 - f4^f7 - f2^f5 + f3^f8 - f9^f12 + f10^f11)"},
      {"eta1", "f1 + i*f3"},
      {"eta2", "f2 + i*f4"},
      {"eta3", "f5 - i*f7"},
      {"eta4", "f6 - i*f8"},
      {"eta5", "f9 + i*f10"},
      {"eta6", "f11 - i*f12"},
      {"Omega", "eta1^eta3 + eta2^eta4 + eta5^eta6"},
      {"alpha", "eta1^eta3^eta5^eta6 + eta2^eta4^eta5^eta6"},
      {"beta", "eta1^eta2^eta3^eta4^eta5^eta6"},
  };
  m.checks = {
      check("I-integrable", CheckKind::integrable, {{"structure", "I"}}, {{"integrable", true}}),
      check("J-integrable", CheckKind::integrable, {{"structure", "J"}}, {{"integrable", true}}),
      check("K-integrable", CheckKind::integrable, {{"structure", "K"}}, {{"integrable", true}}),
      check("hypercomplex", CheckKind::hypercomplex, {{"I", "I"}, {"J", "J"}, {"K", "K"}}, {{"pass", true}}),
      check("pseudo-hyperkahler", CheckKind::pseudo_hyperkahler,
            {{"I", "I"}, {"J", "J"}, {"K", "K"}, {"omega_I", "omega_I"}, {"omega_J", "omega_J"},
             {"omega_K", "omega_K"}},
            {{"pass", true}}),
      check("omega_I-indefinite", CheckKind::signature, {{"structure", "I"}, {"form", "omega_I"}},
            {{"indefinite", true}}),
      check("holomorphic-symplectic-form", CheckKind::form_equals,
            {{"lhs", "omega_J + i*omega_K"}, {"rhs", "2*(eta5^eta6 + i*eta1^eta4 - i*eta2^eta3)"}},
            {{"equal", true}}),
      check("Omega-type", CheckKind::bidegree, {{"structure", "I"}, {"form", "Omega"}}, {{"pure", {2, 0}}}),
      check("del-Omega-nonzero", CheckKind::del_closed, {{"structure", "I"}, {"form", "Omega"}},
            {{"zero", false}}),
      check("del-Omega-squared-zero", CheckKind::del_closed, {{"structure", "I"}, {"form", "Omega"}, {"power", 2}},
            {{"zero", true}}),
      check("quaternionic-balanced", CheckKind::quaternionic_balanced, {{"I", "I"}, {"form", "Omega"}},
            {{"holds", true}}),
      check("Omega-not-hkt", CheckKind::hkt, {{"I", "I"}, {"J", "J"}, {"form", "Omega"}}, {{"holds", false}}),
      check("alpha-del-exact", CheckKind::del_exact, {{"structure", "I"}, {"form", "alpha"}}, {{"exact", true}}),
      check("eta1356-del-exact", CheckKind::del_exact, {{"structure", "I"}, {"form", "eta1^eta3^eta5^eta6"}},
            {{"exact", true}}),
      check("eta2456-del-exact", CheckKind::del_exact, {{"structure", "I"}, {"form", "eta2^eta4^eta5^eta6"}},
            {{"exact", true}}),
      check("beta-closed", CheckKind::differential, {{"form", "beta"}}, {{"zero", true}}),
      check("hkt-obstruction", CheckKind::hkt_obstruction,
            {{"I", "I"}, {"J", "J"}, {"alpha", "alpha"}, {"beta", "beta"}}, {{"normalized", "a11 + a22 + a33 + a44"}}),
  };
  return m;
}

const std::vector<std::vector<int>> lemma61_a = {
    {1, 0, 1, 0, -1, -1, 0, 1},  {0, -1, 0, -1, -1, 0, 1, 1},  {-1, 0, 1, 0, 0, 1, 1, 1},
    {0, 1, 0, -1, 1, 1, 1, 0},   {1, 1, 0, -1, 1, 0, 1, 0},    {1, 0, -1, -1, 0, -1, 0, -1},
    {0, -1, -1, -1, -1, 0, 1, 0}, {-1, -1, -1, 0, 0, 1, 0, -1},
};

Manifest lemma61() {
  Manifest m;
  m.name = "lemma61";
  m.comment =
      "Integer matrix A in SL(8,Z) preserving the flat pseudo-hyperhermitian structure (I, J, K, h) on R^8, "
      "h = diag(1,-1,1,-1,1,-1,1,-1). Its spectral radius 1+sqrt(2) > 1 rules out A^k = Id.";
  m.basis = numbered("e", 8);
  const ScalarMatrix i = quarter_turn(8, {{1, 3}, {2, 4}, {5, -7}, {6, -8}});
  const ScalarMatrix j = quarter_turn(8, {{1, -5}, {2, -6}, {3, -7}, {4, -8}});
  m.endomorphisms = {{"A", spec_of(lemma61_a)}, {"I", spec_of(i)}, {"J", spec_of(j)}, {"K", spec_of(i * j)}};
  std::vector<std::vector<int>> h(8, std::vector<int>(8, 0));
  for (int k = 0; k < 8; ++k) h[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = k % 2 ? -1 : 1;
  m.bilinears = {{"H", spec_of(h)}};
  m.checks = {
      check("hypercomplex", CheckKind::hypercomplex, {{"I", "I"}, {"J", "J"}, {"K", "K"}}, {{"pass", true}}),
      check("H-signature", CheckKind::signature, {{"bilinear", "H"}}, {{"signature", "(4,4,0)"}}),
      check("A-preserves-structure", CheckKind::automorphism,
            {{"matrix", "A"}, {"commutes", {"I", "J", "K"}}, {"preserves", {"H"}}, {"unimodular", true}},
            {{"pass", true}}),
      check("A-char-poly", CheckKind::char_poly, {{"matrix", "A"}}, {{"poly", "(t^4+6*t^2+1)^2"}}),
      check("A-spectral-radius", CheckKind::spectral_radius,
            {{"matrix", "A"}, {"lo", "2.41421356"}, {"hi", "2.41421357"}}, {{"certified", true}}),
  };
  return m;
}

}  // namespace

ScalarMatrix quarter_turn(unsigned n, const std::vector<std::pair<int, int>>& pairs) {
  ScalarMatrix m(n, n);
  for (const auto& [from, to] : pairs) {
    const int sign = to < 0 ? -1 : 1;
    const auto a = static_cast<std::size_t>(from - 1), b = static_cast<std::size_t>(std::abs(to) - 1);
    if (a >= n || b >= n || a == b) throw DomainError("quarter_turn index out of range");
    m(b, a) = Scalar(static_cast<long>(sign));
    m(a, b) = Scalar(static_cast<long>(-sign));
  }
  return m;
}

LieAlgebra almost_abelian(const ScalarMatrix& d, unsigned flat_extra, AlmostAbelianInfo* info,
                          std::vector<std::string> names, const std::string& name) {
  if (!d.is_square()) throw DomainError("derivation matrix must be square");
  const auto m = static_cast<unsigned>(d.rows());
  const unsigned n = m + 1 + flat_extra;
  if (names.empty()) names = numbered("e", n);
  if (names.size() != n) throw DomainError("almost_abelian needs " + std::to_string(n) + " generator names");
  Scalar::TablePtr table = SymbolTable::builtin();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      if (d(r, c).table() && d(r, c).table()->descends_from(table.get())) table = d(r, c).table();
  Presentation p = Presentation::make(name, std::move(names), table);
  const Form s = p.generator(m);
  for (unsigned i = 0; i < m; ++i) {
    Form di(p.space);
    for (unsigned j = 0; j < m; ++j)
      if (!d(i, j).is_zero()) di += wedge(p.generator(j), s).scaled(d(i, j));
    p.set_differential(i, di);
  }
  if (info) {
    ScalarMatrix pw = d;
    for (unsigned k = 1; k < m; ++k) pw = pw * d;
    info->nilpotent = m == 0 || pw.is_zero();
    Scalar tr;
    for (unsigned k = 0; k < m; ++k) tr += d(k, k);
    info->trace = tr;
    info->unimodular = tr.is_zero();
  }
  return LieAlgebra::verify(std::move(p));
}

LieAlgebra heisenberg3() {
  Presentation p = Presentation::make("heisenberg3", numbered("e", 3));
  p.set_differential(0, wedge(p.generator(1), p.generator(2)));
  p.forms.emplace_back("eta", p.generator(0));
  p.forms.emplace_back("Phi", wedge(p.generator(1), p.generator(2)));
  return LieAlgebra::verify(std::move(p));
}

SuspensionModel sasaki_kahler_suspension(unsigned kahler_dim) {
  if (kahler_dim % 2) throw DomainError("the Kahler factor must have even dimension");
  LieAlgebra g = heisenberg3();
  if (kahler_dim > 0) g = direct_sum(g, LieAlgebra::verify(Presentation::abelian(kahler_dim)));
  g = direct_sum(g, LieAlgebra::verify(Presentation::abelian(1)));
  const unsigned n = g.dim();
  const int t = static_cast<int>(n);
  std::vector<std::pair<int, int>> turns{{1, t}, {2, 3}};
  for (unsigned k = 0; k < kahler_dim / 2; ++k) turns.emplace_back(4 + 2 * k, 5 + 2 * k);
  SuspensionModel out{g, quarter_turn(n, turns), Form(g.space()), g.generator(0),
                      wedge(g.generator(1), g.generator(2)), g.generator(n - 1), Form(g.space())};
  Form omega = wedge(out.eta, out.dt) + g.d(out.eta);
  for (unsigned k = 0; k < kahler_dim / 2; ++k) omega += wedge(g.generator(3 + 2 * k), g.generator(4 + 2 * k));
  out.omega = omega;
  out.zeta = g.generator(1) + g.generator(2).scaled(Scalar::imaginary_unit());
  if (!(g.d(out.omega) == wedge(out.phi, out.dt)))
    throw DomainError("suspension model: d omega_tilde != Phi ^ dt");
  return out;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"AT4", "pseudoHK12", "fp_solv8", "lemma61"};
  return names;
}

Manifest builtin(const std::string& name) {
  if (name == "AT4") return at4();
  if (name == "pseudoHK12") return pseudo_hk12();
  if (name == "fp_solv8") return fp_solv8();
  if (name == "lemma61") return lemma61();
  throw DomainError("unknown builtin '" + name + "'");
}

StructureReport verify_automorphism_compat(const std::vector<std::pair<std::string, ScalarMatrix>>& automorphisms,
                                           const std::vector<std::pair<std::string, ScalarMatrix>>& endomorphisms,
                                           const std::vector<std::pair<std::string, ScalarMatrix>>& grams) {
  StructureReport r;
  for (const auto& [an, a] : automorphisms) {
    if (!a.is_square()) throw DomainError("automorphism '" + an + "' is not square");
    const Scalar det = determinant(a);
    r.add("det " + an + " = 1", det == Scalar(1), "det = " + det.to_string());
    for (const auto& [en, e] : endomorphisms) {
      if (e.rows() != a.rows() || !e.is_square()) throw DomainError("dimension mismatch with '" + en + "'");
      const ScalarMatrix c = a * e - e * a;
      r.add(an + " commutes with " + en, c.is_zero(), c.is_zero() ? "" : "commutator is nonzero");
    }
    for (const auto& [gn, g] : grams) {
      if (g.rows() != a.rows() || !g.is_square()) throw DomainError("dimension mismatch with '" + gn + "'");
      const ScalarMatrix res = a.transpose() * g * a - g;
      std::string detail;
      if (!res.is_zero()) {
        for (std::size_t i = 0; i < res.rows() && detail.empty(); ++i)
          for (std::size_t j = 0; j < res.cols(); ++j)
            if (!res(i, j).is_zero()) {
              detail = "residual entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ") = " + res(i, j).to_string();
              break;
            }
      }
      r.add(an + "^T " + gn + " " + an + " = " + gn, res.is_zero(), detail);
    }
  }
  for (std::size_t x = 0; x < automorphisms.size(); ++x)
    for (std::size_t y = x + 1; y < automorphisms.size(); ++y) {
      const auto& a = automorphisms[x].second;
      const auto& b = automorphisms[y].second;
      r.add(automorphisms[x].first + " commutes with " + automorphisms[y].first, (a * b - b * a).is_zero());
    }
  return r;
}

}  // namespace hermitia
