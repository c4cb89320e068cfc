#include <doctest.h>

#include "hermitia/error.hpp"
#include "hermitia/metrics.hpp"
#include "support.hpp"

using namespace hermitia;
using namespace testing;

namespace {

struct Flat {
  LieAlgebra g;
  ComplexStructure j;
  explicit Flat(unsigned m)
      : g(LieAlgebra::verify(Presentation::abelian(2 * m))),
        j(g, "J", quarter_turn(2 * m, pairs(m))) {}
  static std::vector<std::pair<int, int>> pairs(unsigned m) {
    std::vector<std::pair<int, int>> p;
    for (unsigned k = 0; k < m; ++k) p.emplace_back(2 * k + 1, 2 * k + 2);
    return p;
  }
  Form omega() const {
    Form w(g.space());
    for (unsigned k = 0; k < j.complex_dim(); ++k) w += wedge(g.generator(2 * k), g.generator(2 * k + 1));
    return w;
  }
};

}  // namespace

TEST_CASE("candidates must be real (1,1)") {
  Flat f(2);
  CHECK_NOTHROW(HermitianCandidate(f.j, f.omega()));
  CHECK_THROWS_AS(HermitianCandidate(f.j, f.g.parse("e1^e3")), DomainError);
  CHECK_THROWS_AS(HermitianCandidate(f.j, f.g.parse("i*e1^e2")), DomainError);
}

TEST_CASE("fundamental form from a Gram matrix") {
  Flat f(2);
  // omega(X, Y) = g(JX, Y) with J e1 = e2: omega(e1, e2) = g(e2, e2) = 1
  CHECK(fundamental_form(f.g, f.j.matrix(), ScalarMatrix::identity(4)) == f.omega());
}

TEST_CASE("AT4: balanced, not Kahler, not pluriclosed") {
  Model& m = builtin_model("AT4");
  const ComplexStructure& j = m.structure("J");
  HermitianCandidate c(j, m.form("omega0"));
  CHECK(is_balanced(c).holds);
  PredicateReport k = is_kahler(c);
  CHECK_FALSE(k.holds);
  CHECK(k.residual == m.form("-2*a*f1^f2^f5 + 2*a*f3^f4^f5"));
  PredicateReport p = is_pluriclosed(c);
  CHECK_FALSE(p.holds);
  CHECK_FALSE(p.residual.is_zero());
  // independent witness: d (J d omega) = -d dc omega is nonzero
  const LieAlgebra& g = m.algebra();
  CHECK_FALSE(g.d(j.act(g.d(c.omega()))).is_zero());
  CHECK_FALSE(is_k_pluriclosed(c, 1).holds);
  // balanced implies (m-1)-pluriclosed
  CHECK(is_k_pluriclosed(c, 2).holds);
  CHECK_THROWS_AS(is_k_pluriclosed(c, 0), DomainError);
  CHECK_THROWS_AS(is_k_pluriclosed(c, 3), DomainError);
}

TEST_CASE("Kahler forms pass every predicate") {
  for (unsigned m = 2; m <= 4; ++m) {
    Flat f(m);
    HermitianCandidate c(f.j, f.omega());
    CHECK(is_kahler(c).holds);
    CHECK(is_balanced(c).holds);
    CHECK(is_pluriclosed(c).holds);
    CHECK(is_astheno_kahler(c).holds);
    for (unsigned k = 1; k < m; ++k) CHECK(is_k_pluriclosed(c, k).holds);
    CHECK(bismut_torsion(c).torsion.is_zero());
    LeeFormSolution lee = lee_form(c);
    REQUIRE(lee.theta.has_value());
    CHECK(lee.theta->is_zero());
    CHECK(lee.d_theta_zero);
  }
}

TEST_CASE("Lee form") {
  Model& m = builtin_model("AT4");
  HermitianCandidate c(m.structure("J"), m.form("omega0"));
  CHECK_FALSE(lee_form(c).theta.has_value());

  Flat f(2);
  HermitianCandidate scaled(f.j, f.omega().scaled(Scalar(3L)));
  LeeFormSolution s = lee_form(scaled);
  REQUIRE(s.theta.has_value());
  CHECK(s.theta->is_zero());
  CHECK(s.unique);
}

TEST_CASE("Bismut torsion") {
  Model& fp = builtin_model("fp_solv8");
  HermitianCandidate c(fp.structure("I"), fp.form("omega"));
  BismutTorsion t = bismut_torsion(c);
  const Form e123 = fp.form("e1^e2^e3");
  CHECK((t.torsion == e123 || t.torsion == -e123));
  CHECK(t.d_torsion.is_zero());

  SuspensionModel s = sasaki_kahler_suspension(4);
  ComplexStructure it(s.algebra, "I", s.structure);
  BismutTorsion ts = bismut_torsion(HermitianCandidate(it, s.omega));
  CHECK_FALSE(ts.torsion.is_zero());
  CHECK(ts.d_torsion.is_zero());
}

TEST_CASE("Hermitian Gram matrices and signatures") {
  Flat f(3);
  ScalarMatrix h = hermitian_gram(f.j, f.omega());
  CHECK(hermitian_signature(h, {}) == Signature{3, 0, 0});

  Model& l = builtin_model("lemma61");
  CHECK(hermitian_signature_exact(l.bilinear("H")) == Signature{4, 4, 0});

  Model& hk = builtin_model("pseudoHK12");
  ScalarMatrix hi = hermitian_gram(hk.structure("I"), hk.form("omega_I"));
  Signature s = hermitian_signature_exact(hi);
  CHECK(s.positive > 0);
  CHECK(s.negative > 0);
  CHECK(s.zero == 0);

  Model& fp = builtin_model("fp_solv8");
  CHECK(hermitian_signature_exact(hermitian_gram(fp.structure("I"), fp.form("omega"))) == Signature{4, 0, 0});
}

TEST_CASE("positivity falsification") {
  Flat f(2);
  const Form& eta1 = f.j.coframe()[0];
  const Form& eta2 = f.j.coframe()[1];
  const Scalar iu = Scalar::imaginary_unit();
  Form pos1 = wedge(eta1, eta1.conj()).scaled(iu);
  CHECK(positivity_falsify(f.j, pos1.scaled(Scalar(-1L)), 1, {}, 100).violation);
  PositivitySample ok = positivity_falsify(f.j, pos1, 1, {}, 10000);
  CHECK_FALSE(ok.violation);
  CHECK(ok.samples == 10000);
  Form prod = wedge(pos1, wedge(eta2, eta2.conj()).scaled(iu));
  CHECK_FALSE(positivity_falsify(f.j, prod, 2, {}, 10000).violation);
  CHECK(positive_product({eta1, eta2}) == prod);

  // same seed, same witness
  PositivitySample a = positivity_falsify(f.j, -pos1, 1, {}, 50, 7);
  PositivitySample b = positivity_falsify(f.j, -pos1, 1, {}, 50, 7);
  CHECK(a.value == b.value);

  Model& at4 = builtin_model("AT4");
  CHECK_THROWS_AS(positivity_falsify(at4.structure("J"), at4.form("a*omega0"), 1, {}, 10), EvaluationError);
  CHECK_FALSE(
      positivity_falsify(at4.structure("J"), at4.form("a*omega0"), 1, at4.valuation("default"), 100).violation);
}

TEST_CASE("strong positivity certificates") {
  Flat f(2);
  const auto& eta = f.j.coframe();
  Form w2 = f.omega().pow(2);
  // omega = (1/2) sum i eta_k ^ conj(eta_k), so omega^2 = (1/2) i eta1^conj(eta1) ^ i eta2^conj(eta2)
  CertificateResult good = strong_positivity_certificate(f.j, w2, {{Scalar(Rational(1, 2)), {eta[0], eta[1]}}}, {});
  CHECK(good.holds);
  CHECK(good.residual.is_zero());
  CertificateResult bad = strong_positivity_certificate(f.j, w2, {{Scalar(1L), {eta[0], eta[1]}}}, {});
  CHECK_FALSE(bad.holds);
  CHECK(bad.residual == w2.scaled(Scalar(-1L)));

  SuspensionModel s = sasaki_kahler_suspension(4);
  ComplexStructure it(s.algebra, "I", s.structure);
  CHECK(s.algebra.d(s.eta) == s.phi);
  CertificateResult phi = strong_positivity_certificate(it, s.phi, {{Scalar(Rational(1, 2)), {s.zeta}}}, {});
  CHECK(phi.holds);
  CHECK(phi.problem.empty());
}

TEST_CASE("implication audit on the builtin candidates") {
  struct Case {
    const char* model;
    const char* structure;
    const char* form;
  };
  for (const Case& cs : {Case{"AT4", "J", "omega0"}, Case{"fp_solv8", "I", "omega"}}) {
    Model& m = builtin_model(cs.model);
    HermitianCandidate c(m.structure(cs.structure), m.form(cs.form));
    const unsigned n = c.complex_dim();
    if (is_kahler(c).holds) {
      CHECK(is_balanced(c).holds);
      CHECK(is_pluriclosed(c).holds);
    }
    if (is_balanced(c).holds) CHECK(is_k_pluriclosed(c, n - 1).holds);
    LeeFormSolution lee = lee_form(c);
    if (lee.theta) CHECK(m.algebra().d(c.omega()) == wedge(*lee.theta, c.omega()));
  }
}
