#include <doctest.h>

#include "hermitia/error.hpp"
#include "hermitia/metrics.hpp"
#include "support.hpp"

using namespace hermitia;
using namespace testing;

TEST_CASE("almost abelian algebras: ad of the suspension vector is D") {
  ScalarMatrix d = int_matrix({{1, 2, 0}, {0, -1, 3}, {4, 0, 0}});
  AlmostAbelianInfo info;
  LieAlgebra g = almost_abelian(d, 2, &info);
  CHECK(g.dim() == 6);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) CHECK(g.structure_constant(3, j, i) == d(i, j));
  CHECK(g.d(g.generator(4)).is_zero());
  CHECK(g.d(g.generator(5)).is_zero());
  CHECK_FALSE(info.nilpotent);
  CHECK(info.trace == Scalar(0L));
  CHECK(info.unimodular);

  AlmostAbelianInfo nil;
  almost_abelian(int_matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), 0, &nil);
  CHECK(nil.nilpotent);

  AlmostAbelianInfo zero;
  LieAlgebra ab = almost_abelian(ScalarMatrix(4, 4), 3, &zero);
  for (unsigned k = 0; k < ab.dim(); ++k) CHECK(ab.d(ab.generator(k)).is_zero());
  CHECK(zero.nilpotent);

  AlmostAbelianInfo skew;
  almost_abelian(int_matrix({{2, 0}, {0, 1}}), 0, &skew);
  CHECK_FALSE(skew.unimodular);
  CHECK(skew.trace == Scalar(3L));
}

TEST_CASE("almost abelian: the AT4 and 12-dimensional models") {
  auto t = SymbolTable::extend(SymbolTable::builtin());
  t->declare("a", SignHint::positive);
  Scalar::TablePtr table = t;
  const Scalar a = Scalar::symbol(table, "a");
  ScalarMatrix d(4, 4);
  d(0, 0) = a;
  d(1, 1) = a;
  d(2, 2) = -a;
  d(3, 3) = -a;
  LieAlgebra g = almost_abelian(d, 1);
  CHECK(g.d(g.generator(0)) == g.parse("a*e1^e5"));
  CHECK(g.d(g.generator(3)) == g.parse("-a*e4^e5"));
  Model& at4 = builtin_model("AT4");
  for (unsigned k = 0; k < 6; ++k)
    CHECK(g.d(g.generator(k)).to_string(g.basis()) ==
          at4.algebra().d(at4.algebra().generator(k)).to_string(g.basis()));

  ScalarMatrix d8(8, 8);
  for (unsigned k = 0; k < 8; ++k) d8(k, k) = Scalar(k % 2 ? -1L : 1L);
  LieAlgebra h = almost_abelian(d8, 3);
  Model& hk = builtin_model("pseudoHK12");
  for (unsigned k = 0; k < 12; ++k)
    CHECK(h.d(h.generator(k)).to_string(hk.algebra().basis()) ==
          hk.algebra().d(hk.algebra().generator(k)).to_string(hk.algebra().basis()));
}

TEST_CASE("Heisenberg algebra and the suspension model") {
  LieAlgebra h = heisenberg3();
  CHECK(h.dim() == 3);
  CHECK(h.d(h.generator(0)) == h.parse("e2^e3"));
  REQUIRE(h.presentation().find_form("Phi") != nullptr);
  CHECK(*h.presentation().find_form("Phi") == h.d(*h.presentation().find_form("eta")));

  for (unsigned kd : {0u, 2u, 4u, 6u}) {
    SuspensionModel s = sasaki_kahler_suspension(kd);
    CHECK(s.algebra.dim() == 4 + kd);
    CHECK(s.algebra.d(s.omega) == wedge(s.phi, s.dt));
    ComplexStructure it(s.algebra, "I", s.structure);
    CHECK(it.nijenhuis().pass);
    HermitianCandidate c(it, s.omega);
    CHECK(is_pluriclosed(c).holds);
    CHECK_FALSE(is_kahler(c).holds);
    CHECK(hermitian_signature_exact(hermitian_gram(it, s.omega)).negative == 0);
    CHECK(s.phi == positive_product({s.zeta}).scaled(Scalar(Rational(1, 2))));
  }
  CHECK_THROWS_AS(sasaki_kahler_suspension(3), DomainError);
}

TEST_CASE("quarter turns") {
  ScalarMatrix j = quarter_turn(4, {{1, 2}, {3, -4}});
  CHECK(j * j == -ScalarMatrix::identity(4));
  // J e1 = e2: column 1 has a 1 in row 2
  CHECK(j(1, 0) == Scalar(1L));
  CHECK(j(0, 1) == Scalar(-1L));
  CHECK(j(3, 2) == Scalar(-1L));
}

TEST_CASE("builtin manifests") {
  CHECK(builtin_names() == std::vector<std::string>{"AT4", "pseudoHK12", "fp_solv8", "lemma61"});
  CHECK_THROWS_AS(builtin("K3"), DomainError);
  for (const auto& name : builtin_names()) {
    Manifest m = builtin(name);
    CHECK(m.name == name);
    const std::string text = emit_manifest(m);
    CHECK(emit_manifest(parse_manifest(text)) == text);
    Model model(m);
    CHECK(model.jacobi().pass);
  }
  CHECK(builtin("pseudoHK12").comment.find("2,4,6,8") != std::string::npos);
}

TEST_CASE("automorphism compatibility") {
  Model& l = builtin_model("lemma61");
  const ScalarMatrix& a = l.endomorphism("A");
  StructureReport r = verify_automorphism_compat({{"A", a}}, {{"I", l.endomorphism("I")}, {"J", l.endomorphism("J")}},
                                                 {{"H", l.bilinear("H")}});
  CHECK(r.pass);
  CHECK(verify_automorphism_compat({{"A", a}}, {{"K", l.endomorphism("K")}}, {}).pass);
  CHECK(verify_automorphism_compat({{"A", a}, {"A2", a * a}}, {}, {}).pass);

  ScalarMatrix flipped = a;
  flipped(0, 0) = -flipped(0, 0);
  StructureReport bad = verify_automorphism_compat({{"A'", flipped}}, {}, {{"H", l.bilinear("H")}});
  CHECK_FALSE(bad.pass);
  bool iso_failed = false;
  for (const auto& s : bad.checks)
    if (!s.pass && s.name.find("H") != std::string::npos) iso_failed = true;
  CHECK(iso_failed);
}
