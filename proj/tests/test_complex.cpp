#include <doctest.h>

#include "hermitia/error.hpp"
#include "support.hpp"

using namespace hermitia;
using namespace testing;

namespace {

LieAlgebra heis_times_r() { return direct_sum(heisenberg3(), LieAlgebra::verify(Presentation::abelian(1))); }

}  // namespace

TEST_CASE("J^2 = -Id is enforced") {
  LieAlgebra a = LieAlgebra::verify(Presentation::abelian(2));
  CHECK_THROWS_AS(ComplexStructure(a, "bad", ScalarMatrix::identity(2)), DomainError);
  LieAlgebra a3 = LieAlgebra::verify(Presentation::abelian(3));
  CHECK_THROWS_AS(ComplexStructure(a3, "odd", ScalarMatrix::identity(3)), DomainError);
}

TEST_CASE("Nijenhuis tensor") {
  LieAlgebra ab = LieAlgebra::verify(Presentation::abelian(4));
  ComplexStructure std4(ab, "J", quarter_turn(4, {{1, 2}, {3, 4}}));
  CHECK(std4.nijenhuis().pass);

  LieAlgebra h = heis_times_r();
  // J e1 = e2, J e3 = e4 mixes the centre e1 with a bracket generator
  ComplexStructure bad(h, "J", quarter_turn(4, {{1, 2}, {3, 4}}));
  NijenhuisReport r = bad.nijenhuis();
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(std::all_of(r.value.begin(), r.value.end(), [](const Scalar& s) { return s.is_zero(); }));
  CHECK_THROWS_AS(bad.del(h.parse("e1")), DomainError);

  // J e2 = e3, J e1 = e4 is integrable (Kodaira-Thurston type)
  ComplexStructure good(h, "J", quarter_turn(4, {{2, 3}, {1, 4}}));
  CHECK(good.nijenhuis().pass);

  Model& fp = builtin_model("fp_solv8");
  CHECK(fp.structure("I").nijenhuis().pass);
}

TEST_CASE("(1,0)-coframes") {
  LieAlgebra a2 = LieAlgebra::verify(Presentation::abelian(2));
  ComplexStructure j(a2, "J", quarter_turn(2, {{1, 2}}));
  REQUIRE(j.coframe().size() == 1);
  CHECK(j.coframe()[0] == a2.parse("e1 + i*e2"));

  Model& hk = builtin_model("pseudoHK12");
  const ComplexStructure& i = hk.structure("I");
  REQUIRE(i.coframe().size() == 6);
  CHECK(i.coframe()[0] == hk.form("f1 + i*f3"));
  CHECK(i.coframe()[5] == hk.form("f11 - i*f12"));
  CHECK(i.coframe()[0].conj() == hk.form("f1 - i*f3"));
  CHECK(i.coframe()[0] == hk.form("eta1"));
  CHECK(i.coframe()[5] == hk.form("eta6"));

  // eta(JX) = i eta(X): J acting on a (1,0)-form multiplies by i
  for (const Form& eta : i.coframe()) CHECK(i.act_on_1form(eta) == eta.scaled(-Scalar::imaginary_unit()));

  Model& fp = builtin_model("fp_solv8");
  const ComplexStructure& fi = fp.structure("I");
  REQUIRE(fi.coframe().size() == 4);
  Form top = Form::constant(fi.algebra().space(), Scalar(1L));
  for (const Form& eta : fi.coframe()) top = wedge(wedge(top, eta), eta.conj());
  CHECK_FALSE(top.is_zero());
  CHECK(top.degree() == 8);
}

TEST_CASE("bidegree decomposition") {
  Model& at4 = builtin_model("AT4");
  const ComplexStructure& j = at4.structure("J");
  CHECK(j.is_pure(at4.form("omega0"), 1, 1));

  const auto& eta = j.coframe();
  CHECK(j.is_pure(wedge(eta[0], eta[1]), 2, 0));

  Form f123 = at4.form("f1^f2^f3");
  auto parts = j.bidegree(f123);
  CHECK(parts.size() == 2);
  CHECK(parts.count({2, 1}) == 1);
  CHECK(parts.count({1, 2}) == 1);
  Form sum(f123.space());
  for (const auto& [bd, f] : parts) sum += f;
  CHECK(sum == f123);
  CHECK(parts.at({2, 1}).conj() == parts.at({1, 2}));
}

TEST_CASE("del, delbar and dc") {
  Model& fp = builtin_model("fp_solv8");
  const ComplexStructure& i = fp.structure("I");
  Form w = fp.form("omega");
  CHECK(i.delbar(i.del(w)).is_zero());
  CHECK(i.del(w) + i.delbar(w) == fp.algebra().d(w));

  Model& hk = builtin_model("pseudoHK12");
  CHECK_FALSE(hk.structure("I").del(hk.form("Omega")).is_zero());

  LieAlgebra ab = LieAlgebra::verify(Presentation::abelian(4));
  ComplexStructure std4(ab, "J", quarter_turn(4, {{1, 2}, {3, 4}}));
  CHECK(std4.dc(ab.parse("e1^e2 + 2*e3 - e1^e3^e4")).is_zero());
}

TEST_CASE("conjugation") {
  Model& at4 = builtin_model("AT4");
  Form w = at4.form("omega0");
  CHECK(w.conj() == w);
  Form z = at4.form("(1+2*i)*f1^f3 - i*f2");
  CHECK(z.conj().conj() == z);
  CHECK(z.conj() == at4.form("(1-2*i)*f1^f3 + i*f2"));
}

TEST_CASE("the structure action fixes real (1,1)-forms") {
  Model& fp = builtin_model("fp_solv8");
  const ComplexStructure& i = fp.structure("I");
  Form w = fp.form("omega");
  CHECK(i.act(w) == w);
  const LieAlgebra& g = fp.algebra();
  // I d I omega computed through the action on 3-forms equals -dc omega on (1,1)-forms
  CHECK(i.act(g.d(i.act(w))) == -i.dc(w));
}
