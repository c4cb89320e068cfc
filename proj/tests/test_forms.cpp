#include <doctest.h>

#include "hermitia/error.hpp"
#include "support.hpp"

using namespace hermitia;
using namespace testing;

namespace {

// Term-by-term expansion of a wedge product, independent of Form's wedge.
std::map<std::vector<unsigned>, long> expand_wedge(const std::vector<std::pair<std::vector<unsigned>, long>>& a,
                                                   const std::vector<std::pair<std::vector<unsigned>, long>>& b) {
  std::map<std::vector<unsigned>, long> out;
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b) {
      std::vector<unsigned> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      const int s = sort_sign(idx);
      if (s != 0) out[idx] += s * ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("wedge antisymmetry and odd squares") {
  Presentation p = Presentation::abelian(4);
  Form f1 = p.generator(0), f2 = p.generator(1);
  CHECK(wedge(f1, f2) == p.parse("e1^e2"));
  CHECK(wedge(f2, f1) == -p.parse("e1^e2"));
  Form a = p.parse("e1 + 3*e2 - i*e4");
  CHECK(wedge(a, a).is_zero());
  Form c = p.parse("e1^e2^e3 + e2^e3^e4");
  CHECK(wedge(c, c).is_zero());
  CHECK(wedge_sign(blade_of({0}), blade_of({1})) == 1);
  CHECK(wedge_sign(blade_of({1}), blade_of({0})) == -1);
  CHECK(wedge_sign(blade_of({1}), blade_of({1})) == 0);
}

TEST_CASE("omega0 squared against a brute-force expansion") {
  Model& m = builtin_model("AT4");
  Form w = m.form("omega0");
  Form w2 = wedge(w, w);
  std::vector<std::pair<std::vector<unsigned>, long>> terms = {{{0, 1}, 1}, {{2, 3}, 1}, {{4, 5}, 1}};
  auto oracle = expand_wedge(terms, terms);
  REQUIRE(oracle.size() == 3);
  Form expected(w.space());
  for (const auto& [idx, c] : oracle) expected += Form::monomial(w.space(), blade_of(idx), Scalar(c));
  CHECK(w2 == expected);
  CHECK(w2 == m.form("2*(f1^f2^f3^f4 + f1^f2^f5^f6 + f3^f4^f5^f6)"));
  CHECK(w.pow(2) == w2);
}

TEST_CASE("differential: AT4, abelian, and the suspension model") {
  Model& m = builtin_model("AT4");
  const LieAlgebra& g = m.algebra();
  CHECK(g.d(m.form("omega0")) == m.form("-2*a*f1^f2^f5 + 2*a*f3^f4^f5"));
  // Leibniz by hand: d(f1^f2) = df1^f2 - f1^df2
  Form f1 = g.generator(0), f2 = g.generator(1);
  CHECK(g.d(wedge(f1, f2)) == wedge(g.d(f1), f2) - wedge(f1, g.d(f2)));

  Presentation ab = Presentation::abelian(5);
  LieAlgebra a5 = LieAlgebra::verify(ab);
  CHECK(a5.d(ab.parse("e1^e2 + 7*e3^e4^e5 + e1")).is_zero());

  SuspensionModel s = sasaki_kahler_suspension(4);
  CHECK(s.algebra.d(s.omega) == wedge(s.phi, s.dt));
}

TEST_CASE("jacobi check") {
  // de1 = e2^e3, de2 = e1^e3 is a Lie algebra: d(de1) = e1^e3^e3 = 0
  Presentation ok = Presentation::make("e11", {"e1", "e2", "e3"});
  ok.set_differential(0, ok.parse("e2^e3"));
  ok.set_differential(1, ok.parse("e1^e3"));
  CHECK(jacobi_check(ok).pass);

  // de1 = e2^e3, de2 = e1^e4: d(de1) = e1^e4^e3 != 0
  Presentation p = Presentation::make("bad", {"e1", "e2", "e3", "e4"});
  p.set_differential(0, p.parse("e2^e3"));
  p.set_differential(1, p.parse("e1^e4"));
  JacobiReport r = jacobi_check(p);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == 0);
  CHECK(r.dd[0] == p.parse("-e1^e3^e4"));
  CHECK_THROWS_AS(LieAlgebra::verify(p), DomainError);

  CHECK(builtin_model("fp_solv8").jacobi().pass);
  CHECK(builtin_model("pseudoHK12").jacobi().pass);
}

TEST_CASE("structure constants read from the differential") {
  LieAlgebra h = heisenberg3();
  CHECK(h.d(h.generator(0)) == h.parse("e2^e3"));
  // de1 = e2^e3 gives [e2, e3] = -e1
  CHECK(h.structure_constant(1, 2, 0) == Scalar(-1L));
  CHECK(h.structure_constant(2, 1, 0) == Scalar(1L));
  CHECK(h.structure_constant(0, 1, 2).is_zero());
}

TEST_CASE("top coefficient") {
  Presentation p = Presentation::abelian(12);
  Form vol = Form::monomial(p.space, (Blade(1) << 12) - 1, Scalar(1L));
  CHECK(top_coefficient(vol, vol) == Scalar(1L));
  CHECK(top_coefficient(p.parse("e1^e2"), vol).is_zero());
  CHECK(top_coefficient(vol.scaled(Scalar(3L)) + p.parse("e1"), vol.scaled(Scalar(2L))) == Scalar(Rational(3, 2)));
  CHECK_THROWS_AS(top_coefficient(vol, p.parse("e1^e2")), DomainError);
}

TEST_CASE("direct sums") {
  LieAlgebra a2 = LieAlgebra::verify(Presentation::abelian(2));
  LieAlgebra a3 = LieAlgebra::verify(Presentation::abelian(3));
  LieAlgebra a5 = direct_sum(a2, a3);
  CHECK(a5.dim() == 5);
  CHECK(a5.basis() == std::vector<std::string>{"e1", "e2", "e3", "e4", "e5"});
  for (unsigned k = 0; k < 5; ++k) CHECK(a5.d(a5.generator(k)).is_zero());

  LieAlgebra h8 = direct_sum(heisenberg3(), LieAlgebra::verify(Presentation::abelian(5)));
  CHECK(h8.dim() == 8);
  CHECK(h8.d(h8.generator(0)) == h8.parse("e2^e3"));
  for (unsigned k = 1; k < 8; ++k) CHECK(h8.d(h8.generator(k)).is_zero());
}

TEST_CASE("form grammar") {
  Presentation p = Presentation::abelian(3);
  CHECK(p.parse("(e1+e2)^e3") == p.parse("e1^e3 + e2^e3"));
  CHECK(p.parse("(e1+e2)^2").is_zero());
  CHECK(p.parse("conj(i*e1)") == p.parse("-i*e1"));
  CHECK(p.parse("2*e1^e2").to_string(p.basis) == "2*e1^e2");
  CHECK_THROWS_AS(p.parse("e1^^e2"), ParseError);
  CHECK_THROWS_AS(p.parse("e9"), ParseError);
}
