#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "hermitia/error.hpp"
#include "hermitia/hyperbolic.hpp"
#include "support.hpp"

using namespace hermitia;
using namespace testing;

namespace {

const RationalMatrix pell = rat_matrix({{3, 4}, {2, 3}});
const RationalMatrix diag12 = rat_matrix({{1, 0}, {0, -2}});

// det(tI - M) by cofactor expansion along the first row.
UPoly laplace_char_poly(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<UPoly>> a(n, std::vector<UPoly>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = (r == c ? UPoly::t() : UPoly()) - UPoly::constant(m(r, c));
  std::function<UPoly(const std::vector<std::size_t>&, std::size_t)> det = [&](const std::vector<std::size_t>& cols,
                                                                                std::size_t row) -> UPoly {
    if (cols.empty()) return UPoly::constant(Rational(1));
    UPoly sum;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      UPoly term = a[row][cols[k]] * det(rest, row + 1);
      if (k % 2) sum -= term;
      else sum += term;
    }
    return sum;
  };
  std::vector<std::size_t> cols(n);
  for (std::size_t k = 0; k < n; ++k) cols[k] = k;
  return det(cols, 0);
}

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c).get_d();
  return e;
}

double numeric_spectral_radius(const RationalMatrix& m) {
  return to_eigen(m).eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("isometry verification") {
  CHECK(verify_isometry(pell, diag12).holds);
  IsometryCheck bad = verify_isometry(rat_matrix({{2, 1}, {1, 1}}), rat_matrix({{0, 1}, {1, 0}}));
  CHECK_FALSE(bad.holds);
  CHECK(bad.residual == rat_matrix({{4, 2}, {2, 2}}));
  CHECK(verify_isometry(RationalMatrix::identity(3), rat_matrix({{1, 2, 0}, {2, 0, 1}, {0, 1, 5}})).holds);
  CHECK_THROWS_AS(verify_isometry(pell, RationalMatrix::identity(3)), DomainError);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(RationalMatrix::identity(2)) == parse_upoly("(t-1)^2"));
  CHECK(char_poly(pell) == parse_upoly("t^2-6*t+1"));
  Model& l = builtin_model("lemma61");
  RationalMatrix a = RationalMatrix::from_scalar(l.endomorphism("A"));
  UPoly p = char_poly(a);
  CHECK(p == parse_upoly("(t^4+6*t^2+1)^2"));
  CHECK(p == laplace_char_poly(a));
  CHECK(determinant(a) == Rational(1));

  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = Rational(entry(rng), 1 + (trial % 3));
        m(r, c).canonicalize();
      }
    INFO("n = " << n << ", berkowitz " << char_poly(m).to_string() << ", laplace " << laplace_char_poly(m).to_string());
    CHECK(char_poly(m) == laplace_char_poly(m));
    // block direct sum multiplies characteristic polynomials
    CHECK(char_poly(RationalMatrix::block_diagonal(m, pell)) == char_poly(m) * char_poly(pell));
  }
}

TEST_CASE("signature by congruence") {
  CHECK(signature(diag12) == Signature{1, 1, 0});
  CHECK(signature(rat_matrix({{0, 1}, {1, 0}})) == Signature{1, 1, 0});
  CHECK(signature(rat_matrix({{1, 1}, {1, 1}})) == Signature{1, 0, 1});
  CHECK(signature(rat_matrix({{0, 0, 1}, {0, -2, 0}, {1, 0, 0}})) == Signature{1, 2, 0});
}

TEST_CASE("classification: the three examples") {
  Classification h = classify(pell, diag12);
  CHECK(h.type == IsometryType::hyperbolic);
  CHECK(h.lambda_lo > Rational(58, 10));
  CHECK(h.lambda_hi < Rational(59, 10));
  CHECK(h.lambda_hi - h.lambda_lo < Rational(Integer(1), Integer("1000000000000")));
  CHECK(std::abs(h.lambda - (3 + 2 * std::sqrt(2.0))) < 1e-12);
  REQUIRE(h.trace.has_value());
  CHECK(*h.trace == Rational(6));
  CHECK(*h.discriminant == Rational(32));
  CHECK_FALSE(h.eigenvector_exact.empty());
  CHECK(h.eigen_residual < 1e-10);
  // the numeric eigenvector is proportional to (sqrt 2, 1)
  REQUIRE(h.eigenvector_numeric.size() == 2);
  CHECK(std::abs(h.eigenvector_numeric[0] / h.eigenvector_numeric[1] - std::sqrt(2.0)) < 1e-10);

  Classification e = classify(RationalMatrix::identity(2), diag12);
  CHECK(e.type == IsometryType::elliptic);
  CHECK_FALSE(e.certificate.empty());

  RationalMatrix g = RationalMatrix::from_rows({{Rational(0), Rational(0), Rational(1, 2)},
                                                {Rational(0), Rational(-1), Rational(0)},
                                                {Rational(1, 2), Rational(0), Rational(0)}});
  RationalMatrix u = rat_matrix({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}});
  REQUIRE(verify_isometry(u, g).holds);
  Classification p = classify(u, g);
  CHECK(p.type == IsometryType::parabolic);
  CHECK(p.char_poly == parse_upoly("(t-1)^3"));
  CHECK(kernel(u - RationalMatrix::identity(3)).cols() == 1);
  CHECK(p.repeated_factor.degree() >= 1);

  CHECK_THROWS_AS(classify(pell, RationalMatrix::identity(2)), DomainError);
  CHECK_THROWS_AS(classify(RationalMatrix::identity(2), rat_matrix({{1, 0}, {0, 1}})), DomainError);
}

TEST_CASE("classification agrees with numeric eigenvalues on random words") {
  const std::vector<RationalMatrix> gens = {pell, rat_matrix({{3, -4}, {-2, 3}}), rat_matrix({{-1, 0}, {0, -1}}),
                                            rat_matrix({{1, 0}, {0, -1}})};
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    RationalMatrix m = RationalMatrix::identity(2);
    const int len = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k) m = m * gens[rng() % gens.size()];
    REQUIRE(verify_isometry(m, diag12).holds);
    Classification c = classify(m, diag12);
    const double rho = numeric_spectral_radius(m);
    CHECK((c.type == IsometryType::hyperbolic) == (rho > 1 + 1e-9));
    // transpose-inverse is an isometry of the inverse Gram matrix with the same label
    RationalMatrix ti = inverse(m.transpose()).value();
    RationalMatrix gi = inverse(diag12).value();
    CHECK(classify(ti, gi).type == c.type);
    if (c.type == IsometryType::hyperbolic) {
      CHECK(c.lambda_lo.get_d() <= std::abs(c.lambda) + 1e-12);
      CHECK(std::abs(std::abs(c.lambda) - rho) < 1e-9);
      // off-circle factor t^2 - tau t + 1 is palindromic
      UPoly q = UPoly(std::vector<Rational>{Rational(1), -*c.trace, Rational(1)});
      CHECK(UPoly::divmod(c.char_poly, q).second.is_zero());
    }
  }
}

TEST_CASE("invariant classes") {
  RationalMatrix g3 = rat_matrix({{1, 0, 0}, {0, -2, 0}, {0, 0, -5}});
  RationalMatrix m3 = RationalMatrix::block_diagonal(pell, RationalMatrix::identity(1));
  InvariantClasses r = invariant_classes(m3, g3);
  CHECK(r.hyperbolic);
  REQUIRE(r.basis.cols() == 1);
  CHECK(r.basis(0, 0) == 0);
  CHECK(r.basis(1, 0) == 0);
  CHECK(r.basis(2, 0) != 0);
  REQUIRE(r.q_values.size() == 1);
  CHECK(r.q_values[0] < 0);
  CHECK(r.q_values[0] / (r.basis(2, 0) * r.basis(2, 0)) == Rational(-5));
  CHECK(r.negative_definite);
  CHECK(r.verified);

  InvariantClasses id = invariant_classes(RationalMatrix::identity(3), g3);
  CHECK(id.basis.cols() == 3);
  CHECK_FALSE(id.hyperbolic);

  InvariantClasses none = invariant_classes(pell, diag12);
  CHECK(none.basis.cols() == 0);
  CHECK(none.verified);
}

TEST_CASE("power iteration") {
  PowerIteration p = power_iterate(pell, diag12, {1.0, 0.0}, 1e-10, 200);
  CHECK(p.converged);
  CHECK(p.iterations <= 200);
  CHECK(std::abs(p.lambda - (3 + 2 * std::sqrt(2.0))) < 1e-9);
  CHECK(std::abs(p.q_value) < 1e-9);
  const double norm = std::sqrt(3.0);
  CHECK(std::abs(p.eta[0] - std::sqrt(2.0) / norm) < 1e-9);
  CHECK(std::abs(p.eta[1] - 1.0 / norm) < 1e-9);
  CHECK(p.residuals.back() < 1e-10);

  CHECK_THROWS_AS(power_iterate(RationalMatrix::identity(2), diag12, {1.0, 0.0}, 1e-10, 200), DomainError);

  // starting on the contracting eigenvector still reaches the expanding one
  PowerIteration c = power_iterate(pell, diag12, {std::sqrt(2.0), -1.0}, 1e-10, 400);
  CHECK(c.converged);
  CHECK(std::abs(c.lambda - (3 + 2 * std::sqrt(2.0))) < 1e-9);

  PowerIteration shortrun = power_iterate(pell, diag12, {1.0, 0.0}, 1e-10, 2);
  CHECK_FALSE(shortrun.converged);
  CHECK(shortrun.message == "max_iters exceeded");
}

TEST_CASE("spectral radius certificate") {
  Model& l = builtin_model("lemma61");
  RationalMatrix a = RationalMatrix::from_scalar(l.endomorphism("A"));
  SpectralRadius s = certify_spectral_radius(a, parse_decimal("2.41421356"), parse_decimal("2.41421357"));
  CHECK(s.certified);
  CHECK(std::abs(s.rho - (1 + std::sqrt(2.0))) < 1e-9);
  CHECK(std::abs(s.rho - numeric_spectral_radius(a)) < 1e-9);
  CHECK_FALSE(certify_spectral_radius(a, parse_decimal("2.4142136"), parse_decimal("2.5")).certified);
  CHECK(certify_spectral_radius(pell, Rational(58, 10), Rational(59, 10)).certified);
}

TEST_CASE("univariate polynomials and Sturm sequences") {
  UPoly p = parse_upoly("t^3 - 2*t");
  SturmSequence s(p);
  CHECK(s.count(Rational(-10), Rational(10)) == 3);
  CHECK(s.count(Rational(0), Rational(10)) == 1);
  CHECK(s.count(Rational(-1), Rational(0)) == 1);  // half-open: 0 counted
  auto roots = isolate_roots(p, Rational(-10), Rational(10), Rational(1, 1000));
  REQUIRE(roots.size() == 3);
  CHECK(roots[2].first.get_d() < std::sqrt(2.0));
  CHECK(roots[2].second.get_d() >= std::sqrt(2.0));
  CHECK(UPoly::gcd(parse_upoly("(t-1)^2*(t+2)"), parse_upoly("(t-1)*(t+3)")) == parse_upoly("t-1"));
  CHECK(parse_upoly("(t-1)^2*(t+2)").squarefree_part() == parse_upoly("(t-1)*(t+2)"));
  CHECK(UPoly::resultant(parse_upoly("t^2-2"), parse_upoly("t-1")) == Rational(-1));
  CHECK(rational_approximation(0.75) == Rational(3, 4));
  CHECK(decimal(3.0 + 2 * std::sqrt(2.0)) == "5.82842712475");
}
