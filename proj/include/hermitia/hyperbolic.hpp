#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermitia/matrix.hpp"
#include "hermitia/upoly.hpp"

namespace hermitia {

/// Dense rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& d);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Requires every entry to be rational.
  static RationalMatrix from_scalar(const ScalarMatrix& m);
  ScalarMatrix to_scalar() const;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const Rational& c);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  /// Direct sum diag(a, b).
  static RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix evaluate_polynomial(const UPoly& p, const RationalMatrix& m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
/// Right kernel basis as columns.
RationalMatrix kernel(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Symmetric congruence diagonalization.
Signature signature(const RationalMatrix& gram);

struct IsometryCheck {
  bool holds = false;
  RationalMatrix residual;  // M^T G M - G
};

IsometryCheck verify_isometry(const RationalMatrix& m, const RationalMatrix& gram);

/// det(t I - M) by the division-free Berkowitz algorithm.
UPoly char_poly(const RationalMatrix& m);

enum class IsometryType { elliptic, parabolic, hyperbolic };
std::string to_string(IsometryType t);

struct Classification {
  IsometryType type = IsometryType::elliptic;
  UPoly char_poly;
  UPoly squarefree;           // squarefree part of the characteristic polynomial
  int roots_above_one = 0;    // distinct real roots in (1, inf)
  int roots_below_minus_one = 0;
  // hyperbolic
  Rational lambda_lo, lambda_hi;  // isolating interval of the expanding eigenvalue
  double lambda = 0.0;
  std::optional<Rational> trace;  // lambda + 1/lambda when the eigenvalue is quadratic
  std::optional<Rational> discriminant;  // tau^2 - 4, lambda = (tau +- sqrt(disc)) / 2
  std::vector<std::string> eigenvector_exact;  // over Q(s), s^2 = disc
  std::vector<double> eigenvector_numeric;
  double eigen_residual = 0.0;
  // parabolic
  UPoly repeated_factor;  // gcd(p, p')
  bool orthochronous = true;
  std::string certificate;
};

/// Requires M to be an isometry of a Gram matrix of signature (1, n, 0).
Classification classify(const RationalMatrix& m, const RationalMatrix& gram);

struct InvariantClasses {
  RationalMatrix basis;  // columns spanning ker(M - Id)
  std::vector<Rational> q_values;
  RationalMatrix restricted_gram;
  bool hyperbolic = false;
  bool negative_definite = false;
  /// Lemma verdict: vacuous (empty kernel or not hyperbolic) or negative definite.
  bool verified = false;
  std::string note;
};

InvariantClasses invariant_classes(const RationalMatrix& m, const RationalMatrix& gram);

struct PowerIteration {
  bool converged = false;
  std::vector<double> eta;
  double lambda = 0.0;
  double q_value = 0.0;
  std::size_t iterations = 0;
  std::vector<double> residuals;
  std::size_t perturbations = 0;
  std::string message;
};

/// Normalized power iteration; throws DomainError("no dominant eigenvalue")
/// when M is not hyperbolic.
PowerIteration power_iterate(const RationalMatrix& m, const RationalMatrix& gram, const std::vector<double>& seed,
                             double tol, std::size_t max_iters);

struct SpectralRadius {
  bool certified = false;
  UPoly squared_poly;  // resultant whose largest positive root is rho^2
  double rho = 0.0;
};

/// Certifies rho(M) in (lo, hi) exactly.
SpectralRadius certify_spectral_radius(const RationalMatrix& m, const Rational& lo, const Rational& hi);

/// Decimal printing with 12 significant digits.
std::string decimal(double x);
std::string decimal(const Rational& x);

}  // namespace hermitia
