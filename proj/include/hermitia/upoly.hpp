#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hermitia/rational.hpp"

namespace hermitia {

/// Dense univariate polynomial over Q; coeffs()[k] multiplies t^k.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly t();  // the variable
  /// prod (t - r)
  static UPoly from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rational& lc() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  UPoly derivative() const;
  UPoly monic() const;
  UPoly pow(unsigned k) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);
  friend UPoly operator-(const UPoly& a) { return a * Rational(-1); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws DivisionByZero for b = 0.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  static UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0
  static Rational resultant(const UPoly& a, const UPoly& b);
  /// Exact interpolation through (x_k, y_k) with distinct x_k.
  static UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

  UPoly squarefree_part() const;  // p / gcd(p, p'), monic
  bool is_squarefree() const;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Parses a polynomial in one variable with the shared expression grammar.
UPoly parse_upoly(std::string_view text, std::string_view var = "t");

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);
  /// Sign changes at x.
  int variations(const Rational& x) const;
  int variations_at_plus_infinity() const;
  int variations_at_minus_infinity() const;
  /// Distinct roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;

 private:
  std::vector<UPoly> seq_;
};

/// Bound B with every real root in (-B, B).
Rational root_bound(const UPoly& p);

/// Isolating intervals (a, b] of all distinct real roots in (lo, hi],
/// refined to width < width.
std::vector<std::pair<Rational, Rational>> isolate_roots(const UPoly& p, const Rational& lo, const Rational& hi,
                                                         const Rational& width);

/// Continued-fraction approximation of x with denominator <= max_den.
Rational rational_approximation(double x, long max_den = 1000000);

}  // namespace hermitia
