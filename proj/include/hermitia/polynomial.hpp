#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hermitia/rational.hpp"

namespace hermitia {

using SymbolId = std::uint32_t;

/// Power product of symbols, stored sparsely as (id, exponent) pairs sorted by id.
class Monomial {
 public:
  using Factor = std::pair<SymbolId, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(SymbolId id, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t exponent(SymbolId id) const noexcept;
  std::uint32_t total_degree() const noexcept;

  /// Copy with the exponent of `id` replaced (0 removes the factor).
  Monomial with_exponent(SymbolId id, std::uint32_t exponent) const;

  bool divides(const Monomial& other) const noexcept;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic order in which lower symbol ids are more significant.
  /// Returns <0, 0, >0.
  static int compare(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::vector<Factor> factors_;
};

struct PolyTerm {
  Monomial mono;
  Rational coef;
};

/// Sparse multivariate polynomial with rational coefficients.
/// Terms are kept sorted with the leading (lex-largest) monomial first and
/// never carry a zero coefficient, so the representation is canonical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(SymbolId id, std::uint32_t exponent = 1);

  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  const PolyTerm& leading() const { return terms_.front(); }

  std::uint32_t degree_in(SymbolId id) const noexcept;
  bool contains(SymbolId id) const noexcept;
  /// Smallest symbol id occurring, if any.
  std::optional<SymbolId> lowest_symbol() const noexcept;
  std::vector<SymbolId> symbols() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Coefficients with respect to `id`: result[k] multiplies id^k.
  std::vector<Polynomial> coefficients_in(SymbolId id) const;
  static Polynomial from_coefficients(SymbolId id, const std::vector<Polynomial>& coeffs);

  /// Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

  /// Greatest common divisor over Q, normalized so that the leading
  /// coefficient is 1 (gcd(0,0) = 0).
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  Polynomial monic() const;

  /// Builds from unsorted, possibly duplicated terms.
  static Polynomial from_terms(std::vector<PolyTerm> terms);

 private:
  std::vector<PolyTerm> terms_;
};

}  // namespace hermitia
