#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hermitia/polynomial.hpp"

namespace hermitia {

enum class SignHint { unknown, positive, negative };

std::string to_string(SignHint h);
SignHint parse_sign_hint(std::string_view text);

/// A declared coefficient symbol. Free symbols (power == 0) are treated as
/// real transcendentals; algebraic ones obey `name^power = rhs`, where rhs
/// only involves symbols declared earlier.
struct Symbol {
  std::string name;
  std::uint32_t power = 0;
  Polynomial rhs;
  SignHint sign = SignHint::unknown;

  bool algebraic() const noexcept { return power > 0; }
};

/// Ordered set of symbols. Id 0 is always the imaginary unit "i" with i^2 = -1.
class SymbolTable {
 public:
  static constexpr SymbolId imaginary = 0;

  SymbolTable();

  /// Shared table holding only "i"; the default context of constants.
  static const std::shared_ptr<const SymbolTable>& builtin();

  /// Copy of `base` that may declare further symbols; scalars over `base`
  /// combine with scalars over the extension.
  static std::shared_ptr<SymbolTable> extend(const std::shared_ptr<const SymbolTable>& base);
  /// True when this table is `other` or was extended from it.
  bool descends_from(const SymbolTable* other) const noexcept;

  SymbolId declare(const std::string& name, SignHint sign = SignHint::unknown);
  SymbolId declare_algebraic(const std::string& name, std::uint32_t power, const Polynomial& rhs,
                             SignHint sign = SignHint::unknown);

  std::optional<SymbolId> find(std::string_view name) const;
  const Symbol& operator[](SymbolId id) const { return symbols_.at(id); }
  std::size_t size() const noexcept { return symbols_.size(); }

  /// Rewrites every s^e with e >= power(s) using the relations, so that the
  /// result is the unique reduced representative.
  Polynomial reduce(const Polynomial& p) const;

 private:
  void check_new_name(const std::string& name) const;
  std::vector<Symbol> symbols_;
  std::shared_ptr<const SymbolTable> parent_;
};

using Valuation = std::map<std::string, double>;

/// Exact coefficient: a canonical fraction num/den of polynomials over Q in
/// i and the declared symbols, reduced modulo the relations. The denominator
/// is monic, free of algebraic symbols, and coprime to the numerator, so two
/// scalars are equal iff their representations are identical.
class Scalar {
 public:
  using TablePtr = std::shared_ptr<const SymbolTable>;

  Scalar();
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Scalar imaginary_unit();
  static Scalar symbol(const TablePtr& table, SymbolId id);
  static Scalar symbol(const TablePtr& table, std::string_view name);
  static Scalar from_polynomial(const TablePtr& table, const Polynomial& p);
  /// Canonicalizes num/den; throws DivisionByZero when den vanishes.
  static Scalar fraction(const TablePtr& table, const Polynomial& num, const Polynomial& den);

  const TablePtr& table() const noexcept { return table_; }
  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept;
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_rational() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Value when is_rational().
  Rational rational_value() const;
  /// True when no symbol other than i occurs.
  bool is_symbol_free() const noexcept;
  bool is_real() const;

  Scalar conj() const;
  Scalar real_part() const;
  Scalar imag_part() const;
  Scalar pow(unsigned n) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text in the expression grammar; parse(to_string()) == *this.
  std::string to_string() const;

  /// Ordering of canonical representations (for use as map keys).
  static int compare(const Scalar& a, const Scalar& b);

 private:
  static const TablePtr& merge_tables(const Scalar& a, const Scalar& b);
  static Scalar canonical(const TablePtr& table, Polynomial num, Polynomial den);

  TablePtr table_;
  Polynomial num_;
  Polynomial den_;
};

/// Parses an expression in the scalar grammar; identifiers must be declared
/// in `table` (or be "i").
Scalar parse_expr(std::string_view text, const Scalar::TablePtr& table);

/// Re-canonicalizes; the identity on values produced by this library.
Scalar normalize(const Scalar& s);
inline Scalar conjugate(const Scalar& s) { return s.conj(); }

/// Polynomial text printer shared with forms and exports.
std::string polynomial_to_string(const Polynomial& p, const SymbolTable& table);

/// Numeric value at a valuation. Every occurring symbol needs a value and
/// values of algebraic symbols have to satisfy their relation to within
/// relation_tolerance (relative).
inline constexpr double relation_tolerance = 1e-8;
inline constexpr double denominator_tolerance = 1e-12;
std::complex<double> evaluate(const Scalar& s, const Valuation& valuation);

/// Checks the declared relations against the valuation for every algebraic
/// symbol that has a value; throws EvaluationError on violation.
void check_valuation(const SymbolTable& table, const Valuation& valuation);

}  // namespace hermitia
