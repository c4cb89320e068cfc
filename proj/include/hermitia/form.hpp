#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hermitia/scalar.hpp"

namespace hermitia {

/// Identity of the exterior algebra a form lives in. Id 0 is reserved for
/// "unbound" constants that combine with any space.
struct Space {
  std::uint64_t id = 0;
  unsigned dim = 0;

  static Space make(unsigned dim);
  friend bool operator==(const Space&, const Space&) = default;
};

inline constexpr unsigned max_dimension = 64;

/// Set of generator indices (bit k = generator k, 0-based).
using Blade = std::uint64_t;

inline unsigned blade_degree(Blade b) { return static_cast<unsigned>(__builtin_popcountll(b)); }

/// Lexicographic order on the increasing index lists of two blades.
bool blade_less(Blade a, Blade b) noexcept;

/// Sign of e^a ^ e^b relative to e^(a|b); 0 when they share an index.
int wedge_sign(Blade a, Blade b) noexcept;

std::vector<unsigned> blade_indices(Blade b);
Blade blade_of(const std::vector<unsigned>& indices);

struct FormTerm {
  Blade blade;
  Scalar coef;
};

/// Element of the exterior algebra: sorted terms with nonzero coefficients.
class Form {
 public:
  Form() = default;
  explicit Form(Space s) : space_(s) {}
  static Form constant(Space s, const Scalar& c);
  static Form generator(Space s, unsigned index);
  static Form monomial(Space s, Blade b, const Scalar& c);
  static Form from_terms(Space s, std::vector<FormTerm> terms);

  const Space& space() const noexcept { return space_; }
  const std::vector<FormTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::set<unsigned> degrees() const;
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous form; 0 for zero.
  unsigned degree() const;
  Form component(unsigned degree) const;
  Scalar coefficient(Blade b) const;

  Form conj() const;
  Form scaled(const Scalar& c) const;
  Form pow(unsigned k) const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(const Form& a) { return a.scaled(Scalar(-1L)); }
  friend Form operator*(const Scalar& c, const Form& a) { return a.scaled(c); }
  friend bool operator==(const Form& a, const Form& b);

  /// Text in the form grammar, e.g. "2*e1^e2 - i*e3"; generator k is
  /// printed as names[k].
  std::string to_string(const std::vector<std::string>& names) const;

  /// Value on vectors (determinant convention) at a valuation; vectors carry
  /// components in the dual basis of the generators.
  std::complex<double> evaluate(const std::vector<std::vector<std::complex<double>>>& vectors,
                                const Valuation& valuation) const;

 private:
  friend Form wedge(const Form& a, const Form& b);
  static Space merge_spaces(const Form& a, const Form& b);

  Space space_;
  std::vector<FormTerm> terms_;
};

Form wedge(const Form& a, const Form& b);
Form wedge_all(const std::vector<Form>& forms, Space s);

/// Linear form sum_k coeffs[k] e^k.
Form linear_form(Space s, const std::vector<Scalar>& coeffs);

/// Extends a map on generators (each image of degree +1) to the degree +1
/// antiderivation.
Form apply_antiderivation(const Form& a, const std::vector<Form>& images);

/// Substitutes e^k -> images[k] (images of degree 1) multiplicatively; the
/// result lives in `target`.
Form substitute(const Form& a, const std::vector<Form>& images, Space target);

/// Images of whole blades under a fixed substitution, filled on demand.
using BladeImages = std::unordered_map<Blade, Form>;
Form substitute(const Form& a, const std::vector<Form>& images, Space target, BladeImages& cache);

/// Context for parsing forms: generator names, coefficient symbols, and
/// optionally previously defined forms and a differential for d(...).
struct FormContext {
  Space space;
  const std::vector<std::string>* basis = nullptr;
  Scalar::TablePtr table;
  std::function<const Form*(const std::string&)> named;
  std::function<Form(const Form&)> differential;
};

/// Parses an expression where '^' between forms is the wedge product,
/// '^n' is a wedge power and '*' multiplies (wedge with scalars/forms).
/// Functions: conj(x) and d(x) (when a differential is provided).
Form parse_form(std::string_view text, const FormContext& ctx);

}  // namespace hermitia
