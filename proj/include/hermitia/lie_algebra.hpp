#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermitia/form.hpp"
#include "hermitia/matrix.hpp"

namespace hermitia {

/// Raw structure data of a Lie algebra given through the differentials of
/// the dual basis, plus attached endomorphisms, Gram matrices and forms.
/// Nothing is checked here; see LieAlgebra.
struct Presentation {
  std::string name;
  std::vector<std::string> basis;
  Scalar::TablePtr table;
  Space space;
  std::vector<Form> differential;  // de^k, one per generator
  std::map<std::string, ScalarMatrix> endomorphisms;
  std::map<std::string, ScalarMatrix> bilinears;
  std::vector<std::pair<std::string, Form>> forms;

  static Presentation make(std::string name, std::vector<std::string> basis, Scalar::TablePtr table = nullptr);
  static Presentation abelian(unsigned dim);

  unsigned dim() const noexcept { return space.dim; }
  Form generator(unsigned k) const { return Form::generator(space, k); }
  /// Sets de^k; the image must be a 2-form over this presentation.
  void set_differential(unsigned k, const Form& image);
  FormContext context() const;
  Form parse(std::string_view text) const;
  const Form* find_form(const std::string& name) const;
};

/// d on an unchecked presentation.
Form raw_d(const Presentation& p, const Form& a);

struct JacobiReport {
  bool pass = true;
  std::vector<Form> dd;  // d(de^k)
  std::optional<unsigned> witness;  // first k with d(de^k) != 0
};

JacobiReport jacobi_check(const Presentation& p);

/// A presentation that passed jacobi_check.
class LieAlgebra {
 public:
  /// Throws DomainError carrying the d^2 witness when the check fails.
  static LieAlgebra verify(Presentation p);

  const Presentation& presentation() const noexcept { return p_; }
  unsigned dim() const noexcept { return p_.dim(); }
  Space space() const noexcept { return p_.space; }
  const std::vector<std::string>& basis() const noexcept { return p_.basis; }
  const Scalar::TablePtr& table() const noexcept { return p_.table; }

  Form d(const Form& a) const { return apply_antiderivation(a, p_.differential); }
  Form generator(unsigned k) const { return p_.generator(k); }
  Form parse(std::string_view text) const;

  /// c^k_ab with [e_a, e_b] = sum_k c^k_ab e_k, read off as -de^k(e_a, e_b).
  Scalar structure_constant(unsigned a, unsigned b, unsigned k) const;
  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  std::string to_string(const Form& a) const { return a.to_string(p_.basis); }

 private:
  explicit LieAlgebra(Presentation p);
  Presentation p_;
  // brackets_[a*n+b] = [e_a, e_b] (a < b)
  std::vector<std::vector<Scalar>> brackets_;
};

/// Coefficient c with top-degree part of a equal to c*vol; vol must be a
/// single nonzero term of top degree.
Scalar top_coefficient(const Form& a, const Form& vol);

/// Direct sum with reindexed second summand. Default names e1..en are
/// renumbered; other clashing names get a suffix. Attached endomorphisms or
/// Gram matrices of equal name are combined block-diagonally (zero blocks
/// otherwise); forms of equal name are added.
LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

}  // namespace hermitia
