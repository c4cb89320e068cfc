#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermitia/lie_algebra.hpp"

namespace hermitia {

using Bidegree = std::pair<unsigned, unsigned>;

struct NijenhuisReport {
  bool pass = true;
  std::optional<std::pair<unsigned, unsigned>> witness;  // first failing pair (a, b)
  std::vector<Scalar> value;                             // N(e_a, e_b) at the witness
};

/// Almost-complex structure J on the vectors (J e_j = sum_i J_ij e_i) of a
/// verified Lie algebra, together with the induced (1,0)-coframe and
/// bigrading. Holds a pointer to the algebra, which must outlive it.
class ComplexStructure {
 public:
  /// Checks J^2 = -Id and even dimension.
  ComplexStructure(const LieAlgebra& g, std::string name, ScalarMatrix j);

  const LieAlgebra& algebra() const noexcept { return *g_; }
  const std::string& name() const noexcept { return name_; }
  const ScalarMatrix& matrix() const noexcept { return j_; }
  unsigned complex_dim() const noexcept { return m_; }

  NijenhuisReport nijenhuis() const;

  /// eta_a = e^r - i (e^r o J) for the greedily selected real indices r.
  const std::vector<Form>& coframe() const noexcept { return eta_; }
  const std::vector<unsigned>& real_indices() const noexcept { return sigma_; }

  /// (J alpha)(X) = -alpha(J X) on 1-forms.
  Form act_on_1form(const Form& alpha) const;
  /// Multiplies the (p,q) component by i^(p-q).
  Form act(const Form& a) const;

  /// Components by bidegree, expressed in the real basis; they sum to a.
  std::map<Bidegree, Form> bidegree(const Form& a) const;
  Form component(const Form& a, unsigned p, unsigned q) const;
  bool is_pure(const Form& a, unsigned p, unsigned q) const;

  /// (p+1,q) and (p,q+1) parts of d. Throws DomainError when d produces any
  /// other bidegree (J not integrable).
  Form del(const Form& a) const;
  Form delbar(const Form& a) const;
  /// i (delbar - del)
  Form dc(const Form& a) const;

  /// The form in the basis (eta_1..eta_m, conj eta_1..conj eta_m).
  Form to_coframe(const Form& a) const;
  Form from_coframe(const Form& a) const;
  Space coframe_space() const noexcept { return theta_; }

 private:
  std::pair<Form, Form> del_delbar(const Form& a) const;

  const LieAlgebra* g_;
  std::string name_;
  ScalarMatrix j_;
  unsigned m_ = 0;
  std::vector<unsigned> sigma_;
  std::vector<Form> eta_;
  Space theta_;
  std::vector<Form> to_theta_;    // e^r in the theta basis
  std::vector<Form> from_theta_;  // theta^s in the e basis
  std::vector<Form> d_theta_;     // d theta^s in the theta basis
  mutable BladeImages to_cache_, from_cache_;
};

/// Complex 1-form sum_r c_r e^r as a coefficient row.
std::vector<Scalar> one_form_coefficients(const Form& alpha);

/// Vector X - i J X for a real vector X (components in the e basis).
std::vector<Scalar> type_10_vector(const ScalarMatrix& j, const std::vector<Scalar>& x);

}  // namespace hermitia
