#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermitia/metrics.hpp"

namespace hermitia {

struct SubCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct StructureReport {
  bool pass = true;
  std::vector<SubCheck> checks;
  void add(std::string name, bool ok, std::string detail = {});
};

/// I^2 = J^2 = K^2 = -Id, IJ = K, JI = -K and integrability of each.
StructureReport check_hypercomplex(const ComplexStructure& i, const ComplexStructure& j, const ComplexStructure& k);

/// Closedness of the three forms, their types, and (omega_J + i omega_K) of type (2,0) for I.
StructureReport check_pseudo_hyperkahler(const ComplexStructure& i, const ComplexStructure& j,
                                         const ComplexStructure& k, const Form& omega_i, const Form& omega_j,
                                         const Form& omega_k);

/// M with J conj(eta_b) = sum_c M_bc eta_c.
ScalarMatrix quaternionic_twist(const ComplexStructure& i, const ComplexStructure& j);

/// h_ab = Omega(v_a, J conj(v_b)) for the (1,0) vectors v dual to eta.
/// Omega is J-anti-invariant iff h is Hermitian.
ScalarMatrix quaternionic_hermitian_matrix(const ComplexStructure& i, const ComplexStructure& j, const Form& omega);

struct HktReport {
  bool holds = false;
  bool del_zero = false;
  bool positive = false;
  Form del_omega;
  ScalarMatrix h;
  Signature signature;
};

/// Omega must be (2,0) for I and J-anti-invariant (DomainError otherwise).
HktReport check_hkt(const ComplexStructure& i, const ComplexStructure& j, const Form& omega,
                    const Valuation& valuation);

struct QuaternionicBalancedReport {
  bool holds = false;
  unsigned exponent = 0;  // q - 1 for real dimension 4q
  Form residual;
};

QuaternionicBalancedReport check_quaternionic_balanced(const ComplexStructure& i, const Form& omega);

struct DelExactReport {
  bool exact = false;
  std::optional<Form> primitive;
  std::string detail;
};

/// Solves del x = alpha for x of bidegree (p-1, q); checks `claimed` when given.
DelExactReport del_exact(const ComplexStructure& i, const Form& alpha, const std::optional<Form>& claimed = {});

struct ObstructionReport {
  Scalar value;       // top coefficient of tilde Omega ^ alpha ^ conj(beta) against beta ^ conj(beta)
  Scalar factor;      // leading rational coefficient of value (1 when value = 0)
  Scalar normalized;  // value / factor
  ScalarMatrix a;     // the symbolic J-compatible Hermitian matrix
  std::vector<std::string> parameters;
  bool beta_closed = false;
  Scalar::TablePtr table;
};

/// Pairing of tilde Omega = sum a_ab eta_a ^ J conj(eta_b) against alpha and
/// beta, where a ranges over Hermitian matrices making tilde Omega
/// J-anti-invariant. Declares the entries of a as fresh symbols (a11, x12,
/// y12, ...) in an extension of the algebra's table.
ObstructionReport hkt_obstruction(const ComplexStructure& i, const ComplexStructure& j, const Form& alpha,
                                  const Form& beta);

/// Omega(x, y) for a 2-form and exact vectors.
Scalar evaluate_2form(const Form& omega, const std::vector<Scalar>& x, const std::vector<Scalar>& y);

}  // namespace hermitia
