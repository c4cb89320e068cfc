#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermitia/complex_structure.hpp"

namespace hermitia {

/// Real (1,1)-form with respect to an integrable structure.
class HermitianCandidate {
 public:
  /// Throws DomainError unless omega is real and of pure bidegree (1,1).
  HermitianCandidate(const ComplexStructure& j, Form omega);

  const ComplexStructure& structure() const noexcept { return *j_; }
  const Form& omega() const noexcept { return omega_; }
  unsigned complex_dim() const noexcept { return j_->complex_dim(); }

 private:
  const ComplexStructure* j_;
  Form omega_;
};

/// omega(X, Y) = g(JX, Y) for a Gram matrix g.
Form fundamental_form(const LieAlgebra& g, const ScalarMatrix& j, const ScalarMatrix& gram);

struct PredicateReport {
  bool holds = false;
  Form residual;  // the form required to vanish
};

PredicateReport is_kahler(const HermitianCandidate& c);
PredicateReport is_balanced(const HermitianCandidate& c);
PredicateReport is_pluriclosed(const HermitianCandidate& c);
PredicateReport is_astheno_kahler(const HermitianCandidate& c);
/// d dc (omega^k) = 0, for 1 <= k <= m-1.
PredicateReport is_k_pluriclosed(const HermitianCandidate& c, unsigned k);

struct LeeFormSolution {
  std::optional<Form> theta;  // nullopt: d omega is not of the form theta ^ omega
  bool unique = false;
  bool d_theta_zero = false;
};

LeeFormSolution lee_form(const HermitianCandidate& c);

struct BismutTorsion {
  Form torsion;  // -dc omega
  Form d_torsion;
};

BismutTorsion bismut_torsion(const HermitianCandidate& c);

/// h with omega = i sum_ab h_ab eta_a ^ conj(eta_b).
ScalarMatrix hermitian_gram(const ComplexStructure& j, const Form& omega);

struct PositivitySample {
  bool violation = false;
  std::size_t samples = 0;
  double value = 0.0;                                     // value at the witness (or the minimum seen)
  std::vector<std::vector<std::complex<double>>> witness;  // the (1,0) vectors v_1..v_p
};

inline constexpr std::uint64_t default_seed = 0x5eed2024ULL;

/// Samples (-i)^p a(v1, conj v1, ..., vp, conj vp) for v = X - iJX with X
/// uniform in [-1,1]^n (mt19937_64). A negative value below -tol certifies
/// that a is not weakly positive.
PositivitySample positivity_falsify(const ComplexStructure& j, const Form& a, unsigned p,
                                    const Valuation& valuation, std::size_t samples,
                                    std::uint64_t seed = default_seed, double tol = 1e-9);

struct StrongTerm {
  Scalar coef;
  std::vector<Form> factors;  // p (1,0)-forms xi_1..xi_p
};

struct CertificateResult {
  bool holds = false;
  Form residual;
  std::string problem;  // nonempty when a precondition fails
};

/// Expands sum coef * i^p xi1^conj(xi1)^...^xip^conj(xip) and compares with a.
CertificateResult strong_positivity_certificate(const ComplexStructure& j, const Form& a,
                                                const std::vector<StrongTerm>& decomposition,
                                                const Valuation& valuation);

/// i xi ^ conj(xi) for a (1,0)-form xi, and products of such.
Form positive_product(const std::vector<Form>& factors);

}  // namespace hermitia
