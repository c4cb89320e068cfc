#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hermitia/lie_algebra.hpp"
#include "hermitia/manifest.hpp"
#include "hermitia/quaternion.hpp"

namespace hermitia {

struct AlmostAbelianInfo {
  bool nilpotent = false;
  Scalar trace;
  bool unimodular = false;  // trace(D) = 0
};

/// Ideal e1..em, suspension direction e(m+1), then k closed generators, with
/// de^i = sum_j D_ij e^j ^ e^(m+1), so that ad of the suspension vector is D.
LieAlgebra almost_abelian(const ScalarMatrix& d, unsigned flat_extra, AlmostAbelianInfo* info = nullptr,
                          std::vector<std::string> names = {}, const std::string& name = "almost_abelian");

/// de1 = e2 ^ e3, with forms "eta" = e1 and "Phi" = d eta attached.
LieAlgebra heisenberg3();

/// Heisenberg(3) x flat C^n x R with the complex structure Itilde and
/// omega_tilde = eta ^ dt + d eta + omega.
struct SuspensionModel {
  LieAlgebra algebra;
  ScalarMatrix structure;  // Itilde
  Form omega;              // omega_tilde
  Form eta, phi, dt;
  Form zeta;               // (1,0)-form with Phi = (i/2) zeta ^ conj(zeta)
};

/// Verifies d omega_tilde = Phi ^ dt before returning (DomainError otherwise).
SuspensionModel sasaki_kahler_suspension(unsigned kahler_dim);

/// Matrix with J e_from = sign * e_to and J e_to = -sign * e_from for each
/// listed pair; indices are 1-based.
ScalarMatrix quarter_turn(unsigned n, const std::vector<std::pair<int, int>>& pairs);

const std::vector<std::string>& builtin_names();
/// Throws DomainError for unknown names.
Manifest builtin(const std::string& name);

/// Commutation with each endomorphism, isometry for each Gram matrix, unit
/// determinant and pairwise commutation of the given automorphisms.
StructureReport verify_automorphism_compat(const std::vector<std::pair<std::string, ScalarMatrix>>& automorphisms,
                                           const std::vector<std::pair<std::string, ScalarMatrix>>& endomorphisms,
                                           const std::vector<std::pair<std::string, ScalarMatrix>>& grams);

}  // namespace hermitia
