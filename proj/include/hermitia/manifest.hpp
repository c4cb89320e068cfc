#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hermitia/complex_structure.hpp"
#include "hermitia/error.hpp"
#include "hermitia/hyperbolic.hpp"
#include "hermitia/lie_algebra.hpp"

namespace hermitia {

using Json = nlohmann::ordered_json;

inline constexpr const char* manifest_schema = "hermitia-manifest/1";

/// Structurally valid JSON that violates the manifest schema.
class ManifestError : public Error {
 public:
  using Error::Error;
};

enum class CheckKind {
  jacobi,
  integrable,
  hermitian,
  kahler,
  balanced,
  pluriclosed,
  astheno_kahler,
  k_pluriclosed,
  lee_form,
  bismut_torsion,
  differential,
  form_equals,
  bidegree,
  del_closed,
  signature,
  positivity_falsify,
  strong_positivity,
  hypercomplex,
  pseudo_hyperkahler,
  hkt,
  quaternionic_balanced,
  del_exact,
  hkt_obstruction,
  automorphism,
  char_poly,
  spectral_radius,
  classify,
  invariant_classes,
  power_iterate,
};

std::string to_string(CheckKind k);
/// Throws ManifestError for unknown names.
CheckKind parse_check_kind(std::string_view name);
const std::vector<std::string>& check_kind_names();

struct SymbolSpec {
  std::string name;
  unsigned power = 0;    // 0: free symbol
  std::string relation;  // right side of name^power = relation
  SignHint sign = SignHint::unknown;
};

using MatrixSpec = std::vector<std::vector<std::string>>;

struct CheckSpec {
  std::string id;
  CheckKind kind = CheckKind::jacobi;
  Json params = Json::object();
  Json expect = Json::object();
  bool informational = false;
};

struct Manifest {
  std::string name;
  std::string comment;
  std::vector<SymbolSpec> symbols;
  std::vector<std::string> basis;
  std::vector<std::pair<std::string, std::string>> differential;  // generator -> 2-form
  std::vector<std::pair<std::string, MatrixSpec>> endomorphisms;
  std::vector<std::pair<std::string, MatrixSpec>> bilinears;
  std::vector<std::pair<std::string, std::string>> forms;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> valuations;
  std::vector<CheckSpec> checks;

  const CheckSpec* find_check(const std::string& id) const;
};

/// Throws ParseError (with byte offset) for malformed JSON and
/// ManifestError for schema violations.
Manifest parse_manifest(std::string_view text);
Manifest manifest_from_json(const Json& j);
Json to_json(const Manifest& m);
/// Canonical serialization (two-space indent, trailing newline).
std::string emit_manifest(const Manifest& m);

/// Parses a JSON array of arrays of exact rationals (strings or integers).
RationalMatrix parse_rational_matrix(const Json& j);
RationalMatrix parse_rational_matrix(std::string_view text);

/// Scalars, algebra and attached data built from a manifest. The Jacobi
/// identity is checked but not enforced: `algebra` is empty when it fails.
class Model {
 public:
  explicit Model(const Manifest& m);
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  const Manifest& manifest() const noexcept { return m_; }
  const Scalar::TablePtr& table() const noexcept { return table_; }
  const Presentation& presentation() const noexcept { return p_; }
  const JacobiReport& jacobi() const noexcept { return jacobi_; }
  bool has_algebra() const noexcept { return algebra_.has_value(); }
  /// Throws DomainError when the Jacobi identity fails.
  const LieAlgebra& algebra() const;

  /// Complex structure for a named endomorphism (cached).
  const ComplexStructure& structure(const std::string& name) const;
  const ScalarMatrix& endomorphism(const std::string& name) const;
  const ScalarMatrix& bilinear(const std::string& name) const;
  /// Either a name or an integer/rational matrix given inline.
  ScalarMatrix matrix(const Json& ref) const;
  /// Named form, or an expression over the algebra.
  Form form(const std::string& name_or_expr) const;
  Scalar scalar(const std::string& expr) const;
  Valuation valuation(const std::string& set) const;

 private:
  Manifest m_;
  Scalar::TablePtr table_;
  Presentation p_;
  JacobiReport jacobi_;
  std::optional<LieAlgebra> algebra_;
  mutable std::map<std::string, std::unique_ptr<ComplexStructure>> structures_;
};

}  // namespace hermitia
