#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermitia/manifest.hpp"

namespace hermitia {

inline constexpr const char* report_schema = "hermitia-report/1";

enum class Verdict { pass, fail, inconclusive, error };
std::string to_string(Verdict v);

struct RunOptions {
  std::optional<std::string> only;  // restrict to one check id
  std::uint64_t seed = 0x5eed2024ULL;
  bool timing = true;
};

/// HERMITIA_SEED when set and valid, else the default sampler seed.
std::uint64_t seed_from_environment();

struct CheckResult {
  std::string id;
  CheckKind kind = CheckKind::jacobi;
  Verdict verdict = Verdict::error;
  bool informational = false;
  std::string message;
  Json result = Json::object();
  double time_ms = 0.0;
};

struct Report {
  std::string manifest;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool timing = true;

  /// Every non-informational check passes.
  bool passed() const;
  Json to_json() const;
  std::string to_text() const;
};

/// Runs the implicit Jacobi check, then integrability checks, then the
/// remaining checks in manifest order. Throws ManifestError when `only`
/// names no check.
Report run_checks(const Manifest& m, const RunOptions& options = {});

/// 0 when the report passes, 1 otherwise.
int exit_code(const Report& r);

}  // namespace hermitia
