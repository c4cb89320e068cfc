#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hermitia/builders.hpp"
#include "hermitia/runner.hpp"

using namespace hermitia;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Endpoint rounded outward to 8 decimals.
std::string outward(const Rational& x, bool up) {
  const Integer scale("100000000");
  Rational y = x * Rational(scale);
  Integer q;
  if (up) mpz_cdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  else mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  const bool neg = q < 0;
  Integer a = abs(q);
  std::string digits = a.get_str();
  if (digits.size() < 9) digits.insert(0, 9 - digits.size(), '0');
  return std::string(neg ? "-" : "") + digits.substr(0, digits.size() - 8) + "." + digits.substr(digits.size() - 8);
}

int print_report(const Report& r, const std::string& format) {
  if (format == "json") std::cout << r.to_json().dump(2) << "\n";
  else std::cout << r.to_text();
  return exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hermitia: exact verification of Lie-algebra models of Hermitian and quaternionic structures"};
  app.require_subcommand(1);

  std::string report = "text";
  std::optional<std::string> only;
  std::optional<std::uint64_t> seed;
  bool no_timing = false;

  auto* check = app.add_subcommand("check", "Run the checks of a manifest");
  std::string manifest_path;
  check->add_option("manifest", manifest_path, "Manifest file, or - for standard input")->required();
  check->add_option("--report", report, "Report format")->check(CLI::IsMember({"json", "text"}));
  check->add_option("--only", only, "Run only the check with this id");
  check->add_option("--seed", seed, "Sampler seed (overrides HERMITIA_SEED)");
  check->add_flag("--no-timing", no_timing, "Omit timings from the report");

  auto* builtin_cmd = app.add_subcommand("builtin", "Run or emit a built-in manifest");
  std::string builtin_name;
  bool emit = false;
  builtin_cmd->add_option("name", builtin_name, "Built-in name")->required()->check(CLI::IsMember(builtin_names()));
  builtin_cmd->add_flag("--emit", emit, "Print the manifest instead of running it");
  builtin_cmd->add_option("--report", report, "Report format")->check(CLI::IsMember({"json", "text"}));
  builtin_cmd->add_option("--only", only, "Run only the check with this id");
  builtin_cmd->add_option("--seed", seed, "Sampler seed (overrides HERMITIA_SEED)");
  builtin_cmd->add_flag("--no-timing", no_timing, "Omit timings from the report");

  std::string gram_path, matrix_path;
  auto* classify_cmd = app.add_subcommand("classify", "Classify an isometry of a (1,n) lattice");
  classify_cmd->add_option("--gram", gram_path, "Gram matrix (JSON)")->required();
  classify_cmd->add_option("--matrix", matrix_path, "Isometry matrix (JSON)")->required();

  auto* power_cmd = app.add_subcommand("power", "Power iteration towards the expanding eigenvector");
  double tol = 1e-10;
  std::size_t max_iters = 200;
  std::string seed_vector_path;
  power_cmd->add_option("--gram", gram_path, "Gram matrix (JSON)")->required();
  power_cmd->add_option("--matrix", matrix_path, "Isometry matrix (JSON)")->required();
  power_cmd->add_option("--tol", tol, "Residual tolerance");
  power_cmd->add_option("--max-iters", max_iters, "Iteration limit");
  power_cmd->add_option("--seed-vector", seed_vector_path, "Starting vector (JSON array)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunOptions opt;
  opt.seed = seed ? *seed : seed_from_environment();
  opt.timing = !no_timing;
  opt.only = only;

  try {
    if (*check) {
      Manifest m = parse_manifest(read_input(manifest_path));
      return print_report(run_checks(m, opt), report);
    }
    if (*builtin_cmd) {
      Manifest m = builtin(builtin_name);
      if (emit) {
        std::cout << emit_manifest(m);
        return 0;
      }
      return print_report(run_checks(m, opt), report);
    }
    const RationalMatrix gram = parse_rational_matrix(std::string_view(read_input(gram_path)));
    const RationalMatrix mat = parse_rational_matrix(std::string_view(read_input(matrix_path)));
    if (*classify_cmd) {
      try {
        Classification c = classify(mat, gram);
        std::cout << to_string(c.type);
        if (c.type == IsometryType::hyperbolic)
          std::cout << " \xce\xbb\xe2\x88\x88(" << outward(c.lambda_lo, false) << ", " << outward(c.lambda_hi, true)
                    << ")";
        std::cout << "\n  characteristic polynomial: " << c.char_poly.to_string() << "\n  certificate: " << c.certificate
                  << "\n";
        if (!c.eigenvector_exact.empty()) {
          std::cout << "  eigenvector:";
          for (const auto& x : c.eigenvector_exact) std::cout << " " << x;
          std::cout << "\n";
        }
        return 0;
      } catch (const DomainError& e) {
        std::cerr << "hermitia: " << e.what() << "\n";
        return 1;
      }
    }
    if (*power_cmd) {
      Json sv = Json::parse(read_input(seed_vector_path));
      std::vector<double> s;
      if (!sv.is_array()) throw UsageError("seed vector must be a JSON array");
      for (const auto& x : sv) s.push_back(x.is_string() ? parse_decimal(x.get<std::string>()).get_d() : x.get<double>());
      try {
        PowerIteration p = power_iterate(mat, gram, s, tol, max_iters);
        std::cout << "lambda " << decimal(p.lambda) << "\neta";
        for (double x : p.eta) std::cout << " " << decimal(x);
        std::cout << "\nq(eta,eta) " << decimal(p.q_value) << "\niterations " << p.iterations << "\nresidual "
                  << decimal(p.residuals.empty() ? 0.0 : p.residuals.back()) << "\n";
        if (!p.converged) {
          std::cerr << "hermitia: " << p.message << "\n";
          return 1;
        }
        return 0;
      } catch (const DomainError& e) {
        std::cerr << "hermitia: " << e.what() << "\n";
        return 1;
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "hermitia: " << e.what() << "\n";
    return 2;
  } catch (const ManifestError& e) {
    std::cerr << "hermitia: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "hermitia: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "hermitia: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hermitia: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
