#include "hermitia/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "hermitia/error.hpp"

namespace hermitia {

HermitianCandidate::HermitianCandidate(const ComplexStructure& j, Form omega) : j_(&j), omega_(std::move(omega)) {
  if (!(omega_.conj() == omega_)) throw DomainError("fundamental form is not real");
  if (!j.is_pure(omega_, 1, 1)) throw DomainError("fundamental form is not of bidegree (1,1)");
}

Form fundamental_form(const LieAlgebra& g, const ScalarMatrix& j, const ScalarMatrix& gram) {
  const ScalarMatrix w = j.transpose() * gram;  // w_ab = g(J e_a, e_b)
  std::vector<FormTerm> terms;
  for (unsigned a = 0; a < g.dim(); ++a)
    for (unsigned b = a + 1; b < g.dim(); ++b)
      if (!w(a, b).is_zero()) terms.push_back({(Blade{1} << a) | (Blade{1} << b), w(a, b)});
  return Form::from_terms(g.space(), std::move(terms));
}

PredicateReport is_kahler(const HermitianCandidate& c) {
  Form r = c.structure().algebra().d(c.omega());
  return {r.is_zero(), r};
}

PredicateReport is_balanced(const HermitianCandidate& c) {
  Form r = c.structure().algebra().d(c.omega().pow(c.complex_dim() - 1));
  return {r.is_zero(), r};
}

PredicateReport is_pluriclosed(const HermitianCandidate& c) {
  const ComplexStructure& j = c.structure();
  Form r = j.del(j.delbar(c.omega()));
  return {r.is_zero(), r};
}

PredicateReport is_astheno_kahler(const HermitianCandidate& c) {
  const ComplexStructure& j = c.structure();
  const unsigned m = c.complex_dim();
  if (m < 2) throw DomainError("astheno-Kahler needs complex dimension at least 2");
  Form r = j.del(j.delbar(c.omega().pow(m - 2)));
  return {r.is_zero(), r};
}

PredicateReport is_k_pluriclosed(const HermitianCandidate& c, unsigned k) {
  const unsigned m = c.complex_dim();
  if (k < 1 || k + 1 > m)
    throw DomainError("k = " + std::to_string(k) + " outside 1..m-1 (m = " + std::to_string(m) + ")");
  const ComplexStructure& j = c.structure();
  Form r = j.algebra().d(j.dc(c.omega().pow(k)));
  return {r.is_zero(), r};
}

LeeFormSolution lee_form(const HermitianCandidate& c) {
  const LieAlgebra& g = c.structure().algebra();
  const unsigned n = g.dim();
  if (c.complex_dim() < 2) throw DomainError("Lee form needs complex dimension at least 2");
  const Form domega = g.d(c.omega());
  std::vector<Form> cols;
  std::map<Blade, std::size_t, bool (*)(Blade, Blade) noexcept> row_of(&blade_less);
  for (unsigned r = 0; r < n; ++r) {
    cols.push_back(wedge(g.generator(r), c.omega()));
    for (const auto& t : cols.back().terms()) row_of.emplace(t.blade, 0);
  }
  for (const auto& t : domega.terms()) row_of.emplace(t.blade, 0);
  std::size_t idx = 0;
  for (auto& [b, k] : row_of) k = idx++;
  ScalarMatrix a(row_of.size(), n);
  std::vector<Scalar> rhs(row_of.size(), Scalar(0L));
  for (unsigned r = 0; r < n; ++r)
    for (const auto& t : cols[r].terms()) a(row_of.at(t.blade), r) = t.coef;
  for (const auto& t : domega.terms()) rhs[row_of.at(t.blade)] = t.coef;

  LeeFormSolution out;
  if (row_of.empty()) {
    out.theta = Form(g.space());
    out.unique = n == 0;
    out.d_theta_zero = true;
    return out;
  }
  auto x = solve(a, rhs);
  if (!x) return out;
  out.theta = linear_form(g.space(), *x);
  out.unique = rank(a) == n;
  out.d_theta_zero = g.d(*out.theta).is_zero();
  return out;
}

BismutTorsion bismut_torsion(const HermitianCandidate& c) {
  const ComplexStructure& j = c.structure();
  Form t = -j.dc(c.omega());
  Form dt = j.algebra().d(t);
  return {t, dt};
}

ScalarMatrix hermitian_gram(const ComplexStructure& j, const Form& omega) {
  const unsigned m = j.complex_dim();
  Form t = j.to_coframe(omega);
  ScalarMatrix h(m, m);
  const Scalar minus_i = -Scalar::imaginary_unit();
  for (const auto& term : t.terms()) {
    auto idx = blade_indices(term.blade);
    if (idx.size() != 2 || idx[0] >= m || idx[1] < m) throw DomainError("form is not of bidegree (1,1)");
    h(idx[0], idx[1] - m) = minus_i * term.coef;
  }
  return h;
}

namespace {

struct NumericTerm {
  std::vector<unsigned> idx;
  std::complex<double> coef;
};

std::complex<double> numeric_det(std::vector<std::complex<double>> m, std::size_t k) {
  std::complex<double> det = 1.0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::abs(m[r * k + c]) > std::abs(m[piv * k + c])) piv = r;
    if (std::abs(m[piv * k + c]) == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t x = 0; x < k; ++x) std::swap(m[piv * k + x], m[c * k + x]);
      det = -det;
    }
    det *= m[c * k + c];
    for (std::size_t r = c + 1; r < k; ++r) {
      std::complex<double> f = m[r * k + c] / m[c * k + c];
      for (std::size_t x = c; x < k; ++x) m[r * k + x] -= f * m[c * k + x];
    }
  }
  return det;
}

}  // namespace

PositivitySample positivity_falsify(const ComplexStructure& j, const Form& a, unsigned p,
                                    const Valuation& valuation, std::size_t samples, std::uint64_t seed,
                                    double tol) {
  const unsigned n = j.algebra().dim();
  if (!a.is_zero() && (!a.is_homogeneous() || a.degree() != 2 * p))
    throw DomainError("positivity test needs a form of degree 2p");
  std::vector<NumericTerm> terms;
  double scale = 0.0;
  for (const auto& t : a.terms()) {
    terms.push_back({blade_indices(t.blade), evaluate(t.coef, valuation)});
    scale = std::max(scale, std::abs(terms.back().coef));
  }
  std::vector<std::complex<double>> jm(static_cast<std::size_t>(n) * n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) jm[r * n + c] = evaluate(j.matrix()(r, c), valuation);

  std::complex<double> factor = 1.0;
  for (unsigned k = 0; k < p; ++k) factor *= std::complex<double>(0.0, -1.0);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  PositivitySample out;
  out.value = HUGE_VAL;
  const std::size_t k = 2 * p;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::vector<std::complex<double>>> vs;  // v1, conj v1, ..., vp, conj vp
    std::vector<std::vector<std::complex<double>>> tuple;
    for (unsigned l = 0; l < p; ++l) {
      std::vector<double> x(n);
      for (auto& xv : x) xv = unit(rng);
      std::vector<std::complex<double>> v(n);
      for (unsigned r = 0; r < n; ++r) {
        std::complex<double> jx = 0.0;
        for (unsigned c = 0; c < n; ++c) jx += jm[r * n + c] * x[c];
        v[r] = x[r] - std::complex<double>(0.0, 1.0) * jx;
      }
      std::vector<std::complex<double>> vb(n);
      for (unsigned r = 0; r < n; ++r) vb[r] = std::conj(v[r]);
      tuple.push_back(v);
      vs.push_back(std::move(v));
      vs.push_back(std::move(vb));
    }
    std::complex<double> total = 0.0;
    for (const auto& t : terms) {
      std::vector<std::complex<double>> m(k * k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) m[r * k + c] = vs[c][t.idx[r]];
      total += t.coef * numeric_det(std::move(m), k);
    }
    const double value = (factor * total).real();
    ++out.samples;
    if (value < out.value) {
      out.value = value;
      out.witness = tuple;
    }
    if (value < -tol * std::max(1.0, scale)) {
      out.violation = true;
      return out;
    }
  }
  if (samples == 0) out.value = 0.0;
  return out;
}

Form positive_product(const std::vector<Form>& factors) {
  if (factors.empty()) throw DomainError("empty decomposition term");
  Form out = Form::constant(factors[0].space(), Scalar(1L));
  const Scalar i = Scalar::imaginary_unit();
  for (const auto& xi : factors) out = wedge(out, wedge(xi, xi.conj()).scaled(i));
  return out;
}

CertificateResult strong_positivity_certificate(const ComplexStructure& j, const Form& a,
                                                const std::vector<StrongTerm>& decomposition,
                                                const Valuation& valuation) {
  CertificateResult out;
  Form sum(j.algebra().space());
  for (std::size_t k = 0; k < decomposition.size(); ++k) {
    const StrongTerm& t = decomposition[k];
    if (!t.coef.is_real()) {
      out.problem = "coefficient " + std::to_string(k + 1) + " is not real";
      return out;
    }
    if (evaluate(t.coef, valuation).real() < 0.0) {
      out.problem = "coefficient " + std::to_string(k + 1) + " is negative at the valuation";
      return out;
    }
    for (const auto& xi : t.factors)
      if (xi.is_zero() || !j.is_pure(xi, 1, 0) || xi.degree() != 1) {
        out.problem = "factor of term " + std::to_string(k + 1) + " is not a (1,0)-form";
        return out;
      }
    sum += positive_product(t.factors).scaled(t.coef);
  }
  out.residual = a - sum;
  out.holds = out.residual.is_zero();
  return out;
}

}  // namespace hermitia
