#include "hermitia/quaternion.hpp"

#include <map>

#include "hermitia/error.hpp"

namespace hermitia {

void StructureReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
  if (!ok) pass = false;
}

StructureReport check_hypercomplex(const ComplexStructure& i, const ComplexStructure& j, const ComplexStructure& k) {
  StructureReport r;
  const std::size_t n = i.algebra().dim();
  const ScalarMatrix minus_id = -ScalarMatrix::identity(n);
  for (const ComplexStructure* s : {&i, &j, &k})
    r.add(s->name() + "^2 = -Id", s->matrix() * s->matrix() == minus_id);
  r.add(i.name() + j.name() + " = " + k.name(), i.matrix() * j.matrix() == k.matrix());
  r.add(j.name() + i.name() + " = -" + k.name(), j.matrix() * i.matrix() == -k.matrix());
  for (const ComplexStructure* s : {&i, &j, &k}) {
    NijenhuisReport nr = s->nijenhuis();
    std::string detail;
    if (!nr.pass)
      detail = "N(e" + std::to_string(nr.witness->first + 1) + ", e" + std::to_string(nr.witness->second + 1) +
               ") != 0";
    r.add(s->name() + " integrable", nr.pass, detail);
  }
  return r;
}

StructureReport check_pseudo_hyperkahler(const ComplexStructure& i, const ComplexStructure& j,
                                         const ComplexStructure& k, const Form& omega_i, const Form& omega_j,
                                         const Form& omega_k) {
  StructureReport r;
  const LieAlgebra& g = i.algebra();
  const std::pair<const ComplexStructure*, const Form*> pairs[] = {{&i, &omega_i}, {&j, &omega_j}, {&k, &omega_k}};
  for (const auto& [s, w] : pairs) {
    Form dw = g.d(*w);
    r.add("d omega_" + s->name() + " = 0", dw.is_zero(), dw.is_zero() ? "" : g.to_string(dw));
    r.add("omega_" + s->name() + " real", w->conj() == *w);
    r.add("omega_" + s->name() + " of type (1,1) for " + s->name(), s->is_pure(*w, 1, 1));
  }
  Form omega = omega_j + omega_k.scaled(Scalar::imaginary_unit());
  r.add("omega_" + j.name() + " + i omega_" + k.name() + " of type (2,0) for " + i.name(), i.is_pure(omega, 2, 0));
  return r;
}

namespace {

// Dual (1,0) vectors v_a and their conjugates, from the coframe.
std::pair<std::vector<std::vector<Scalar>>, std::vector<std::vector<Scalar>>> dual_vectors(const ComplexStructure& s) {
  const unsigned n = s.algebra().dim();
  const unsigned m = s.complex_dim();
  ScalarMatrix p(n, n);
  for (unsigned a = 0; a < m; ++a) {
    auto row = one_form_coefficients(s.coframe()[a]);
    for (unsigned c = 0; c < n; ++c) {
      p(a, c) = row[c];
      p(m + a, c) = row[c].conj();
    }
  }
  ScalarMatrix q = *inverse(p);
  std::vector<std::vector<Scalar>> v, vb;
  for (unsigned a = 0; a < m; ++a) {
    v.push_back(q.col(a));
    vb.push_back(q.col(m + a));
  }
  return {v, vb};
}

}  // namespace

Scalar evaluate_2form(const Form& omega, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Scalar total(0L);
  for (const auto& t : omega.terms()) {
    auto idx = blade_indices(t.blade);
    if (idx.size() != 2) throw DomainError("expected a 2-form");
    Scalar v = x[idx[0]] * y[idx[1]] - x[idx[1]] * y[idx[0]];
    if (!v.is_zero()) total += t.coef * v;
  }
  return total;
}

ScalarMatrix quaternionic_twist(const ComplexStructure& i, const ComplexStructure& j) {
  const unsigned m = i.complex_dim();
  ScalarMatrix mt(m, m);
  for (unsigned b = 0; b < m; ++b) {
    Form img = i.to_coframe(j.act_on_1form(i.coframe()[b].conj()));
    for (const auto& t : img.terms()) {
      const unsigned c = static_cast<unsigned>(__builtin_ctzll(t.blade));
      if (c >= m) throw DomainError(j.name() + " does not map (0,1)-forms of " + i.name() + " to (1,0)-forms");
      mt(b, c) = t.coef;
    }
  }
  return mt;
}

ScalarMatrix quaternionic_hermitian_matrix(const ComplexStructure& i, const ComplexStructure& j, const Form& omega) {
  const unsigned m = i.complex_dim();
  auto [v, vb] = dual_vectors(i);
  ScalarMatrix h(m, m);
  for (unsigned b = 0; b < m; ++b) {
    std::vector<Scalar> jvb = j.matrix() * vb[b];
    for (unsigned a = 0; a < m; ++a) h(a, b) = evaluate_2form(omega, v[a], jvb);
  }
  return h;
}

HktReport check_hkt(const ComplexStructure& i, const ComplexStructure& j, const Form& omega,
                    const Valuation& valuation) {
  if (!i.is_pure(omega, 2, 0)) throw DomainError("Omega is not of type (2,0) for " + i.name());
  HktReport r;
  r.h = quaternionic_hermitian_matrix(i, j, omega);
  if (!is_hermitian(r.h)) throw DomainError("Omega is not " + j.name() + "-anti-invariant");
  r.del_omega = i.del(omega);
  r.del_zero = r.del_omega.is_zero();
  r.signature = hermitian_signature(r.h, valuation);
  r.positive = r.signature.positive == r.h.rows();
  r.holds = r.del_zero && r.positive;
  return r;
}

QuaternionicBalancedReport check_quaternionic_balanced(const ComplexStructure& i, const Form& omega) {
  const unsigned n = i.algebra().dim();
  if (n % 4 != 0) throw DomainError("quaternionic balanced needs real dimension divisible by 4");
  if (!i.is_pure(omega, 2, 0)) throw DomainError("Omega is not of type (2,0) for " + i.name());
  QuaternionicBalancedReport r;
  r.exponent = n / 4 - 1;
  r.residual = i.del(omega.pow(r.exponent));
  r.holds = r.residual.is_zero();
  return r;
}

DelExactReport del_exact(const ComplexStructure& s, const Form& alpha, const std::optional<Form>& claimed) {
  DelExactReport r;
  const LieAlgebra& g = s.algebra();
  if (alpha.is_zero()) {
    r.exact = true;
    r.primitive = Form(g.space());
    return r;
  }
  auto parts = s.bidegree(alpha);
  if (parts.size() != 1) throw DomainError("form is not of pure bidegree");
  const auto [p, q] = parts.begin()->first;
  if (p == 0) {
    r.detail = "bidegree (0," + std::to_string(q) + ") has no del-primitive";
    return r;
  }
  if (claimed) {
    Form res = s.del(*claimed) - alpha;
    r.exact = res.is_zero();
    if (r.exact) r.primitive = *claimed;
    else r.detail = "del(primitive) - alpha = " + g.to_string(res);
    return r;
  }
  const unsigned m = s.complex_dim();
  std::vector<Form> basis_images;
  std::vector<Form> basis;
  for (Blade b = 0; b < (Blade{1} << (2 * m)); ++b) {
    const Blade low = b & ((Blade{1} << m) - 1);
    if (blade_degree(low) != p - 1 || blade_degree(b) - blade_degree(low) != q) continue;
    Form x = s.from_coframe(Form::monomial(s.coframe_space(), b, Scalar(1L)));
    basis.push_back(x);
    basis_images.push_back(s.del(x));
  }
  std::map<Blade, std::size_t, bool (*)(Blade, Blade) noexcept> rows(&blade_less);
  for (const auto& f : basis_images)
    for (const auto& t : f.terms()) rows.emplace(t.blade, 0);
  for (const auto& t : alpha.terms()) rows.emplace(t.blade, 0);
  std::size_t idx = 0;
  for (auto& [b, k] : rows) k = idx++;
  ScalarMatrix a(rows.size(), basis.size());
  std::vector<Scalar> rhs(rows.size(), Scalar(0L));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& t : basis_images[c].terms()) a(rows.at(t.blade), c) = t.coef;
  for (const auto& t : alpha.terms()) rhs[rows.at(t.blade)] = t.coef;
  auto x = solve(a, rhs);
  if (!x) {
    r.detail = "del x = alpha has no solution";
    return r;
  }
  Form prim(g.space());
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (!(*x)[c].is_zero()) prim += basis[c].scaled((*x)[c]);
  r.exact = true;
  r.primitive = prim;
  return r;
}

ObstructionReport hkt_obstruction(const ComplexStructure& i, const ComplexStructure& j, const Form& alpha,
                                  const Form& beta) {
  const LieAlgebra& g = i.algebra();
  const unsigned m = i.complex_dim();
  // J conj(eta_b) as (1,0)-forms
  std::vector<Form> j_conj_eta;
  for (unsigned b = 0; b < m; ++b) j_conj_eta.push_back(j.act_on_1form(i.coframe()[b].conj()));

  // Real parameters of a Hermitian m x m matrix.
  struct Param {
    unsigned r, c;
    bool imaginary;
    std::string name;
  };
  std::vector<Param> params;
  auto label = [m](unsigned r, unsigned c) {
    if (m < 10) return std::to_string(r + 1) + std::to_string(c + 1);
    return std::to_string(r + 1) + "_" + std::to_string(c + 1);
  };
  for (unsigned r = 0; r < m; ++r) {
    params.push_back({r, r, false, "a" + label(r, r)});
    for (unsigned c = r + 1; c < m; ++c) {
      params.push_back({r, c, false, "x" + label(r, c)});
      params.push_back({r, c, true, "y" + label(r, c)});
    }
  }
  const Scalar iu = Scalar::imaginary_unit();
  auto basis_matrix = [&](const Param& prm) {
    ScalarMatrix e(m, m);
    if (prm.r == prm.c) {
      e(prm.r, prm.r) = Scalar(1L);
    } else if (!prm.imaginary) {
      e(prm.r, prm.c) = Scalar(1L);
      e(prm.c, prm.r) = Scalar(1L);
    } else {
      e(prm.r, prm.c) = iu;
      e(prm.c, prm.r) = -iu;
    }
    return e;
  };
  auto tilde = [&](const ScalarMatrix& a) {
    Form f(g.space());
    for (unsigned r = 0; r < m; ++r)
      for (unsigned c = 0; c < m; ++c)
        if (!a(r, c).is_zero()) f += wedge(i.coframe()[r], j_conj_eta[c]).scaled(a(r, c));
    return f;
  };

  // J-anti-invariance: the quaternionic Hermitian matrix of tilde Omega must be Hermitian.
  const std::size_t np = params.size();
  std::vector<std::vector<Scalar>> constraint_rows(2 * m * m, std::vector<Scalar>(np, Scalar(0L)));
  for (std::size_t k = 0; k < np; ++k) {
    ScalarMatrix h = quaternionic_hermitian_matrix(i, j, tilde(basis_matrix(params[k])));
    ScalarMatrix defect = h - h.adjoint();
    for (unsigned r = 0; r < m; ++r)
      for (unsigned c = 0; c < m; ++c) {
        // reversed column order keeps low-index parameters free
        constraint_rows[2 * (r * m + c)][np - 1 - k] = defect(r, c).real_part();
        constraint_rows[2 * (r * m + c) + 1][np - 1 - k] = defect(r, c).imag_part();
      }
  }
  ScalarMatrix ker = kernel(ScalarMatrix::from_rows(constraint_rows));

  ObstructionReport out;
  auto table = SymbolTable::extend(g.table());
  std::vector<Scalar> free_values;
  for (std::size_t f = 0; f < ker.cols(); ++f) {
    // in a kernel vector from the reduced echelon form the free column is the last nonzero entry
    std::size_t pivot = np;
    while (pivot-- > 0 && ker(pivot, f).is_zero()) {
    }
    const std::string& name = params[np - 1 - pivot].name;
    table->declare(name, SignHint::unknown);
    out.parameters.push_back(name);
  }
  Scalar::TablePtr ctable = table;
  for (const auto& name : out.parameters) free_values.push_back(Scalar::symbol(ctable, name));

  ScalarMatrix a(m, m);
  for (std::size_t k = 0; k < np; ++k) {
    Scalar t(0L);
    for (std::size_t f = 0; f < ker.cols(); ++f)
      if (!ker(np - 1 - k, f).is_zero()) t += ker(np - 1 - k, f) * free_values[f];
    if (!t.is_zero()) a += basis_matrix(params[k]) * t;
  }
  out.a = a;
  out.table = ctable;
  out.beta_closed = g.d(beta).is_zero();
  Form tilde_omega = tilde(a);
  Form top = wedge(wedge(tilde_omega, alpha), beta.conj());
  out.value = top_coefficient(top, wedge(beta, beta.conj()));
  if (out.value.is_zero() || !out.value.is_polynomial()) {
    out.factor = Scalar(1L);
  } else {
    out.factor = Scalar(out.value.numerator().leading().coef);
  }
  out.normalized = out.value / out.factor;
  return out;
}

}  // namespace hermitia
