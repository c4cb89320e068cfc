#include "hermitia/complex_structure.hpp"

#include "hermitia/error.hpp"

namespace hermitia {

namespace {

Scalar i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Scalar(1L);
    case 1: return Scalar::imaginary_unit();
    case 2: return Scalar(-1L);
    default: return -Scalar::imaginary_unit();
  }
}

}  // namespace

std::vector<Scalar> one_form_coefficients(const Form& alpha) {
  std::vector<Scalar> c(alpha.space().dim, Scalar(0L));
  for (const auto& t : alpha.terms()) {
    if (blade_degree(t.blade) != 1) throw DomainError("expected a 1-form");
    c[static_cast<unsigned>(__builtin_ctzll(t.blade))] = t.coef;
  }
  return c;
}

std::vector<Scalar> type_10_vector(const ScalarMatrix& j, const std::vector<Scalar>& x) {
  std::vector<Scalar> jx = j * x;
  std::vector<Scalar> v(x.size(), Scalar(0L));
  const Scalar i = Scalar::imaginary_unit();
  for (std::size_t k = 0; k < x.size(); ++k) v[k] = x[k] - i * jx[k];
  return v;
}

ComplexStructure::ComplexStructure(const LieAlgebra& g, std::string name, ScalarMatrix j)
    : g_(&g), name_(std::move(name)), j_(std::move(j)) {
  const unsigned n = g.dim();
  if (j_.rows() != n || j_.cols() != n) throw DomainError("structure '" + name_ + "' has the wrong size");
  if (n % 2 != 0) throw DomainError("almost-complex structure on an odd-dimensional algebra");
  if (!(j_ * j_ == -ScalarMatrix::identity(n))) throw DomainError("structure '" + name_ + "' does not square to -Id");
  m_ = n / 2;

  const Scalar i = Scalar::imaginary_unit();
  std::vector<std::vector<Scalar>> rows;  // chosen eta rows followed by conjugates for the rank test
  for (unsigned r = 0; r < n && sigma_.size() < m_; ++r) {
    std::vector<Scalar> cand(n, Scalar(0L));
    for (unsigned c = 0; c < n; ++c) cand[c] = -i * j_(r, c);
    cand[r] += Scalar(1L);
    std::vector<std::vector<Scalar>> trial = rows;
    trial.push_back(cand);
    std::vector<Scalar> cc;
    for (const auto& s : cand) cc.push_back(s.conj());
    trial.push_back(cc);
    if (rank(ScalarMatrix::from_rows(trial)) == trial.size()) {
      rows = std::move(trial);
      sigma_.push_back(r);
    }
  }
  if (sigma_.size() != m_) throw DomainError("could not select a (1,0)-coframe for '" + name_ + "'");

  ScalarMatrix p(n, n);
  for (unsigned a = 0; a < m_; ++a)
    for (unsigned c = 0; c < n; ++c) {
      p(a, c) = rows[2 * a][c];
      p(m_ + a, c) = rows[2 * a + 1][c];
    }
  auto q = inverse(p);
  if (!q) throw DomainError("coframe of '" + name_ + "' is degenerate");

  theta_ = Space::make(n);
  for (unsigned a = 0; a < m_; ++a) eta_.push_back(linear_form(g.space(), p.row(a)));
  for (unsigned s = 0; s < n; ++s) from_theta_.push_back(linear_form(g.space(), p.row(s)));
  for (unsigned r = 0; r < n; ++r) to_theta_.push_back(linear_form(theta_, q->row(r)));
  for (unsigned s = 0; s < n; ++s) d_theta_.push_back(to_coframe(g.d(from_theta_[s])));
}

NijenhuisReport ComplexStructure::nijenhuis() const {
  NijenhuisReport rep;
  const unsigned n = g_->dim();
  const LieAlgebra& g = *g_;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) {
      std::vector<Scalar> x(n, Scalar(0L)), y(n, Scalar(0L));
      x[a] = Scalar(1L);
      y[b] = Scalar(1L);
      std::vector<Scalar> jx = j_.col(a), jy = j_.col(b);
      std::vector<Scalar> t1 = g.bracket(x, y);
      std::vector<Scalar> t2 = j_ * g.bracket(jx, y);
      std::vector<Scalar> t3 = j_ * g.bracket(x, jy);
      std::vector<Scalar> t4 = g.bracket(jx, jy);
      std::vector<Scalar> nv(n, Scalar(0L));
      bool zero = true;
      for (unsigned k = 0; k < n; ++k) {
        nv[k] = t1[k] + t2[k] + t3[k] - t4[k];
        if (!nv[k].is_zero()) zero = false;
      }
      if (!zero) {
        rep.pass = false;
        rep.witness = {a, b};
        rep.value = std::move(nv);
        return rep;
      }
    }
  return rep;
}

Form ComplexStructure::act_on_1form(const Form& alpha) const {
  std::vector<Scalar> c = one_form_coefficients(alpha);
  const unsigned n = g_->dim();
  std::vector<Scalar> out(n, Scalar(0L));
  for (unsigned col = 0; col < n; ++col)
    for (unsigned r = 0; r < n; ++r)
      if (!c[r].is_zero() && !j_(r, col).is_zero()) out[col] -= c[r] * j_(r, col);
  return linear_form(g_->space(), out);
}

Form ComplexStructure::to_coframe(const Form& a) const { return substitute(a, to_theta_, theta_, to_cache_); }
Form ComplexStructure::from_coframe(const Form& a) const { return substitute(a, from_theta_, g_->space(), from_cache_); }

namespace {

Bidegree theta_bidegree(Blade b, unsigned m) {
  const Blade low = (m >= 64) ? ~Blade{0} : ((Blade{1} << m) - 1);
  return {blade_degree(b & low), blade_degree(b & ~low)};
}

std::map<Bidegree, Form> split(const Form& t, unsigned m) {
  std::map<Bidegree, std::vector<FormTerm>> parts;
  for (const auto& term : t.terms()) parts[theta_bidegree(term.blade, m)].push_back(term);
  std::map<Bidegree, Form> out;
  for (auto& [pq, terms] : parts) out.emplace(pq, Form::from_terms(t.space(), std::move(terms)));
  return out;
}

}  // namespace

std::map<Bidegree, Form> ComplexStructure::bidegree(const Form& a) const {
  std::map<Bidegree, Form> out;
  for (auto& [pq, f] : split(to_coframe(a), m_)) out.emplace(pq, from_coframe(f));
  return out;
}

Form ComplexStructure::component(const Form& a, unsigned p, unsigned q) const {
  auto parts = split(to_coframe(a), m_);
  auto it = parts.find({p, q});
  return it == parts.end() ? Form(g_->space()) : from_coframe(it->second);
}

bool ComplexStructure::is_pure(const Form& a, unsigned p, unsigned q) const {
  auto parts = split(to_coframe(a), m_);
  return parts.empty() || (parts.size() == 1 && parts.begin()->first == Bidegree{p, q});
}

Form ComplexStructure::act(const Form& a) const {
  Form out(g_->space());
  for (auto& [pq, f] : split(to_coframe(a), m_))
    out += from_coframe(f.scaled(i_power(static_cast<int>(pq.first) - static_cast<int>(pq.second))));
  return out;
}

std::pair<Form, Form> ComplexStructure::del_delbar(const Form& a) const {
  Form del_t(theta_), delbar_t(theta_);
  for (auto& [pq, f] : split(to_coframe(a), m_)) {
    Form df = apply_antiderivation(f, d_theta_);
    for (auto& [rs, g] : split(df, m_)) {
      if (rs == Bidegree{pq.first + 1, pq.second}) del_t += g;
      else if (rs == Bidegree{pq.first, pq.second + 1}) delbar_t += g;
      else
        throw DomainError("d maps a (" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                          ")-form to bidegree (" + std::to_string(rs.first) + "," + std::to_string(rs.second) +
                          "): '" + name_ + "' is not integrable");
    }
  }
  return {from_coframe(del_t), from_coframe(delbar_t)};
}

Form ComplexStructure::del(const Form& a) const { return del_delbar(a).first; }
Form ComplexStructure::delbar(const Form& a) const { return del_delbar(a).second; }

Form ComplexStructure::dc(const Form& a) const {
  auto [del_a, delbar_a] = del_delbar(a);
  return (delbar_a - del_a).scaled(Scalar::imaginary_unit());
}

}  // namespace hermitia
