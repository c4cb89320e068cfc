#include "hermitia/lie_algebra.hpp"

#include <algorithm>

#include "hermitia/error.hpp"

namespace hermitia {

namespace {

std::vector<std::string> default_names(unsigned n) {
  std::vector<std::string> out;
  for (unsigned k = 0; k < n; ++k) out.push_back("e" + std::to_string(k + 1));
  return out;
}

}  // namespace

Presentation Presentation::make(std::string name, std::vector<std::string> basis, Scalar::TablePtr table) {
  Presentation p;
  p.name = std::move(name);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (basis[a] == basis[b]) throw DomainError("duplicate basis name '" + basis[a] + "'");
  p.space = Space::make(static_cast<unsigned>(basis.size()));
  p.basis = std::move(basis);
  p.table = table ? std::move(table) : SymbolTable::builtin();
  p.differential.assign(p.space.dim, Form(p.space));
  return p;
}

Presentation Presentation::abelian(unsigned dim) {
  return make("abelian" + std::to_string(dim), default_names(dim));
}

void Presentation::set_differential(unsigned k, const Form& image) {
  if (k >= dim()) throw DomainError("generator index out of range");
  if (!image.is_zero() && !(image.space() == space)) throw DomainError("differential image over another space");
  if (!image.is_zero() && (!image.is_homogeneous() || image.degree() != 2))
    throw DomainError("d" + basis[k] + " must be a 2-form");
  Form f(space);
  f += image;
  differential[k] = std::move(f);
}

FormContext Presentation::context() const {
  FormContext ctx;
  ctx.space = space;
  ctx.basis = &basis;
  ctx.table = table;
  ctx.named = [this](const std::string& n) { return find_form(n); };
  return ctx;
}

Form Presentation::parse(std::string_view text) const {
  Form f(space);
  f += parse_form(text, context());
  return f;
}

const Form* Presentation::find_form(const std::string& name) const {
  for (const auto& [n, f] : forms)
    if (n == name) return &f;
  return nullptr;
}

Form raw_d(const Presentation& p, const Form& a) { return apply_antiderivation(a, p.differential); }

JacobiReport jacobi_check(const Presentation& p) {
  JacobiReport r;
  for (unsigned k = 0; k < p.dim(); ++k) {
    r.dd.push_back(raw_d(p, p.differential[k]));
    if (!r.dd.back().is_zero() && r.pass) {
      r.pass = false;
      r.witness = k;
    }
  }
  return r;
}

LieAlgebra::LieAlgebra(Presentation p) : p_(std::move(p)) {
  const unsigned n = p_.dim();
  brackets_.assign(static_cast<std::size_t>(n) * n, std::vector<Scalar>(n, Scalar(0L)));
  for (unsigned k = 0; k < n; ++k)
    for (const auto& t : p_.differential[k].terms()) {
      auto idx = blade_indices(t.blade);
      const unsigned a = idx[0], b = idx[1];
      brackets_[static_cast<std::size_t>(a) * n + b][k] = -t.coef;
      brackets_[static_cast<std::size_t>(b) * n + a][k] = t.coef;
    }
}

LieAlgebra LieAlgebra::verify(Presentation p) {
  JacobiReport r = jacobi_check(p);
  if (!r.pass) {
    const unsigned k = *r.witness;
    throw DomainError("Jacobi identity fails: d(d" + p.basis[k] + ") = " + r.dd[k].to_string(p.basis));
  }
  return LieAlgebra(std::move(p));
}

Form LieAlgebra::parse(std::string_view text) const {
  FormContext ctx = p_.context();
  ctx.differential = [this](const Form& f) { return d(f); };
  Form f(p_.space);
  f += parse_form(text, ctx);
  return f;
}

Scalar LieAlgebra::structure_constant(unsigned a, unsigned b, unsigned k) const {
  return brackets_.at(static_cast<std::size_t>(a) * dim() + b).at(k);
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  const unsigned n = dim();
  std::vector<Scalar> out(n, Scalar(0L));
  for (unsigned a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (unsigned b = 0; b < n; ++b) {
      if (a == b || y[b].is_zero()) continue;
      const auto& br = brackets_[static_cast<std::size_t>(a) * n + b];
      Scalar c = x[a] * y[b];
      for (unsigned k = 0; k < n; ++k)
        if (!br[k].is_zero()) out[k] += c * br[k];
    }
  }
  return out;
}

Scalar top_coefficient(const Form& a, const Form& vol) {
  if (vol.terms().size() != 1) throw DomainError("volume form must be a single nonzero term");
  const FormTerm& v = vol.terms()[0];
  if (blade_degree(v.blade) != vol.space().dim || vol.space().dim == 0)
    throw DomainError("volume form is not of top degree");
  if (!a.is_zero() && !(a.space() == vol.space())) throw DomainError("forms live over different presentations");
  return a.coefficient(v.blade) / v.coef;
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  const Presentation& p1 = g1.presentation();
  const Presentation& p2 = g2.presentation();
  Scalar::TablePtr table;
  if (p1.table->descends_from(p2.table.get())) table = p1.table;
  else if (p2.table->descends_from(p1.table.get())) table = p2.table;
  else throw DomainError("summands use different symbol tables");

  const unsigned n1 = p1.dim(), n2 = p2.dim();
  std::vector<std::string> names;
  bool clash = false;
  for (const auto& x : p2.basis)
    if (std::find(p1.basis.begin(), p1.basis.end(), x) != p1.basis.end()) clash = true;
  if (!clash) {
    names = p1.basis;
    names.insert(names.end(), p2.basis.begin(), p2.basis.end());
  } else if (p1.basis == default_names(n1) && p2.basis == default_names(n2)) {
    names = default_names(n1 + n2);
  } else {
    names = p1.basis;
    for (const auto& x : p2.basis) {
      auto taken = [&](const std::string& c) {
        if (std::find(names.begin(), names.end(), c) != names.end()) return true;
        return c != x && std::find(p2.basis.begin(), p2.basis.end(), c) != p2.basis.end();
      };
      std::string candidate = x;
      for (int suffix = 2; taken(candidate); ++suffix) candidate = x + "_" + std::to_string(suffix);
      names.push_back(candidate);
    }
  }

  Presentation p = Presentation::make(p1.name + "+" + p2.name, names, table);
  std::vector<Form> emb1, emb2;
  for (unsigned k = 0; k < n1; ++k) emb1.push_back(p.generator(k));
  for (unsigned k = 0; k < n2; ++k) emb2.push_back(p.generator(n1 + k));
  for (unsigned k = 0; k < n1; ++k) p.set_differential(k, substitute(p1.differential[k], emb1, p.space));
  for (unsigned k = 0; k < n2; ++k) p.set_differential(n1 + k, substitute(p2.differential[k], emb2, p.space));

  auto block = [&](const std::map<std::string, ScalarMatrix>& m1, const std::map<std::string, ScalarMatrix>& m2) {
    std::map<std::string, ScalarMatrix> out;
    auto place = [&](const std::string& name, const ScalarMatrix& m, unsigned off) {
      auto [it, fresh] = out.try_emplace(name, n1 + n2, n1 + n2);
      (void)fresh;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) it->second(off + r, off + c) = m(r, c);
    };
    for (const auto& [name, m] : m1) place(name, m, 0);
    for (const auto& [name, m] : m2) place(name, m, n1);
    return out;
  };
  p.endomorphisms = block(p1.endomorphisms, p2.endomorphisms);
  p.bilinears = block(p1.bilinears, p2.bilinears);

  for (const auto& [name, f] : p1.forms) p.forms.emplace_back(name, substitute(f, emb1, p.space));
  for (const auto& [name, f] : p2.forms) {
    Form image = substitute(f, emb2, p.space);
    auto it = std::find_if(p.forms.begin(), p.forms.end(), [&](const auto& e) { return e.first == name; });
    if (it != p.forms.end()) it->second += image;
    else p.forms.emplace_back(name, image);
  }
  return LieAlgebra::verify(std::move(p));
}

}  // namespace hermitia
