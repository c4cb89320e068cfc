#include "hermitia/form.hpp"

#include <algorithm>
#include <atomic>
#include <complex>
#include <unordered_map>

#include "hermitia/error.hpp"
#include "hermitia/expr_parser.hpp"

namespace hermitia {

Space Space::make(unsigned dim) {
  static std::atomic<std::uint64_t> next{1};
  if (dim > max_dimension) throw DomainError("dimension " + std::to_string(dim) + " exceeds 64");
  return Space{next++, dim};
}

bool blade_less(Blade a, Blade b) noexcept {
  if (a == b) return false;
  const Blade diff = a ^ b;
  const Blade x = diff & (~diff + 1);
  const Blade above = ~((x << 1) - 1);
  if (a & x) return (b & above) != 0;
  return (a & above) == 0;
}

int wedge_sign(Blade a, Blade b) noexcept {
  if (a & b) return 0;
  unsigned inversions = 0;
  for (Blade rest = b; rest; rest &= rest - 1) {
    const Blade y = rest & (~rest + 1);
    inversions += blade_degree(a & ~((y << 1) - 1));
  }
  return (inversions & 1U) ? -1 : 1;
}

std::vector<unsigned> blade_indices(Blade b) {
  std::vector<unsigned> out;
  for (; b; b &= b - 1) out.push_back(static_cast<unsigned>(__builtin_ctzll(b)));
  return out;
}

Blade blade_of(const std::vector<unsigned>& indices) {
  Blade b = 0;
  for (unsigned k : indices) {
    if (k >= max_dimension) throw DomainError("generator index out of range");
    b |= Blade{1} << k;
  }
  return b;
}

// ---------------------------------------------------------------------------

Form Form::constant(Space s, const Scalar& c) { return monomial(s, 0, c); }

Form Form::generator(Space s, unsigned index) {
  if (index >= s.dim) throw DomainError("generator index out of range");
  return monomial(s, Blade{1} << index, Scalar(1L));
}

Form Form::monomial(Space s, Blade b, const Scalar& c) {
  Form f(s);
  if (!c.is_zero()) f.terms_.push_back({b, c});
  return f;
}

Form Form::from_terms(Space s, std::vector<FormTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const FormTerm& x, const FormTerm& y) { return blade_less(x.blade, y.blade); });
  Form f(s);
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().blade == t.blade) {
      f.terms_.back().coef += t.coef;
      if (f.terms_.back().coef.is_zero()) f.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

Space Form::merge_spaces(const Form& a, const Form& b) {
  if (a.space_ == b.space_) return a.space_;
  if (a.space_.id == 0) return b.space_;
  if (b.space_.id == 0) return a.space_;
  throw DomainError("forms live over different presentations");
}

std::set<unsigned> Form::degrees() const {
  std::set<unsigned> out;
  for (const auto& t : terms_) out.insert(blade_degree(t.blade));
  return out;
}

bool Form::is_homogeneous() const { return degrees().size() <= 1; }

unsigned Form::degree() const {
  auto d = degrees();
  if (d.empty()) return 0;
  if (d.size() > 1) throw DomainError("form is not homogeneous");
  return *d.begin();
}

Form Form::component(unsigned degree) const {
  Form f(space_);
  for (const auto& t : terms_)
    if (blade_degree(t.blade) == degree) f.terms_.push_back(t);
  return f;
}

Scalar Form::coefficient(Blade b) const {
  for (const auto& t : terms_)
    if (t.blade == b) return t.coef;
  return Scalar(0L);
}

Form Form::conj() const {
  Form f = *this;
  for (auto& t : f.terms_) t.coef = t.coef.conj();
  return f;
}

Form Form::scaled(const Scalar& c) const {
  Form f(space_);
  if (c.is_zero()) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.blade, t.coef * c});
  return f;
}

Form Form::pow(unsigned k) const {
  Form result = constant(space_, Scalar(1L));
  for (unsigned j = 0; j < k; ++j) result = wedge(result, *this);
  return result;
}

Form& Form::operator+=(const Form& o) {
  space_ = merge_spaces(*this, o);
  if (o.terms_.empty()) return *this;
  std::vector<FormTerm> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && blade_less(a->blade, b->blade))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || blade_less(b->blade, a->blade)) {
      out.push_back(*b++);
    } else {
      Scalar c = a->coef + b->coef;
      if (!c.is_zero()) out.push_back({a->blade, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

bool operator==(const Form& a, const Form& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty()) Form::merge_spaces(a, b);
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].blade != b.terms_[k].blade || !(a.terms_[k].coef == b.terms_[k].coef)) return false;
  return true;
}

Form wedge(const Form& a, const Form& b) {
  Space s = Form::merge_spaces(a, b);
  std::vector<FormTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      int sign = wedge_sign(x.blade, y.blade);
      if (sign == 0) continue;
      Scalar c = x.coef * y.coef;
      if (sign < 0) c = -c;
      out.push_back({x.blade | y.blade, std::move(c)});
    }
  return Form::from_terms(s, std::move(out));
}

Form wedge_all(const std::vector<Form>& forms, Space s) {
  Form result = Form::constant(s, Scalar(1L));
  for (const auto& f : forms) result = wedge(result, f);
  return result;
}

Form linear_form(Space s, const std::vector<Scalar>& coeffs) {
  std::vector<FormTerm> terms;
  for (unsigned k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) terms.push_back({Blade{1} << k, coeffs[k]});
  return Form::from_terms(s, std::move(terms));
}

Form apply_antiderivation(const Form& a, const std::vector<Form>& images) {
  std::vector<FormTerm> out;
  for (const auto& t : a.terms()) {
    unsigned pos = 0;
    for (Blade rest = t.blade; rest; rest &= rest - 1, ++pos) {
      const unsigned k = static_cast<unsigned>(__builtin_ctzll(rest));
      const Form& img = images.at(k);
      if (img.is_zero()) continue;
      const Blade others = t.blade & ~(Blade{1} << k);
      for (const auto& y : img.terms()) {
        const int sign = wedge_sign(y.blade, others);
        if (sign == 0) continue;
        Scalar c = y.coef * t.coef;
        if ((sign < 0) != (pos % 2 == 1)) c = -c;
        out.push_back({y.blade | others, std::move(c)});
      }
    }
  }
  return Form::from_terms(a.space(), std::move(out));
}

Form substitute(const Form& a, const std::vector<Form>& images, Space target) {
  BladeImages cache;
  return substitute(a, images, target, cache);
}

Form substitute(const Form& a, const std::vector<Form>& images, Space target, BladeImages& cache) {
  // built from the lowest generator up
  const auto image = [&](auto&& self, Blade b) -> const Form& {
    if (auto it = cache.find(b); it != cache.end()) return it->second;
    const Blade rest = b & (b - 1);
    Form f = rest == 0 ? images.at(static_cast<unsigned>(__builtin_ctzll(b)))
                       : wedge(images.at(static_cast<unsigned>(__builtin_ctzll(b))), self(self, rest));
    return cache.emplace(b, std::move(f)).first->second;
  };
  std::vector<FormTerm> out;
  for (const auto& t : a.terms()) {
    if (t.blade == 0) {
      out.push_back(t);
      continue;
    }
    for (const auto& y : image(image, t.blade).terms()) out.push_back({y.blade, y.coef * t.coef});
  }
  return Form::from_terms(target, std::move(out));
}

std::string Form::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool negative = false;
    if (c.numerator().terms().size() == 1 && sgn(c.numerator().leading().coef) < 0) {
      negative = true;
      c = -c;
    }
    std::string blade;
    for (unsigned k : blade_indices(t.blade)) {
      if (!blade.empty()) blade += '^';
      blade += k < names.size() ? names[k] : "e" + std::to_string(k + 1);
    }
    std::string cs = c.to_string();
    if (c.numerator().terms().size() > 1 && c.is_polynomial()) cs = "(" + cs + ")";
    std::string term;
    if (blade.empty()) term = cs;
    else if (c.is_one()) term = blade;
    else term = cs + "*" + blade;
    if (first) out += negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

std::complex<double> Form::evaluate(const std::vector<std::vector<std::complex<double>>>& vectors,
                                    const Valuation& valuation) const {
  const std::size_t k = vectors.size();
  std::complex<double> total = 0.0;
  for (const auto& t : terms_) {
    if (blade_degree(t.blade) != k) continue;
    auto idx = blade_indices(t.blade);
    // determinant of m[j][l] = vectors[l][idx[j]] by elimination
    std::vector<std::complex<double>> m(k * k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) m[j * k + l] = vectors[l].at(idx[j]);
    std::complex<double> det = 1.0;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < k; ++r)
        if (std::abs(m[r * k + c]) > std::abs(m[piv * k + c])) piv = r;
      if (m[piv * k + c] == 0.0) {
        det = 0.0;
        break;
      }
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
    total += hermitia::evaluate(t.coef, valuation) * det;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct FormSemantics {
  using Value = Form;
  static constexpr bool chained_caret = true;
  const FormContext& ctx;

  Value constant(const Scalar& s) const { return Form::constant(ctx.space, s); }

  Value rational(const Rational& q) { return constant(Scalar(q)); }
  Value identifier(const std::string& name, std::size_t offset) {
    if (ctx.basis)
      for (unsigned k = 0; k < ctx.basis->size(); ++k)
        if ((*ctx.basis)[k] == name) return Form::generator(ctx.space, k);
    if (name == "i") return constant(Scalar::imaginary_unit());
    if (ctx.table)
      if (auto id = ctx.table->find(name)) return constant(Scalar::symbol(ctx.table, *id));
    if (ctx.named)
      if (const Form* f = ctx.named(name)) return *f;
    throw ParseError("undeclared identifier '" + name + "'", offset);
  }
  Value call(const std::string& name, std::vector<Value> args, std::size_t offset) {
    if (args.size() != 1) throw ParseError("function '" + name + "' takes one argument", offset);
    if (name == "conj") return args[0].conj();
    if (name == "d") {
      if (!ctx.differential) throw ParseError("d(...) is not available here", offset);
      return ctx.differential(args[0]);
    }
    throw ParseError("unknown function '" + name + "'", offset);
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b, std::size_t) { return wedge(a, b); }
  Value div(Value a, Value b, std::size_t offset) {
    if (b.is_zero()) throw DivisionByZero("division by zero at byte " + std::to_string(offset));
    if (b.terms().size() != 1 || b.terms()[0].blade != 0)
      throw ParseError("division by a form of positive degree", offset);
    return a.scaled(b.terms()[0].coef.inverse());
  }
  Value neg(Value a) { return -a; }
  Value power(Value a, unsigned n, std::size_t) { return a.pow(n); }
  Value caret(Value a, Value b, std::size_t) { return wedge(a, b); }
};

}  // namespace

Form parse_form(std::string_view text, const FormContext& ctx) {
  FormSemantics sem{ctx};
  ExprParser<FormSemantics> parser(text, sem);
  return parser.parse();
}

}  // namespace hermitia
