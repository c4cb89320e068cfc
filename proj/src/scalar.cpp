#include "hermitia/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "hermitia/error.hpp"
#include "hermitia/expr_parser.hpp"

namespace hermitia {

std::string to_string(SignHint h) {
  switch (h) {
    case SignHint::positive: return "positive";
    case SignHint::negative: return "negative";
    case SignHint::unknown: break;
  }
  return "unknown";
}

SignHint parse_sign_hint(std::string_view text) {
  if (text == "positive") return SignHint::positive;
  if (text == "negative") return SignHint::negative;
  if (text == "unknown") return SignHint::unknown;
  throw ParseError("invalid sign hint '" + std::string(text) + "'", 0);
}

// ---------------------------------------------------------------------------
// SymbolTable

SymbolTable::SymbolTable() {
  symbols_.push_back({"i", 2, Polynomial(Rational(-1)), SignHint::unknown});
}

const std::shared_ptr<const SymbolTable>& SymbolTable::builtin() {
  static const std::shared_ptr<const SymbolTable> table = std::make_shared<const SymbolTable>();
  return table;
}

void SymbolTable::check_new_name(const std::string& name) const {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    throw DomainError("invalid symbol name '" + name + "'");
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw DomainError("invalid symbol name '" + name + "'");
  if (find(name)) throw DomainError("symbol '" + name + "' declared twice");
}

std::shared_ptr<SymbolTable> SymbolTable::extend(const std::shared_ptr<const SymbolTable>& base) {
  auto t = std::make_shared<SymbolTable>(*base);
  t->parent_ = base;
  return t;
}

bool SymbolTable::descends_from(const SymbolTable* other) const noexcept {
  if (other == builtin().get() || other == this) return true;
  for (const SymbolTable* t = parent_.get(); t; t = t->parent_.get())
    if (t == other) return true;
  return false;
}

SymbolId SymbolTable::declare(const std::string& name, SignHint sign) {
  check_new_name(name);
  symbols_.push_back({name, 0, {}, sign});
  return static_cast<SymbolId>(symbols_.size() - 1);
}

SymbolId SymbolTable::declare_algebraic(const std::string& name, std::uint32_t power,
                                        const Polynomial& rhs, SignHint sign) {
  check_new_name(name);
  if (power < 2) throw DomainError("relation exponent for '" + name + "' must be at least 2");
  for (SymbolId id : rhs.symbols()) {
    if (id >= symbols_.size()) throw DomainError("relation for '" + name + "' uses an unknown symbol");
    if (id == imaginary)
      throw DomainError("relation for '" + name + "' may not involve i (symbols are real)");
  }
  symbols_.push_back({name, power, reduce(rhs), sign});
  return static_cast<SymbolId>(symbols_.size() - 1);
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
  for (std::size_t k = 0; k < symbols_.size(); ++k)
    if (symbols_[k].name == name) return static_cast<SymbolId>(k);
  return std::nullopt;
}

Polynomial SymbolTable::reduce(const Polynomial& p) const {
  Polynomial cur = p;
  for (std::size_t k = symbols_.size(); k-- > 0;) {
    const Symbol& s = symbols_[k];
    const auto id = static_cast<SymbolId>(k);
    if (!s.algebraic() || cur.degree_in(id) < s.power) continue;
    std::vector<Polynomial> rhs_powers{Polynomial(Rational(1))};
    std::vector<PolyTerm> kept;
    Polynomial rewritten;
    for (const auto& t : cur.terms()) {
      std::uint32_t e = t.mono.exponent(id);
      if (e < s.power) {
        kept.push_back(t);
        continue;
      }
      std::uint32_t q = e / s.power;
      while (rhs_powers.size() <= q) rhs_powers.push_back(rhs_powers.back() * s.rhs);
      rewritten += Polynomial::monomial(t.mono.with_exponent(id, e % s.power), t.coef) * rhs_powers[q];
    }
    cur = Polynomial::from_terms(std::move(kept)) + rewritten;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

bool is_unit_polynomial(const Polynomial& p) {
  return p.is_constant() && !p.is_zero() && p.leading().coef == 1;
}

// p = re + im*i with no other symbols
bool gaussian_parts(const Polynomial& p, Rational& re, Rational& im) {
  re = 0;
  im = 0;
  for (const auto& t : p.terms()) {
    const auto& f = t.mono.factors();
    if (f.empty()) re = t.coef;
    else if (f.size() == 1 && f[0].first == SymbolTable::imaginary && f[0].second == 1) im = t.coef;
    else return false;
  }
  return true;
}

Polynomial gaussian(const Rational& re, const Rational& im) {
  std::vector<PolyTerm> terms;
  if (sgn(re) != 0) terms.push_back({Monomial(), re});
  if (sgn(im) != 0) terms.push_back({Monomial::variable(SymbolTable::imaginary), im});
  return Polynomial::from_terms(std::move(terms));
}

Polynomial laplace_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(Rational(1));
  if (n == 1) return m[0][0];
  Polynomial det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * laplace_det(minor);
    if (j % 2 == 0) det += term; else det -= term;
  }
  return det;
}

// For den in R[s]/(s^k - rhs) returns (cofactor, norm) with den*cofactor = norm
// and norm free of s.
std::pair<Polynomial, Polynomial> norm_cofactor(const Polynomial& den, SymbolId s,
                                                const SymbolTable& table) {
  const std::uint32_t k = table[s].power;
  std::vector<std::vector<Polynomial>> mult(k, std::vector<Polynomial>(k));
  for (std::uint32_t j = 0; j < k; ++j) {
    Polynomial col = table.reduce(den * Polynomial::variable(s, j));
    auto coeffs = col.coefficients_in(s);
    for (std::uint32_t r = 0; r < k && r < coeffs.size(); ++r) mult[r][j] = coeffs[r];
  }
  Polynomial cofactor;
  for (std::uint32_t j = 0; j < k; ++j) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::uint32_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::uint32_t c = 0; c < k; ++c)
        if (c != j) row.push_back(mult[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial adj = table.reduce(laplace_det(minor));
    if (j % 2 == 1) adj = -adj;
    cofactor += adj * Polynomial::variable(s, j);
  }
  cofactor = table.reduce(cofactor);
  Polynomial norm = table.reduce(den * cofactor);
  return {cofactor, norm};
}

int compare_polys(const Polynomial& a, const Polynomial& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
    int c = Monomial::compare(x[k].mono, y[k].mono);
    if (c != 0) return c;
    int d = cmp(x[k].coef, y[k].coef);
    if (d != 0) return d < 0 ? -1 : 1;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

}  // namespace

Scalar::Scalar() : table_(SymbolTable::builtin()), den_(Rational(1)) {}
Scalar::Scalar(long value) : table_(SymbolTable::builtin()), num_(Rational(value)), den_(Rational(1)) {}
Scalar::Scalar(const Rational& value) : table_(SymbolTable::builtin()), num_(value), den_(Rational(1)) {}

Scalar Scalar::imaginary_unit() {
  Scalar s;
  s.num_ = Polynomial::variable(SymbolTable::imaginary);
  return s;
}

Scalar Scalar::symbol(const TablePtr& table, SymbolId id) {
  if (!table || id >= table->size()) throw DomainError("unknown symbol id");
  return from_polynomial(table, Polynomial::variable(id));
}

Scalar Scalar::symbol(const TablePtr& table, std::string_view name) {
  auto id = table->find(name);
  if (!id) throw DomainError("undeclared symbol '" + std::string(name) + "'");
  return symbol(table, *id);
}

Scalar Scalar::from_polynomial(const TablePtr& table, const Polynomial& p) {
  Scalar s;
  s.table_ = table ? table : SymbolTable::builtin();
  s.num_ = s.table_->reduce(p);
  return s;
}

Scalar Scalar::fraction(const TablePtr& table, const Polynomial& num, const Polynomial& den) {
  return canonical(table ? table : SymbolTable::builtin(), num, den);
}

Scalar Scalar::canonical(const TablePtr& table, Polynomial num, Polynomial den) {
  const SymbolTable& t = *table;
  num = t.reduce(num);
  den = t.reduce(den);
  if (den.is_zero()) throw DivisionByZero("division by zero");
  Scalar out;
  out.table_ = table;
  if (num.is_zero()) return out;

  for (std::size_t k = t.size(); k-- > 0;) {
    const auto id = static_cast<SymbolId>(k);
    if (!t[id].algebraic() || !den.contains(id)) continue;
    auto [cofactor, norm] = norm_cofactor(den, id, t);
    if (norm.is_zero()) throw DivisionByZero("division by a zero divisor of the coefficient ring");
    num = t.reduce(num * cofactor);
    den = std::move(norm);
  }

  if (den.is_constant()) {
    num *= Rational(1 / den.constant_value());
    out.num_ = std::move(num);
    return out;
  }

  // Cancel the gcd of den with the coefficients of num over the algebraic part.
  std::vector<std::pair<Monomial, std::vector<PolyTerm>>> groups;
  for (const auto& term : num.terms()) {
    Monomial alg;
    Monomial free;
    for (const auto& [id, e] : term.mono.factors())
      (t[id].algebraic() ? alg : free) = (t[id].algebraic() ? alg : free) * Monomial::variable(id, e);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == alg; });
    if (it == groups.end()) {
      groups.push_back({alg, {}});
      it = groups.end() - 1;
    }
    it->second.push_back({free, term.coef});
  }
  Polynomial g = den;
  for (auto& grp : groups) {
    g = Polynomial::gcd(g, Polynomial::from_terms(grp.second));
    if (g.is_constant()) break;
  }
  if (!g.is_constant()) {
    num = *Polynomial::exact_divide(num, g);
    den = *Polynomial::exact_divide(den, g);
  }
  Rational lc = den.leading().coef;
  num *= Rational(1 / lc);
  den *= Rational(1 / lc);
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

const Scalar::TablePtr& Scalar::merge_tables(const Scalar& a, const Scalar& b) {
  if (a.table_ == b.table_) return a.table_;
  if (b.table_->descends_from(a.table_.get())) return b.table_;
  if (a.table_->descends_from(b.table_.get())) return a.table_;
  throw DomainError("scalars belong to different symbol tables");
}

bool Scalar::is_one() const noexcept { return is_unit_polynomial(num_) && is_unit_polynomial(den_); }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw DomainError("scalar '" + to_string() + "' is not rational");
  return num_.constant_value();
}

bool Scalar::is_symbol_free() const noexcept {
  for (const auto& t : num_.terms())
    for (const auto& f : t.mono.factors())
      if (f.first != SymbolTable::imaginary) return false;
  return den_.is_constant();
}

bool Scalar::is_real() const { return conj() == *this; }

Scalar Scalar::conj() const {
  Scalar s = *this;
  std::vector<PolyTerm> terms = num_.terms();
  for (auto& t : terms)
    if (t.mono.exponent(SymbolTable::imaginary) % 2 == 1) t.coef = -t.coef;
  s.num_ = Polynomial::from_terms(std::move(terms));
  return s;
}

Scalar Scalar::real_part() const { return (*this + conj()) * Scalar(Rational(1, 2)); }

Scalar Scalar::imag_part() const {
  return (*this - conj()) * (Scalar::imaginary_unit() * Scalar(Rational(-1, 2)));
}

Scalar Scalar::pow(unsigned n) const {
  Scalar result(1L);
  result.table_ = table_;
  Scalar base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return canonical(table_, den_, num_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const TablePtr& t = merge_tables(*this, o);
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    if (is_unit_polynomial(den_)) {
      num_ += o.num_;
      table_ = t;
      return *this;
    }
    *this = canonical(t, num_ + o.num_, den_);
    return *this;
  }
  *this = canonical(t, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  const TablePtr& t = merge_tables(*this, o);
  if (is_zero()) {
    table_ = t;
    return *this;
  }
  if (o.is_zero()) {
    *this = o;
    table_ = t;
    return *this;
  }
  if (is_unit_polynomial(den_) && is_unit_polynomial(o.den_)) {
    Rational a, b, c, d;
    if (gaussian_parts(num_, a, b) && gaussian_parts(o.num_, c, d)) {
      Rational re = a * c - b * d, im = a * d + b * c;
      re.canonicalize();
      im.canonicalize();
      num_ = gaussian(re, im);
      table_ = t;
      return *this;
    }
    TablePtr keep = t;
    num_ = keep->reduce(num_ * o.num_);
    table_ = std::move(keep);
    return *this;
  }
  *this = canonical(t, num_ * o.num_, den_ * o.den_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  const TablePtr& t = merge_tables(*this, o);
  if (o.is_zero()) throw DivisionByZero("division by zero");
  *this = canonical(t, num_ * o.den_, den_ * o.num_);
  return *this;
}

Scalar operator-(Scalar a) {
  a.num_ = -a.num_;
  return a;
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::merge_tables(a, b);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  int c = compare_polys(a.num_, b.num_);
  return c != 0 ? c : compare_polys(a.den_, b.den_);
}

std::string polynomial_to_string(const Polynomial& p, const SymbolTable& table) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string mono;
    for (const auto& [id, e] : it->mono.factors()) {
      if (!mono.empty()) mono += '*';
      mono += table[id].name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string term;
    if (mono.empty()) {
      term = it->coef.get_str();
    } else if (it->coef == 1) {
      term = mono;
    } else if (it->coef == -1) {
      term = "-" + mono;
    } else {
      term = it->coef.get_str() + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out;
}

std::string Scalar::to_string() const {
  std::string n = polynomial_to_string(num_, *table_);
  if (is_unit_polynomial(den_)) return n;
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = polynomial_to_string(den_, *table_);
  if (den_.terms().size() > 1 || den_.leading().mono.factors().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar normalize(const Scalar& s) { return Scalar::fraction(s.table(), s.numerator(), s.denominator()); }

// ---------------------------------------------------------------------------
// Parsing and evaluation

namespace {

struct ScalarSemantics {
  using Value = Scalar;
  static constexpr bool chained_caret = false;
  const Scalar::TablePtr& table;

  Value rational(const Rational& q) { return Scalar::from_polynomial(table, Polynomial(q)); }
  Value identifier(const std::string& name, std::size_t offset) {
    if (name == "i") return Scalar::from_polynomial(table, Polynomial::variable(SymbolTable::imaginary));
    auto id = table->find(name);
    if (!id) throw ParseError("undeclared identifier '" + name + "'", offset);
    return Scalar::symbol(table, *id);
  }
  Value call(const std::string& name, std::vector<Value> args, std::size_t offset) {
    if (name == "conj" && args.size() == 1) return args[0].conj();
    throw ParseError("unknown function '" + name + "'", offset);
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b, std::size_t) { return a * b; }
  Value div(Value a, Value b, std::size_t offset) {
    if (b.is_zero())
      throw DivisionByZero("division by a scalar that is zero at byte " + std::to_string(offset));
    return a / b;
  }
  Value neg(Value a) { return -a; }
  Value power(Value a, unsigned n, std::size_t) { return a.pow(n); }
  Value caret(Value, Value, std::size_t offset) { throw ParseError("unexpected '^'", offset); }
};

std::complex<double> symbol_value(const SymbolTable& table, SymbolId id, const Valuation& v) {
  if (id == SymbolTable::imaginary) return {0.0, 1.0};
  auto it = v.find(table[id].name);
  if (it == v.end()) throw EvaluationError("no value for symbol '" + table[id].name + "'");
  return {it->second, 0.0};
}

std::complex<double> eval_poly(const Polynomial& p, const SymbolTable& table, const Valuation& v) {
  std::complex<double> sum = 0.0;
  for (const auto& t : p.terms()) {
    std::complex<double> term = t.coef.get_d();
    for (const auto& [id, e] : t.mono.factors()) term *= std::pow(symbol_value(table, id, v), static_cast<int>(e));
    sum += term;
  }
  return sum;
}

void check_relation(const SymbolTable& table, SymbolId id, const Valuation& v) {
  const Symbol& s = table[id];
  std::complex<double> lhs = std::pow(symbol_value(table, id, v), static_cast<int>(s.power));
  std::complex<double> rhs = eval_poly(s.rhs, table, v);
  if (std::abs(lhs - rhs) > relation_tolerance * std::max(1.0, std::abs(rhs)))
    throw EvaluationError("value of '" + s.name + "' violates its relation " + s.name + "^" +
                          std::to_string(s.power) + " = " + polynomial_to_string(s.rhs, table));
}

}  // namespace

Scalar parse_expr(std::string_view text, const Scalar::TablePtr& table) {
  const Scalar::TablePtr& t = table ? table : SymbolTable::builtin();
  ScalarSemantics sem{t};
  ExprParser<ScalarSemantics> parser(text, sem);
  return parser.parse();
}

void check_valuation(const SymbolTable& table, const Valuation& valuation) {
  for (std::size_t k = 1; k < table.size(); ++k) {
    const auto id = static_cast<SymbolId>(k);
    if (table[id].algebraic() && valuation.count(table[id].name)) check_relation(table, id, valuation);
  }
}

std::complex<double> evaluate(const Scalar& s, const Valuation& valuation) {
  const SymbolTable& table = *s.table();
  std::vector<SymbolId> used = s.numerator().symbols();
  for (SymbolId id : s.denominator().symbols()) used.push_back(id);
  for (SymbolId id : used)
    if (id != SymbolTable::imaginary && table[id].algebraic()) check_relation(table, id, valuation);
  std::complex<double> den = eval_poly(s.denominator(), table, valuation);
  if (std::abs(den) < denominator_tolerance)
    throw EvaluationError("denominator of '" + s.to_string() + "' evaluates to zero");
  return eval_poly(s.numerator(), table, valuation) / den;
}

}  // namespace hermitia
