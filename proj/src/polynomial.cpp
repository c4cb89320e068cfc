#include "hermitia/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "hermitia/error.hpp"

namespace hermitia {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("invalid rational '" + s + "'", 0);
  q.canonicalize();
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in rational '" + s + "'");
  return q;
}

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
  Integer mantissa = 0;
  long scale = 0;
  bool any = false;
  bool dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (dot) --scale;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) throw ParseError("invalid decimal '" + std::string(text) + "'", pos);
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) eneg = text[pos++] == '-';
    long e = 0;
    bool edigits = false;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
      e = e * 10 + (text[pos] - '0');
      edigits = true;
    }
    if (!edigits) throw ParseError("invalid exponent in '" + std::string(text) + "'", pos);
    scale += eneg ? -e : e;
  }
  if (pos != text.size()) throw ParseError("trailing characters in '" + std::string(text) + "'", pos);
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(mantissa, ten_power) : Rational(mantissa * ten_power);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(SymbolId id, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(id, exponent);
  return m;
}

std::uint32_t Monomial::exponent(SymbolId id) const noexcept {
  for (const auto& [sid, e] : factors_) {
    if (sid == id) return e;
    if (sid > id) break;
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::with_exponent(SymbolId id, std::uint32_t exponent) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && f.first >= id) {
      if (exponent > 0) m.factors_.emplace_back(id, exponent);
      placed = true;
      if (f.first == id) continue;
    }
    m.factors_.push_back(f);
  }
  if (!placed && exponent > 0) m.factors_.emplace_back(id, exponent);
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (const auto& [id, e] : factors_)
    if (other.exponent(id) < e) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q = other;
  for (const auto& [id, e] : factors_) q = q.with_exponent(id, q.exponent(id) - e);
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

int Monomial::compare(const Monomial& a, const Monomial& b) noexcept {
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
    if (i->first != j->first) return i->first < j->first ? 1 : -1;
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
  }
  if (i != a.factors_.end()) return 1;
  if (j != b.factors_.end()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(SymbolId id, std::uint32_t exponent) {
  return monomial(Monomial::variable(id, exponent));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.front().coef;
}

std::uint32_t Polynomial::degree_in(SymbolId id) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(id));
  return d;
}

bool Polynomial::contains(SymbolId id) const noexcept { return degree_in(id) > 0; }

std::optional<SymbolId> Polynomial::lowest_symbol() const noexcept {
  std::optional<SymbolId> best;
  for (const auto& t : terms_)
    if (!t.mono.is_one()) {
      SymbolId id = t.mono.factors().front().first;
      if (!best || id < *best) best = id;
    }
  return best;
}

std::vector<SymbolId> Polynomial::symbols() const {
  std::vector<SymbolId> ids;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) ids.push_back(f.first);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

namespace {

void merge_into(std::vector<PolyTerm>& out, const std::vector<PolyTerm>& a,
                const std::vector<PolyTerm>& b, bool subtract) {
  out.clear();
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    int c = (i == a.end()) ? -1 : (j == b.end()) ? 1 : Monomial::compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->mono, subtract ? Rational(-j->coef) : j->coef});
      ++j;
    } else {
      Rational s = subtract ? Rational(i->coef - j->coef) : Rational(i->coef + j->coef);
      if (s != 0) out.push_back({i->mono, s});
      ++i;
      ++j;
    }
  }
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  std::vector<PolyTerm> out;
  merge_into(out, terms_, other.terms_, false);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  std::vector<PolyTerm> out;
  merge_into(out, terms_, other.terms_, true);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Polynomial Polynomial::from_terms(std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& x, const PolyTerm& y) {
    return Monomial::compare(x.mono, y.mono) > 0;
  });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.is_constant()) return a * b.terms_.front().coef;
  if (a.is_constant()) return b * a.terms_.front().coef;
  std::vector<PolyTerm> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coef * y.coef});
  return Polynomial::from_terms(std::move(prod));
}

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.coef = -t.coef;
  return a;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].coef != b.terms_[k].coef || !(a.terms_[k].mono == b.terms_[k].mono)) return false;
  return true;
}

std::vector<Polynomial> Polynomial::coefficients_in(SymbolId id) const {
  std::vector<std::vector<PolyTerm>> buckets(degree_in(id) + 1);
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.exponent(id);
    buckets[e].push_back({t.mono.with_exponent(id, 0), t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(SymbolId id, const std::vector<Polynomial>& coeffs) {
  std::vector<PolyTerm> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_)
      all.push_back({t.mono.with_exponent(id, t.mono.exponent(id) + static_cast<std::uint32_t>(k)), t.coef});
  return from_terms(std::move(all));
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (b.is_constant()) return a * Rational(1 / b.leading().coef);
  Polynomial q;
  Polynomial r = a;
  const PolyTerm& lb = b.leading();
  while (!r.is_zero()) {
    const PolyTerm& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Polynomial t = monomial(lb.mono.quotient_of(lr.mono), lr.coef / lb.coef);
    q += t;
    r -= t * b;
  }
  return q;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return {};
  return *this * Rational(1 / terms_.front().coef);
}

namespace {

Polynomial content_in(const Polynomial& p, SymbolId x) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(x)) {
    if (c.is_zero()) continue;
    g = Polynomial::gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, SymbolId x) {
  if (p.is_zero()) return p;
  Polynomial c = content_in(p, x);
  return *Polynomial::exact_divide(p, c);
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, SymbolId x) {
  const std::uint32_t db = b.degree_in(x);
  const Polynomial lb = b.coefficients_in(x).back();
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(x) >= db) {
    const std::uint32_t dr = r.degree_in(x);
    const Polynomial lr = r.coefficients_in(x).back();
    r = lb * r - lr * Polynomial::variable(x, dr - db) * b;
  }
  return r;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  auto xa = a.lowest_symbol();
  auto xb = b.lowest_symbol();
  SymbolId x = std::min(*xa, *xb);
  if (!a.contains(x)) return gcd(a, content_in(b, x));
  if (!b.contains(x)) return gcd(content_in(a, x), b);

  Polynomial ca = content_in(a, x);
  Polynomial cb = content_in(b, x);
  Polynomial pa = *exact_divide(a, ca);
  Polynomial pb = *exact_divide(b, cb);
  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, x);
    pa = std::move(pb);
    pb = primitive_in(r, x);
  }
  Polynomial g = primitive_in(pa, x);
  return (gcd(ca, cb) * g).monic();
}

}  // namespace hermitia
