#include "hermitia/upoly.hpp"

#include <cmath>

#include "hermitia/error.hpp"
#include "hermitia/expr_parser.hpp"

namespace hermitia {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
UPoly UPoly::t() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

UPoly UPoly::from_roots(const std::vector<Rational>& roots) {
  UPoly p = constant(1);
  for (const auto& r : roots) p = p * UPoly(std::vector<Rational>{Rational(-r), Rational(1)});
  return p;
}

Rational UPoly::operator()(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

double UPoly::eval(double x) const {
  double v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + it->get_d();
  return v;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / lc());
}

UPoly UPoly::pow(unsigned k) const {
  UPoly r = constant(1);
  for (unsigned j = 0; j < k; ++j) r = r * *this;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(UPoly a, const Rational& c) {
  for (auto& x : a.c_) x *= c;
  a.trim();
  return a;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] / b.lc();
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational UPoly::resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (n == 0) {
    Rational r = 1;
    for (int k = 0; k < m; ++k) r *= b.lc();
    return r;
  }
  if (m < n) {
    Rational r = resultant(b, a);
    return ((m * n) % 2 == 1) ? Rational(-r) : r;
  }
  UPoly r = divmod(a, b).second;
  if (r.is_zero()) return 0;
  Rational f = 1;
  for (int k = 0; k < m - r.degree(); ++k) f *= b.lc();
  if ((m * n) % 2 == 1) f = -f;
  return f * resultant(b, r);
}

UPoly UPoly::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw DomainError("interpolation data of unequal length");
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      Rational den = xs[k] - xs[k - level];
      if (den == 0) throw DomainError("interpolation nodes are not distinct");
      dd[k] = (dd[k] - dd[k - 1]) / den;
    }
  UPoly p;
  for (std::size_t k = n; k-- > 0;) {
    p = p * UPoly(std::vector<Rational>{Rational(-xs[k]), Rational(1)});
    p += constant(dd[k]);
  }
  return p;
}

UPoly UPoly::squarefree_part() const {
  if (degree() <= 0) return monic();
  return divmod(*this, gcd(*this, derivative())).first.monic();
}

bool UPoly::is_squarefree() const { return degree() <= 0 || gcd(*this, derivative()).degree() == 0; }

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    std::string mono;
    if (k >= 1) mono = std::string(var);
    if (k >= 2) mono += "^" + std::to_string(k);
    const bool neg = sgn(c) < 0;
    Rational a = abs(c);
    std::string term;
    if (mono.empty()) term = a.get_str();
    else if (a == 1) term = mono;
    else term = a.get_str() + "*" + mono;
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? "-" : "+") + term;
  }
  return out;
}

namespace {

struct UPolySemantics {
  using Value = UPoly;
  static constexpr bool chained_caret = false;
  std::string_view var;

  Value rational(const Rational& q) { return UPoly::constant(q); }
  Value identifier(const std::string& name, std::size_t offset) {
    if (name == var) return UPoly::t();
    throw ParseError("unknown identifier '" + name + "' in polynomial", offset);
  }
  Value call(const std::string& name, std::vector<Value>, std::size_t offset) {
    throw ParseError("unknown function '" + name + "'", offset);
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b, std::size_t) { return a * b; }
  Value div(Value a, Value b, std::size_t offset) {
    if (b.degree() != 0) throw ParseError("division by a non-constant polynomial", offset);
    return a * Rational(1 / b.lc());
  }
  Value neg(Value a) { return -a; }
  Value power(Value a, unsigned n, std::size_t) { return a.pow(n); }
  Value caret(Value, Value, std::size_t offset) { throw ParseError("unexpected '^'", offset); }
};

int sign_of(const Rational& x) { return sgn(x); }

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

UPoly parse_upoly(std::string_view text, std::string_view var) {
  UPolySemantics sem{var};
  ExprParser<UPolySemantics> parser(text, sem);
  return parser.parse();
}

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  seq_.push_back(p);
  seq_.push_back(p.derivative());
  while (!seq_.back().is_zero()) {
    UPoly r = UPoly::divmod(seq_[seq_.size() - 2], seq_.back()).second;
    seq_.push_back(-r);
  }
  seq_.pop_back();
}

int SturmSequence::variations(const Rational& x) const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(sign_of(p(x)));
  return count_variations(s);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(sign_of(p.lc()));
  return count_variations(s);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(p.degree() % 2 == 0 ? sign_of(p.lc()) : -sign_of(p.lc()));
  return count_variations(s);
}

int SturmSequence::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

Rational root_bound(const UPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(k)] / p.lc());
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const UPoly& p0, const Rational& lo, const Rational& hi,
                                                         const Rational& width) {
  UPoly p = p0.squarefree_part();
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  SturmSequence s(p);
  std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int n = s.count(a, b);
    if (n == 0) continue;
    if (n == 1 && b - a < width) {
      out.emplace_back(a, b);
      continue;
    }
    Rational mid = (a + b) / 2;
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  return out;
}

Rational rational_approximation(double x, long max_den) {
  if (!std::isfinite(x)) throw DomainError("cannot approximate a non-finite value");
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(r);
    Integer a(fl);
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    double frac = r - fl;
    if (frac < 1e-12) break;
    r = 1.0 / frac;
  }
  Rational q(h1, k1);
  q.canonicalize();
  return q;
}

}  // namespace hermitia
