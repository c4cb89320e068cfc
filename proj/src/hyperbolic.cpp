#include "hermitia/hyperbolic.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>

#include "hermitia/error.hpp"

namespace hermitia {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = rows[i][j];
      m(i, j).canonicalize();
    }
  }
  return m;
}

RationalMatrix RationalMatrix::from_scalar(const ScalarMatrix& s) {
  RationalMatrix m(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (!s(i, j).is_rational()) throw DomainError("matrix entry '" + s(i, j).to_string() + "' is not rational");
      m(i, j) = s(i, j).rational_value();
    }
  return m;
}

ScalarMatrix RationalMatrix::to_scalar() const {
  ScalarMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = Scalar((*this)(i, j));
  return s;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const { return rows_ == cols_ && transpose() == *this; }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
  RationalMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
  RationalMatrix m = a;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
  return m;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
  RationalMatrix m = a;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const Rational& c) {
  RationalMatrix m = a;
  for (auto& x : m.a_) x *= c;
  return m;
}

RationalMatrix RationalMatrix::block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).get_str());
  return out;
}

RationalMatrix evaluate_polynomial(const UPoly& p, const RationalMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix acc(n, n);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * m + RationalMatrix::identity(n) * p.coeffs()[k];
  return acc;
}

namespace {

struct Echelon {
  RationalMatrix m;
  std::vector<std::size_t> pivots;
};

Echelon rref(RationalMatrix m) {
  Echelon e{std::move(m), {}};
  RationalMatrix& a = e.m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

RationalMatrix kernel(const RationalMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> pivot(m.cols(), false);
  for (auto p : e.pivots) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!pivot[c]) free.push_back(c);
  RationalMatrix k(m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = -e.m(r, free[j]);
  }
  return k;
}

Rational determinant(const RationalMatrix& m) {
  UPoly p = char_poly(m);
  Rational c0 = p.coeff(0);
  return (m.rows() % 2 == 0) ? c0 : Rational(-c0);
}

Signature signature(const RationalMatrix& gram) {
  if (!gram.is_symmetric()) throw DomainError("Gram matrix is not symmetric");
  RationalMatrix h = gram;
  const std::size_t n = h.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && h(piv, piv) == 0) ++piv;
    if (piv == n) {
      std::size_t r = n, j = n;
      for (std::size_t x = k; x < n && r == n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (h(x, y) != 0) {
            r = x;
            j = y;
            break;
          }
      if (r == n) {
        sig.zero += n - k;
        return sig;
      }
      // e_r + e_j has q = 2 h_rj != 0
      for (std::size_t a = 0; a < n; ++a) h(a, r) += h(a, j);
      for (std::size_t a = 0; a < n; ++a) h(r, a) += h(j, a);
      piv = r;
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(k, c));
      for (std::size_t c = 0; c < n; ++c) std::swap(h(c, piv), h(c, k));
    }
    const Rational d = h(k, k);
    if (sgn(d) > 0) ++sig.positive; else ++sig.negative;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (h(r, k) == 0) continue;
      Rational f = h(r, k) / d;
      for (std::size_t c = k; c < n; ++c) h(r, c) -= f * h(k, c);
      for (std::size_t c = k; c < n; ++c) h(c, r) -= f * h(c, k);
    }
  }
  return sig;
}

IsometryCheck verify_isometry(const RationalMatrix& m, const RationalMatrix& gram) {
  if (m.rows() != m.cols() || gram.rows() != gram.cols() || m.rows() != gram.rows())
    throw DomainError("isometry and Gram matrix have mismatched dimensions");
  IsometryCheck c;
  c.residual = m.transpose() * gram * m - gram;
  c.holds = c.residual.is_zero();
  return c;
}

UPoly char_poly(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DomainError("characteristic polynomial of a non-square matrix");
  if (n == 0) return UPoly::constant(1);
  // v holds coefficients from the highest power down
  std::vector<Rational> v{Rational(1), Rational(-a(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Rational> col(r + 2, Rational(0));
    col[0] = 1;
    col[1] = -a(r, r);
    std::vector<Rational> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Rational dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * x[i];
      col[k + 2] = -dot;
      std::vector<Rational> y(r, Rational(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) y[i] += a(i, j) * x[j];
      x = std::move(y);
    }
    std::vector<Rational> nv(r + 2, Rational(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) nv[i] += col[i - j] * v[j];
    v = std::move(nv);
  }
  std::vector<Rational> low(v.rbegin(), v.rend());
  return UPoly(std::move(low));
}

std::string to_string(IsometryType t) {
  switch (t) {
    case IsometryType::elliptic: return "elliptic";
    case IsometryType::parabolic: return "parabolic";
    case IsometryType::hyperbolic: return "hyperbolic";
  }
  return "elliptic";
}

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string decimal(const Rational& x) { return decimal(x.get_d()); }

namespace {

bool perfect_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn = sqrt(n), rd = sqrt(d);
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

UPoly remove_unit_roots(UPoly q) {
  const UPoly t_minus_1(std::vector<Rational>{Rational(-1), Rational(1)});
  const UPoly t_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
  while (q.degree() > 0 && q(Rational(1)) == 0) q = UPoly::divmod(q, t_minus_1).first;
  while (q.degree() > 0 && q(Rational(-1)) == 0) q = UPoly::divmod(q, t_plus_1).first;
  return q;
}

Rational q_form(const RationalMatrix& g, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j) != 0) s += x[i] * g(i, j) * y[j];
  return s;
}

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> y(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

// A vector of positive norm, searched among e_a and e_a +- e_b.
std::optional<std::vector<Rational>> timelike_vector(const RationalMatrix& g) {
  const std::size_t n = g.rows();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Rational> v(n, Rational(0));
    v[a] = 1;
    if (sgn(q_form(g, v, v)) > 0) return v;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (int s : {1, -1}) {
        std::vector<Rational> v(n, Rational(0));
        v[a] = 1;
        v[b] = s;
        if (sgn(q_form(g, v, v)) > 0) return v;
      }
  return std::nullopt;
}

}  // namespace

Classification classify(const RationalMatrix& m, const RationalMatrix& gram) {
  if (!verify_isometry(m, gram).holds) throw DomainError("matrix is not an isometry of the Gram matrix");
  const Signature sig = signature(gram);
  if (sig.positive != 1 || sig.zero != 0)
    throw DomainError("classification needs a Gram matrix of signature (1,n,0); got " + sig.to_string());
  Classification c;
  c.char_poly = char_poly(m);
  c.squarefree = c.char_poly.squarefree_part();
  c.repeated_factor = UPoly::gcd(c.char_poly, c.char_poly.derivative());
  if (auto v = timelike_vector(gram)) c.orthochronous = sgn(q_form(gram, *v, mat_vec(m, *v))) > 0;

  UPoly q = remove_unit_roots(c.squarefree);
  if (q.degree() > 0) {
    SturmSequence s(q);
    const Rational b = root_bound(q);
    c.roots_above_one = s.count(Rational(1), b);
    c.roots_below_minus_one = s.count(Rational(-b), Rational(-1));
  }
  const std::size_t n = m.rows();
  if (c.roots_above_one + c.roots_below_minus_one > 0) {
    c.type = IsometryType::hyperbolic;
    const Rational b = root_bound(q);
    const Rational width(Integer(1), Integer("1000000000000"));
    auto roots = c.roots_above_one > 0 ? isolate_roots(q, Rational(1), b, width)
                                       : isolate_roots(q, Rational(-b), Rational(-1), width);
    c.lambda_lo = roots.front().first;
    c.lambda_hi = roots.front().second;
    c.lambda = Rational((c.lambda_lo + c.lambda_hi) / 2).get_d();

    const Rational tau = rational_approximation(c.lambda + 1.0 / c.lambda);
    const UPoly quad(std::vector<Rational>{Rational(1), Rational(-tau), Rational(1)});
    Rational root;
    if (UPoly::divmod(c.char_poly, quad).second.is_zero()) {
      c.trace = tau;
      c.discriminant = tau * tau - 4;
      const RationalMatrix id = RationalMatrix::identity(n);
      if (perfect_square(*c.discriminant, root)) {
        Rational lam = (tau + root) / 2;
        if (!(c.lambda_lo < lam && lam <= c.lambda_hi)) lam = (tau - root) / 2;
        RationalMatrix k = kernel(m - id * lam);
        for (std::size_t r = 0; r < n; ++r) {
          c.eigenvector_exact.push_back(k(r, 0).get_str());
          c.eigenvector_numeric.push_back(k(r, 0).get_d());
        }
      } else {
        auto table = SymbolTable::extend(SymbolTable::builtin());
        table->declare_algebraic("s", 2, Polynomial(*c.discriminant), SignHint::positive);
        Scalar::TablePtr ct = table;
        const Scalar s = Scalar::symbol(ct, "s");
        const double sv = std::sqrt(c.discriminant->get_d());
        const int sign = std::abs((tau.get_d() + sv) / 2 - c.lambda) < std::abs((tau.get_d() - sv) / 2 - c.lambda) ? 1 : -1;
        const Scalar lam = (Scalar(tau) + Scalar(static_cast<long>(sign)) * s) * Scalar(Rational(1, 2));
        ScalarMatrix a = m.to_scalar() - ScalarMatrix::identity(n) * lam;
        ScalarMatrix k = hermitia::kernel(a);
        if (k.cols() == 0) throw DomainError("no exact eigenvector found");
        std::vector<Scalar> v = k.col(0);
        std::vector<Scalar> res = a * v;
        for (const auto& x : res)
          if (!x.is_zero()) throw DomainError("exact eigenvector check failed");
        for (const auto& x : v) {
          c.eigenvector_exact.push_back(x.to_string());
          c.eigenvector_numeric.push_back(evaluate(x, {{"s", sv}}).real());
        }
      }
      c.eigen_residual = 0.0;
      c.certificate = "lambda root of t^2-(" + tau.get_str() + ")t+1 dividing the characteristic polynomial";
    } else {
      Eigen::MatrixXd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d() - (i == j ? c.lambda : 0.0);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
      Eigen::VectorXd v = svd.matrixV().col(static_cast<Eigen::Index>(n) - 1);
      c.eigen_residual = (a * v).norm();
      for (Eigen::Index k = 0; k < v.size(); ++k) c.eigenvector_numeric.push_back(v(k));
      c.certificate = "numeric eigenvector";
    }
    return c;
  }
  if (evaluate_polynomial(c.squarefree, m).is_zero()) {
    c.type = IsometryType::elliptic;
    c.certificate = "squarefree part " + c.squarefree.to_string() + " annihilates M";
  } else {
    c.type = IsometryType::parabolic;
    c.certificate = "squarefree part does not annihilate M; repeated factor " + c.repeated_factor.to_string();
  }
  return c;
}

InvariantClasses invariant_classes(const RationalMatrix& m, const RationalMatrix& gram) {
  if (!verify_isometry(m, gram).holds) throw DomainError("matrix is not an isometry of the Gram matrix");
  InvariantClasses r;
  const std::size_t n = m.rows();
  r.basis = kernel(m - RationalMatrix::identity(n));
  r.restricted_gram = r.basis.transpose() * gram * r.basis;
  for (std::size_t k = 0; k < r.basis.cols(); ++k) r.q_values.push_back(r.restricted_gram(k, k));
  const Signature sig = signature(r.restricted_gram);
  r.negative_definite = sig.negative == r.basis.cols();
  bool lorentzian = false;
  {
    Signature g = signature(gram);
    lorentzian = g.positive == 1 && g.zero == 0;
  }
  r.hyperbolic = lorentzian && classify(m, gram).type == IsometryType::hyperbolic;
  if (!r.hyperbolic) {
    r.verified = true;
    r.note = "not hyperbolic; negativity check skipped";
  } else if (r.basis.cols() == 0) {
    r.verified = true;
    r.note = "no nonzero invariant class";
  } else {
    r.verified = r.negative_definite;
    r.note = r.negative_definite ? "every nonzero invariant class has q < 0; no invariant Kahler class"
                                 : "invariant class with q >= 0 found";
  }
  return r;
}

PowerIteration power_iterate(const RationalMatrix& m, const RationalMatrix& gram, const std::vector<double>& seed,
                             double tol, std::size_t max_iters) {
  const std::size_t n = m.rows();
  if (seed.size() != n) throw DomainError("seed vector has the wrong length");
  Classification c = classify(m, gram);
  if (c.type != IsometryType::hyperbolic)
    throw DomainError("no dominant eigenvalue: the isometry is " + to_string(c.type));
  Eigen::MatrixXd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Eigen::MatrixXd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = gram(i, j).get_d();
    }
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) v(static_cast<Eigen::Index>(k)) = seed[k];
  if (v.norm() == 0.0) throw DomainError("seed vector is zero");
  v.normalize();

  PowerIteration out;
  std::size_t stalled = 0;
  double best = HUGE_VAL;
  for (std::size_t it = 1; it <= max_iters; ++it) {
    Eigen::VectorXd w = a * v;
    if (w.norm() == 0.0) throw DomainError("iteration hit the zero vector");
    v = w / w.norm();
    Eigen::VectorXd mv = a * v;
    const double lambda = v.dot(mv);
    const double residual = (mv - lambda * v).norm();
    out.residuals.push_back(residual);
    out.iterations = it;
    out.lambda = lambda;
    const bool dominant = std::abs(lambda) > 1.0 + std::sqrt(tol);
    if (residual < tol && dominant) {
      out.converged = true;
      break;
    }
    if (residual < best * 0.999 && dominant) {
      best = residual;
      stalled = 0;
    } else if (++stalled >= 50) {
      // deterministic nudge off an invariant subspace
      for (Eigen::Index k = 0; k < v.size(); ++k) v(k) += 1e-6 * static_cast<double>(k + 1);
      v.normalize();
      ++out.perturbations;
      stalled = 0;
      best = HUGE_VAL;
    }
  }
  // fix the sign so that the first nonzero component is positive
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (std::abs(v(k)) > 1e-300) {
      if (v(k) < 0) v = -v;
      break;
    }
  for (Eigen::Index k = 0; k < v.size(); ++k) out.eta.push_back(v(k));
  out.q_value = v.dot(g * v);
  out.message = out.converged ? "converged" : "max_iters exceeded";
  return out;
}

SpectralRadius certify_spectral_radius(const RationalMatrix& m, const Rational& lo, const Rational& hi) {
  SpectralRadius out;
  const UPoly p = char_poly(m);
  const int n = p.degree();
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= n * n; ++k) {
    const Rational y(k);
    // t^n p(y/t) = sum_j c_j y^j t^(n-j)
    std::vector<Rational> q(static_cast<std::size_t>(n) + 1, Rational(0));
    Rational ypow = 1;
    for (int j = 0; j <= n; ++j) {
      q[static_cast<std::size_t>(n - j)] = p.coeff(static_cast<std::size_t>(j)) * ypow;
      ypow *= y;
    }
    xs.push_back(y);
    ys.push_back(UPoly::resultant(p, UPoly(std::move(q))));
  }
  out.squared_poly = UPoly::interpolate(xs, ys);
  if (out.squared_poly.degree() <= 0 || sgn(lo) < 0 || !(lo < hi)) return out;
  const UPoly r = out.squared_poly.squarefree_part();
  SturmSequence s(r);
  const Rational lo2 = lo * lo, hi2 = hi * hi;
  const Rational b = root_bound(r);
  const bool none_above = r(hi2) != 0 && (hi2 >= b || s.count(hi2, b) == 0);
  const bool one_inside = s.count(lo2, hi2) >= 1 && r(hi2) != 0;
  out.certified = none_above && one_inside;
  auto roots = isolate_roots(r, lo2, hi2, Rational(Integer(1), Integer("1000000000000")));
  if (!roots.empty()) out.rho = std::sqrt(Rational((roots.back().first + roots.back().second) / 2).get_d());
  return out;
}

}  // namespace hermitia
