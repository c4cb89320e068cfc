#include "hermitia/matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hermitia/error.hpp"

namespace hermitia {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0L)) {}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1L);
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  ScalarMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Scalar> ScalarMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<Scalar> ScalarMatrix::col(std::size_t c) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

bool ScalarMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ScalarMatrix::is_symbol_free() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_symbol_free(); });
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ScalarMatrix ScalarMatrix::conj() const {
  ScalarMatrix m = *this;
  for (auto& s : m.data_) s = s.conj();
  return m;
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ScalarMatrix& ScalarMatrix::operator-=(const ScalarMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ScalarMatrix operator-(ScalarMatrix a) {
  for (auto& s : a.data_) s = -s;
  return a;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
  ScalarMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

ScalarMatrix operator*(ScalarMatrix a, const Scalar& s) {
  for (auto& x : a.data_) x *= s;
  return a;
}

std::vector<Scalar> operator*(const ScalarMatrix& a, const std::vector<Scalar>& v) {
  if (a.cols_ != v.size()) throw DomainError("matrix/vector dimension mismatch");
  std::vector<Scalar> out(a.rows_, Scalar(0L));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> ScalarMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).to_string());
  return out;
}

RowEchelon row_echelon(const ScalarMatrix& a) {
  RowEchelon out{a, {}};
  ScalarMatrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const ScalarMatrix& a) { return row_echelon(a).pivots.size(); }

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side has wrong length");
  ScalarMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RowEchelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<Scalar> x(a.cols(), Scalar(0L));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, a.cols());
  return x;
}

ScalarMatrix kernel(const ScalarMatrix& a) {
  RowEchelon e = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  ScalarMatrix k(a.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = Scalar(1L);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = -e.reduced(r, free[j]);
  }
  return k;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& a) {
  if (!a.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  ScalarMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = Scalar(1L);
  }
  RowEchelon e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  ScalarMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Scalar determinant(const ScalarMatrix& a) {
  if (!a.is_square()) throw DomainError("determinant of a non-square matrix");
  ScalarMatrix m = a;
  const std::size_t n = m.rows();
  Scalar det(1L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar(0L);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::string Signature::to_string() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(zero) + ")";
}

bool is_hermitian(const ScalarMatrix& h) { return h.is_square() && h.adjoint() == h; }

Signature hermitian_signature_exact(const ScalarMatrix& h0) {
  if (!is_hermitian(h0)) throw DomainError("matrix is not Hermitian");
  if (!h0.is_symbol_free()) throw DomainError("exact signature needs a symbol-free matrix");
  ScalarMatrix h = h0;
  const std::size_t n = h.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && h(piv, piv).is_zero()) ++piv;
    if (piv == n) {
      // all remaining diagonal entries vanish; make one nonzero via e_r + c e_j
      std::size_t r = n, j = n;
      for (std::size_t x = k; x < n && r == n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (!h(x, y).is_zero()) {
            r = x;
            j = y;
            break;
          }
      if (r == n) {
        sig.zero += n - k;
        return sig;
      }
      Scalar c = h(r, j).conj();
      for (std::size_t a = 0; a < n; ++a) h(a, r) += c * h(a, j);
      Scalar cb = c.conj();
      for (std::size_t a = 0; a < n; ++a) h(r, a) += cb * h(j, a);
      piv = r;
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(k, c));
      for (std::size_t c = 0; c < n; ++c) std::swap(h(c, piv), h(c, k));
    }
    const Scalar& d = h(k, k);
    if (!d.is_rational()) throw DomainError("Hermitian diagonal entry is not rational");
    if (sgn(d.rational_value()) > 0) ++sig.positive; else ++sig.negative;
    Scalar inv = d.inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (h(r, k).is_zero()) continue;
      Scalar f = h(r, k) * inv;
      for (std::size_t c = k; c < n; ++c) h(r, c) -= f * h(k, c);
      Scalar fb = f.conj();
      for (std::size_t c = k; c < n; ++c) h(c, r) -= fb * h(c, k);
    }
  }
  return sig;
}

Signature hermitian_signature_numeric(const ScalarMatrix& h, const Valuation& valuation, double tol) {
  if (!h.is_square()) throw DomainError("signature of a non-square matrix");
  const auto n = static_cast<Eigen::Index>(h.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = evaluate(h(static_cast<std::size_t>(r), static_cast<std::size_t>(c)), valuation);
  if ((m - m.adjoint()).norm() > 1e-9 * std::max(1.0, m.norm()))
    throw DomainError("matrix is not Hermitian at the valuation");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, m.norm());
  Signature sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    double ev = solver.eigenvalues()(k);
    if (std::abs(ev) <= tol * scale) ++sig.zero;
    else if (ev > 0) ++sig.positive;
    else ++sig.negative;
  }
  return sig;
}

Signature hermitian_signature(const ScalarMatrix& h, const Valuation& valuation) {
  if (h.is_symbol_free()) return hermitian_signature_exact(h);
  return hermitian_signature_numeric(h, valuation);
}

}  // namespace hermitia
