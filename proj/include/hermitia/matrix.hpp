#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hermitia/scalar.hpp"

namespace hermitia {

/// Dense row-major matrix of exact scalars.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols);
  static ScalarMatrix identity(std::size_t n);
  static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> col(std::size_t c) const;

  bool is_zero() const;
  bool is_symbol_free() const;
  ScalarMatrix transpose() const;
  ScalarMatrix conj() const;
  ScalarMatrix adjoint() const { return conj().transpose(); }

  ScalarMatrix& operator+=(const ScalarMatrix& o);
  ScalarMatrix& operator-=(const ScalarMatrix& o);
  friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
  friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) { return a -= b; }
  friend ScalarMatrix operator-(ScalarMatrix a);
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator*(ScalarMatrix a, const Scalar& s);
  friend std::vector<Scalar> operator*(const ScalarMatrix& a, const std::vector<Scalar>& v);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

  /// Rows as lists of canonical scalar strings.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form computed by exact Gauss-Jordan elimination.
struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon row_echelon(const ScalarMatrix& a);
std::size_t rank(const ScalarMatrix& a);

/// One solution x of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& a, const std::vector<Scalar>& b);

/// Basis of the right kernel, one vector per column of the result.
ScalarMatrix kernel(const ScalarMatrix& a);

std::optional<ScalarMatrix> inverse(const ScalarMatrix& a);
Scalar determinant(const ScalarMatrix& a);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
  std::string to_string() const;
};

/// Signature of a symbol-free Hermitian matrix over Q(i) by congruence.
/// Throws DomainError when the matrix is not Hermitian or has symbols.
Signature hermitian_signature_exact(const ScalarMatrix& h);

/// Eigenvalue signs of a Hermitian matrix at a valuation; eigenvalues with
/// |lambda| <= tol * max(1, |H|) count as zero.
Signature hermitian_signature_numeric(const ScalarMatrix& h, const Valuation& valuation,
                                      double tol = 1e-9);

/// Exact when possible, numeric otherwise.
Signature hermitian_signature(const ScalarMatrix& h, const Valuation& valuation);

bool is_hermitian(const ScalarMatrix& h);

}  // namespace hermitia
