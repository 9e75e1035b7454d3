#pragma once

#include <vector>

#include <gmpxx.h>

namespace brauer {

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpq_class& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const mpq_class& c) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool is_scalar(mpq_class* value = nullptr) const;
  bool operator==(const QMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpq_class> a_;
};

// Fraction-free (Bareiss) elimination after clearing row denominators.
int rank(const QMatrix& m);
// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<mpq_class>> nullspace(const QMatrix& m);
// Columns as a matrix.
QMatrix from_columns(const std::vector<std::vector<mpq_class>>& cols, int rows);
// X with r X = b for r of full column rank; throws if inconsistent.
QMatrix solve(const QMatrix& r, const QMatrix& b);
// Dimension of the generalised eigenspace of m for eigenvalue c.
int generalised_eigenspace_dim(const QMatrix& m, const mpq_class& c);

}  // namespace brauer
