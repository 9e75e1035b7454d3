#include "brauer/linalg.hpp"

#include <stdexcept>

namespace brauer {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpq_class& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += x * o(k, j);
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

QMatrix QMatrix::scaled(const mpq_class& c) const {
  QMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  for (auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_scalar(mpq_class* value) const {
  if (rows_ != cols_) return false;
  mpq_class c = rows_ ? (*this)(0, 0) : mpq_class(0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? c : mpq_class(0))) return false;
  if (value) *value = c;
  return true;
}

int rank(const QMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

namespace {
// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    mpq_class inv = 1 / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      mpq_class f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}
}  // namespace

std::vector<std::vector<mpq_class>> nullspace(const QMatrix& m) {
  QMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix from_columns(const std::vector<std::vector<mpq_class>>& cols, int rows) {
  QMatrix r(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < r.cols(); ++j)
    for (int i = 0; i < rows; ++i) r(i, j) = cols[j][i];
  return r;
}

QMatrix solve(const QMatrix& r, const QMatrix& b) {
  int n = r.rows(), k = r.cols();
  QMatrix aug(n, k + b.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) aug(i, j) = r(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, k + j) = b(i, j);
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < k || (!pivots.empty() && pivots.back() >= k))
    throw std::domain_error("linear system has no unique solution");
  QMatrix x(k, b.cols());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < b.cols(); ++j) x(i, j) = aug(i, k + j);
  for (int i = k; i < n; ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (aug(i, k + j) != 0) throw std::domain_error("linear system is inconsistent");
  return x;
}

int generalised_eigenspace_dim(const QMatrix& m, const mpq_class& c) {
  int n = m.rows();
  if (n == 0) return 0;
  QMatrix b = m - QMatrix::identity(n).scaled(c);
  QMatrix p = b;
  // The kernel of b^k stabilises once it stops growing.
  int prev = n - rank(p);
  for (int k = 2; k <= n; ++k) {
    p = p * b;
    int cur = n - rank(p);
    if (cur == prev) break;
    prev = cur;
  }
  return prev;
}

}  // namespace brauer
