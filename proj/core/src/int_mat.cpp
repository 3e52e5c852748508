#include "satake/int_mat.hpp"

#include <ostream>

namespace satake {

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  e_.resize(size_t(rows_) * cols_);
  int i = 0;
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw internal_error("ragged initializer");
    int j = 0;
    for (const auto& x : r) (*this)(i, j++) = x;
    ++i;
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(int rows, const std::vector<IVec>& cols) {
  IntMat m(rows, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j) {
    if (int(cols[j].size()) != rows) throw internal_error("column length mismatch");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMat IntMat::diagonal(const IVec& d) {
  IntMat m(int(d.size()), int(d.size()));
  for (int i = 0; i < int(d.size()); ++i) m(i, i) = d[i];
  return m;
}

IVec IntMat::row(int i) const {
  IVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

IVec IntMat::col(int j) const {
  IVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMat::set_col(int j, const IVec& v) {
  if (int(v.size()) != rows_) throw internal_error("column length mismatch");
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMat IntMat::transposed() const {
  IntMat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
  IntMat m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix sum shape mismatch");
  IntMat m(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

IntMat IntMat::operator-(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix diff shape mismatch");
  IntMat m(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

IVec IntMat::operator*(const IVec& v) const {
  if (int(v.size()) != cols_) throw internal_error("matrix*vector shape mismatch");
  IVec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Int s = 0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

bool IntMat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMat IntMat::hcat(const IntMat& o) const {
  if (rows_ != o.rows_) throw internal_error("hcat row mismatch");
  IntMat m(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (int j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
  }
  return m;
}

IntMat IntMat::vcat(const IntMat& o) const {
  if (cols_ != o.cols_) throw internal_error("vcat column mismatch");
  IntMat m(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(rows_ + i, j) = o(i, j);
  return m;
}

IntMat IntMat::submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
  IntMat m(int(ri.size()), int(ci.size()));
  for (int i = 0; i < int(ri.size()); ++i)
    for (int j = 0; j < int(ci.size()); ++j) m(i, j) = (*this)(ri[i], ci[j]);
  return m;
}

// Bareiss fraction-free elimination; every division below is exact.
Int IntMat::det() const {
  if (rows_ != cols_) throw internal_error("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMat a = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMat::add_row_multiple(int dst, int src, const Int& c) {
  for (int k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
}

void IntMat::add_col_multiple(int dst, int src, const Int& c) {
  for (int k = 0; k < rows_; ++k) (*this)(k, dst) += c * (*this)(k, src);
}

void IntMat::negate_row(int i) {
  for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMat::negate_col(int j) {
  for (int k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

// Inverse of a unimodular matrix (integral by unimodularity); rational
// Gauss-Jordan with an integrality check at the end.
IntMat inverse_unimodular(const IntMat& m) {
  const int n = m.rows();
  if (m.cols() != n) throw internal_error("inverse of non-square matrix");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) throw internal_error("singular matrix in inverse_unimodular");
    std::swap(a[c], a[p]);
    Rat pv = a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] /= pv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& x = a[i][n + j];
      if (denominator(x) != 1) throw internal_error("matrix is not unimodular");
      inv(i, j) = numerator(x);
    }
  return inv;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << "[";
  for (int i = 0; i < m.rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
  }
  return os << "]";
}

}  // namespace satake
