#pragma once

#include "satake/ints.hpp"

#include <initializer_list>
#include <iosfwd>

namespace satake {

// Dense integer matrix with exact entries, row-major.  Dimensions in this
// library are tiny (lattice ranks of root data), so no sparsity games.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw internal_error("negative matrix dimension");
  }
  IntMat(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMat identity(int n);
  static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
  static IntMat from_columns(int rows, const std::vector<IVec>& cols);
  static IntMat diagonal(const IVec& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  IVec row(int i) const;
  IVec col(int j) const;
  void set_col(int j, const IVec& v);

  IntMat transposed() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  IVec operator*(const IVec& v) const;  // matrix * column vector

  bool is_zero() const;
  bool is_identity() const;

  // Append the columns of o on the right (row counts must agree).
  IntMat hcat(const IntMat& o) const;
  // Stack o below (column counts must agree).
  IntMat vcat(const IntMat& o) const;
  IntMat submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  // Exact determinant (fraction-free Bareiss).
  Int det() const;

  // Row/column elementary operations, used by the SNF driver.
  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int dst, int src, const Int& c);  // row[dst] += c*row[src]
  void add_col_multiple(int dst, int src, const Int& c);
  void negate_row(int i);
  void negate_col(int j);

  friend std::ostream& operator<<(std::ostream& os, const IntMat& m);

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// Inverse of a unimodular matrix (integral by unimodularity).
IntMat inverse_unimodular(const IntMat& m);

}  // namespace satake
