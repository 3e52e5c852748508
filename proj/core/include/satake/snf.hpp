#pragma once

#include "satake/int_mat.hpp"

namespace satake {

// Smith normal form U*A*V = diag(d), with U, V unimodular.
// d holds the full diagonal of length min(rows, cols): the nonzero entries
// satisfy the divisibility chain d_i | d_{i+1} and zeros trail.
struct SnfResult {
  IVec d;
  IntMat left;   // U, rows x rows
  IntMat right;  // V, cols x cols

  int rank() const {
    int r = 0;
    for (const auto& x : d)
      if (x != 0) ++r;
    return r;
  }
  // Invariant factors of the cokernel: the d_i > 1.
  IVec invariant_factors() const {
    IVec f;
    for (const auto& x : d)
      if (x > 1) f.push_back(x);
    return f;
  }
};

// Kannan-Bachem-style reduction: smallest pivot first, alternating
// row/column gcd sweeps, then the divisibility fix-up.
SnfResult snf(const IntMat& a);

}  // namespace satake
