#include "satake/snf.hpp"

namespace satake {

namespace {

// Locate the nonzero entry of smallest absolute value in A[t.., t..].
bool find_pivot(const IntMat& a, int t, int& pi, int& pj) {
  bool found = false;
  Int best = 0;
  for (int i = t; i < a.rows(); ++i)
    for (int j = t; j < a.cols(); ++j) {
      const Int& x = a(i, j);
      if (x == 0) continue;
      if (!found || abs(x) < best) {
        found = true;
        best = abs(x);
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult snf(const IntMat& a0) {
  IntMat a = a0;
  const int m = a.rows(), n = a.cols();
  IntMat u = IntMat::identity(m);
  IntMat v = IntMat::identity(n);

  int t = 0;
  const int lim = std::min(m, n);
  while (t < lim) {
    int pi, pj;
    if (!find_pivot(a, t, pi, pj)) break;
    a.swap_rows(t, pi);
    u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    v.swap_cols(t, pj);

    // Clear row and column t.  Rounded division keeps entries small; after
    // each sweep a strictly smaller pivot may appear, so re-pivot and loop.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = rounded_div(a(i, t), a(t, t));
        if (q != 0) {
          a.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
        if (a(i, t) != 0) {  // remainder became the smaller pivot
          a.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = rounded_div(a(t, j), a(t, t));
        if (q != 0) {
          a.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
        if (a(t, j) != 0) {
          a.swap_cols(t, j);
          v.swap_cols(t, j);
          clean = false;
        }
      }
    }

    // Divisibility fix-up: if the pivot does not divide some lower-right
    // entry, fold that row in and redo the elimination at the same t.
    bool redo = false;
    for (int i = t + 1; i < m && !redo; ++i)
      for (int j = t + 1; j < n && !redo; ++j)
        if (a(i, j) % a(t, t) != 0) {
          a.add_row_multiple(t, i, 1);
          u.add_row_multiple(t, i, 1);
          redo = true;
        }
    if (redo) continue;

    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }

  SnfResult r;
  r.d.resize(lim);
  for (int i = 0; i < lim; ++i) r.d[i] = a(i, i);
  r.left = std::move(u);
  r.right = std::move(v);
  return r;
}

}  // namespace satake
