#include "doctest.h"

#include "satake/snf.hpp"

#include <random>

using namespace satake;

namespace {

// Independent oracle: d_1*...*d_k = gcd of all k x k minors (up to sign).
// Completely separate route from the row/column reduction in snf().
IVec diag_by_minor_gcds(const IntMat& a) {
  const int m = a.rows(), n = a.cols();
  const int lim = std::min(m, n);
  IVec g(lim + 1);
  g[0] = 1;
  for (int k = 1; k <= lim; ++k) {
    Int acc = 0;
    std::vector<int> ri(k), ci(k);
    // enumerate k-subsets of rows and columns
    std::vector<int> rsel(k), csel(k);
    for (int i = 0; i < k; ++i) rsel[i] = i;
    bool rmore = true;
    while (rmore) {
      for (int i = 0; i < k; ++i) csel[i] = i;
      bool cmore = n >= k;
      while (cmore) {
        acc = gcd(acc, a.submatrix(rsel, csel).det());
        int j = k - 1;
        while (j >= 0 && csel[j] == n - k + j) --j;
        if (j < 0) cmore = false;
        else {
          ++csel[j];
          for (int t = j + 1; t < k; ++t) csel[t] = csel[t - 1] + 1;
        }
      }
      int j = k - 1;
      while (j >= 0 && rsel[j] == m - k + j) --j;
      if (j < 0) rmore = false;
      else {
        ++rsel[j];
        for (int t = j + 1; t < k; ++t) rsel[t] = rsel[t - 1] + 1;
      }
    }
    g[k] = abs(acc);
  }
  IVec d(lim);
  for (int k = 1; k <= lim; ++k) {
    if (g[k] == 0) d[k - 1] = 0;
    else d[k - 1] = g[k] / g[k - 1];
  }
  return d;
}

void check_snf_contract(const IntMat& a) {
  SnfResult s = snf(a);
  // U*A*V is the diagonal matrix of d padded with zeros
  IntMat prod = s.left * a * s.right;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      Int want = (i == j && i < int(s.d.size())) ? s.d[i] : Int(0);
      CAPTURE(i); CAPTURE(j);
      CHECK(prod(i, j) == want);
    }
  // divisibility chain, nonnegative, zeros trailing
  for (size_t i = 0; i + 1 < s.d.size(); ++i) {
    CHECK(s.d[i] >= 0);
    if (s.d[i + 1] != 0) {
      REQUIRE(s.d[i] != 0);
      CHECK(s.d[i + 1] % s.d[i] == 0);
    }
  }
  // unimodularity
  CHECK(abs(s.left.det()) == 1);
  CHECK(abs(s.right.det()) == 1);
  // independent oracle
  CHECK(s.d == diag_by_minor_gcds(a));
}

}  // namespace

TEST_CASE("snf worked examples") {
  SnfResult s = snf(IntMat{{2, 4}, {6, 8}});
  CHECK(s.d == IVec{2, 4});

  s = snf(IntMat::identity(3));
  CHECK(s.d == IVec{1, 1, 1});

  s = snf(IntMat{{0}});
  CHECK(s.d == IVec{0});
  CHECK(s.rank() == 0);
  CHECK(s.invariant_factors().empty());
}

TEST_CASE("snf product of nonzero d equals gcd of maximal minors") {
  IntMat a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  SnfResult s = snf(a);
  Int prod = 1;
  for (const auto& x : s.d)
    if (x != 0) prod *= x;
  CHECK(prod == abs(a.det()));  // full-rank 3x3: maximal minor is det
  check_snf_contract(a);
}

TEST_CASE("snf randomized against minor-gcd oracle") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    IntMat a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    CAPTURE(trial);
    check_snf_contract(a);
  }
}

TEST_CASE("snf handles degenerate shapes") {
  check_snf_contract(IntMat(1, 4));
  check_snf_contract(IntMat(4, 1));
  check_snf_contract(IntMat{{0, 0}, {0, 0}});
  check_snf_contract(IntMat{{5}});
  IntMat empty(0, 0);
  SnfResult s = snf(empty);
  CHECK(s.d.empty());
}

TEST_CASE("snf survives entries that overflow fixed width") {
  IntMat a(4, 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-999, 999);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Int(entry(rng)) * Int("100000000000000000000");
  check_snf_contract(a);
}
