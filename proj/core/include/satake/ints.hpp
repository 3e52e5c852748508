#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace satake {

// Exact arithmetic everywhere.  SNF pivots overflow fixed-width integers
// even on small inputs, so all lattice math runs on cpp_int.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Thrown on malformed user input (group files, CLI flags).  The CLI maps
// this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal consistency guard fires (conditions the theory
// says must never fail on validated input).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Quotient rounded to nearest (ties toward zero).  Keeps remainders in
// [-|b|/2, |b|/2] during row reduction, which controls pivot growth.
inline Int rounded_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (abs(r) * 2 > abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

inline Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline IVec operator+(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw internal_error("vector size mismatch");
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline IVec operator-(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw internal_error("vector size mismatch");
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline IVec operator-(const IVec& a) {
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

inline Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw internal_error("vector size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace satake
