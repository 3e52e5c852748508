#include "satake/abelian.hpp"

#include <sstream>

namespace satake {



FgAbGroup::FgAbGroup(int ambient_rank, IntMat relations)
    : ambient_rank_(ambient_rank), relations_(std::move(relations)) {
  if (relations_.rows() == 0 && relations_.cols() == 0 && ambient_rank_ > 0)
    relations_ = IntMat(ambient_rank_, 0);
  if (relations_.rows() != ambient_rank_)
    throw input_error("relation matrix must have ambient_rank rows");
  snf_ = snf(relations_);
  uinv_ = inverse_unimodular(snf_.left);
  const int nd = int(snf_.d.size());
  for (int i = 0; i < ambient_rank_; ++i) {
    Int di = i < nd ? snf_.d[i] : Int(0);
    if (di == 0) {
      free_rows_.push_back(i);
    } else if (di > 1) {
      torsion_rows_.push_back(i);
      torsion_factors_.push_back(di);
    }
  }
}

Int FgAbGroup::torsion_order() const {
  Int o = 1;
  for (const auto& f : torsion_factors_) o *= f;
  return o;
}

IVec FgAbGroup::canon(const IVec& ambient) const {
  if (int(ambient.size()) != ambient_rank_)
    throw internal_error("canon: ambient vector has wrong length");
  IVec y = snf_.left * ambient;
  IVec c(coord_rank());
  for (size_t j = 0; j < torsion_rows_.size(); ++j)
    c[j] = floor_mod(y[torsion_rows_[j]], torsion_factors_[j]);
  for (size_t j = 0; j < free_rows_.size(); ++j)
    c[torsion_rows_.size() + j] = y[free_rows_[j]];
  return c;
}

IVec FgAbGroup::lift(const IVec& canonical) const {
  if (int(canonical.size()) != coord_rank())
    throw internal_error("lift: coordinate vector has wrong length");
  IVec y(ambient_rank_);
  for (size_t j = 0; j < torsion_rows_.size(); ++j) y[torsion_rows_[j]] = canonical[j];
  for (size_t j = 0; j < free_rows_.size(); ++j)
    y[free_rows_[j]] = canonical[torsion_rows_.size() + j];
  return uinv_ * y;
}

bool FgAbGroup::in_relation_lattice(const IVec& ambient) const {
  if (int(ambient.size()) != ambient_rank_)
    throw internal_error("in_relation_lattice: wrong length");
  IVec y = snf_.left * ambient;
  const int nd = int(snf_.d.size());
  for (int i = 0; i < ambient_rank_; ++i) {
    Int di = i < nd ? snf_.d[i] : Int(0);
    if (di == 0) {
      if (y[i] != 0) return false;
    } else if (y[i] % di != 0) {
      return false;
    }
  }
  return true;
}

IVec FgAbGroup::add(const IVec& a, const IVec& b) const {
  if (int(a.size()) != coord_rank() || int(b.size()) != coord_rank())
    throw internal_error("add: wrong coordinate length");
  IVec c(coord_rank());
  for (size_t j = 0; j < torsion_rows_.size(); ++j)
    c[j] = floor_mod(a[j] + b[j], torsion_factors_[j]);
  for (size_t j = torsion_rows_.size(); j < c.size(); ++j) c[j] = a[j] + b[j];
  return c;
}

IVec FgAbGroup::neg(const IVec& a) const {
  IVec c(coord_rank());
  for (size_t j = 0; j < torsion_rows_.size(); ++j)
    c[j] = floor_mod(-a[j], torsion_factors_[j]);
  for (size_t j = torsion_rows_.size(); j < c.size(); ++j) c[j] = -a[j];
  return c;
}

IVec FgAbGroup::mul(const IVec& a, const Int& k) const {
  IVec c(coord_rank());
  for (size_t j = 0; j < torsion_rows_.size(); ++j)
    c[j] = floor_mod(a[j] * k, torsion_factors_[j]);
  for (size_t j = torsion_rows_.size(); j < c.size(); ++j) c[j] = a[j] * k;
  return c;
}

bool FgAbGroup::is_torsion_elt(const IVec& canonical) const {
  for (size_t j = torsion_rows_.size(); j < canonical.size(); ++j)
    if (canonical[j] != 0) return false;
  return true;
}

std::vector<IVec> FgAbGroup::elements_in_box(const Int& bound) const {
  std::vector<IVec> out;
  IVec cur(coord_rank());
  const int t = torsion_rank();
  // odometer over torsion ranges and the free box
  std::vector<Int> lo(coord_rank()), hi(coord_rank());
  for (int j = 0; j < t; ++j) { lo[j] = 0; hi[j] = torsion_factors_[j] - 1; }
  for (int j = t; j < coord_rank(); ++j) { lo[j] = -bound; hi[j] = bound; }
  for (int j = 0; j < coord_rank(); ++j) cur[j] = lo[j];
  if (coord_rank() == 0) { out.push_back(cur); return out; }
  while (true) {
    out.push_back(cur);
    int j = 0;
    while (j < coord_rank()) {
      if (cur[j] < hi[j]) { ++cur[j]; break; }
      cur[j] = lo[j];
      ++j;
    }
    if (j == coord_rank()) break;
  }
  return out;
}

FgAbGroup quotient(int ambient_rank, const IntMat& relations) {
  return FgAbGroup(ambient_rank, relations);
}

bool isomorphic(const FgAbGroup& a, const FgAbGroup& b) {
  return a.free_rank() == b.free_rank() && a.invariant_factors() == b.invariant_factors();
}

std::string describe(const FgAbGroup& g) {
  std::ostringstream os;
  bool first = true;
  if (g.free_rank() == 1) { os << "Z"; first = false; }
  else if (g.free_rank() > 1) { os << "Z^" << g.free_rank(); first = false; }
  for (const auto& f : g.invariant_factors()) {
    os << (first ? "" : " + ") << "Z/" << f;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntMat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank())
    throw input_error("homomorphism matrix has wrong shape");
  for (int j = 0; j < source_.relations().cols(); ++j)
    if (!target_.in_relation_lattice(matrix_ * source_.relations().col(j)))
      throw input_error("matrix does not map source relations into target relations");
}

std::optional<IVec> AbHom::preimage(const IVec& canonical_target) const {
  // Solve matrix*x + B_target*y = lift(c) over Z, then x is an ambient
  // preimage.  Absence of a solution means the class is not in the image.
  IVec b = target_.lift(canonical_target);
  IntMat stacked = matrix_.hcat(target_.relations());
  auto sol = solve_linear(stacked, b);
  if (!sol) return std::nullopt;
  IVec x(sol->begin(), sol->begin() + matrix_.cols());
  return source_.canon(x);
}

AbHom compose(const AbHom& g, const AbHom& f) {
  return AbHom(f.source(), g.target(), g.matrix() * f.matrix());
}

AbHom identity_hom(const FgAbGroup& g) {
  return AbHom(g, g, IntMat::identity(g.ambient_rank()));
}

IntMat kernel_lattice(const IntMat& a) {
  SnfResult s = snf(a);
  const int n = a.cols();
  std::vector<IVec> basis;
  for (int j = 0; j < n; ++j) {
    Int dj = j < int(s.d.size()) ? s.d[j] : Int(0);
    if (dj == 0) basis.push_back(s.right.col(j));
  }
  return IntMat::from_columns(n, basis);
}

IntMat lattice_basis(const IntMat& generators) {
  // im(A) = U^{-1} im(D), so {d_j * (U^{-1} e_j) : d_j != 0} is a basis.
  SnfResult s = snf(generators);
  IntMat uinv = inverse_unimodular(s.left);
  std::vector<IVec> basis;
  for (int j = 0; j < int(s.d.size()); ++j) {
    if (s.d[j] == 0) continue;
    IVec v = uinv.col(j);
    for (auto& x : v) x *= s.d[j];
    basis.push_back(v);
  }
  return IntMat::from_columns(generators.rows(), basis);
}

IntMat preimage_lattice(const IntMat& f, const FgAbGroup& target) {
  IntMat stacked = f.hcat(target.relations());
  IntMat ker = kernel_lattice(stacked);
  std::vector<IVec> gens;
  for (int j = 0; j < ker.cols(); ++j) {
    IVec kc = ker.col(j);
    gens.emplace_back(kc.begin(), kc.begin() + f.cols());
  }
  return lattice_basis(IntMat::from_columns(f.cols(), gens));
}

IntMat lattice_intersection(const IntMat& b1, const IntMat& b2) {
  if (b1.rows() != b2.rows()) throw internal_error("lattice_intersection rank mismatch");
  IntMat neg2 = b2;
  for (int i = 0; i < neg2.rows(); ++i)
    for (int j = 0; j < neg2.cols(); ++j) neg2(i, j) = -neg2(i, j);
  IntMat ker = kernel_lattice(b1.hcat(neg2));
  std::vector<IVec> gens;
  for (int j = 0; j < ker.cols(); ++j) {
    IVec kc = ker.col(j);
    IVec u(kc.begin(), kc.begin() + b1.cols());
    gens.push_back(b1 * u);
  }
  return lattice_basis(IntMat::from_columns(b1.rows(), gens));
}

std::optional<IVec> solve_linear(const IntMat& a, const IVec& b) {
  SnfResult s = snf(a);
  IVec y = s.left * b;
  IVec z(a.cols());
  const int nd = int(s.d.size());
  for (int i = 0; i < a.rows(); ++i) {
    Int di = i < nd ? s.d[i] : Int(0);
    if (di == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (y[i] % di != 0) return std::nullopt;
      z[i] = y[i] / di;
    }
  }
  return s.right * z;
}

// Rational solve of  sum_i c_i * cols[i] = target; empty if inconsistent.
std::optional<QVec> rational_solve(const std::vector<IVec>& cols, const IVec& target) {
  if (cols.empty()) {
    if (is_zero(target)) return QVec{};
    return std::nullopt;
  }
  const int m = int(cols[0].size()), k = int(cols.size());
  std::vector<QVec> a(m, QVec(k + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = Rat(cols[j][i]);
    a[i][k] = Rat(target[i]);
  }
  int row = 0;
  std::vector<int> pivot_col(m, -1);
  for (int c = 0; c < k && row < m; ++c) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[row], a[p]);
    Rat pv = a[row][c];
    for (int j = 0; j <= k; ++j) a[row][j] /= pv;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col[row] = c;
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (a[i][k] != 0) return std::nullopt;
  QVec sol(k);
  for (int i = 0; i < row; ++i) sol[pivot_col[i]] = a[i][k];
  // check (columns may be dependent; verify the candidate)
  for (int i = 0; i < m; ++i) {
    Rat acc = 0;
    for (int j = 0; j < k; ++j) acc += sol[j] * Rat(cols[j][i]);
    if (acc != Rat(target[i])) return std::nullopt;
  }
  return sol;
}


std::pair<FgAbGroup, AbHom> coinvariants(const std::vector<IntMat>& action,
                                         const FgAbGroup& base) {
  const int n = base.ambient_rank();
  IntMat rels = base.relations();
  for (const auto& g : action) {
    if (g.rows() != n || g.cols() != n)
      throw input_error("action matrix has wrong shape");
    for (int j = 0; j < base.relations().cols(); ++j)
      if (!base.in_relation_lattice(g * base.relations().col(j)))
        throw input_error("action does not preserve relations");
    rels = rels.hcat(g - IntMat::identity(n));
  }
  FgAbGroup co(n, rels);
  AbHom proj(base, co, IntMat::identity(n));
  return {co, proj};
}

std::pair<FgAbGroup, AbHom> invariants(const std::vector<IntMat>& action,
                                       const FgAbGroup& base) {
  const int n = base.ambient_rank();
  for (const auto& g : action) {
    if (g.rows() != n || g.cols() != n)
      throw input_error("action matrix has wrong shape");
    for (int j = 0; j < base.relations().cols(); ++j)
      if (!base.in_relation_lattice(g * base.relations().col(j)))
        throw input_error("action does not preserve relations");
  }
  IntMat sub = IntMat::identity(n);
  for (const auto& g : action) {
    IntMat pre = preimage_lattice(g - IntMat::identity(n), base);
    sub = lattice_intersection(sub, pre);
  }
  // Present sub / relation-lattice on the basis of sub.
  const int s = sub.cols();
  std::vector<IVec> rel_in_basis;
  for (int j = 0; j < base.relations().cols(); ++j) {
    auto c = solve_linear(sub, base.relations().col(j));
    if (!c) throw internal_error("relations not inside invariant lattice");
    rel_in_basis.push_back(*c);
  }
  FgAbGroup inv(s, IntMat::from_columns(s, rel_in_basis));
  AbHom incl(inv, base, sub);
  return {inv, incl};
}

FgAbGroup torsion_part(const FgAbGroup& g) {
  IVec f = g.invariant_factors();
  return FgAbGroup(int(f.size()), IntMat::diagonal(f));
}

FgAbGroup free_quotient(const FgAbGroup& g) {
  return FgAbGroup(g.free_rank(), IntMat(g.free_rank(), 0));
}

std::pair<FgAbGroup, AbHom> hom_kernel(const AbHom& f) {
  IntMat lat = preimage_lattice(f.matrix(), f.target());
  const int s = lat.cols();
  std::vector<IVec> rel_in_basis;
  for (int j = 0; j < f.source().relations().cols(); ++j) {
    auto c = solve_linear(lat, f.source().relations().col(j));
    if (!c) throw internal_error("source relations escape kernel lattice");
    rel_in_basis.push_back(*c);
  }
  FgAbGroup ker(s, IntMat::from_columns(s, rel_in_basis));
  AbHom incl(ker, f.source(), lat);
  return {ker, incl};
}

std::pair<FgAbGroup, AbHom> hom_cokernel(const AbHom& f) {
  IntMat rels = f.target().relations().hcat(f.matrix());
  FgAbGroup cok(f.target().ambient_rank(), rels);
  AbHom proj(f.target(), cok, IntMat::identity(f.target().ambient_rank()));
  return {cok, proj};
}

FgAbGroup hom_image(const AbHom& f) {
  // (im F + L_target)/L_target presented on a basis of im F + L_target.
  IntMat span = lattice_basis(f.matrix().hcat(f.target().relations()));
  const int s = span.cols();
  std::vector<IVec> rel_in_basis;
  for (int j = 0; j < f.target().relations().cols(); ++j) {
    auto c = solve_linear(span, f.target().relations().col(j));
    if (!c) throw internal_error("target relations escape image span");
    rel_in_basis.push_back(*c);
  }
  return FgAbGroup(s, IntMat::from_columns(s, rel_in_basis));
}

bool is_injective(const AbHom& f) { return hom_kernel(f).first.is_trivial(); }
bool is_surjective(const AbHom& f) { return hom_cokernel(f).first.is_trivial(); }

}  // namespace satake
