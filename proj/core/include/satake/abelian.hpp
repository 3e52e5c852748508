#pragma once

#include "satake/snf.hpp"

#include <optional>
#include <utility>

namespace satake {

// Finitely generated abelian group presented as Z^n / (column span of
// `relations`).  The SNF of the relation matrix fixes a canonical
// coordinate form for elements: torsion coordinates reduced modulo the
// invariant factors, free coordinates unreduced.  Equality of elements is
// equality of canonical coordinate vectors.
class FgAbGroup {
 public:
  FgAbGroup() : FgAbGroup(0, IntMat(0, 0)) {}
  FgAbGroup(int ambient_rank, IntMat relations);

  int ambient_rank() const { return ambient_rank_; }
  const IntMat& relations() const { return relations_; }
  const SnfResult& snf_data() const { return snf_; }

  int free_rank() const { return int(free_rows_.size()); }
  int torsion_rank() const { return int(torsion_rows_.size()); }
  // Invariant factors > 1 in divisibility-chain order.
  const IVec& invariant_factors() const { return torsion_factors_; }
  bool is_trivial() const { return free_rank() == 0 && torsion_rank() == 0; }
  bool is_finite() const { return free_rank() == 0; }
  bool is_torsion_free() const { return torsion_rank() == 0; }
  // Order of the torsion subgroup (the full order when the group is finite).
  Int torsion_order() const;

  // Canonical coordinates of an ambient vector (length torsion+free).
  IVec canon(const IVec& ambient) const;
  // An ambient representative of a canonical coordinate vector.
  IVec lift(const IVec& canonical) const;
  bool in_relation_lattice(const IVec& ambient) const;

  int coord_rank() const { return torsion_rank() + free_rank(); }
  IVec zero() const { return IVec(coord_rank()); }
  IVec add(const IVec& a, const IVec& b) const;
  IVec neg(const IVec& a) const;
  IVec sub(const IVec& a, const IVec& b) const { return add(a, neg(b)); }
  IVec mul(const IVec& a, const Int& k) const;
  bool is_torsion_elt(const IVec& canonical) const;
  // Canonical coordinates split: first torsion_rank() entries are torsion.
  IVec free_part(const IVec& canonical) const {
    return IVec(canonical.begin() + torsion_rank(), canonical.end());
  }

  // Enumerate all canonical coordinate vectors whose free coordinates lie
  // in [-bound, bound]; torsion coordinates range over the whole factor.
  std::vector<IVec> elements_in_box(const Int& bound) const;

 private:
  int ambient_rank_;
  IntMat relations_;
  SnfResult snf_;
  IntMat uinv_;
  std::vector<int> torsion_rows_, free_rows_;
  IVec torsion_factors_;
};

// The presentation Z^n / im(relations).
FgAbGroup quotient(int ambient_rank, const IntMat& relations);

// Isomorphism test: equal free rank and equal invariant-factor chains.
// (Group statements in this library are isomorphism statements.)
bool isomorphic(const FgAbGroup& a, const FgAbGroup& b);
std::string describe(const FgAbGroup& g);  // e.g. "Z^2 + Z/2 + Z/4"

// Homomorphism given by an integer matrix on ambient generators.
// Well-definedness (relations map into relations) is checked on construction.
class AbHom {
 public:
  AbHom() = default;
  AbHom(FgAbGroup source, FgAbGroup target, IntMat matrix);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMat& matrix() const { return matrix_; }

  IVec apply_ambient(const IVec& x) const { return matrix_ * x; }
  // Canonical coordinates -> canonical coordinates.
  IVec apply(const IVec& canonical) const {
    return target_.canon(matrix_ * source_.lift(canonical));
  }
  // Solve apply(x) == canonical_in_target; empty if not in the image.
  std::optional<IVec> preimage(const IVec& canonical_target) const;

 private:
  FgAbGroup source_, target_;
  IntMat matrix_;
};

AbHom compose(const AbHom& g, const AbHom& f);  // g after f
AbHom identity_hom(const FgAbGroup& g);

// --- lattice utilities (columns span lattices in Z^rows) ---

// Basis (columns) of {x : a*x = 0}.
IntMat kernel_lattice(const IntMat& a);
// A basis for the column span.
IntMat lattice_basis(const IntMat& generators);
// Basis of {x : f*x lies in the relation lattice of target}.
IntMat preimage_lattice(const IntMat& f, const FgAbGroup& target);
IntMat lattice_intersection(const IntMat& b1, const IntMat& b2);
// Integer solution of a*x = b if one exists.
std::optional<IVec> solve_linear(const IntMat& a, const IVec& b);
// Rational solution of sum_i c_i*cols[i] = target if one exists.
std::optional<QVec> rational_solve(const std::vector<IVec>& cols, const IVec& target);

// --- operations on groups ---

// base / <(g-1)x>, with the projection homomorphism.  Every action matrix
// must preserve the relation lattice of base.
std::pair<FgAbGroup, AbHom> coinvariants(const std::vector<IntMat>& action,
                                         const FgAbGroup& base);
// The subgroup {x : g*x = x for all g}, with its inclusion into base.
std::pair<FgAbGroup, AbHom> invariants(const std::vector<IntMat>& action,
                                       const FgAbGroup& base);

FgAbGroup torsion_part(const FgAbGroup& g);
FgAbGroup free_quotient(const FgAbGroup& g);

// Kernel presented on a basis of the preimage lattice, with its inclusion.
std::pair<FgAbGroup, AbHom> hom_kernel(const AbHom& f);
// Cokernel with the projection from the target.
std::pair<FgAbGroup, AbHom> hom_cokernel(const AbHom& f);
FgAbGroup hom_image(const AbHom& f);
bool is_injective(const AbHom& f);
bool is_surjective(const AbHom& f);

}  // namespace satake
