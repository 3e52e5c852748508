#pragma once

#include "satake/abelian.hpp"

#include <map>
#include <optional>
#include <string>

namespace satake {

// Explicit echelonnage override, on ambient cocharacter coordinates.
// Required when the restricted root system of a ramified datum is
// non-reduced; the normalization then comes from tables, not computation.
struct EchelonnageInput {
  std::vector<IVec> roots;    // covectors on X_*, must vanish on the inertia relation lattice
  std::vector<IVec> coroots;  // vectors in X_*
};

struct TwistInput {
  std::vector<int> levi;     // absolute root indices of the minimal F-Levi
  std::vector<int> w_sigma;  // word in the Levi's simple reflections (0-based)
};

struct LeviDatum {
  std::vector<int> root_indices;  // sorted absolute root indices
  bool is_minimal = false;
};

// Based root datum with lattice automorphisms for inertia and Frobenius.
// Immutable after load; every derived cache is built by validate().
class GaloisRootDatum {
 public:
  std::string name;
  int rank = 0;
  std::vector<IVec> roots;    // integer covectors on X_* = Z^rank
  std::vector<IVec> coroots;  // integer vectors in X_*
  std::vector<int> simple_indices;
  std::vector<IntMat> inertia_gens;  // unimodular matrices on X_*
  IntMat frobenius;                  // unimodular matrix on X_*
  std::optional<EchelonnageInput> echelonnage_input;
  std::optional<TwistInput> inner_twist;
  std::map<std::string, std::vector<int>> levis;

  // --- derived (filled by validate) ---
  std::vector<int> neg_of;           // index of -alpha
  std::vector<bool> positive;        // w.r.t. the simple base
  // s_{root r} as a permutation of the root list
  std::vector<std::vector<int>> reflection_perm;
  std::vector<std::vector<int>> inertia_perms;  // root-index permutations
  std::vector<int> frobenius_perm;
  std::vector<IntMat> inertia_group;            // full finite matrix group
  std::vector<std::vector<int>> inertia_orbits; // orbits of roots under inertia

  void validate();  // throws input_error with a named offense
  int root_index(const IVec& covector) const;    // -1 if absent
  int coroot_index(const IVec& vector) const;

  LeviDatum full_levi() const;
  LeviDatum torus_levi() const { return LeviDatum{{}, false}; }
  LeviDatum levi_from_indices(std::vector<int> idx, bool check_stable = true) const;
  // Simple roots of a Levi: indecomposable positives within the subset.
  std::vector<int> levi_simple_roots(const LeviDatum& l) const;
  // Connected components of a subsystem, as lists of its simple roots.
  std::vector<std::vector<int>> components(const std::vector<int>& simple_roots) const;
  bool component_is_type_a(const std::vector<int>& component_simples) const;
};

// X_*(T)_I: coinvariants of the cocharacter lattice under inertia, with the
// projection.  The Frobenius descends to it (guaranteed by validation).
std::pair<FgAbGroup, AbHom> cochar_coinvariants(const GaloisRootDatum& d);

// X_*(T^L_sc)_I -> X_*(T)_I where X_*(T^L_sc) has the Levi's simple coroots
// as basis.  Injective for consistent data; otherwise throws.
AbHom sc_coroot_lattice(const GaloisRootDatum& d, const LeviDatum& l);
AbHom sc_coroot_lattice_for(const GaloisRootDatum& d, const LeviDatum& l, const FgAbGroup& xi);

// Frobenius action on the free quotient of X_*(T)_I.
IntMat frobenius_on_free(const GaloisRootDatum& d, const FgAbGroup& xi, const AbHom& proj);

struct SplitTorus {
  FgAbGroup group;   // free group on the basis of the invariant lattice
  IntMat embedding;  // ambient_rank x free_rank basis matrix into X_*
};

// X_*(A): joint invariants of inertia and the (possibly twisted) Frobenius.
// The twisted variant takes the effective Frobenius on the free quotient of
// X_*(T)_I, since for ramified sources the twist only acts there.
SplitTorus split_rank_torus(const GaloisRootDatum& d);
SplitTorus split_rank_torus_twisted(const GaloisRootDatum& d, const FgAbGroup& xi,
                                    const AbHom& proj, const IntMat& sigma_on_free);

// Roots vanishing on X_*(A): the minimal semi-standard F-Levi.
LeviDatum minimal_levi(const GaloisRootDatum& d);
LeviDatum minimal_levi_for(const GaloisRootDatum& d, const SplitTorus& a);

// The reduced root system controlling the affine root hyperplanes, living on
// the free quotient of X_*(T)_I.
struct EchelonSystem {
  enum class Provenance { computed, explicit_input };
  std::vector<IVec> roots;    // covectors on free coordinates of X_*(T)_I
  std::vector<IVec> coroots;  // vectors in free coordinates
  std::vector<int> simple;    // indices into roots
  std::vector<int> neg_of;
  std::vector<bool> positive;
  std::vector<std::vector<int>> reflection_perm;  // root permutation of each s_a
  Provenance provenance = Provenance::computed;
  // computed path: which inertia orbit of absolute roots produced each entry
  std::vector<std::vector<int>> source_orbit;

  int size() const { return int(roots.size()); }
  bool empty() const { return roots.empty(); }
  Int pairing(int root_idx, const IVec& free_vec) const { return dot(roots[root_idx], free_vec); }
  int index_of_root(const IVec& covector) const;
  // Subsystem spanned by a Levi (indices into this->roots).
  std::vector<int> levi_subsystem(const GaloisRootDatum& d, const FgAbGroup& xi,
                                  const LeviDatum& l) const;
};

EchelonSystem echelonnage(const GaloisRootDatum& d, const FgAbGroup& xi, const AbHom& proj);

// Enumerate the finite reflection group of an echelonnage system as root
// permutations.  Throws if the cap is exceeded (non-finite-type data).
std::vector<std::vector<int>> enumerate_weyl_perms(const EchelonSystem& sigma,
                                                   size_t cap = 1u << 20);

}  // namespace satake
