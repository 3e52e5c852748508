#pragma once

#include "satake/root_datum.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace satake {

// The finite Weyl group W(Sigma), enumerated as permutations of the
// Sigma-root list (faithful), with cached action matrices on the free
// quotient of X_*(T)_I.  Elements are table indices; index 0 is the
// identity.  Torsion classes pair to zero with every root, so every
// element acts trivially on the torsion part.
class WeylGroup {
 public:
  WeylGroup() = default;
  WeylGroup(const EchelonSystem& sigma, const FgAbGroup& xi);

  int size() const { return int(perm_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const;  // a after b
  int inv(int a) const { return inv_[a]; }
  int simple_reflection(int k) const { return simple_elt_[k]; }  // k-th simple of Sigma
  int reflection(int sigma_root) const { return refl_elt_[sigma_root]; }
  const std::vector<int>& perm(int a) const { return perm_[a]; }
  const IntMat& action_free(int a) const { return act_free_[a]; }
  int from_perm(const std::vector<int>& p) const;  // -1 if absent
  int length(int a) const;  // positive roots sent negative
  std::vector<int> reduced_word(int a) const;  // positions into sigma.simple
  // action on canonical X_I coordinates (identity on torsion block)
  IVec act(int a, const IVec& canonical) const;
  Int det_free(int a) const { return act_free_[a].det(); }

  const EchelonSystem* system() const { return sigma_; }

 private:
  const EchelonSystem* sigma_ = nullptr;
  int torsion_rank_ = 0;
  std::vector<std::vector<int>> perm_;
  std::vector<IntMat> act_free_;
  std::vector<int> inv_;
  std::vector<int> simple_elt_, refl_elt_;
  std::map<std::vector<int>, int> index_;
};

class IwahoriWeyl;

// Element of the Iwahori-Weyl group: a translation class in X_*(T)_I (in
// canonical coordinates) and a finite Weyl part.
struct AffineElement {
  const IwahoriWeyl* ctx = nullptr;
  IVec nu;
  int w = 0;

  bool operator==(const AffineElement& o) const { return nu == o.nu && w == o.w; }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }
  bool operator<(const AffineElement& o) const {
    if (w != o.w) return w < o.w;
    return nu < o.nu;
  }
};

// A length-zero element together with its Kottwitz class.
struct OmegaClass {
  AffineElement representative;
  IVec kottwitz_class;
};

// Affine simple reflection data: (coroot translation, finite reflection).
struct AffineReflection {
  IVec nu;  // canonical X_I coordinates (zero for finite walls)
  int w;
};

// Everything attached to one group datum: X_*(T)_I, the echelonnage, the
// finite Weyl group, the Frobenius action twisted by w_sigma when an inner
// twist is installed, the quasi-Coxeter structure W_aff x Omega, and the
// per-Levi apparatus (kappa, Omega_M, M-length).
class IwahoriWeyl {
 public:
  // Levi apparatus shared by kappa / Omega / length computations.  The full
  // datum is itself a Levi (giving kappa_G, Omega_G, W_aff); the minimal
  // Levi gives Lambda_M.
  struct LeviContext {
    LeviDatum levi;
    std::vector<int> sigma_roots;      // Sigma_M as indices into sigma().roots
    std::vector<int> sigma_simples;    // simples of Sigma_M (subset of the above)
    std::vector<int> weyl_elements;    // W(M,S) as sorted WeylGroup indices
    FgAbGroup kottwitz_group;          // X_I / image of the Levi sc-lattice
    AbHom kappa;                       // X_I -> kottwitz_group
    std::vector<AffineReflection> affine_simples;  // walls of the M-alcove
    bool contains_weyl(int w) const;
  };

  static std::shared_ptr<const IwahoriWeyl> build(const GaloisRootDatum& d,
                                                  bool apply_twist = true);

  const GaloisRootDatum& datum() const { return datum_; }
  const FgAbGroup& xi() const { return xi_; }
  const AbHom& proj() const { return proj_; }
  const EchelonSystem& sigma() const { return sigma_sys_; }
  const WeylGroup& weyl() const { return weyl_; }
  bool twisted() const { return twisted_; }
  int w_sigma() const { return w_sigma_; }
  const SplitTorus& split_torus() const { return split_torus_; }

  const LeviContext& full() const { return full_; }       // the datum itself
  const LeviContext& minimal() const { return minimal_; } // minimal F-Levi
  LeviContext make_levi(const LeviDatum& l) const;

  // --- elements ---
  AffineElement identity_elt() const { return {this, xi_.zero(), weyl_.identity()}; }
  AffineElement make(IVec nu, int w) const { return {this, std::move(nu), w}; }
  AffineElement translation(const IVec& nu) const { return {this, nu, weyl_.identity()}; }
  AffineElement from_weyl(int w) const { return {this, xi_.zero(), w}; }

  // --- the sigma action ---
  // Linear part of the effective Frobenius on X_I (w_sigma composed with
  // the pinned Frobenius), in canonical coordinates.
  IVec sigma_sharp(const IVec& canonical) const;
  const IntMat& sigma_sharp_free() const { return sigma_free_; }
  AffineElement sigma_act(const AffineElement& x) const;
  bool sigma_fixed(const AffineElement& x) const;
  int sigma_on_weyl(int w) const { return conj_sigma_[w]; }  // w -> sigma w sigma^{-1}
  // Induced action on a Kottwitz quotient group of X_I.
  IVec sigma_on_kottwitz(const LeviContext& l, const IVec& cls) const;

  // --- lengths, kappa, omega ---
  Int length(const AffineElement& x) const { return length_in(full_, x); }
  Int length_in(const LeviContext& l, const AffineElement& x) const;
  IVec kottwitz(const AffineElement& x) const { return kottwitz_in(full_, x); }
  IVec kottwitz_in(const LeviContext& l, const AffineElement& x) const;
  // The unique length-zero element with the given Kottwitz class.
  OmegaClass omega_representative(const IVec& cls) const { return omega_representative_in(full_, cls); }
  OmegaClass omega_representative_in(const LeviContext& l, const IVec& cls) const;
  // Quasi-Coxeter factorization x = x_aff * omega.
  std::pair<AffineElement, AffineElement> quasi_coxeter_parts(const AffineElement& x) const;

  bool bruhat_leq(const AffineElement& x, const AffineElement& y) const;
  // Minimal element of W_K x W_K for W_K = W(Sigma) at the origin.
  AffineElement min_double_coset(const AffineElement& x) const;
  bool in_levi_group(const LeviContext& l, const AffineElement& x) const;

  // All x with l(x) <= length_bound, Omega part ranging over the full
  // torsion of the Kottwitz group and free coordinates within
  // [-omega_bound, omega_bound].  Throws "bound required" when the Kottwitz
  // group has free rank but no bound is given.
  std::vector<AffineElement> enumerate_ball(const Int& length_bound,
                                            std::optional<Int> omega_bound = std::nullopt) const;
  std::vector<AffineElement> affine_ball(const Int& length_bound) const;  // W_aff only
  std::vector<AffineElement> omega_elements(std::optional<Int> omega_bound) const;

  // cuspidal/Coxeter tests for finite Weyl elements within a subsystem
  // (Sigma-root indices / simple subset of that subsystem).
  bool is_cuspidal(int w, const std::vector<int>& subsystem_roots) const;
  bool is_coxeter(int w, const std::vector<int>& subsystem_simples) const;

 private:
  IwahoriWeyl() = default;

  GaloisRootDatum datum_;
  FgAbGroup xi_;
  AbHom proj_;
  EchelonSystem sigma_sys_;
  WeylGroup weyl_;
  bool twisted_ = false;
  int w_sigma_ = 0;
  IntMat frob_free_;        // pinned Frobenius on the free quotient
  IntMat sigma_free_;       // w_sigma * frob on the free quotient
  AbHom frob_on_xi_;        // full canonical-coordinate Frobenius
  SplitTorus split_torus_;
  LeviContext full_, minimal_;
  std::vector<int> conj_sigma_;       // w -> sigma w sigma^{-1} table
  std::vector<IVec> sigma_corr_;      // cocycle mu0 - w'(mu0), free coords per w'
  QVec barycenter_;                   // of the fundamental alcove, free coords
  mutable std::map<std::pair<AffineElement, AffineElement>, bool> bruhat_memo_;
  mutable std::mutex bruhat_mutex_;

  LeviContext build_levi(const LeviDatum& l) const;
  void build_sigma_machinery();
  AffineElement apply_affine_simple(const AffineReflection& s, const AffineElement& x,
                                    bool left) const;
};

AffineElement operator*(const AffineElement& a, const AffineElement& b);
AffineElement inverse(const AffineElement& a);

}  // namespace satake
