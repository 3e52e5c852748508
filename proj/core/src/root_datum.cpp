#include "satake/root_datum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace satake {

namespace {

std::string ordinal(int i) {
  std::ostringstream os;
  os << "#" << i;
  return os.str();
}

// v = t*w with t > 0 rational?  (both nonzero)
bool positively_proportional(const IVec& v, const IVec& w) {
  Rat t;
  bool have_t = false;
  for (size_t i = 0; i < v.size(); ++i) {
    if (w[i] == 0) {
      if (v[i] != 0) return false;
      continue;
    }
    Rat ti = Rat(v[i]) / Rat(w[i]);
    if (!have_t) { t = ti; have_t = true; }
    else if (t != ti) return false;
  }
  return have_t && t > 0;
}

}  // namespace

int GaloisRootDatum::root_index(const IVec& covector) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == covector) return int(i);
  return -1;
}

int GaloisRootDatum::coroot_index(const IVec& v) const {
  for (size_t i = 0; i < coroots.size(); ++i)
    if (coroots[i] == v) return int(i);
  return -1;
}

void GaloisRootDatum::validate() {
  if (rank < 0) throw input_error("negative rank");
  if (roots.size() != coroots.size())
    throw input_error("roots and coroots must match in number");
  for (const auto& r : roots)
    if (int(r.size()) != rank) throw input_error("root covector of wrong length");
  for (const auto& c : coroots)
    if (int(c.size()) != rank) throw input_error("coroot vector of wrong length");
  const int nr = int(roots.size());

  // no duplicates; reduced (no root a positive multiple of another)
  for (int i = 0; i < nr; ++i)
    for (int j = i + 1; j < nr; ++j) {
      if (roots[i] == roots[j]) throw input_error("duplicate root " + ordinal(j));
      if (positively_proportional(roots[i], roots[j]) && roots[i] != roots[j])
        throw input_error("non-crystallographic datum: root system is not reduced");
    }

  // <alpha, alpha_vee> = 2 and negation closure
  neg_of.assign(nr, -1);
  for (int i = 0; i < nr; ++i) {
    if (dot(roots[i], coroots[i]) != 2)
      throw input_error("non-crystallographic datum: <alpha,alpha_vee> != 2 at root " + ordinal(i));
    neg_of[i] = root_index(-roots[i]);
    if (neg_of[i] < 0) throw input_error("root set not closed under negation at " + ordinal(i));
    if (coroots[neg_of[i]] != -coroots[i])
      throw input_error("coroot of -alpha is not -coroot(alpha) at " + ordinal(i));
  }

  // simple base: distinct, positive system = nonneg/ nonpos coefficient cone
  {
    std::set<int> seen;
    for (int s : simple_indices) {
      if (s < 0 || s >= nr) throw input_error("simple index out of range");
      if (!seen.insert(s).second) throw input_error("repeated simple index");
    }
  }
  std::vector<IVec> simple_roots_v;
  for (int s : simple_indices) simple_roots_v.push_back(roots[s]);
  positive.assign(nr, false);
  for (int i = 0; i < nr; ++i) {
    auto c = rational_solve(simple_roots_v, roots[i]);
    if (!c) throw input_error("root " + ordinal(i) + " is not in the span of the base");
    bool nonneg = true, nonpos = true;
    for (const auto& x : *c) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (!nonneg && !nonpos)
      throw input_error("root " + ordinal(i) + " has mixed signs over the base");
    positive[i] = nonneg;
  }
  for (int s : simple_indices)
    if (!positive[s]) throw input_error("simple root is not positive");

  // reflections permute the root list, compatibly with coroots
  reflection_perm.assign(nr, std::vector<int>(nr, -1));
  for (int r = 0; r < nr; ++r)
    for (int b = 0; b < nr; ++b) {
      Int pair = dot(roots[b], coroots[r]);
      IVec img = roots[b];
      for (int k = 0; k < rank; ++k) img[k] -= pair * roots[r][k];
      int idx = root_index(img);
      if (idx < 0)
        throw input_error("non-crystallographic datum: reflection at root " + ordinal(r) +
                          " does not permute the roots");
      IVec img_co = coroots[b];
      Int pair_co = dot(roots[r], coroots[b]);
      for (int k = 0; k < rank; ++k) img_co[k] -= pair_co * coroots[r][k];
      if (coroots[idx] != img_co)
        throw input_error("reflection at root " + ordinal(r) + " breaks root/coroot matching");
      reflection_perm[r][b] = idx;
    }

  // Galois matrices: unimodular, permute coroots, dual-permute roots with
  // the same index permutation, and preserve the simple base (pinned).
  auto galois_perm = [&](const IntMat& g, const std::string& who) {
    if (g.rows() != rank || g.cols() != rank)
      throw input_error(who + " has wrong shape");
    if (abs(g.det()) != 1) throw input_error(who + " is not unimodular");
    std::vector<int> pi(nr, -1);
    for (int i = 0; i < nr; ++i) {
      pi[i] = coroot_index(g * coroots[i]);
      if (pi[i] < 0)
        throw input_error("unpinned action: " + who + " does not permute the coroots");
    }
    for (int i = 0; i < nr; ++i) {
      // require roots[pi[i]] o g == roots[i]
      IVec lhs(rank);
      for (int k = 0; k < rank; ++k) {
        Int acc = 0;
        for (int t = 0; t < rank; ++t) acc += roots[pi[i]][t] * g(t, k);
        lhs[k] = acc;
      }
      if (lhs != roots[i])
        throw input_error("unpinned action: " + who + " acts incompatibly on the roots");
    }
    std::set<int> base(simple_indices.begin(), simple_indices.end());
    for (int s : simple_indices)
      if (!base.count(pi[s]))
        throw input_error("unpinned action: " + who + " does not preserve the base");
    return pi;
  };

  if (frobenius.rows() == 0) frobenius = IntMat::identity(rank);
  inertia_perms.clear();
  for (size_t k = 0; k < inertia_gens.size(); ++k)
    inertia_perms.push_back(galois_perm(inertia_gens[k], "inertia generator " + ordinal(int(k))));
  frobenius_perm = galois_perm(frobenius, "frobenius");

  // the inertia image in GL(X_*) is finite (Galois acts through a finite
  // quotient); enumerate it
  inertia_group.clear();
  inertia_group.push_back(IntMat::identity(rank));
  {
    std::set<std::string> seen;
    auto key = [&](const IntMat& m) {
      std::ostringstream os;
      os << m;
      return os.str();
    };
    seen.insert(key(inertia_group[0]));
    size_t head = 0;
    const size_t cap = 100000;
    while (head < inertia_group.size()) {
      IntMat cur = inertia_group[head++];
      for (const auto& g : inertia_gens) {
        IntMat nxt = g * cur;
        if (seen.insert(key(nxt)).second) {
          inertia_group.push_back(nxt);
          if (inertia_group.size() > cap)
            throw input_error("inertia generators do not generate a finite group");
        }
      }
    }
    IntMat finv = inverse_unimodular(frobenius);
    for (const auto& g : inertia_gens) {
      IntMat conj = frobenius * g * finv;
      if (!seen.count(key(conj)))
        throw input_error("frobenius does not normalize the inertia action");
    }
  }

  // orbits of inertia on root indices
  inertia_orbits.clear();
  {
    std::vector<int> orbit_of(nr, -1);
    for (int i = 0; i < nr; ++i) {
      if (orbit_of[i] >= 0) continue;
      std::vector<int> orb{i};
      orbit_of[i] = int(inertia_orbits.size());
      for (size_t h = 0; h < orb.size(); ++h)
        for (const auto& pi : inertia_perms) {
          int j = pi[orb[h]];
          if (orbit_of[j] < 0) {
            orbit_of[j] = int(inertia_orbits.size());
            orb.push_back(j);
          }
        }
      std::sort(orb.begin(), orb.end());
      inertia_orbits.push_back(orb);
    }
  }

  // named Levi subsets and the twist Levi must be valid
  for (const auto& [lname, idx] : levis) (void)levi_from_indices(idx);
  if (inner_twist) {
    LeviDatum l = levi_from_indices(inner_twist->levi);
    auto simples = levi_simple_roots(l);
    for (int letter : inner_twist->w_sigma)
      if (letter < 0 || letter >= int(simples.size()))
        throw input_error("w_sigma letter out of range for the Levi base");
  }
}

LeviDatum GaloisRootDatum::full_levi() const {
  LeviDatum l;
  l.root_indices.resize(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) l.root_indices[i] = int(i);
  return l;
}

LeviDatum GaloisRootDatum::levi_from_indices(std::vector<int> idx, bool check_stable) const {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int i : idx)
    if (i < 0 || i >= int(roots.size())) throw input_error("levi root index out of range");
  std::set<int> in(idx.begin(), idx.end());
  // closed: every root in the span of the subset belongs to the subset
  std::vector<IVec> sub;
  for (int i : idx) sub.push_back(roots[i]);
  for (int b = 0; b < int(roots.size()); ++b) {
    if (in.count(b)) continue;
    if (rational_solve(sub, roots[b]))
      throw input_error("levi subset is not closed (root " + ordinal(b) + " is in its span)");
  }
  for (int i : idx)
    if (!in.count(neg_of[i])) throw input_error("levi subset not closed under negation");
  if (check_stable) {
    auto stable_under = [&](const std::vector<int>& pi, const char* who) {
      for (int i : idx)
        if (!in.count(pi[i]))
          throw input_error(std::string("levi subset is not ") + who + "-stable");
    };
    for (const auto& pi : inertia_perms) stable_under(pi, "inertia");
    stable_under(frobenius_perm, "frobenius");
  }
  LeviDatum l;
  l.root_indices = std::move(idx);
  return l;
}

std::vector<int> GaloisRootDatum::levi_simple_roots(const LeviDatum& l) const {
  std::vector<int> pos;
  for (int i : l.root_indices)
    if (positive[i]) pos.push_back(i);
  std::vector<int> simples;
  for (int a : pos) {
    bool decomposable = false;
    for (int b : pos) {
      if (decomposable) break;
      for (int c : pos) {
        if (roots[b] + roots[c] == roots[a]) { decomposable = true; break; }
      }
    }
    if (!decomposable) simples.push_back(a);
  }
  return simples;
}

std::vector<std::vector<int>> GaloisRootDatum::components(const std::vector<int>& simples) const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> used(simples.size(), false);
  for (size_t i = 0; i < simples.size(); ++i) {
    if (used[i]) continue;
    std::vector<size_t> stack{i};
    used[i] = true;
    std::vector<int> comp;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(simples[cur]);
      for (size_t j = 0; j < simples.size(); ++j) {
        if (used[j]) continue;
        if (dot(roots[simples[cur]], coroots[simples[j]]) != 0) {
          used[j] = true;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

bool GaloisRootDatum::component_is_type_a(const std::vector<int>& comp) const {
  // A_k: the Cartan graph is a simple path with single bonds.
  const int k = int(comp.size());
  int edges = 0;
  for (int i = 0; i < k; ++i) {
    int deg = 0;
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      Int ab = dot(roots[comp[i]], coroots[comp[j]]);
      Int ba = dot(roots[comp[j]], coroots[comp[i]]);
      if (ab == 0 && ba == 0) continue;
      if (ab * ba != 1) return false;  // multiple bond
      ++deg;
      ++edges;
    }
    if (deg > 2) return false;
  }
  edges /= 2;
  return edges == k - 1;  // connected (given) and acyclic
}

std::pair<FgAbGroup, AbHom> cochar_coinvariants(const GaloisRootDatum& d) {
  FgAbGroup ambient(d.rank, IntMat(d.rank, 0));
  auto [xi, proj] = coinvariants(d.inertia_gens, ambient);
  // frobenius must descend (guaranteed by normalization; checked anyway)
  for (int j = 0; j < xi.relations().cols(); ++j)
    if (!xi.in_relation_lattice(d.frobenius * xi.relations().col(j)))
      throw internal_error("frobenius does not descend to coinvariants");
  return {xi, proj};
}

AbHom sc_coroot_lattice(const GaloisRootDatum& d, const LeviDatum& l) {
  auto [xi, proj] = cochar_coinvariants(d);
  return sc_coroot_lattice_for(d, l, xi);
}

AbHom sc_coroot_lattice_for(const GaloisRootDatum& d, const LeviDatum& l, const FgAbGroup& xi) {
  std::vector<int> simples = d.levi_simple_roots(l);
  const int k = int(simples.size());
  // inertia permutes the Levi's simple roots
  std::vector<IntMat> perm_mats;
  for (const auto& pi : d.inertia_perms) {
    IntMat p(k, k);
    for (int i = 0; i < k; ++i) {
      int img = pi[simples[i]];
      auto it = std::find(simples.begin(), simples.end(), img);
      if (it == simples.end())
        throw internal_error("inertia does not permute the Levi base");
      p(int(it - simples.begin()), i) = 1;
    }
    perm_mats.push_back(p);
  }
  FgAbGroup sc_ambient(k, IntMat(k, 0));
  auto [sc_coinv, sc_proj] = coinvariants(perm_mats, sc_ambient);
  std::vector<IVec> cols;
  for (int s : simples) cols.push_back(d.coroots[s]);
  AbHom h(sc_coinv, xi, IntMat::from_columns(d.rank, cols));
  if (!is_injective(h)) throw input_error("degenerate Levi lattice");
  return h;
}

SplitTorus split_rank_torus_twisted(const GaloisRootDatum& d, const FgAbGroup& xi,
                                    const AbHom& proj, const IntMat& sigma_on_free) {
  // inertia-invariant sublattice of X_*: kernel of the stacked (g-1)
  IntMat vert(0, d.rank);
  for (const auto& g : d.inertia_gens) vert = vert.vcat(g - IntMat::identity(d.rank));
  IntMat binv = vert.rows() ? kernel_lattice(vert) : IntMat::identity(d.rank);
  // free coordinates of the classes of the invariant basis
  const int t = xi.torsion_rank(), f = xi.free_rank();
  IntMat mb(f, binv.cols());
  for (int j = 0; j < binv.cols(); ++j) {
    IVec c = xi.canon(proj.apply_ambient(binv.col(j)));
    for (int i = 0; i < t; ++i)
      if (c[i] != 0) throw internal_error("invariant vector with torsion class");
    for (int i = 0; i < f; ++i) mb(i, j) = c[t + i];
  }
  IntMat cond = sigma_on_free * mb - mb;
  IntMat ker = kernel_lattice(cond);
  IntMat emb = binv * ker;
  SplitTorus a;
  a.embedding = lattice_basis(emb);
  a.group = FgAbGroup(a.embedding.cols(), IntMat(a.embedding.cols(), 0));
  return a;
}

IntMat frobenius_on_free(const GaloisRootDatum& d, const FgAbGroup& xi, const AbHom& proj) {
  const int t = xi.torsion_rank(), f = xi.free_rank();
  IntMat m(f, f);
  for (int j = 0; j < f; ++j) {
    IVec c(xi.coord_rank());
    c[t + j] = 1;
    IVec img = xi.canon(d.frobenius * xi.lift(c));
    for (int i = 0; i < f; ++i) m(i, j) = img[t + i];
  }
  return m;
}

SplitTorus split_rank_torus(const GaloisRootDatum& d) {
  auto [xi, proj] = cochar_coinvariants(d);
  return split_rank_torus_twisted(d, xi, proj, frobenius_on_free(d, xi, proj));
}

LeviDatum minimal_levi_for(const GaloisRootDatum& d, const SplitTorus& a) {
  std::vector<int> idx;
  for (int i = 0; i < int(d.roots.size()); ++i) {
    bool vanishes = true;
    for (int j = 0; j < a.embedding.cols() && vanishes; ++j)
      if (dot(d.roots[i], a.embedding.col(j)) != 0) vanishes = false;
    if (vanishes) idx.push_back(i);
  }
  LeviDatum l = d.levi_from_indices(idx, /*check_stable=*/false);
  l.is_minimal = true;
  return l;
}

LeviDatum minimal_levi(const GaloisRootDatum& d) {
  return minimal_levi_for(d, split_rank_torus(d));
}

int EchelonSystem::index_of_root(const IVec& covector) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == covector) return int(i);
  return -1;
}

std::vector<int> EchelonSystem::levi_subsystem(const GaloisRootDatum& d, const FgAbGroup& xi,
                                               const LeviDatum& l) const {
  // Sigma_M = Sigma intersected with the span of the descents of Phi_M.
  std::set<int> in(l.root_indices.begin(), l.root_indices.end());
  std::vector<IVec> span_gens;
  for (const auto& orbit : d.inertia_orbits) {
    if (!in.count(orbit[0])) continue;
    IVec sum(xi.free_rank());
    // descend the orbit-sum covector to free coordinates
    const int t = xi.torsion_rank();
    for (int j = 0; j < xi.free_rank(); ++j) {
      IVec e(xi.coord_rank());
      e[t + j] = 1;
      IVec amb = xi.lift(e);
      Int acc = 0;
      for (int i : orbit) acc += dot(d.roots[i], amb);
      sum[j] = acc;
    }
    span_gens.push_back(sum);
  }
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    IVec target = roots[i];
    if (rational_solve(span_gens, target)) out.push_back(i);
  }
  return out;
}

EchelonSystem echelonnage(const GaloisRootDatum& d, const FgAbGroup& xi, const AbHom& proj) {
  EchelonSystem sys;
  const int t = xi.torsion_rank(), f = xi.free_rank();

  // ambient lifts of the free coordinate directions
  std::vector<IVec> free_lift(f);
  for (int j = 0; j < f; ++j) {
    IVec e(xi.coord_rank());
    e[t + j] = 1;
    free_lift[j] = xi.lift(e);
  }
  auto descend_covector = [&](const IVec& r) {
    for (int c = 0; c < xi.relations().cols(); ++c)
      if (dot(r, xi.relations().col(c)) != 0)
        throw input_error("echelonnage covector does not vanish on the inertia relations");
    IVec out(f);
    for (int j = 0; j < f; ++j) out[j] = dot(r, free_lift[j]);
    return out;
  };
  auto project_vector = [&](const IVec& v) {
    IVec c = xi.canon(proj.apply_ambient(v));
    return IVec(c.begin() + t, c.end());
  };

  if (d.echelonnage_input) {
    const auto& in = *d.echelonnage_input;
    if (in.roots.size() != in.coroots.size())
      throw input_error("explicit echelonnage must pair roots with coroots");
    for (size_t i = 0; i < in.roots.size(); ++i) {
      sys.roots.push_back(descend_covector(in.roots[i]));
      sys.coroots.push_back(project_vector(in.coroots[i]));
    }
    sys.provenance = EchelonSystem::Provenance::explicit_input;
  } else {
    for (const auto& orbit : d.inertia_orbits) {
      if (!d.positive[orbit[0]]) continue;  // keep one covector per +/- pair here
      for (int i : orbit)
        if (d.positive[i] != d.positive[orbit[0]])
          throw internal_error("inertia orbit mixes signs");
    }
    // orbit sums descend; one projected coroot represents each orbit
    std::vector<IVec> descents;
    std::vector<IVec> co;
    for (const auto& orbit : d.inertia_orbits) {
      IVec sum(d.rank);
      for (int i : orbit) sum = sum + d.roots[i];
      descents.push_back(descend_covector(sum));
      IVec cls = project_vector(d.coroots[orbit[0]]);
      for (int i : orbit)
        if (project_vector(d.coroots[i]) != cls)
          throw internal_error("inertia orbit of coroots is not a single class");
      co.push_back(cls);
    }
    for (size_t a = 0; a < descents.size(); ++a)
      for (size_t b = 0; b < descents.size(); ++b) {
        if (a == b) continue;
        if (positively_proportional(descents[a], descents[b])) {
          std::ostringstream os;
          os << "echelonnage required: inertia orbits of roots #" << d.inertia_orbits[a][0]
             << " and #" << d.inertia_orbits[b][0]
             << " restrict to positively proportional covectors";
          throw input_error(os.str());
        }
      }
    sys.roots = descents;
    sys.coroots = co;
    sys.source_orbit = d.inertia_orbits;
    sys.provenance = EchelonSystem::Provenance::computed;
  }

  const int n = sys.size();
  // pairing normalization and reducedness
  for (int i = 0; i < n; ++i) {
    if (dot(sys.roots[i], sys.coroots[i]) != 2)
      throw input_error("echelonnage pair " + ordinal(i) + " has <a,a_vee> != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (sys.roots[i] == sys.roots[j])
        throw input_error("echelonnage has a duplicate root");
      if (positively_proportional(sys.roots[i], sys.roots[j]))
        throw input_error("echelonnage is not reduced");
    }
  }
  sys.neg_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    sys.neg_of[i] = sys.index_of_root(-sys.roots[i]);
    if (sys.neg_of[i] < 0 || sys.coroots[sys.neg_of[i]] != -sys.coroots[i])
      throw input_error("echelonnage not closed under negation");
  }

  // reflections permute the system
  sys.reflection_perm.assign(n, std::vector<int>(n, -1));
  for (int r = 0; r < n; ++r)
    for (int b = 0; b < n; ++b) {
      Int pair = dot(sys.roots[b], sys.coroots[r]);
      IVec img = sys.roots[b];
      for (int k = 0; k < f; ++k) img[k] -= pair * sys.roots[r][k];
      int idx = sys.index_of_root(img);
      if (idx < 0) throw input_error("echelonnage reflections do not permute the system");
      Int pair_co = dot(sys.roots[r], sys.coroots[b]);
      IVec img_co = sys.coroots[b];
      for (int k = 0; k < f; ++k) img_co[k] -= pair_co * sys.coroots[r][k];
      if (sys.coroots[idx] != img_co)
        throw input_error("echelonnage reflections break root/coroot matching");
      sys.reflection_perm[r][b] = idx;
    }

  // coroot lattice must equal the image of X_*(T_sc)_I in the free quotient
  if (!d.roots.empty()) {
    std::vector<IVec> sc_img;
    for (int s : d.levi_simple_roots(d.full_levi())) sc_img.push_back(project_vector(d.coroots[s]));
    IntMat lhs = lattice_basis(IntMat::from_columns(f, sys.coroots));
    IntMat rhs = lattice_basis(IntMat::from_columns(f, sc_img));
    auto contained = [&](const IntMat& a, const IntMat& b) {
      for (int j = 0; j < a.cols(); ++j)
        if (!solve_linear(b, a.col(j))) return false;
      return true;
    };
    if (!contained(lhs, rhs) || !contained(rhs, lhs))
      throw input_error("echelonnage coroot lattice differs from the simply-connected coroot image");
  }

  // positivity and the simple subset
  if (n > 0) {
    std::vector<bool> pos(n, false);
    if (sys.provenance == EchelonSystem::Provenance::computed) {
      int k = 0;
      for (size_t o = 0; o < d.inertia_orbits.size(); ++o, ++k) pos[k] = d.positive[d.inertia_orbits[o][0]];
    } else {
      IVec reg(f);
      for (int i = 0; i < int(d.roots.size()); ++i)
        if (d.positive[i]) reg = reg + project_vector(d.coroots[i]);
      for (int i = 0; i < n; ++i) {
        Int v = dot(sys.roots[i], reg);
        if (v == 0)
          throw input_error("explicit echelonnage root " + ordinal(i) +
                            " is not regular for the base");
        pos[i] = v > 0;
      }
    }
    sys.positive = pos;
    for (int a = 0; a < n; ++a) {
      if (!pos[a]) continue;
      bool decomposable = false;
      for (int b = 0; b < n && !decomposable; ++b) {
        if (!pos[b]) continue;
        for (int c = 0; c < n; ++c) {
          if (!pos[c]) continue;
          if (sys.roots[b] + sys.roots[c] == sys.roots[a]) { decomposable = true; break; }
        }
      }
      if (!decomposable) sys.simple.push_back(a);
    }
  } else {
    sys.positive.clear();
  }

  // finite Weyl group (enumerated; throws past the cap)
  enumerate_weyl_perms(sys);
  return sys;
}

std::vector<std::vector<int>> enumerate_weyl_perms(const EchelonSystem& sigma, size_t cap) {
  const int n = sigma.size();
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::vector<std::vector<int>> group{id};
  std::set<std::vector<int>> seen{id};
  size_t head = 0;
  while (head < group.size()) {
    std::vector<int> cur = group[head++];
    for (int s : sigma.simple) {
      std::vector<int> nxt(n);
      for (int i = 0; i < n; ++i) nxt[i] = sigma.reflection_perm[s][cur[i]];
      if (seen.insert(nxt).second) {
        group.push_back(nxt);
        if (group.size() > cap)
          throw input_error("echelonnage Weyl group exceeds the enumeration cap");
      }
    }
  }
  return group;
}

}  // namespace satake
