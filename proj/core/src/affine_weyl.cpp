#include "satake/affine_weyl.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace satake {

namespace {

void require_same_ctx(const AffineElement& a, const AffineElement& b) {
  if (a.ctx != b.ctx || a.ctx == nullptr)
    throw input_error("affine elements belong to different groups");
}

QVec rational_matvec(const IntMat& m, const QVec& v) {
  QVec out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rat acc = 0;
    for (int j = 0; j < m.cols(); ++j) acc += Rat(m(i, j)) * v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace

WeylGroup::WeylGroup(const EchelonSystem& sigma, const FgAbGroup& xi)
    : sigma_(&sigma), torsion_rank_(xi.torsion_rank()) {
  const int n = sigma.size();
  const int f = xi.free_rank();
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  perm_.push_back(id);
  act_free_.push_back(IntMat::identity(f));
  index_[id] = 0;

  // generator data: reflection permutation and action matrix per Sigma-root
  auto refl_matrix = [&](int r) {
    IntMat m = IntMat::identity(f);
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f; ++j) m(i, j) -= sigma.coroots[r][i] * sigma.roots[r][j];
    return m;
  };

  size_t head = 0;
  while (head < perm_.size()) {
    const size_t cur = head++;
    for (int s : sigma.simple) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = sigma.reflection_perm[s][perm_[cur][i]];
      auto [it, fresh] = index_.try_emplace(p, int(perm_.size()));
      if (fresh) {
        perm_.push_back(p);
        act_free_.push_back(refl_matrix(s) * act_free_[cur]);
      }
    }
  }

  inv_.resize(size());
  for (int a = 0; a < size(); ++a) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[perm_[a][i]] = i;
    auto it = index_.find(p);
    if (it == index_.end()) throw internal_error("Weyl group not closed under inversion");
    inv_[a] = it->second;
  }
  simple_elt_.clear();
  for (int s : sigma.simple) {
    auto it = index_.find(sigma.reflection_perm[s]);
    if (it == index_.end()) throw internal_error("simple reflection missing from table");
    simple_elt_.push_back(it->second);
  }
  refl_elt_.resize(n);
  for (int r = 0; r < n; ++r) {
    auto it = index_.find(sigma.reflection_perm[r]);
    if (it == index_.end()) throw internal_error("reflection missing from Weyl table");
    refl_elt_[r] = it->second;
  }
}

int WeylGroup::mul(int a, int b) const {
  const auto& pa = perm_[a];
  const auto& pb = perm_[b];
  std::vector<int> p(pa.size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = pa[pb[i]];
  auto it = index_.find(p);
  if (it == index_.end()) throw internal_error("Weyl group not closed under product");
  return it->second;
}

int WeylGroup::from_perm(const std::vector<int>& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::length(int a) const {
  int len = 0;
  for (int i = 0; i < int(perm_[a].size()); ++i)
    if (sigma_->positive[i] && !sigma_->positive[perm_[a][i]]) ++len;
  return len;
}

std::vector<int> WeylGroup::reduced_word(int a) const {
  std::vector<int> word;
  int cur = a;
  while (cur != identity()) {
    bool moved = false;
    for (int k = 0; k < int(simple_elt_.size()); ++k) {
      int next = mul(simple_elt_[k], cur);
      if (length(next) < length(cur)) {
        word.push_back(k);
        cur = next;
        moved = true;
        break;
      }
    }
    if (!moved) throw internal_error("no descent found for a non-identity element");
  }
  return word;
}

IVec WeylGroup::act(int a, const IVec& canonical) const {
  IVec out = canonical;
  const IntMat& m = act_free_[a];
  IVec free_in(canonical.begin() + torsion_rank_, canonical.end());
  IVec free_out = m * free_in;
  for (size_t i = 0; i < free_out.size(); ++i) out[torsion_rank_ + i] = free_out[i];
  return out;
}

bool IwahoriWeyl::LeviContext::contains_weyl(int w) const {
  return std::binary_search(weyl_elements.begin(), weyl_elements.end(), w);
}

namespace {

// simples of a subsystem: indecomposable positives among the subset
std::vector<int> subsystem_simples(const EchelonSystem& sys, const std::vector<int>& subset) {
  std::vector<int> pos;
  for (int i : subset)
    if (sys.positive[i]) pos.push_back(i);
  std::vector<int> simples;
  for (int a : pos) {
    bool dec = false;
    for (int b : pos) {
      if (dec) break;
      for (int c : pos)
        if (sys.roots[b] + sys.roots[c] == sys.roots[a]) { dec = true; break; }
    }
    if (!dec) simples.push_back(a);
  }
  return simples;
}

// connected components of a subsystem given by its simples
std::vector<std::vector<int>> sigma_components(const EchelonSystem& sys,
                                               const std::vector<int>& simples) {
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
        if (dot(sys.roots[simples[cur]], sys.coroots[simples[j]]) != 0) {
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

// highest root of one component (unique positive root of maximal height)
int highest_root(const EchelonSystem& sys, const std::vector<int>& subset,
                 const std::vector<int>& comp_simples) {
  std::vector<IVec> basis;
  for (int s : comp_simples) basis.push_back(sys.roots[s]);
  int best = -1;
  Rat best_height = 0;
  for (int r : subset) {
    if (!sys.positive[r]) continue;
    auto coeffs = rational_solve(basis, sys.roots[r]);
    if (!coeffs) continue;  // different component
    Rat h = 0;
    for (const auto& c : *coeffs) h += c;
    if (best < 0 || h > best_height) {
      best = r;
      best_height = h;
    }
  }
  if (best < 0) throw internal_error("component without a highest root");
  return best;
}

}  // namespace

std::shared_ptr<const IwahoriWeyl> IwahoriWeyl::build(const GaloisRootDatum& d,
                                                      bool apply_twist) {
  std::shared_ptr<IwahoriWeyl> ctx(new IwahoriWeyl());
  ctx->datum_ = d;
  auto [xi, proj] = cochar_coinvariants(d);
  ctx->xi_ = xi;
  ctx->proj_ = proj;
  ctx->sigma_sys_ = echelonnage(d, xi, proj);
  ctx->weyl_ = WeylGroup(ctx->sigma_sys_, xi);
  ctx->frob_free_ = frobenius_on_free(d, xi, proj);
  ctx->frob_on_xi_ = AbHom(xi, xi, d.frobenius);

  ctx->twisted_ = apply_twist && d.inner_twist.has_value();
  if (ctx->twisted_) {
    LeviDatum tl = d.levi_from_indices(d.inner_twist->levi);
    std::vector<int> sub = ctx->sigma_sys_.levi_subsystem(d, xi, tl);
    std::vector<int> simples = subsystem_simples(ctx->sigma_sys_, sub);
    int w = ctx->weyl_.identity();
    for (int letter : d.inner_twist->w_sigma) {
      if (letter < 0 || letter >= int(simples.size()))
        throw input_error("w_sigma letter out of range for the Levi base");
      w = ctx->weyl_.mul(w, ctx->weyl_.reflection(simples[letter]));
    }
    ctx->w_sigma_ = w;
  } else {
    ctx->w_sigma_ = ctx->weyl_.identity();
  }
  ctx->sigma_free_ = ctx->weyl_.action_free(ctx->w_sigma_) * ctx->frob_free_;
  ctx->split_torus_ = split_rank_torus_twisted(d, xi, proj, ctx->sigma_free_);

  ctx->full_ = ctx->build_levi(d.full_levi());
  LeviDatum min_l = minimal_levi_for(d, ctx->split_torus_);
  if (ctx->twisted_) {
    std::vector<int> want = d.inner_twist->levi;
    std::sort(want.begin(), want.end());
    if (want != min_l.root_indices)
      throw input_error("inner twist levi is not the minimal Levi of the twisted datum");
  }
  ctx->minimal_ = ctx->build_levi(min_l);
  ctx->build_sigma_machinery();
  return ctx;
}

IwahoriWeyl::LeviContext IwahoriWeyl::build_levi(const LeviDatum& l) const {
  LeviContext out;
  out.levi = l;
  out.sigma_roots = sigma_sys_.levi_subsystem(datum_, xi_, l);
  out.sigma_simples = subsystem_simples(sigma_sys_, out.sigma_roots);

  // W(M,S): closure of the Levi's simple reflections
  {
    std::set<int> seen{weyl_.identity()};
    std::vector<int> queue{weyl_.identity()};
    for (size_t h = 0; h < queue.size(); ++h)
      for (int s : out.sigma_simples) {
        int nxt = weyl_.mul(weyl_.reflection(s), queue[h]);
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
    out.weyl_elements.assign(seen.begin(), seen.end());
  }

  // kappa: X_I modulo the image of the Levi's simply-connected coroots
  IntMat rels = xi_.relations();
  for (int s : datum_.levi_simple_roots(l))
    rels = rels.hcat(IntMat::from_columns(datum_.rank, {datum_.coroots[s]}));
  out.kottwitz_group = FgAbGroup(datum_.rank, rels);
  out.kappa = AbHom(xi_, out.kottwitz_group, IntMat::identity(datum_.rank));

  // walls of the M-alcove: finite simples plus one affine wall per component
  for (int s : out.sigma_simples) out.affine_simples.push_back({xi_.zero(), weyl_.reflection(s)});
  for (const auto& comp : sigma_components(sigma_sys_, out.sigma_simples)) {
    int theta = highest_root(sigma_sys_, out.sigma_roots, comp);
    IVec nu = xi_.zero();
    for (int i = 0; i < xi_.free_rank(); ++i)
      nu[xi_.torsion_rank() + i] = sigma_sys_.coroots[theta][i];
    out.affine_simples.push_back({nu, weyl_.reflection(theta)});
  }
  return out;
}

IwahoriWeyl::LeviContext IwahoriWeyl::make_levi(const LeviDatum& l) const {
  return build_levi(l);
}

void IwahoriWeyl::build_sigma_machinery() {
  const int f = xi_.free_rank();
  const int n = sigma_sys_.size();
  IntMat sinv = inverse_unimodular(sigma_free_);

  // sigma permutes the echelonnage roots: a -> a o S^{-1}
  std::vector<int> pi(n, -1), pi_inv(n, -1);
  for (int i = 0; i < n; ++i) {
    IVec img(f);
    for (int j = 0; j < f; ++j) {
      Int acc = 0;
      for (int k = 0; k < f; ++k) acc += sigma_sys_.roots[i][k] * sinv(k, j);
      img[j] = acc;
    }
    pi[i] = sigma_sys_.index_of_root(img);
    if (pi[i] < 0 || sigma_free_ * sigma_sys_.coroots[i] != sigma_sys_.coroots[pi[i]])
      throw input_error("non-pinned frobenius: the twisted action does not permute the echelonnage");
  }
  for (int i = 0; i < n; ++i) pi_inv[pi[i]] = i;

  conj_sigma_.resize(weyl_.size());
  for (int w = 0; w < weyl_.size(); ++w) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = pi[weyl_.perm(w)[pi_inv[i]]];
    int idx = weyl_.from_perm(p);
    if (idx < 0) throw internal_error("sigma conjugation leaves the Weyl table");
    conj_sigma_[w] = idx;
  }

  // barycenter of the fundamental alcove (free coordinates)
  std::vector<int> all_roots(n);
  for (int i = 0; i < n; ++i) all_roots[i] = i;

  barycenter_.assign(f, Rat(0));
  for (const auto& comp : sigma_components(sigma_sys_, sigma_sys_.simple)) {
    int theta = highest_root(sigma_sys_, all_roots, comp);
    const int k = int(comp.size());
    // fundamental coweights of the component inside its coroot span
    std::vector<QVec> vertices;
    for (int i = 0; i < k; ++i) {
      // u = sum_j x_j coroot_j with <a_t, u> = delta_{ti}
      std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1));
      for (int t = 0; t < k; ++t) {
        for (int j = 0; j < k; ++j)
          m[t][j] = Rat(dot(sigma_sys_.roots[comp[t]], sigma_sys_.coroots[comp[j]]));
        m[t][k] = (t == i) ? 1 : 0;
      }
      // solve the k x k system by elimination
      for (int c = 0; c < k; ++c) {
        int p = -1;
        for (int r = c; r < k; ++r)
          if (m[r][c] != 0) { p = r; break; }
        if (p < 0) throw internal_error("degenerate component Cartan matrix");
        std::swap(m[c], m[p]);
        Rat pv = m[c][c];
        for (int j = 0; j <= k; ++j) m[c][j] /= pv;
        for (int r = 0; r < k; ++r) {
          if (r == c || m[r][c] == 0) continue;
          Rat fac = m[r][c];
          for (int j = 0; j <= k; ++j) m[r][j] -= fac * m[c][j];
        }
      }
      QVec u(f, Rat(0));
      for (int j = 0; j < k; ++j)
        for (int t = 0; t < f; ++t) u[t] += m[j][k] * Rat(sigma_sys_.coroots[comp[j]][t]);
      // scale to the wall <theta, v> = 1
      Rat tu = 0;
      for (int t = 0; t < f; ++t) tu += Rat(sigma_sys_.roots[theta][t]) * u[t];
      for (auto& x : u) x /= tu;
      vertices.push_back(u);
    }
    for (int t = 0; t < f; ++t) {
      Rat s = 0;
      for (const auto& v : vertices) s += v[t];
      barycenter_[t] += s / Rat(k + 1);
    }
  }

  QVec sb = rational_matvec(sigma_free_, barycenter_);
  QVec mu0(f);
  for (int t = 0; t < f; ++t) mu0[t] = barycenter_[t] - sb[t];

  // the affine transformation t_{mu0} o S must permute the simple affine
  // roots (the walls of the base alcove)
  {
    std::vector<std::pair<int, Int>> walls;  // (sigma root index, offset k)
    for (int s : sigma_sys_.simple) walls.push_back({s, Int(0)});
    for (const auto& comp : sigma_components(sigma_sys_, sigma_sys_.simple)) {
      int theta = highest_root(sigma_sys_, all_roots, comp);
      walls.push_back({sigma_sys_.neg_of[theta], Int(1)});
    }
    std::set<std::pair<int, Int>> want(walls.begin(), walls.end());
    std::set<std::pair<int, Int>> got;
    for (const auto& [r, k] : walls) {
      int r2 = pi[r];
      Rat shift = 0;
      for (int t = 0; t < f; ++t) shift += Rat(sigma_sys_.roots[r2][t]) * mu0[t];
      Rat k2 = Rat(k) - shift;
      if (denominator(k2) != 1)
        throw input_error("non-pinned frobenius: base alcove not preserved");
      got.insert({r2, numerator(k2)});
    }
    if (got != want) throw input_error("non-pinned frobenius: base alcove not preserved");
  }

  // correction cocycle mu0 - w'(mu0), integral for every Weyl element
  sigma_corr_.resize(weyl_.size());
  for (int w = 0; w < weyl_.size(); ++w) {
    QVec wm = rational_matvec(weyl_.action_free(w), mu0);
    IVec corr(f);
    for (int t = 0; t < f; ++t) {
      Rat x = mu0[t] - wm[t];
      if (denominator(x) != 1)
        throw input_error("non-pinned frobenius: base alcove not preserved");
      corr[t] = numerator(x);
    }
    sigma_corr_[w] = corr;
  }
}

IVec IwahoriWeyl::sigma_sharp(const IVec& canonical) const {
  return weyl_.act(w_sigma_, frob_on_xi_.apply(canonical));
}

AffineElement IwahoriWeyl::sigma_act(const AffineElement& x) const {
  if (x.ctx != this) throw input_error("affine element from another group");
  int w2 = conj_sigma_[x.w];
  IVec nu2 = sigma_sharp(x.nu);
  IVec corr = xi_.zero();
  for (int t = 0; t < xi_.free_rank(); ++t)
    corr[xi_.torsion_rank() + t] = sigma_corr_[w2][t];
  return {this, xi_.add(nu2, corr), w2};
}

bool IwahoriWeyl::sigma_fixed(const AffineElement& x) const { return sigma_act(x) == x; }

IVec IwahoriWeyl::sigma_on_kottwitz(const LeviContext& l, const IVec& cls) const {
  IVec nu = xi_.canon(l.kottwitz_group.lift(cls));
  return l.kappa.apply(sigma_sharp(nu));
}

Int IwahoriWeyl::length_in(const LeviContext& l, const AffineElement& x) const {
  if (x.ctx != this) throw input_error("affine element from another group");
  Int total = 0;
  const auto& winv = weyl_.perm(weyl_.inv(x.w));
  IVec free(x.nu.begin() + xi_.torsion_rank(), x.nu.end());
  for (int i : l.sigma_roots) {
    if (!sigma_sys_.positive[i]) continue;
    Int pair = dot(sigma_sys_.roots[i], free);
    if (sigma_sys_.positive[winv[i]]) total += abs(pair);
    else total += abs(pair - 1);
  }
  return total;
}

IVec IwahoriWeyl::kottwitz_in(const LeviContext& l, const AffineElement& x) const {
  if (x.ctx != this) throw input_error("affine element from another group");
  return l.kappa.apply(x.nu);
}

AffineElement IwahoriWeyl::apply_affine_simple(const AffineReflection& s, const AffineElement& x,
                                               bool left) const {
  AffineElement refl{this, s.nu, s.w};
  return left ? refl * x : x * refl;
}

OmegaClass IwahoriWeyl::omega_representative_in(const LeviContext& l, const IVec& cls) const {
  AffineElement x = translation(xi_.canon(l.kottwitz_group.lift(cls)));
  Int len = length_in(l, x);
  while (len > 0) {
    bool moved = false;
    for (const auto& s : l.affine_simples) {
      AffineElement y = apply_affine_simple(s, x, /*left=*/true);
      Int ylen = length_in(l, y);
      if (ylen < len) {
        x = y;
        len = ylen;
        moved = true;
        break;
      }
    }
    if (!moved) throw internal_error("no descent while reducing to the length-zero element");
  }
  if (kottwitz_in(l, x) != cls)
    throw internal_error("omega representative changed its Kottwitz class");
  return {x, cls};
}

std::pair<AffineElement, AffineElement> IwahoriWeyl::quasi_coxeter_parts(
    const AffineElement& x) const {
  OmegaClass om = omega_representative_in(full_, kottwitz_in(full_, x));
  AffineElement aff = x * inverse(om.representative);
  if (kottwitz_in(full_, aff) != full_.kottwitz_group.zero())
    throw internal_error("affine part has a nonzero Kottwitz class");
  return {aff, om.representative};
}

bool IwahoriWeyl::bruhat_leq(const AffineElement& x, const AffineElement& y) const {
  if (x.ctx != this || y.ctx != this) throw input_error("affine element from another group");
  auto [xa, ox] = quasi_coxeter_parts(x);
  auto [ya, oy] = quasi_coxeter_parts(y);
  if (ox != oy) return false;

  std::lock_guard<std::mutex> lock(bruhat_mutex_);
  // descent recursion on the W_aff parts, memoized
  std::function<bool(const AffineElement&, const AffineElement&)> leq =
      [&](const AffineElement& a, const AffineElement& b) -> bool {
    if (a == b) return true;
    Int la = length(a), lb = length(b);
    if (la >= lb) return false;
    auto key = std::make_pair(a, b);
    auto it = bruhat_memo_.find(key);
    if (it != bruhat_memo_.end()) return it->second;
    // find a left descent of b
    const AffineReflection* desc = nullptr;
    AffineElement sb = b;
    for (const auto& s : full_.affine_simples) {
      AffineElement cand = apply_affine_simple(s, b, true);
      if (length(cand) < lb) {
        desc = &s;
        sb = cand;
        break;
      }
    }
    if (!desc) throw internal_error("length-positive element without descent");
    AffineElement sa = apply_affine_simple(*desc, a, true);
    bool res = (length(sa) < la) ? leq(sa, sb) : leq(a, sb);
    bruhat_memo_.emplace(key, res);
    return res;
  };
  return leq(xa, ya);
}

AffineElement IwahoriWeyl::min_double_coset(const AffineElement& x) const {
  if (x.ctx != this) throw input_error("affine element from another group");
  AffineElement cur = x;
  Int len = length(cur);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : full_.sigma_simples) {
      AffineElement refl = from_weyl(weyl_.reflection(s));
      AffineElement l = refl * cur;
      if (length(l) < len) {
        cur = l;
        len = length(cur);
        moved = true;
        break;
      }
      AffineElement r = cur * refl;
      if (length(r) < len) {
        cur = r;
        len = length(cur);
        moved = true;
        break;
      }
    }
  }
  return cur;
}

bool IwahoriWeyl::in_levi_group(const LeviContext& l, const AffineElement& x) const {
  return l.contains_weyl(x.w);
}

std::vector<AffineElement> IwahoriWeyl::affine_ball(const Int& length_bound) const {
  std::vector<AffineElement> out;
  std::set<AffineElement> seen;
  AffineElement e = identity_elt();
  out.push_back(e);
  seen.insert(e);
  size_t head = 0;
  while (head < out.size()) {
    AffineElement cur = out[head++];
    for (const auto& s : full_.affine_simples) {
      AffineElement nxt = apply_affine_simple(s, cur, true);
      if (length(nxt) > length_bound) continue;
      if (seen.insert(nxt).second) out.push_back(nxt);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineElement> IwahoriWeyl::omega_elements(std::optional<Int> omega_bound) const {
  const FgAbGroup& q = full_.kottwitz_group;
  if (q.free_rank() > 0 && !omega_bound)
    throw input_error("bound required: the length-zero subgroup is infinite");
  std::vector<AffineElement> out;
  for (const IVec& cls : q.elements_in_box(omega_bound.value_or(0)))
    out.push_back(omega_representative_in(full_, cls).representative);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineElement> IwahoriWeyl::enumerate_ball(const Int& length_bound,
                                                       std::optional<Int> omega_bound) const {
  std::vector<AffineElement> out;
  for (const auto& omega : omega_elements(omega_bound))
    for (const auto& aff : affine_ball(length_bound)) out.push_back(aff * omega);
  std::sort(out.begin(), out.end());
  return out;
}

bool IwahoriWeyl::is_cuspidal(int w, const std::vector<int>& subsystem_roots) const {
  // no nonzero fixed vector on the span of the subsystem coroots:
  // rank((w-1)*B) == rank(B)
  std::vector<IVec> cols;
  for (int r : subsystem_roots) cols.push_back(sigma_sys_.coroots[r]);
  IntMat b = IntMat::from_columns(xi_.free_rank(), cols);
  IntMat moved = (weyl_.action_free(w) - IntMat::identity(xi_.free_rank())) * b;
  return snf(moved).rank() == snf(b).rank();
}

bool IwahoriWeyl::is_coxeter(int w, const std::vector<int>& subsystem_simples) const {
  const int k = int(subsystem_simples.size());
  if (k == 0) return w == weyl_.identity();
  // products of all simple reflections in every order
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::set<int> coxeter_elts;
  do {
    int p = weyl_.identity();
    for (int i : order) p = weyl_.mul(p, weyl_.reflection(subsystem_simples[i]));
    coxeter_elts.insert(p);
  } while (std::next_permutation(order.begin(), order.end()));
  // conjugacy within the subsystem's Weyl group
  std::set<int> seen{weyl_.identity()};
  std::vector<int> queue{weyl_.identity()};
  for (size_t h = 0; h < queue.size(); ++h)
    for (int s : subsystem_simples) {
      int nxt = weyl_.mul(weyl_.reflection(s), queue[h]);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  for (int u : queue) {
    int conj = weyl_.mul(weyl_.mul(u, w), weyl_.inv(u));
    if (coxeter_elts.count(conj)) return true;
  }
  return false;
}

AffineElement operator*(const AffineElement& a, const AffineElement& b) {
  require_same_ctx(a, b);
  const IwahoriWeyl& ctx = *a.ctx;
  IVec nu = ctx.xi().add(a.nu, ctx.weyl().act(a.w, b.nu));
  return {a.ctx, std::move(nu), ctx.weyl().mul(a.w, b.w)};
}

AffineElement inverse(const AffineElement& a) {
  if (!a.ctx) throw input_error("affine element without a group");
  const IwahoriWeyl& ctx = *a.ctx;
  int winv = ctx.weyl().inv(a.w);
  return {a.ctx, ctx.xi().neg(ctx.weyl().act(winv, a.nu)), winv};
}

}  // namespace satake
