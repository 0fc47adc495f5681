#pragma once

// Subdivision: the nondegenerate-simplex subdivision sd0 with its marked
// variant, levels of the discrete Q functor, truncated levels of the
// factorization functor F, and the fiber certificates for the levelwise
// comparison beta: F -> Q.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scx/category.hpp"
#include "scx/decor.hpp"
#include "scx/homology.hpp"
#include "scx/maps.hpp"
#include "scx/sset.hpp"

namespace scx {

// Monotone maps [a] -> [b].
inline std::vector<std::vector<int>> monotone_maps(int a, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == a + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= b; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// x o u for a monotone vertex map u: [a] -> [dim x], in normal form.
inline SimplexRef pullback(const FiniteSimplicialSet& X, const SimplexRef& x,
                           const std::vector<int>& u) {
  std::vector<int> image;
  for (int v : u)
    if (image.empty() || image.back() != v) image.push_back(v);
  SimplexRef core = X.restrict(x, image);
  SimplexRef out = core;
  for (std::size_t i = 1; i < u.size(); ++i)
    if (u[i] == u[i - 1]) out = X.degeneracy(out, static_cast<int>(i) - 1);
  return out;
}

// Condition (*): every face of a nondegenerate simplex is nondegenerate.
// Returns a witness generator label on failure.
inline std::optional<std::string> star_condition_witness(
    const FiniteSimplicialSet& X) {
  for (int d = 1; d <= X.top_dim(); ++d)
    for (int g = 0; g < X.num_generators(d); ++g)
      for (int k = 0; k <= d; ++k)
        if (X.face(SimplexRef{d, g, {}}, k).degenerate())
          return X.label(d, g);
  return std::nullopt;
}

struct SubdividedComplex {
  FiniteSimplicialSet base;
  std::vector<int> dim_labels;  // per vertex: dimension of the named simplex
  std::set<int> marking;        // edge generators (sd+ variants only)
  bool has_marking = false;
};

// Face category of the nondegenerate simplices: morphisms sigma -> tau are
// the vertex subsets S of sigma with restriction tau.
struct FaceCategory {
  FinCategory cat;
  std::vector<std::pair<int, int>> obj_simplex;       // (dim, gen)
  std::vector<std::vector<int>> morph_subset;         // per morphism
};

inline FaceCategory face_category(const FiniteSimplicialSet& X) {
  if (auto w = star_condition_witness(X))
    throw PreconditionError("subdivision: face of " + *w + " is degenerate");
  FaceCategory F;
  std::map<std::pair<int, int>, int> obj_id;
  for (int d = 0; d <= X.top_dim(); ++d)
    for (int g = 0; g < X.num_generators(d); ++g) {
      obj_id[{d, g}] = F.cat.add_object(X.label(d, g));
      F.obj_simplex.push_back({d, g});
    }
  // Identities correspond to full subsets.
  F.morph_subset.assign(F.cat.num_morphisms(), {});
  for (int o = 0; o < F.cat.num_objects(); ++o) {
    auto [d, g] = F.obj_simplex[o];
    std::vector<int> full;
    for (int v = 0; v <= d; ++v) full.push_back(v);
    F.morph_subset[F.cat.identity[o]] = full;
  }
  std::map<std::tuple<int, int, std::vector<int>>, int> morph_id;
  for (int o = 0; o < F.cat.num_objects(); ++o)
    morph_id[{o, o, F.morph_subset[F.cat.identity[o]]}] = F.cat.identity[o];
  // Proper subsets give the nonidentity morphisms.
  for (int o = 0; o < F.cat.num_objects(); ++o) {
    auto [d, g] = F.obj_simplex[o];
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
      if (!cur.empty() && static_cast<int>(cur.size()) != d + 1)
        subsets.push_back(cur);
      if (static_cast<int>(cur.size()) == d + 1) return;
      for (int v = lo; v <= d; ++v) {
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
    for (const auto& S : subsets) {
      SimplexRef tau = X.restrict(SimplexRef{d, g, {}}, S);
      int to = obj_id.at({tau.gdim, tau.gen});
      std::string lbl = X.label(d, g) + "|";
      for (int v : S) lbl += std::to_string(v);
      int mid = F.cat.add_morphism(lbl, o, to);
      F.morph_subset.push_back(S);
      morph_id[{o, to, S}] = mid;
    }
  }
  // Composition: reindex subsets.
  for (int m1 = 0; m1 < F.cat.num_morphisms(); ++m1)
    for (int m2 = 0; m2 < F.cat.num_morphisms(); ++m2) {
      if (F.cat.morphisms[m1].tgt != F.cat.morphisms[m2].src) continue;
      const auto& S1 = F.morph_subset[m1];
      const auto& S2 = F.morph_subset[m2];
      std::vector<int> S;
      for (int idx : S2) S.push_back(S1[idx]);
      int src = F.cat.morphisms[m1].src, tgt = F.cat.morphisms[m2].tgt;
      F.cat.set_composite(m2, m1, morph_id.at({src, tgt, S}));
    }
  return F;
}

inline SubdividedComplex sd0(const FiniteSimplicialSet& X) {
  auto F = face_category(X);
  F.cat.validate();
  SubdividedComplex out;
  out.base = nerve(F.cat, std::max(X.top_dim(), 0));
  for (int o = 0; o < F.cat.num_objects(); ++o)
    out.dim_labels.push_back(F.obj_simplex[o].first);
  return out;
}

// Marked variant: an edge sigma -> tau is marked when the vertex subset is
// convex, or when it is the long edge {0,2} of a thin 2-simplex.
inline SubdividedComplex sd_plus0(const ScaledSSet& Xbar) {
  auto F = face_category(Xbar.base);
  SubdividedComplex out;
  out.base = nerve(F.cat, std::max(Xbar.base.top_dim(), 0));
  out.has_marking = true;
  for (int o = 0; o < F.cat.num_objects(); ++o)
    out.dim_labels.push_back(F.obj_simplex[o].first);
  for (int m = 0; m < F.cat.num_morphisms(); ++m) {
    if (F.cat.is_identity(m)) continue;
    const auto& S = F.morph_subset[m];
    bool convex = S.back() - S.front() == static_cast<int>(S.size()) - 1;
    bool thin_long_edge = false;
    auto [d, g] = F.obj_simplex[F.cat.morphisms[m].src];
    if (d == 2 && S == std::vector<int>{0, 2})
      thin_long_edge = Xbar.decorated.count(g) > 0;
    if (!convex && !thin_long_edge) continue;
    auto e = out.base.label_index(1, F.cat.morphisms[m].label);
    if (!e) throw ScxError("sd_plus0: nerve edge not found");
    out.marking.insert(*e);
  }
  return out;
}

// Independent chain-count oracle for sd0 of a standard simplex: strict
// chains of k+1 nonempty faces of Delta^n.
inline std::vector<long long> simplex_face_chain_counts(int n) {
  // faces <-> nonempty subsets of [n]; chains ordered by strict inclusion
  int full = (1 << (n + 1)) - 1;
  std::vector<long long> counts;  // per chain length - 1
  std::vector<long long> cur(full + 1, 0);
  for (int s = 1; s <= full; ++s) cur[s] = 1;
  while (true) {
    long long total = 0;
    for (int s = 1; s <= full; ++s) total += cur[s];
    if (total == 0) break;
    counts.push_back(total);
    std::vector<long long> next(full + 1, 0);
    for (int s = 1; s <= full; ++s) {
      if (cur[s] == 0) continue;
      for (int t = s + 1; t <= full; ++t)
        if ((s & ~t) == 0 && s != t) next[t] += cur[s];
    }
    cur = next;
  }
  return counts;
}

// Levels of the discrete functor Q: all n-simplices in normal form.
inline std::vector<std::vector<SimplexRef>> q_levels(
    const FiniteSimplicialSet& X, int n_max) {
  std::vector<std::vector<SimplexRef>> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(X.all_simplices(n));
  return out;
}

// The factorization category at level n: objects are factorizations
// Delta^n -> Delta^k -> X with k <= k_bound; morphisms commute with both
// structure maps.
struct FactorizationCategory {
  FinCategory cat;
  std::vector<std::pair<std::vector<int>, SimplexRef>> objects;  // (f, tau)
  std::vector<SimplexRef> composite;  // tau o f per object: the beta index
};

inline FactorizationCategory factorization_category(
    const FiniteSimplicialSet& X, int n, int k_bound,
    std::optional<SimplexRef> fiber = std::nullopt) {
  FactorizationCategory F;
  std::map<std::pair<std::vector<int>, SimplexRef>, int> obj_id;
  for (int k = 0; k <= k_bound; ++k) {
    auto fs = monotone_maps(n, k);
    auto taus = X.all_simplices(k);
    for (const auto& f : fs)
      for (const auto& tau : taus) {
        SimplexRef sigma = pullback(X, tau, f);
        if (fiber && !(sigma == *fiber)) continue;
        std::string lbl = "f";
        for (int v : f) lbl += std::to_string(v);
        lbl += "|" + X.label(tau);
        obj_id[{f, tau}] = F.cat.add_object(lbl);
        F.objects.push_back({f, tau});
        F.composite.push_back(sigma);
      }
  }
  // Morphisms: g with g o f = f' and tau' o g = tau.  Both squares force the
  // two factorizations to share the composite, so enumeration stays within
  // beta fibers.
  std::map<std::tuple<int, int, std::vector<int>>, int> morph_id;
  for (int a = 0; a < static_cast<int>(F.objects.size()); ++a)
    for (int b = 0; b < static_cast<int>(F.objects.size()); ++b) {
      if (!(F.composite[a] == F.composite[b])) continue;
      const auto& [f1, tau1] = F.objects[a];
      const auto& [f2, tau2] = F.objects[b];
      int k1 = tau1.dim(), k2 = tau2.dim();
      for (const auto& g : monotone_maps(k1, k2)) {
        bool ok = true;
        for (std::size_t v = 0; v < f1.size() && ok; ++v)
          if (g[f1[v]] != f2[v]) ok = false;
        if (!ok) continue;
        if (!(pullback(X, tau2, g) == tau1)) continue;
        bool is_id = a == b && k1 == k2;
        if (is_id)
          for (int v = 0; v <= k1; ++v)
            if (g[v] != v) is_id = false;
        if (is_id) {
          morph_id[{a, b, g}] = F.cat.identity[a];
          continue;
        }
        std::string lbl = "g" + std::to_string(a) + ">" + std::to_string(b);
        for (int v : g) lbl += std::to_string(v);
        morph_id[{a, b, g}] = F.cat.add_morphism(lbl, a, b);
      }
    }
  for (const auto& [key1, m1] : morph_id)
    for (const auto& [key2, m2] : morph_id) {
      if (std::get<1>(key1) != std::get<0>(key2)) continue;
      const auto& g1 = std::get<2>(key1);
      const auto& g2 = std::get<2>(key2);
      std::vector<int> g;
      for (int v : g1) g.push_back(g2[v]);
      F.cat.set_composite(m2, m1,
                          morph_id.at({std::get<0>(key1), std::get<1>(key2), g}));
    }
  return F;
}

struct FLevelResult {
  FiniteSimplicialSet complex;  // nerve of the opposite category, truncated
  std::vector<SimplexRef> beta;  // per vertex: its n-simplex of X
  int num_components = 0;
};

inline FLevelResult f_level(const FiniteSimplicialSet& X, int n, int k_bound,
                            int nerve_bound = 1) {
  auto F = factorization_category(X, n, k_bound);
  // Opposite category.
  FinCategory op;
  for (const auto& o : F.cat.objects) op.add_object(o);
  std::vector<int> back(F.cat.num_morphisms(), -1);
  for (int m = 0; m < F.cat.num_morphisms(); ++m) {
    if (F.cat.is_identity(m)) {
      back[m] = op.identity[F.cat.morphisms[m].src];
      continue;
    }
    back[m] = op.add_morphism(F.cat.morphisms[m].label,
                              F.cat.morphisms[m].tgt, F.cat.morphisms[m].src);
  }
  for (const auto& [pair, val] : F.cat.comp)
    op.set_composite(back[pair.second], back[pair.first], back[val]);
  FLevelResult R;
  R.complex = nerve(op, nerve_bound);
  R.beta = F.composite;
  // Components via union-find on vertices along edges.
  std::vector<int> uf(R.complex.num_generators(0));
  for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  for (int e = 0; e < R.complex.num_generators(1); ++e) {
    int u = find(R.complex.face(SimplexRef{1, e, {}}, 0).gen);
    int v = find(R.complex.face(SimplexRef{1, e, {}}, 1).gen);
    if (u != v) uf[std::max(u, v)] = std::min(u, v);
  }
  std::set<int> roots;
  for (std::size_t i = 0; i < uf.size(); ++i)
    roots.insert(find(static_cast<int>(i)));
  R.num_components = static_cast<int>(roots.size());
  return R;
}

struct BetaFiberCertificate {
  HomologyCertificate homology;
  bool witness_verified = false;
  bool oracle_ran = false;
  std::string witness_label;
};

// The fiber of beta over an n-simplex sigma: the factorization category of
// sigma, which carries (id, sigma) as an initial object.  A verified witness
// certifies contractibility on its own; the homology oracle on the truncated
// nerve is the fallback grade.  It can also be requested as a cross-check,
// but the nerve grows quickly with k_bound because degenerate factorizations
// contribute endomorphisms.
inline BetaFiberCertificate beta_fiber_certificate(
    const FiniteSimplicialSet& X, int n, const SimplexRef& sigma, int k_bound,
    int hom_bound, bool run_homology_oracle = false) {
  auto F = factorization_category(X, n, k_bound, sigma);
  BetaFiberCertificate C;
  // Locate (id, sigma) and verify initiality exactly.
  std::vector<int> idmap;
  for (int v = 0; v <= n; ++v) idmap.push_back(v);
  int witness = -1;
  for (int o = 0; o < static_cast<int>(F.objects.size()); ++o)
    if (F.objects[o].first == idmap && F.objects[o].second == sigma)
      witness = o;
  if (witness >= 0) {
    bool initial = true;
    for (int o = 0; o < F.cat.num_objects() && initial; ++o)
      if (F.cat.morphisms_from_to(witness, o).size() != 1) initial = false;
    if (initial) {
      C.witness_verified = true;
      C.witness_label = F.cat.objects[witness];
    }
  }
  if (run_homology_oracle || !C.witness_verified) {
    C.homology = homology(nerve(F.cat, hom_bound + 1), hom_bound);
    C.oracle_ran = true;
    if (C.witness_verified) C.homology.witness = C.witness_label;
  } else {
    C.homology.betti.assign(static_cast<std::size_t>(hom_bound) + 1, 0);
    C.homology.betti[0] = 1;
    C.homology.torsion.assign(static_cast<std::size_t>(hom_bound) + 1, {});
    C.homology.connected = true;
    C.homology.witness = C.witness_label;
  }
  return C;
}

}  // namespace scx
