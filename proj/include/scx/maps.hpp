#pragma once

// Simplicial maps between finite simplicial sets: validation, exhaustive
// enumeration, products with projections, pushouts with legs.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scx/level_complex.hpp"
#include "scx/sset.hpp"

namespace scx {

// Assignment of a target simplex to every generator of the source.
struct SimplicialMap {
  // image[d][g] = target SimplexRef of dimension d.
  std::vector<std::vector<SimplexRef>> image;

  SimplexRef apply(const FiniteSimplicialSet& target,
                   const SimplexRef& x) const {
    SimplexRef y = image.at(x.gdim).at(x.gen);
    for (auto it = x.word.rbegin(); it != x.word.rend(); ++it)
      y = target.degeneracy(y, *it);
    return y;
  }

  bool valid(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y) const {
    if (static_cast<int>(image.size()) < X.top_dim() + 1) return false;
    for (int d = 0; d <= X.top_dim(); ++d) {
      if (static_cast<int>(image[d].size()) != X.num_generators(d))
        return false;
      for (int g = 0; g < X.num_generators(d); ++g) {
        if (image[d][g].dim() != d) return false;
        if (image[d][g].gdim > Y.top_dim() ||
            image[d][g].gen >= Y.num_generators(image[d][g].gdim))
          return false;
        if (d == 0) continue;
        SimplexRef x{d, g, {}};
        for (int k = 0; k <= d; ++k)
          if (!(Y.face(image[d][g], k) == apply(Y, X.face(x, k))))
            return false;
      }
    }
    return true;
  }

  bool injective(const FiniteSimplicialSet& X) const {
    // A map of finite simplicial sets is a monomorphism iff it is injective
    // on nondegenerate simplices with nondegenerate values levelwise.
    for (int d = 0; d < static_cast<int>(image.size()); ++d) {
      std::vector<SimplexRef> vals;
      for (int g = 0; g < X.num_generators(d); ++g) {
        if (image[d][g].degenerate()) return false;
        vals.push_back(image[d][g]);
      }
      std::sort(vals.begin(), vals.end());
      if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
        return false;
    }
    return true;
  }

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
    return a.image == b.image;
  }
  friend auto operator<=>(const SimplicialMap& a, const SimplicialMap& b) {
    return a.image <=> b.image;
  }
};

inline SimplicialMap identity_map(const FiniteSimplicialSet& X) {
  SimplicialMap m;
  m.image.resize(static_cast<std::size_t>(X.top_dim()) + 1);
  for (int d = 0; d <= X.top_dim(); ++d)
    for (int g = 0; g < X.num_generators(d); ++g)
      m.image[d].push_back(SimplexRef{d, g, {}});
  return m;
}

inline SimplicialMap compose(const FiniteSimplicialSet& Z,
                             const SimplicialMap& g, const SimplicialMap& f) {
  // g o f, where f: X -> Y and g: Y -> Z.
  SimplicialMap m;
  m.image.resize(f.image.size());
  for (std::size_t d = 0; d < f.image.size(); ++d)
    for (const auto& y : f.image[d]) m.image[d].push_back(g.apply(Z, y));
  return m;
}

// Constraint hook for enumeration: returns false to prune a candidate image
// for generator (dim, gen).
using HomFilter =
    std::function<bool(int dim, int gen, const SimplexRef& candidate)>;

// Complete enumeration of simplicial maps X -> Y by backtracking over
// generators in increasing dimension, lexicographic within a dimension.
inline std::vector<SimplicialMap> enumerate_maps(
    const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y,
    const HomFilter& filter = nullptr, std::size_t limit = 0) {
  std::vector<SimplicialMap> out;
  SimplicialMap cur;
  cur.image.resize(static_cast<std::size_t>(X.top_dim()) + 1);
  std::vector<std::vector<std::vector<SimplexRef>>> candidates(
      static_cast<std::size_t>(X.top_dim()) + 1);
  for (int d = 0; d <= X.top_dim(); ++d) {
    auto all = Y.all_simplices(d);
    candidates[d].assign(X.num_generators(d), all);
  }
  std::function<bool(int, int)> rec = [&](int d, int g) -> bool {
    if (d > X.top_dim()) {
      out.push_back(cur);
      return limit != 0 && out.size() >= limit;
    }
    if (g == X.num_generators(d)) return rec(d + 1, 0);
    for (const auto& y : candidates[d][g]) {
      if (filter && !filter(d, g, y)) continue;
      bool ok = true;
      if (d > 0) {
        SimplexRef x{d, g, {}};
        for (int k = 0; k <= d && ok; ++k) {
          SimplexRef fx = X.face(x, k);
          if (!(Y.face(y, k) == cur.apply(Y, fx))) ok = false;
        }
      }
      if (!ok) continue;
      cur.image[d].push_back(y);
      if (rec(d, g + 1)) return true;
      cur.image[d].pop_back();
    }
    return false;
  };
  rec(0, 0);
  return out;
}

inline std::vector<SimplicialMap> sset_hom(const FiniteSimplicialSet& X,
                                           const FiniteSimplicialSet& Y) {
  return enumerate_maps(X, Y);
}

// --- products ---

struct ProductResult {
  FiniteSimplicialSet complex;
  SimplicialMap proj_a, proj_b;
  // generator (d, g) of the product corresponds to pair of refs in (A, B).
  std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> pair_of;

  std::optional<SimplexRef> find_pair(const SimplexRef& a,
                                      const SimplexRef& b) const {
    for (int d = 0; d < static_cast<int>(pair_of.size()); ++d)
      for (int g = 0; g < static_cast<int>(pair_of[d].size()); ++g)
        if (pair_of[d][g].first == a && pair_of[d][g].second == b)
          return SimplexRef{d, g, {}};
    return std::nullopt;
  }
};

inline ProductResult product(const FiniteSimplicialSet& A,
                             const FiniteSimplicialSet& B) {
  ProductResult R;
  int D = A.top_dim() + B.top_dim();
  std::map<std::pair<SimplexRef, SimplexRef>, SimplexRef> norm;
  R.pair_of.resize(static_cast<std::size_t>(D) + 1);
  R.proj_a.image.resize(static_cast<std::size_t>(D) + 1);
  R.proj_b.image.resize(static_cast<std::size_t>(D) + 1);

  for (int n = 0; n <= D; ++n) {
    auto as = A.all_simplices(n);
    auto bs = B.all_simplices(n);
    for (const auto& a : as) {
      for (const auto& b : bs) {
        // Nondegenerate iff the words share no letter.
        bool degenerate = false;
        for (int i : a.word) {
          for (int j : b.word)
            if (i == j) {
              degenerate = true;
              break;
            }
          if (degenerate) break;
        }
        if (degenerate) continue;
        std::vector<SimplexRef> faces;
        if (n > 0) {
          for (int k = 0; k <= n; ++k) {
            auto key = std::make_pair(A.face(a, k), B.face(b, k));
            // Normalize the face pair by stripping shared word letters.
            SimplexRef fa = key.first, fb = key.second;
            std::vector<int> word;
            bool stripped = true;
            while (stripped) {
              stripped = false;
              for (int i : fa.word) {
                if (std::find(fb.word.begin(), fb.word.end(), i) !=
                    fb.word.end()) {
                  // Highest shared letter first keeps the word decreasing.
                  int best = i;
                  for (int i2 : fa.word)
                    if (i2 > best && std::find(fb.word.begin(), fb.word.end(),
                                               i2) != fb.word.end())
                      best = i2;
                  fa = A.face(fa, best);
                  fb = B.face(fb, best);
                  word.push_back(best);
                  stripped = true;
                  break;
                }
              }
            }
            auto it = norm.find({fa, fb});
            if (it == norm.end())
              throw ScxError("product: missing face pair");
            SimplexRef f = it->second;
            for (auto w = word.rbegin(); w != word.rend(); ++w)
              f = R.complex.degeneracy(f, *w);
            faces.push_back(f);
          }
        }
        std::string lbl = "(" + A.label(a) + "," + B.label(b) + ")";
        int g = R.complex.add_generator(n, lbl, std::move(faces));
        norm[{a, b}] = SimplexRef{n, g, {}};
        R.pair_of[n].push_back({a, b});
        R.proj_a.image[n].push_back(a);
        R.proj_b.image[n].push_back(b);
      }
    }
  }
  R.complex.validate();
  return R;
}

// Ref in the product complex of an arbitrary same-dimension pair: strip the
// shared degeneracy letters, look up the nondegenerate pair, reapply.
inline SimplexRef product_ref(const FiniteSimplicialSet& A,
                              const FiniteSimplicialSet& B,
                              const ProductResult& P, SimplexRef a,
                              SimplexRef b) {
  std::vector<int> word;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    int best = -1;
    for (int i : a.word)
      if (std::find(b.word.begin(), b.word.end(), i) != b.word.end())
        best = std::max(best, i);
    if (best >= 0) {
      a = A.face(a, best);
      b = B.face(b, best);
      word.push_back(best);
      stripped = true;
    }
  }
  auto g = P.find_pair(a, b);
  if (!g) throw ScxError("product_ref: pair not found");
  SimplexRef out = *g;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = P.complex.degeneracy(out, *it);
  return out;
}

// Independent oracle for products of standard simplices: counts strict
// chains in the grid poset [p] x [q].
inline std::vector<int> grid_chain_f_vector(int p, int q) {
  std::vector<std::pair<int, int>> verts;
  for (int a = 0; a <= p; ++a)
    for (int b = 0; b <= q; ++b) verts.push_back({a, b});
  auto lt = [](std::pair<int, int> u, std::pair<int, int> v) {
    return u.first <= v.first && u.second <= v.second && u != v;
  };
  std::vector<int> f;
  // counts[v] = chains of current length ending at v
  std::vector<long long> counts(verts.size(), 1);
  long long total = static_cast<long long>(verts.size());
  while (total > 0) {
    f.push_back(static_cast<int>(total));
    std::vector<long long> next(verts.size(), 0);
    total = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (lt(verts[i], verts[j])) {
          next[j] += counts[i];
          total += counts[i];
        }
    counts = next;
  }
  return f;
}

// --- pushouts ---

struct PushoutResult {
  FiniteSimplicialSet complex;
  SimplicialMap leg_x, leg_y;
};

// Pushout of X <-f- A -g-> Y, computed levelwise then renormalized.
inline PushoutResult pushout(const FiniteSimplicialSet& A,
                             const FiniteSimplicialSet& X,
                             const FiniteSimplicialSet& Y,
                             const SimplicialMap& f, const SimplicialMap& g) {
  if (!f.valid(A, X) || !g.valid(A, Y))
    throw PreconditionError("pushout: legs are not simplicial maps");
  int D = std::max(X.top_dim(), Y.top_dim());

  // Enumerate all simplices of X and Y per level; union-find over the
  // disjoint union with relations f(a) ~ g(a).
  std::vector<std::vector<SimplexRef>> xs(static_cast<std::size_t>(D) + 1),
      ys(static_cast<std::size_t>(D) + 1);
  std::vector<std::map<SimplexRef, int>> xid(static_cast<std::size_t>(D) + 1),
      yid(static_cast<std::size_t>(D) + 1);
  std::vector<std::vector<int>> uf(static_cast<std::size_t>(D) + 1);
  for (int n = 0; n <= D; ++n) {
    xs[n] = X.all_simplices(n);
    ys[n] = Y.all_simplices(n);
    for (int i = 0; i < static_cast<int>(xs[n].size()); ++i)
      xid[n][xs[n][i]] = i;
    for (int i = 0; i < static_cast<int>(ys[n].size()); ++i)
      yid[n][ys[n][i]] = static_cast<int>(xs[n].size()) + i;
    uf[n].resize(xs[n].size() + ys[n].size());
    for (std::size_t i = 0; i < uf[n].size(); ++i)
      uf[n][i] = static_cast<int>(i);
  }
  std::function<int(int, int)> find = [&](int n, int i) {
    while (uf[n][i] != i) {
      uf[n][i] = uf[n][uf[n][i]];
      i = uf[n][i];
    }
    return i;
  };
  auto unite = [&](int n, int i, int j) {
    i = find(n, i);
    j = find(n, j);
    if (i != j) uf[n][std::max(i, j)] = std::min(i, j);
  };
  for (int n = 0; n <= std::min(D, A.top_dim() + D); ++n) {
    for (const auto& a : A.all_simplices(n)) {
      if (n > D) continue;
      unite(n, xid[n].at(f.apply(X, a)), yid[n].at(g.apply(Y, a)));
    }
  }

  // Representatives and class indexing per level.
  std::vector<std::map<int, int>> class_of(static_cast<std::size_t>(D) + 1);
  std::vector<int> nclasses(static_cast<std::size_t>(D) + 1, 0);
  for (int n = 0; n <= D; ++n)
    for (int i = 0; i < static_cast<int>(uf[n].size()); ++i) {
      int r = find(n, i);
      if (!class_of[n].count(r)) class_of[n][r] = nclasses[n]++;
    }
  auto cls = [&](int n, int i) { return class_of[n].at(find(n, i)); };

  LevelComplex L;
  L.level_sizes.assign(static_cast<std::size_t>(D) + 1, 0);
  for (int n = 0; n <= D; ++n) L.level_sizes[n] = nclasses[n];
  L.face.resize(static_cast<std::size_t>(D) + 1);
  L.deg.resize(static_cast<std::size_t>(D) + 1);
  // Operators via representatives; pick the least member for determinism.
  std::vector<std::vector<int>> rep(static_cast<std::size_t>(D) + 1);
  for (int n = 0; n <= D; ++n) {
    rep[n].assign(nclasses[n], -1);
    for (int i = static_cast<int>(uf[n].size()) - 1; i >= 0; --i)
      rep[n][cls(n, i)] = i;
  }
  auto side_face = [&](int n, int i, int k) -> int {
    int m = static_cast<int>(xs[n].size());
    if (i < m) return xid[n - 1].at(X.face(xs[n][i], k));
    return yid[n - 1].at(Y.face(ys[n][i - m], k));
  };
  auto side_deg = [&](int n, int i, int k) -> int {
    int m = static_cast<int>(xs[n].size());
    if (i < m) return xid[n + 1].at(X.degeneracy(xs[n][i], k));
    return yid[n + 1].at(Y.degeneracy(ys[n][i - m], k));
  };
  for (int n = 1; n <= D; ++n) {
    L.face[n].assign(static_cast<std::size_t>(n) + 1,
                     std::vector<int>(nclasses[n]));
    for (int k = 0; k <= n; ++k)
      for (int c = 0; c < nclasses[n]; ++c)
        L.face[n][k][c] = cls(n - 1, side_face(n, rep[n][c], k));
  }
  for (int n = 0; n < D; ++n) {
    L.deg[n].assign(static_cast<std::size_t>(n) + 1,
                    std::vector<int>(nclasses[n]));
    for (int k = 0; k <= n; ++k)
      for (int c = 0; c < nclasses[n]; ++c)
        L.deg[n][k][c] = cls(n + 1, side_deg(n, rep[n][c], k));
  }
  // Deterministic labels: lexicographically least member label.
  L.label = [&](int n, int c) {
    std::string best;
    int m = static_cast<int>(xs[n].size());
    for (int i = 0; i < static_cast<int>(uf[n].size()); ++i) {
      if (cls(n, i) != c) continue;
      std::string cand = i < m ? "L." + X.label(xs[n][i])
                               : "R." + Y.label(ys[n][i - m]);
      if (best.empty() || cand < best) best = cand;
    }
    return best;
  };

  auto norm = L.normalize();
  PushoutResult R;
  R.complex = std::move(norm.sset);
  R.leg_x.image.resize(static_cast<std::size_t>(X.top_dim()) + 1);
  for (int d = 0; d <= X.top_dim(); ++d)
    for (int gidx = 0; gidx < X.num_generators(d); ++gidx)
      R.leg_x.image[d].push_back(
          norm.ref[d][cls(d, xid[d].at(SimplexRef{d, gidx, {}}))]);
  R.leg_y.image.resize(static_cast<std::size_t>(Y.top_dim()) + 1);
  for (int d = 0; d <= Y.top_dim(); ++d)
    for (int gidx = 0; gidx < Y.num_generators(d); ++gidx)
      R.leg_y.image[d].push_back(
          norm.ref[d][cls(d, yid[d].at(SimplexRef{d, gidx, {}}))]);
  return R;
}

// Inclusion of a subcomplex of Delta^n style complexes built from the same
// vertex labels: matches generators by label.
inline SimplicialMap inclusion_by_labels(const FiniteSimplicialSet& A,
                                         const FiniteSimplicialSet& X) {
  SimplicialMap m;
  m.image.resize(static_cast<std::size_t>(A.top_dim()) + 1);
  for (int d = 0; d <= A.top_dim(); ++d)
    for (int g = 0; g < A.num_generators(d); ++g) {
      auto idx = X.label_index(d, A.label(d, g));
      if (!idx)
        throw PreconditionError("inclusion_by_labels: missing " +
                                A.label(d, g));
      m.image[d].push_back(SimplexRef{d, *idx, {}});
    }
  return m;
}

// Join A * B: nondegenerate simplices are those of A, those of B, and the
// pairs (a, b) in dimension dim a + dim b + 1.
inline FiniteSimplicialSet join(const FiniteSimplicialSet& A,
                                const FiniteSimplicialSet& B) {
  FiniteSimplicialSet J;
  std::map<std::pair<SimplexRef, SimplexRef>, SimplexRef> idx;
  SimplexRef none{-1, -1, {}};
  auto from_a = [&](const SimplexRef& a) { return idx.at({a, none}); };
  auto from_b = [&](const SimplexRef& b) { return idx.at({none, b}); };
  int DA = A.top_dim(), DB = B.top_dim();
  for (int n = 0; n <= DA + DB + 1; ++n) {
    for (int g = 0; g < A.num_generators(n); ++g) {
      std::vector<SimplexRef> faces;
      if (n > 0)
        for (int k = 0; k <= n; ++k) {
          SimplexRef f = A.face(SimplexRef{n, g, {}}, k);
          SimplexRef base = from_a(SimplexRef{f.gdim, f.gen, {}});
          for (auto it = f.word.rbegin(); it != f.word.rend(); ++it)
            base = J.degeneracy(base, *it);
          faces.push_back(base);
        }
      idx[{SimplexRef{n, g, {}}, none}] =
          SimplexRef{n, J.add_generator(n, "L." + A.label(n, g), faces), {}};
    }
    for (int g = 0; g < B.num_generators(n); ++g) {
      std::vector<SimplexRef> faces;
      if (n > 0)
        for (int k = 0; k <= n; ++k) {
          SimplexRef f = B.face(SimplexRef{n, g, {}}, k);
          SimplexRef base = from_b(SimplexRef{f.gdim, f.gen, {}});
          for (auto it = f.word.rbegin(); it != f.word.rend(); ++it)
            base = J.degeneracy(base, *it);
          faces.push_back(base);
        }
      idx[{none, SimplexRef{n, g, {}}}] =
          SimplexRef{n, J.add_generator(n, "R." + B.label(n, g), faces), {}};
    }
    // Pairs (a, b) with dim a + dim b + 1 = n, both nondegenerate.
    for (int da = 0; da < n; ++da) {
      int db = n - 1 - da;
      for (int ga = 0; ga < A.num_generators(da); ++ga)
        for (int gb = 0; gb < B.num_generators(db); ++gb) {
          SimplexRef a{da, ga, {}}, b{db, gb, {}};
          std::vector<SimplexRef> faces;
          for (int k = 0; k <= n; ++k) {
            if (k <= da) {
              if (da == 0) {
                faces.push_back(from_b(b));
              } else {
                SimplexRef fa = A.face(a, k);
                // Faces of nondegenerate simplices may be degenerate in
                // general; handle via the normal form of the pair.
                SimplexRef core = idx.at({SimplexRef{fa.gdim, fa.gen, {}}, b});
                for (auto it = fa.word.rbegin(); it != fa.word.rend(); ++it)
                  core = J.degeneracy(core, *it);
                faces.push_back(core);
              }
            } else {
              if (db == 0) {
                faces.push_back(from_a(a));
              } else {
                SimplexRef fb = B.face(b, k - da - 1);
                SimplexRef core = idx.at({a, SimplexRef{fb.gdim, fb.gen, {}}});
                for (auto it = fb.word.rbegin(); it != fb.word.rend(); ++it)
                  core = J.degeneracy(core, da + 1 + *it);
                faces.push_back(core);
              }
            }
          }
          std::string lbl = "(" + A.label(da, ga) + "*" + B.label(db, gb) + ")";
          idx[{a, b}] = SimplexRef{n, J.add_generator(n, lbl, faces), {}};
        }
    }
  }
  J.validate();
  return J;
}

// Cone K^< = point * K, with the cone point labeled "<".
inline FiniteSimplicialSet left_cone(const FiniteSimplicialSet& K) {
  FiniteSimplicialSet pt;
  pt.add_generator(0, "<");
  return join(pt, K);
}

// Fiber product of p: X -> S and q: B -> S, truncated at level_bound.
struct FiberProductResult {
  FiniteSimplicialSet complex;
  SimplicialMap proj_x, proj_b;
};

inline FiberProductResult fiber_product(const FiniteSimplicialSet& X,
                                        const SimplicialMap& p,
                                        const FiniteSimplicialSet& B,
                                        const SimplicialMap& q,
                                        const FiniteSimplicialSet& S,
                                        int level_bound) {
  if (!p.valid(X, S) || !q.valid(B, S))
    throw PreconditionError("fiber_product: legs are not simplicial maps");
  LevelComplex L;
  std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> cells(
      static_cast<std::size_t>(level_bound) + 1);
  std::vector<std::map<std::pair<SimplexRef, SimplexRef>, int>> cell_id(
      static_cast<std::size_t>(level_bound) + 1);
  for (int n = 0; n <= level_bound; ++n) {
    for (const auto& x : X.all_simplices(n))
      for (const auto& b : B.all_simplices(n)) {
        if (!(p.apply(S, x) == q.apply(S, b))) continue;
        cell_id[n][{x, b}] = static_cast<int>(cells[n].size());
        cells[n].push_back({x, b});
      }
    L.level_sizes.push_back(static_cast<int>(cells[n].size()));
  }
  L.face.resize(static_cast<std::size_t>(level_bound) + 1);
  L.deg.resize(static_cast<std::size_t>(level_bound) + 1);
  for (int n = 1; n <= level_bound; ++n) {
    L.face[n].assign(static_cast<std::size_t>(n) + 1,
                     std::vector<int>(cells[n].size()));
    for (int k = 0; k <= n; ++k)
      for (std::size_t c = 0; c < cells[n].size(); ++c)
        L.face[n][k][c] = cell_id[n - 1].at(
            {X.face(cells[n][c].first, k), B.face(cells[n][c].second, k)});
  }
  for (int n = 0; n < level_bound; ++n) {
    L.deg[n].assign(static_cast<std::size_t>(n) + 1,
                    std::vector<int>(cells[n].size()));
    for (int k = 0; k <= n; ++k)
      for (std::size_t c = 0; c < cells[n].size(); ++c)
        L.deg[n][k][c] = cell_id[n + 1].at({X.degeneracy(cells[n][c].first, k),
                                            B.degeneracy(cells[n][c].second, k)});
  }
  L.label = [&](int n, int c) {
    return "(" + X.label(cells[n][c].first) + "|" +
           B.label(cells[n][c].second) + ")";
  };
  auto N = L.normalize();
  FiberProductResult R;
  R.complex = std::move(N.sset);
  R.proj_x.image.resize(static_cast<std::size_t>(R.complex.top_dim()) + 1);
  R.proj_b.image.resize(static_cast<std::size_t>(R.complex.top_dim()) + 1);
  for (int d = 0; d <= R.complex.top_dim(); ++d)
    for (int g = 0; g < R.complex.num_generators(d); ++g) {
      // Recover the pair of a generator from its level cell.
      for (std::size_t c = 0; c < cells[d].size(); ++c)
        if (N.ref[d][c] == SimplexRef{d, g, {}}) {
          R.proj_x.image[d].push_back(cells[d][c].first);
          R.proj_b.image[d].push_back(cells[d][c].second);
          break;
        }
    }
  return R;
}

// Quotient of Delta^3 collapsing the edges {0,2} and {1,3}; 2 vertices.
inline FiniteSimplicialSet collapsed_k() {
  auto d3 = FiniteSimplicialSet::simplex(3);
  auto pt = FiniteSimplicialSet::simplex(0);
  auto e02 = FiniteSimplicialSet::simplex(1);

  auto embed_edge = [&](int a, int b) {
    SimplicialMap m;
    m.image.resize(2);
    auto va = d3.label_index(0, std::to_string(a));
    auto vb = d3.label_index(0, std::to_string(b));
    auto e = d3.label_index(1, std::to_string(a) + "." + std::to_string(b));
    m.image[0] = {make_vertex(*va), make_vertex(*vb)};
    m.image[1] = {SimplexRef{1, *e, {}}};
    return m;
  };
  auto collapse = [&](SimplicialMap m) {
    SimplicialMap c;
    c.image.resize(2);
    c.image[0] = {make_vertex(0), make_vertex(0)};
    c.image[1] = {SimplexRef{0, 0, {0}}};
    (void)m;
    return c;
  };
  auto first = pushout(e02, d3, pt, embed_edge(0, 2), collapse(embed_edge(0, 2)));
  // Locate the image of edge {1,3} in the quotient.
  auto e13 = embed_edge(1, 3);
  SimplicialMap into_first;
  into_first.image.resize(2);
  into_first.image[0] = {first.leg_x.apply(first.complex, e13.image[0][0]),
                         first.leg_x.apply(first.complex, e13.image[0][1])};
  into_first.image[1] = {first.leg_x.apply(first.complex, e13.image[1][0])};
  SimplicialMap c2;
  c2.image.resize(2);
  c2.image[0] = {make_vertex(0), make_vertex(0)};
  c2.image[1] = {SimplexRef{0, 0, {0}}};
  auto second = pushout(e02, first.complex, pt, into_first, c2);
  FiniteSimplicialSet K = std::move(second.complex);
  // Canonical labels carry the vertex words of the collapsed tetrahedron.
  K.rename_generators([](int, const std::string& l) {
    return l.rfind("L.L.", 0) == 0 ? l.substr(4) : l;
  });
  return K;
}

}  // namespace scx
