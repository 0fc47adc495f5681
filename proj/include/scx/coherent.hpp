#pragma once

// Mapping complexes of the coherent nerve.
//
// On a simplex the mapping complex from i to j is the nerve of the poset of
// subsets of the vertex window containing both endpoints, with composition
// by union.  For a general finite base the mapping complexes are assembled
// as the colimit over the category of simplices: levelwise, morphisms are
// congruence classes of composable paths of window-chain generators.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scx/category.hpp"
#include "scx/decor.hpp"
#include "scx/level_complex.hpp"
#include "scx/maps.hpp"
#include "scx/sset.hpp"

namespace scx {

// ---------------------------------------------------------------------------
// Mapping posets of a simplex.

using Subset = std::uint32_t;  // bitmask over ambient vertices

struct MappingPoset {
  int n = 0, i = 0, j = 0;
  std::vector<Subset> elements;  // sorted ascending as integers

  static MappingPoset make(int n, int i, int j) {
    if (i < 0 || j < i || n < j)
      throw PreconditionError("mapping_poset: need 0 <= i <= j <= n");
    MappingPoset P{n, i, j, {}};
    int gap = j - i - 1;
    int count = gap < 0 ? 1 : 1 << std::max(gap, 0);
    for (int m = 0; m < count; ++m) {
      Subset s = (Subset(1) << i) | (Subset(1) << j);
      for (int b = 0; b < gap; ++b)
        if (m & (1 << b)) s |= Subset(1) << (i + 1 + b);
      P.elements.push_back(s);
    }
    std::sort(P.elements.begin(), P.elements.end());
    return P;
  }

  std::size_t size() const { return elements.size(); }
  static bool leq(Subset a, Subset b) { return (a & ~b) == 0; }
};

inline Subset compose_union(const MappingPoset& P, const MappingPoset& Q,
                            Subset S, Subset S2) {
  // max(S) must equal min(S2): the shared endpoint of the windows.
  if (P.j != Q.i)
    throw PreconditionError("compose_union: endpoints mismatched");
  return S | S2;
}

inline std::string subset_name(Subset s, int n) {
  std::string out;
  for (int v = 0; v <= n; ++v)
    if (s & (Subset(1) << v)) {
      if (!out.empty()) out += '.';
      out += std::to_string(v);
    }
  return "{" + out + "}";
}

// Order complex of a finite poset: nondegenerate k-simplices are the strict
// chains of length k+1.  `chain_of` recovers the chain of a generator.
struct OrderComplex {
  FiniteSimplicialSet complex;
  std::vector<std::vector<std::vector<int>>> chain_of;  // [dim][gen] -> chain
};

inline OrderComplex order_complex(
    int num_elems, const std::function<bool(int, int)>& leq,
    const std::function<std::string(int)>& name) {
  OrderComplex O;
  std::map<std::vector<int>, int> index;
  O.chain_of.emplace_back();
  for (int e = 0; e < num_elems; ++e) {
    index[{e}] = O.complex.add_generator(0, name(e));
    O.chain_of[0].push_back({e});
  }
  for (int d = 1;; ++d) {
    std::vector<std::vector<int>> chains;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& c) {
      if (static_cast<int>(c.size()) == d + 1) {
        chains.push_back(c);
        return;
      }
      for (int e = 0; e < num_elems; ++e) {
        if (!c.empty() && !(leq(c.back(), e) && c.back() != e)) continue;
        c.push_back(e);
        rec(c);
        c.pop_back();
      }
    };
    std::vector<int> c;
    rec(c);
    if (chains.empty()) break;
    O.chain_of.emplace_back();
    for (const auto& ch : chains) {
      std::vector<SimplexRef> faces;
      for (int k = 0; k <= d; ++k) {
        std::vector<int> fc = ch;
        fc.erase(fc.begin() + k);
        faces.push_back(SimplexRef{d - 1, index.at(fc), {}});
      }
      std::string lbl;
      for (std::size_t t = 0; t < ch.size(); ++t) {
        if (t) lbl += "<";
        lbl += name(ch[t]);
      }
      index[ch] = O.complex.add_generator(d, lbl, std::move(faces));
      O.chain_of[d].push_back(ch);
    }
  }
  O.complex.validate();
  return O;
}

inline OrderComplex mapping_poset_nerve(const MappingPoset& P) {
  return order_complex(
      static_cast<int>(P.size()),
      [&](int a, int b) { return MappingPoset::leq(P.elements[a], P.elements[b]); },
      [&](int a) { return subset_name(P.elements[a], P.n); });
}

// ---------------------------------------------------------------------------
// Colimit mapping complexes for a finite base.

// A weak chain of subsets within a window of a simplex, as the cell datum of
// the mapping complex at one simplicial level.
struct WindowChain {
  int simplex = 0;  // index into the base's nondegenerate simplices (dim>=1)
  int lo = 0, hi = 0;
  std::vector<Subset> chain;  // length = level + 1, ascending inclusions

  friend auto operator<=>(const WindowChain&, const WindowChain&) = default;
};

class HomColimit {
 public:
  // Builds mapping complexes between all vertex pairs through level `bound`.
  HomColimit(const FiniteSimplicialSet& S, int bound)
      : base_(S), bound_(bound) {
    collect_simplices();
    check_finiteness();
    for (int k = 0; k <= bound_; ++k) levels_.push_back(build_level(k));
    link_operator_tables();
  }

  const FiniteSimplicialSet& base() const { return base_; }
  int bound() const { return bound_; }

  // Morphism classes x -> y at a level, as indices into the level's path
  // classes.
  std::vector<int> morphisms(int level, int x, int y) const {
    std::vector<int> out;
    const Level& L = levels_[level];
    for (int p = 0; p < static_cast<int>(L.path_class_reps.size()); ++p)
      if (L.class_src[p] == x && L.class_tgt[p] == y) out.push_back(p);
    return out;
  }

  int src_of(int level, int cls) const { return levels_[level].class_src[cls]; }
  int tgt_of(int level, int cls) const { return levels_[level].class_tgt[cls]; }

  int face_of(int level, int k, int cls) const {
    return levels_[level].face_to[k][cls];
  }
  int deg_of(int level, int k, int cls) const {
    return levels_[level].deg_to[k][cls];
  }

  // Class of the identity at a vertex.
  int identity_class(int level, int x) const {
    return levels_[level].path_class.at(std::vector<int>{-1 - x});
  }
  bool is_identity_class(int level, int cls) const {
    const auto& rep = levels_[level].path_class_reps[cls];
    return rep.size() == 1 && rep[0] < 0;
  }

  // Class of the composite g o f (f: x->y then g: y->z).
  int compose_classes(int level, int g, int f) const {
    const Level& L = levels_[level];
    std::vector<int> path;
    auto append = [&](int c) {
      if (is_identity_class(level, c)) return;
      for (int inst : L.path_class_reps[c])
        if (inst >= 0) path.push_back(inst);
    };
    // Representative paths store instance-class ids.
    append(f);
    append(g);
    if (path.empty()) return identity_class(level, L.class_src[f]);
    return L.path_class.at(path);
  }

  // Class of the edge generated by a thin 2-simplex (window {lo,hi} chain
  // {lo,hi} then full window) at level 1; triangle given as a nondegenerate
  // 2-simplex generator of the base.
  int triangle_edge_class(int triangle_gen) const {
    int sid = simplex_id_.at(std::make_pair(2, triangle_gen));
    WindowChain w;
    w.simplex = sid;
    w.lo = 0;
    w.hi = 2;
    Subset ends = 0b101;
    w.chain = {ends, 0b111};
    const Level& L = levels_[1];
    int inst_cls = L.inst_class.at(w);
    if (inst_cls < 0) return identity_class(1, vertex_of_simplex(sid, 0));
    return L.path_class.at(std::vector<int>{inst_cls});
  }

  // Assembles the mapping complex from x to y with deterministic labels.
  struct HomComplexResult {
    FiniteSimplicialSet complex;
    std::vector<std::vector<int>> class_of;  // [level][cell] -> path class
    std::vector<std::vector<SimplexRef>> ref_of;  // [level][cell] -> ref
  };
  HomComplexResult hom_complex(int x, int y) const {
    HomComplexResult R;
    LevelComplex L;
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(bound_) + 1);
    std::vector<std::map<int, int>> cell_index(
        static_cast<std::size_t>(bound_) + 1);
    for (int k = 0; k <= bound_; ++k) {
      cells[k] = morphisms(k, x, y);
      for (int c = 0; c < static_cast<int>(cells[k].size()); ++c)
        cell_index[k][cells[k][c]] = c;
      L.level_sizes.push_back(static_cast<int>(cells[k].size()));
    }
    L.face.resize(static_cast<std::size_t>(bound_) + 1);
    L.deg.resize(static_cast<std::size_t>(bound_) + 1);
    for (int k = 1; k <= bound_; ++k) {
      L.face[k].assign(static_cast<std::size_t>(k) + 1,
                       std::vector<int>(cells[k].size()));
      for (int m = 0; m <= k; ++m)
        for (std::size_t c = 0; c < cells[k].size(); ++c)
          L.face[k][m][c] = cell_index[k - 1].at(face_of(k, m, cells[k][c]));
    }
    for (int k = 0; k < bound_; ++k) {
      L.deg[k].assign(static_cast<std::size_t>(k) + 1,
                      std::vector<int>(cells[k].size()));
      for (int m = 0; m <= k; ++m)
        for (std::size_t c = 0; c < cells[k].size(); ++c)
          L.deg[k][m][c] = cell_index[k + 1].at(deg_of(k, m, cells[k][c]));
    }
    L.label = [&](int k, int c) {
      return "h" + std::to_string(k) + "." + std::to_string(c);
    };
    auto N = L.normalize();
    R.complex = std::move(N.sset);
    R.ref_of = std::move(N.ref);
    R.class_of = std::move(cells);
    return R;
  }

  int num_vertices() const { return base_.num_generators(0); }

  int vertex_of_simplex(int sid, int pos) const {
    return simplex_vertices_[sid][pos];
  }

 private:
  struct Level {
    std::vector<WindowChain> instances;
    std::map<WindowChain, int> inst_class;  // -1-v for identity of vertex v
    // union-find over instances plus identity tokens
    std::vector<int> class_src, class_tgt;  // per path class
    std::vector<std::vector<int>> path_class_reps;  // instance-class paths;
                                                    // {-1-v} is id at v
    std::map<std::vector<int>, int> path_class;
    // instance-class composition: (a,b) -> candidate composite classes
    std::map<std::pair<int, int>, std::set<int>> comp;
    // per instance-class: endpoints and a representative instance
    std::vector<int> icls_src, icls_tgt;
    std::vector<WindowChain> icls_rep;
    int num_icls = 0;
    std::vector<std::vector<int>> face_to, deg_to;  // path-class operators
  };

  const FiniteSimplicialSet base_;
  int bound_;
  std::vector<std::pair<int, int>> simplices_;  // (dim, gen), dim >= 1
  std::map<std::pair<int, int>, int> simplex_id_;
  std::vector<std::vector<int>> simplex_vertices_;
  std::vector<Level> levels_;

  void collect_simplices() {
    for (int d = 1; d <= base_.top_dim(); ++d)
      for (int g = 0; g < base_.num_generators(d); ++g) {
        simplex_id_[{d, g}] = static_cast<int>(simplices_.size());
        simplices_.push_back({d, g});
        simplex_vertices_.push_back(base_.vertex_gens(SimplexRef{d, g, {}}));
      }
  }

  void check_finiteness() {
    // Paths are finite iff no window has equal endpoint vertices and the
    // strict vertex graph is acyclic.
    int V = base_.num_generators(0);
    std::vector<std::set<int>> adj(V);
    for (std::size_t s = 0; s < simplices_.size(); ++s) {
      const auto& vs = simplex_vertices_[s];
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          if (vs[i] == vs[j])
            throw PreconditionError(
                "hom colimit: base has a simplex revisiting a vertex; "
                "mapping complex may be infinite");
          adj[vs[i]].insert(vs[j]);
        }
    }
    std::vector<int> state(V, 0);
    std::function<void(int)> dfs = [&](int v) {
      state[v] = 1;
      for (int w : adj[v]) {
        if (state[w] == 1)
          throw PreconditionError(
              "hom colimit: directed cycle in the base; mapping complex may "
              "be infinite");
        if (state[w] == 0) dfs(w);
      }
      state[v] = 2;
    };
    for (int v = 0; v < V; ++v)
      if (state[v] == 0) dfs(v);
  }

  // Weak inclusion chains of length k+1 in the window [lo,hi] of a simplex;
  // every entry contains both endpoints.
  static std::vector<std::vector<Subset>> window_chains(int lo, int hi,
                                                        int k) {
    Subset ends = (Subset(1) << lo) | (Subset(1) << hi);
    std::vector<Subset> all;
    int gap = hi - lo - 1;
    for (int m = 0; m < (1 << std::max(gap, 0)); ++m) {
      Subset s = ends;
      for (int b = 0; b < gap; ++b)
        if (m & (1 << b)) s |= Subset(1) << (lo + 1 + b);
      all.push_back(s);
    }
    std::sort(all.begin(), all.end());
    std::vector<std::vector<Subset>> out;
    std::vector<Subset> cur;
    std::function<void()> rec = [&]() {
      if (static_cast<int>(cur.size()) == k + 1) {
        out.push_back(cur);
        return;
      }
      for (Subset s : all) {
        if (!cur.empty() && (cur.back() & ~s) != 0) continue;
        cur.push_back(s);
        rec();
        cur.pop_back();
      }
    };
    rec();
    return out;
  }

  Level build_level(int k) const {
    Level L;
    // 1. Enumerate instances.
    for (std::size_t s = 0; s < simplices_.size(); ++s) {
      int d = simplices_[s].first;
      for (int lo = 0; lo <= d; ++lo)
        for (int hi = lo + 1; hi <= d; ++hi)
          for (auto& ch : window_chains(lo, hi, k))
            L.instances.push_back(
                WindowChain{static_cast<int>(s), lo, hi, ch});
    }
    std::map<WindowChain, int> inst_id;
    for (int i = 0; i < static_cast<int>(L.instances.size()); ++i)
      inst_id[L.instances[i]] = i;

    // 2. Union-find over instances + identity sink (-1 marks identity).
    std::vector<int> uf(L.instances.size());
    std::vector<bool> is_id(L.instances.size(), false);
    std::vector<int> id_vertex(L.instances.size(), -1);
    for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
      while (uf[a] != a) {
        uf[a] = uf[uf[a]];
        a = uf[a];
      }
      return a;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    };

    // Face relations: for each simplex and face operator, relate the
    // parent-side instance with the face-side one.
    for (std::size_t s = 0; s < simplices_.size(); ++s) {
      auto [d, g] = simplices_[s];
      for (int t = 0; t <= d; ++t) {
        SimplexRef f = base_.face(SimplexRef{d, g, {}}, t);
        // delta_t: [d-1] -> [d]
        auto delta = [t](int v) { return v < t ? v : v + 1; };
        for (int lo = 0; lo + 1 <= d - 1; ++lo)
          for (int hi = lo + 1; hi <= d - 1; ++hi)
            for (auto& ch : window_chains(lo, hi, k)) {
              //

              WindowChain parent;
              parent.simplex = static_cast<int>(s);
              parent.lo = delta(lo);
              parent.hi = delta(hi);
              parent.chain.reserve(ch.size());
              for (Subset c : ch) {
                Subset img = 0;
                for (int v = 0; v <= d - 1; ++v)
                  if (c & (Subset(1) << v)) img |= Subset(1) << delta(v);
                parent.chain.push_back(img);
              }
              int pid = inst_id.at(parent);
              if (f.word.empty()) {
                WindowChain child{simplex_id_.at({f.gdim, f.gen}), lo, hi, ch};
                unite(pid, inst_id.at(child));
              } else {
                // Face normalizes through a degeneracy word: project the
                // window through the collapse map pi: [d-1] ->> [p].
                std::vector<int> pi = collapse_map(d - 1, f.word);
                if (pi[lo] == pi[hi]) {
                  is_id[find(pid)] = true;
                  id_vertex[find(pid)] =
                      simplex_vertices_[s][parent.lo];
                } else {
                  WindowChain child;
                  child.simplex = simplex_id_.at({f.gdim, f.gen});
                  child.lo = pi[lo];
                  child.hi = pi[hi];
                  for (Subset c : ch) {
                    Subset img = 0;
                    for (int v = 0; v <= d - 1; ++v)
                      if (c & (Subset(1) << v)) img |= Subset(1) << pi[v];
                    child.chain.push_back(img);
                  }
                  unite(pid, inst_id.at(child));
                }
              }
            }
      }
    }
    // Propagate identity flags to roots.
    for (std::size_t i = 0; i < uf.size(); ++i)
      if (is_id[i]) {
        int r = find(static_cast<int>(i));
        is_id[r] = true;
        if (id_vertex[r] < 0) id_vertex[r] = id_vertex[i];
      }

    // 3. Instance classes.
    std::map<int, int> root_to_icls;
    for (int i = 0; i < static_cast<int>(L.instances.size()); ++i) {
      int r = find(i);
      if (is_id[r]) {
        L.inst_class[L.instances[i]] = -1;  // identity-equivalent
        continue;
      }
      if (!root_to_icls.count(r)) {
        root_to_icls[r] = L.num_icls++;
        L.icls_src.push_back(simplex_vertices_[L.instances[r].simplex]
                                               [L.instances[r].lo]);
        L.icls_tgt.push_back(simplex_vertices_[L.instances[r].simplex]
                                               [L.instances[r].hi]);
        L.icls_rep.push_back(L.instances[r]);
      }
      L.inst_class[L.instances[i]] = root_to_icls[r];
    }

    // 4. Composition relation on instance classes.
    for (std::size_t s = 0; s < simplices_.size(); ++s) {
      int d = simplices_[s].first;
      for (int lo = 0; lo <= d; ++lo)
        for (int mid = lo + 1; mid <= d; ++mid)
          for (int hi = mid + 1; hi <= d; ++hi)
            for (auto& c1 : window_chains(lo, mid, k))
              for (auto& c2 : window_chains(mid, hi, k)) {
                WindowChain a{static_cast<int>(s), lo, mid, c1};
                WindowChain b{static_cast<int>(s), mid, hi, c2};
                WindowChain ab{static_cast<int>(s), lo, hi, {}};
                for (std::size_t t = 0; t < c1.size(); ++t)
                  ab.chain.push_back(c1[t] | c2[t]);
                int ca = L.inst_class.at(a), cb = L.inst_class.at(b),
                    cab = L.inst_class.at(ab);
                L.comp[{cb, ca}].insert(cab);
              }
    }

    // 5. Paths and the congruence.
    build_paths(L, k);
    return L;
  }

  // Vertex map of the collapse x = s_{w_0}(s_{w_1}(...(core)...)): as a
  // simplex, x = core o sigma_{w_k} o ... o sigma_{w_0}, so the outermost
  // letter applies first.
  static std::vector<int> collapse_map(int from_dim,
                                       const std::vector<int>& word) {
    std::vector<int> pi(from_dim + 1);
    for (int v = 0; v <= from_dim; ++v) pi[v] = v;
    for (int t : word)
      for (int v = 0; v <= from_dim; ++v)
        if (pi[v] > t) --pi[v];
    return pi;
  }

  void build_paths(Level& L, int /*k*/) const {
    // Adjacency: instance classes grouped by source vertex.
    std::vector<std::vector<int>> by_src(num_vertices());
    for (int c = 0; c < L.num_icls; ++c) by_src[L.icls_src[c]].push_back(c);

    std::vector<std::vector<int>> paths;
    std::vector<std::vector<int>> path_uf_parent;
    // Enumerate all composable paths (the base is acyclic, so this halts).
    std::vector<int> cur;
    std::function<void(int)> extend = [&](int at) {
      if (!cur.empty()) paths.push_back(cur);
      for (int c : by_src[at]) {
        cur.push_back(c);
        extend(L.icls_tgt[c]);
        cur.pop_back();
      }
    };
    for (int v = 0; v < num_vertices(); ++v) {
      paths.push_back({-1 - v});  // identity path at v
      extend(v);
    }
    std::map<std::vector<int>, int> pid;
    for (int p = 0; p < static_cast<int>(paths.size()); ++p)
      pid[paths[p]] = p;

    std::vector<int> uf(paths.size());
    for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
      while (uf[a] != a) {
        uf[a] = uf[uf[a]];
        a = uf[a];
      }
      return a;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    };

    for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
      const auto& path = paths[p];
      if (path.size() < 2 || path[0] < 0) continue;
      for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        auto it = L.comp.find({path[t + 1], path[t]});
        if (it == L.comp.end()) continue;
        for (int composite : it->second) {
          std::vector<int> reduced;
          reduced.reserve(path.size() - 1);
          for (std::size_t r = 0; r < path.size(); ++r) {
            if (r == t) {
              reduced.push_back(composite);
              ++r;  // skip path[t+1]
            } else {
              reduced.push_back(path[r]);
            }
          }
          unite(p, pid.at(reduced));
        }
      }
    }

    // Identity-composites: composing with an identity class never appears
    // here because identity-equivalent instances carry class -1 and paths
    // are built from non-identity classes only.  But a composite of two
    // classes may be identity-equivalent; such composites were recorded as
    // class -1 inside comp and need the identity path as target.
    for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
      const auto& path = paths[p];
      if (path.size() < 2 || path[0] < 0) continue;
      for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        auto it = L.comp.find({path[t + 1], path[t]});
        if (it == L.comp.end()) continue;
        if (!it->second.count(-1)) continue;
        std::vector<int> reduced;
        for (std::size_t r = 0; r < path.size(); ++r) {
          if (r == t) {
            ++r;
            continue;
          }
          reduced.push_back(path[r]);
        }
        if (reduced.empty()) reduced = {-1 - L.icls_src[path[0]]};
        unite(p, pid.at(reduced));
      }
    }

    // Collapse into path classes with deterministic ids.
    std::map<int, int> root_to_cls;
    std::vector<int> cls_of(paths.size());
    for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
      int r = find(p);
      if (!root_to_cls.count(r)) {
        int id = static_cast<int>(L.path_class_reps.size());
        root_to_cls[r] = id;
        L.path_class_reps.push_back(paths[r]);
        int src, tgt;
        if (paths[r][0] < 0) {
          src = tgt = -1 - paths[r][0];
        } else {
          src = L.icls_src[paths[r].front()];
          tgt = L.icls_tgt[paths[r].back()];
        }
        L.class_src.push_back(src);
        L.class_tgt.push_back(tgt);
      }
      cls_of[p] = root_to_cls[r];
    }
    for (int p = 0; p < static_cast<int>(paths.size()); ++p)
      L.path_class[paths[p]] = cls_of[p];
  }

  // Apply a chain operator (face drop / degeneracy repeat) to a path class.
  int apply_operator(int level, int cls, bool is_face, int m) const {
    const Level& L = levels_[level];
    int target_level = level + (is_face ? -1 : 1);
    const Level& T = levels_[target_level];
    const auto& rep = L.path_class_reps[cls];
    if (rep.size() == 1 && rep[0] < 0)
      return T.path_class.at(rep);  // identity maps to identity
    std::vector<int> out;
    for (int ic : rep) {
      WindowChain w = L.icls_rep[ic];
      if (is_face) {
        w.chain.erase(w.chain.begin() + m);
      } else {
        Subset repeated = w.chain[m];
        w.chain.insert(w.chain.begin() + m, repeated);
      }
      int nc = T.inst_class.at(w);
      if (nc >= 0) out.push_back(nc);
    }
    if (out.empty())
      return T.path_class.at(
          std::vector<int>{-1 - L.class_src[cls]});
    return T.path_class.at(out);
  }

  void link_operator_tables() {
    for (int k = 0; k <= bound_; ++k) {
      Level& L = levels_[k];
      int ncls = static_cast<int>(L.path_class_reps.size());
      if (k >= 1) {
        L.face_to.assign(static_cast<std::size_t>(k) + 1,
                         std::vector<int>(ncls));
        for (int m = 0; m <= k; ++m)
          for (int c = 0; c < ncls; ++c)
            L.face_to[m][c] = apply_operator(k, c, true, m);
      }
      if (k < bound_) {
        L.deg_to.assign(static_cast<std::size_t>(k) + 1,
                        std::vector<int>(ncls));
        for (int m = 0; m <= k; ++m)
          for (int c = 0; c < ncls; ++c)
            L.deg_to[m][c] = apply_operator(k, c, false, m);
      }
    }
  }
};

// Convenience wrapper matching the operation signature.
inline FiniteSimplicialSet hom_complex(const FiniteSimplicialSet& S,
                                       const std::string& from,
                                       const std::string& to, int dim_bound) {
  auto x = S.find_vertex(from);
  auto y = S.find_vertex(to);
  if (!x || !y) throw PreconditionError("hom_complex: vertices not in base");
  HomColimit H(S, dim_bound);
  return H.hom_complex(x->gen, y->gen).complex;
}

// Marked mapping complex: edges marked by the closure of thin-triangle
// witnesses under composition (degenerate edges are implicitly witnessed).
inline MarkedSSet marked_closure(const ScaledSSet& Sbar, const std::string& from,
                                 const std::string& to, int dim_bound = 2) {
  const FiniteSimplicialSet& S = Sbar.base;
  auto x = S.find_vertex(from);
  auto y = S.find_vertex(to);
  if (!x || !y)
    throw PreconditionError("marked_closure: vertices not in base");
  HomColimit H(S, std::max(dim_bound, 1));

  // Marked level-1 classes per (src,tgt): start from thin witnesses and
  // degeneracies of all level-0 classes, then close under composition.
  std::set<int> marked;
  int V = H.num_vertices();
  for (int a = 0; a < V; ++a)
    for (int b = 0; b < V; ++b)
      for (int c0 : H.morphisms(0, a, b)) marked.insert(H.deg_of(0, 0, c0));
  for (int t : Sbar.decorated) marked.insert(H.triangle_edge_class(t));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cur(marked.begin(), marked.end());
    for (int e1 : cur)
      for (int e2 : cur) {
        if (H.tgt_of(1, e1) != H.src_of(1, e2)) continue;
        int comp = H.compose_classes(1, e2, e1);
        if (!marked.count(comp)) {
          marked.insert(comp);
          changed = true;
        }
      }
  }

  auto R = H.hom_complex(x->gen, y->gen);
  MarkedSSet out;
  out.kind = DecorKind::Marked;
  out.base = std::move(R.complex);
  for (std::size_t c = 0; c < R.class_of[1].size(); ++c) {
    if (!marked.count(R.class_of[1][c])) continue;
    SimplexRef ref = R.ref_of[1][c];
    if (!ref.degenerate()) out.decorated.insert(ref.gen);
  }
  return out;
}

}  // namespace scx
