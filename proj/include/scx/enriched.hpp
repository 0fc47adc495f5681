#pragma once

// Finite categories enriched in marked simplicial sets, and their scaled
// nerves.  Hom complexes are truncated at a stored dimension bound; the
// nerve cells are coherent functors from the mapping-poset cubes, and a
// 2-simplex is thin exactly when its comparison edge is marked.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scx/coherent.hpp"
#include "scx/decor.hpp"
#include "scx/level_complex.hpp"
#include "scx/maps.hpp"

namespace scx {

struct MarkedSimpCategory {
  std::vector<std::string> objects;
  int hom_bound = 2;
  std::vector<std::vector<MarkedSSet>> hom;  // [x][y]
  std::vector<int> id_vertex;                // vertex generator in hom[x][x]

  struct Composition {
    ProductResult prod;   // product(hom[y][z].base, hom[x][y].base)
    SimplicialMap map;    // -> hom[x][z].base
  };
  // comp[x][y][z]
  std::vector<std::vector<std::vector<Composition>>> comp;

  int num_objects() const { return static_cast<int>(objects.size()); }

  SimplexRef compose(int x, int y, int z, const SimplexRef& g,
                     const SimplexRef& f) const {
    const auto& C = comp[x][y][z];
    SimplexRef pair =
        product_ref(hom[y][z].base, hom[x][y].base, C.prod, g, f);
    return C.map.apply(hom[x][z].base, pair);
  }

  SimplexRef identity_ref(int x, int dim) const {
    SimplexRef r = make_vertex(id_vertex[x]);
    for (int i = 0; i < dim; ++i) r = hom[x][x].base.degeneracy(r, 0);
    return r;
  }

  void validate() const {
    for (int x = 0; x < num_objects(); ++x)
      for (int y = 0; y < num_objects(); ++y) hom[x][y].validate();
    // Unit laws on all simplices within the bound.
    for (int x = 0; x < num_objects(); ++x)
      for (int y = 0; y < num_objects(); ++y)
        for (int d = 0; d <= hom[x][y].base.top_dim(); ++d)
          for (const auto& f : hom[x][y].base.all_simplices(d)) {
            if (!(compose(x, y, y, identity_ref(y, d), f) == f))
              throw ScxError("enriched unit law fails (left)");
            if (!(compose(x, x, y, f, identity_ref(x, d)) == f))
              throw ScxError("enriched unit law fails (right)");
          }
    // Associativity on triples of equal-dimension simplices.
    for (int x = 0; x < num_objects(); ++x)
      for (int y = 0; y < num_objects(); ++y)
        for (int z = 0; z < num_objects(); ++z)
          for (int w = 0; w < num_objects(); ++w)
            for (int d = 0; d <= hom_bound; ++d)
              for (const auto& f : hom[x][y].base.all_simplices(d))
                for (const auto& g : hom[y][z].base.all_simplices(d))
                  for (const auto& h : hom[z][w].base.all_simplices(d)) {
                    auto lhs = compose(x, y, w, compose(y, z, w, h, g), f);
                    auto rhs = compose(x, z, w, h, compose(x, y, z, g, f));
                    if (!(lhs == rhs))
                      throw ScxError("enriched associativity fails");
                  }
    // Markings are stable under composition.
    for (int x = 0; x < num_objects(); ++x)
      for (int y = 0; y < num_objects(); ++y)
        for (int z = 0; z < num_objects(); ++z)
          for (const auto& f : hom[x][y].base.all_simplices(1))
            for (const auto& g : hom[y][z].base.all_simplices(1)) {
              if (!hom[x][y].is_decorated(f) || !hom[y][z].is_decorated(g))
                continue;
              if (!hom[x][z].is_decorated(compose(x, y, z, g, f)))
                throw ScxError("composition does not preserve markings");
            }
  }

  // Enriched category with discrete hom sets, given by an ordinary finite
  // category; every edge degenerate, hence marked.
  static MarkedSimpCategory from_category(const FinCategory& C,
                                          int hom_bound = 2) {
    MarkedSimpCategory M;
    M.objects = C.objects;
    M.hom_bound = hom_bound;
    int n = C.num_objects();
    M.hom.assign(n, std::vector<MarkedSSet>(n));
    M.id_vertex.assign(n, -1);
    std::vector<std::vector<std::vector<int>>> pts(
        n, std::vector<std::vector<int>>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        FiniteSimplicialSet h;
        for (int f : C.morphisms_from_to(x, y)) {
          pts[x][y].push_back(f);
          int v = h.add_generator(0, C.morphisms[f].label);
          if (f == C.identity[x]) M.id_vertex[x] = v;
        }
        M.hom[x][y].base = std::move(h);
        M.hom[x][y].kind = DecorKind::Marked;
      }
    M.comp.assign(
        n, std::vector<std::vector<Composition>>(
               n, std::vector<Composition>(n)));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          Composition c;
          c.prod = product(M.hom[y][z].base, M.hom[x][y].base);
          c.map.image.resize(
              static_cast<std::size_t>(c.prod.complex.top_dim()) + 1);
          for (int g = 0; g < c.prod.complex.num_generators(0); ++g) {
            auto [gy, gx] = c.prod.pair_of[0][g];
            int composite =
                C.compose(pts[y][z][gy.gen], pts[x][y][gx.gen]);
            int idx = -1;
            for (std::size_t t = 0; t < pts[x][z].size(); ++t)
              if (pts[x][z][t] == composite) idx = static_cast<int>(t);
            c.map.image[0].push_back(make_vertex(idx));
          }
          M.comp[x][y][z] = std::move(c);
        }
    return M;
  }
};

// A cell of the coherent nerve: objects plus, for every window, the images
// of the window-cube generators.
struct CoherentCell {
  std::vector<int> verts;
  // phi[w][d][g]: image in hom[x_i][x_j] of cube generator g of dim d,
  // where w indexes windows (i<j) in lexicographic order.
  std::vector<std::vector<std::vector<SimplexRef>>> phi;

  friend auto operator<=>(const CoherentCell&, const CoherentCell&) = default;
};

class CoherentNerveBuilder {
 public:
  CoherentNerveBuilder(const MarkedSimpCategory& C, int dim_bound)
      : C_(C), bound_(dim_bound) {
    for (int n = 0; n <= bound_; ++n) cube_cache_.push_back(build_cubes(n));
    for (int n = 0; n <= bound_; ++n) enumerate_level(n);
  }

  // The scaled nerve: underlying truncated simplicial nerve plus thinness
  // by marked comparison edges.
  ScaledSSet scaled_nerve() {
    LevelComplex L;
    for (int n = 0; n <= bound_; ++n)
      L.level_sizes.push_back(static_cast<int>(cells_[n].size()));
    L.face.resize(static_cast<std::size_t>(bound_) + 1);
    L.deg.resize(static_cast<std::size_t>(bound_) + 1);
    for (int n = 1; n <= bound_; ++n) {
      L.face[n].assign(static_cast<std::size_t>(n) + 1,
                       std::vector<int>(cells_[n].size()));
      for (int m = 0; m <= n; ++m)
        for (std::size_t c = 0; c < cells_[n].size(); ++c) {
          auto img = relabel(cells_[n][c], n, face_vertex_map(n, m));
          L.face[n][m][c] = index_[n - 1].at(img);
        }
    }
    for (int n = 0; n < bound_; ++n) {
      L.deg[n].assign(static_cast<std::size_t>(n) + 1,
                      std::vector<int>(cells_[n].size()));
      for (int m = 0; m <= n; ++m)
        for (std::size_t c = 0; c < cells_[n].size(); ++c) {
          auto img = relabel(cells_[n][c], n, deg_vertex_map(n, m));
          L.deg[n][m][c] = index_[n + 1].at(img);
        }
    }
    L.label = [&](int n, int c) {
      std::string s = "n" + std::to_string(n) + "_" + std::to_string(c);
      for (int v : cells_[n][c].verts) s += "." + C_.objects[v];
      return s;
    };
    auto N = L.normalize();
    ScaledSSet out;
    out.kind = DecorKind::Scaled;
    out.base = std::move(N.sset);
    if (bound_ >= 2) {
      for (std::size_t c = 0; c < cells_[2].size(); ++c) {
        SimplexRef ref = N.ref[2][c];
        if (ref.degenerate()) continue;
        if (comparison_edge_marked(cells_[2][c])) out.decorated.insert(ref.gen);
      }
    }
    return out;
  }

 private:
  const MarkedSimpCategory& C_;
  int bound_;
  // cube_cache_[n][w] = order complex of the window-w mapping poset of [n],
  // with chain lookup.
  struct Cube {
    OrderComplex oc;
    MappingPoset poset;
    std::map<std::vector<Subset>, std::pair<int, int>> gen_of_chain;
  };
  std::vector<std::vector<Cube>> cube_cache_;
  std::vector<std::vector<CoherentCell>> cells_{};
  std::vector<std::map<CoherentCell, int>> index_{};

  static int window_index(int n, int i, int j) {
    // lexicographic position of (i,j), i<j<=n
    int idx = 0;
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        if (a == i && b == j) return idx;
        ++idx;
      }
    throw ScxError("window_index: bad window");
  }
  static int num_windows(int n) { return n * (n + 1) / 2; }

  std::vector<Cube> build_cubes(int n) {
    std::vector<Cube> out;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Cube c{/*oc=*/{}, MappingPoset::make(n, i, j), {}};
        c.oc = mapping_poset_nerve(c.poset);
        for (int d = 0; d < static_cast<int>(c.oc.chain_of.size()); ++d)
          for (int g = 0; g < static_cast<int>(c.oc.chain_of[d].size()); ++g) {
            std::vector<Subset> ch;
            for (int e : c.oc.chain_of[d][g]) ch.push_back(c.poset.elements[e]);
            c.gen_of_chain[ch] = {d, g};
          }
        out.push_back(std::move(c));
      }
    return out;
  }

  // Evaluate a cell's window map on an arbitrary weak chain of subsets.
  SimplexRef eval(const CoherentCell& cell, int n, int i, int j,
                  std::vector<Subset> chain) const {
    int x = cell.verts[i], y = cell.verts[j];
    (void)y;
    std::vector<Subset> core;
    std::vector<int> repeats;
    for (std::size_t t = 0; t < chain.size(); ++t) {
      if (!core.empty() && core.back() == chain[t])
        repeats.push_back(static_cast<int>(t));
      else
        core.push_back(chain[t]);
    }
    const Cube& cube = cube_cache_[n][window_index(n, i, j)];
    auto [d, g] = cube.gen_of_chain.at(core);
    SimplexRef r = cell.phi[window_index(n, i, j)][d][g];
    const FiniteSimplicialSet& H = C_.hom[x][cell.verts[j]].base;
    for (int p : repeats) r = H.degeneracy(r, p - 1);
    return r;
  }

  // Vertex maps of the cosimplicial operators.
  static std::vector<int> face_vertex_map(int n, int m) {
    std::vector<int> u;
    for (int v = 0; v <= n - 1; ++v) u.push_back(v < m ? v : v + 1);
    return u;
  }
  static std::vector<int> deg_vertex_map(int n, int m) {
    std::vector<int> u;
    for (int v = 0; v <= n + 1; ++v) u.push_back(v <= m ? v : v - 1);
    return u;
  }

  // Restriction of a cell along a vertex map u: [m] -> [n].
  CoherentCell relabel(const CoherentCell& cell, int n,
                       const std::vector<int>& u) const {
    int m = static_cast<int>(u.size()) - 1;
    CoherentCell out;
    for (int v = 0; v <= m; ++v) out.verts.push_back(cell.verts[u[v]]);
    out.phi.resize(num_windows(m));
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        const Cube& cube = cube_cache_[m][window_index(m, i, j)];
        auto& table = out.phi[window_index(m, i, j)];
        table.resize(cube.oc.chain_of.size());
        for (int d = 0; d < static_cast<int>(cube.oc.chain_of.size()); ++d)
          for (int g = 0; g < static_cast<int>(cube.oc.chain_of[d].size());
               ++g) {
            std::vector<Subset> img;
            for (int e : cube.oc.chain_of[d][g]) {
              Subset s = cube.poset.elements[e], t = 0;
              for (int v = 0; v <= m; ++v)
                if (s & (Subset(1) << v)) t |= Subset(1) << u[v];
              img.push_back(t);
            }
            SimplexRef val;
            if (u[i] == u[j]) {
              val = C_.identity_ref(out.verts[i], d);
            } else {
              val = eval(cell, n, u[i], u[j], img);
            }
            table[d].push_back(val);
          }
      }
    return out;
  }

  bool comparison_edge_marked(const CoherentCell& cell) const {
    // The edge {0,2} < {0,1,2} in the (0,2) window.
    SimplexRef alpha = eval(cell, 2, 0, 2, {0b101, 0b111});
    return C_.hom[cell.verts[0]][cell.verts[2]].is_decorated(alpha) ||
           alpha.degenerate();
  }

  void enumerate_level(int n) {
    cells_.resize(static_cast<std::size_t>(bound_) + 1);
    index_.resize(static_cast<std::size_t>(bound_) + 1);
    std::vector<CoherentCell> out;
    std::vector<int> verts(static_cast<std::size_t>(n) + 1);
    std::function<void(int)> pick_verts = [&](int at) {
      if (at > n) {
        enumerate_windows(n, verts, out);
        return;
      }
      for (int x = 0; x < C_.num_objects(); ++x) {
        verts[at] = x;
        pick_verts(at + 1);
      }
    };
    pick_verts(0);
    cells_[n] = std::move(out);
    for (int c = 0; c < static_cast<int>(cells_[n].size()); ++c)
      index_[n][cells_[n][c]] = c;
  }

  // Windows ordered by width then lex; images of union-decomposable cube
  // generators are forced by composition with the already-chosen windows.
  void enumerate_windows(int n, const std::vector<int>& verts,
                         std::vector<CoherentCell>& out) {
    std::vector<std::pair<int, int>> order;
    for (int w = 1; w <= n; ++w)
      for (int i = 0; i + w <= n; ++i) order.push_back({i, i + w});
    CoherentCell cell;
    cell.verts = verts;
    cell.phi.assign(num_windows(n), {});

    std::function<void(std::size_t)> rec = [&](std::size_t widx) {
      if (widx == order.size()) {
        out.push_back(cell);
        return;
      }
      auto [i, j] = order[widx];
      const Cube& cube = cube_cache_[n][window_index(n, i, j)];
      const FiniteSimplicialSet& H = C_.hom[verts[i]][verts[j]].base;
      HomFilter filter = [&](int d, int g, const SimplexRef& cand) {
        const auto& chain_elems = cube.oc.chain_of[d][g];
        std::vector<Subset> chain;
        for (int e : chain_elems) chain.push_back(cube.poset.elements[e]);
        Subset common = ~Subset(0);
        for (Subset s : chain) common &= s;
        for (int q = i + 1; q < j; ++q) {
          if (!(common & (Subset(1) << q))) continue;
          std::vector<Subset> lowers, uppers;
          Subset lo_mask = 0, hi_mask = 0;
          for (int v = i; v <= q; ++v) lo_mask |= Subset(1) << v;
          for (int v = q; v <= j; ++v) hi_mask |= Subset(1) << v;
          for (Subset s : chain) {
            lowers.push_back(s & lo_mask);
            uppers.push_back(s & hi_mask);
          }
          SimplexRef f = eval(cell, n, i, q, lowers);
          SimplexRef g2 = eval(cell, n, q, j, uppers);
          SimplexRef forced = C_.compose(verts[i], verts[q], verts[j], g2, f);
          if (!(forced == cand)) return false;
        }
        return true;
      };
      auto maps = enumerate_maps(cube.oc.complex, H, filter);
      for (const auto& m : maps) {
        cell.phi[window_index(n, i, j)] = m.image;
        rec(widx + 1);
      }
      cell.phi[window_index(n, i, j)].clear();
    };
    rec(0);
  }
};

inline ScaledSSet scaled_nerve(const MarkedSimpCategory& C, int dim_bound) {
  C.validate();
  CoherentNerveBuilder B(C, dim_bound);
  return B.scaled_nerve();
}

}  // namespace scx
