#pragma once

// The scaled slice and its mapping-space fibers, pattern-anodyne generators,
// bounded pattern-fibration checking, and flatness certificates over a
// triangle.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scx/anodyne.hpp"
#include "scx/decor.hpp"
#include "scx/homology.hpp"
#include "scx/level_complex.hpp"
#include "scx/maps.hpp"

namespace scx {

// --- the scaled slice ---

// n-simplices of the slice under x are prisms Delta^n x Delta^1 -> C sent
// to x on the bottom, restricted to those all of whose edge-squares have a
// thin upper-right triangle; an edge is marked when both triangles are thin.
struct ScaledSlice {
  MarkedSSet complex;
  SimplicialMap projection;  // restriction to Delta^n x {1}
};

namespace detail {

struct PrismTower {
  std::vector<ProductResult> prism;           // prism[n] = Delta^n x Delta^1
  std::vector<std::vector<std::vector<int>>> vt;  // vt[n][i][t]
  std::vector<std::vector<SimplicialMap>> face_incl;  // [n][t]: P_{n-1}->P_n
  std::vector<std::vector<SimplicialMap>> deg_coll;   // [n][t]: P_{n+1}->P_n

  explicit PrismTower(int bound) {
    for (int n = 0; n <= bound + 1; ++n) {
      prism.push_back(product(FiniteSimplicialSet::simplex(n),
                              FiniteSimplicialSet::simplex(1)));
      vt.emplace_back(n + 1, std::vector<int>(2, -1));
      for (int i = 0; i <= n; ++i)
        for (int t = 0; t <= 1; ++t)
          vt[n][i][t] = *prism[n].complex.label_index(
              0, "(" + std::to_string(i) + "," + std::to_string(t) + ")");
    }
    face_incl.resize(bound + 2);
    deg_coll.resize(bound + 2);
    for (int n = 1; n <= bound + 1; ++n)
      for (int t = 0; t <= n; ++t)
        face_incl[n].push_back(prism_map(n - 1, n, [n, t](int v) {
          return v < t ? v : v + 1;
        }));
    for (int n = 0; n <= bound; ++n)
      for (int t = 0; t <= n; ++t)
        deg_coll[n].push_back(prism_map(n + 1, n, [t](int v) {
          return v <= t ? v : v - 1;
        }));
  }

  // Simplicial map P_from -> P_to over a vertex map u on the simplex factor.
  SimplicialMap prism_map(int from, int to,
                          const std::function<int(int)>& u) const {
    const auto& PF = prism[from];
    const auto& PT = prism[to];
    SimplicialMap m;
    m.image.resize(static_cast<std::size_t>(PF.complex.top_dim()) + 1);
    for (int d = 0; d <= PF.complex.top_dim(); ++d)
      for (int g = 0; g < PF.complex.num_generators(d); ++g) {
        auto vs = PF.complex.vertex_gens(SimplexRef{d, g, {}});
        std::vector<int> target_verts;
        for (int v : vs) {
          // decode (i, t) from the vertex table
          int fi = -1, ft = -1;
          for (int i = 0; i <= from && fi < 0; ++i)
            for (int t = 0; t <= 1; ++t)
              if (vt[from][i][t] == v) {
                fi = i;
                ft = t;
              }
          target_verts.push_back(vt[to][u(fi)][ft]);
        }
        auto r = PT.complex.by_vertices(target_verts);
        if (!r) throw ScxError("prism_map: image simplex not found");
        m.image[d].push_back(*r);
      }
    return m;
  }

  // The triangle of P_n spanned by positions (a,0), (a,1), (b,1).
  SimplexRef upper_triangle(int n, int a, int b) const {
    return *prism[n].complex.by_vertices(
        {vt[n][a][0], vt[n][a][1], vt[n][b][1]});
  }
  // The triangle spanned by (a,0), (b,0), (b,1).
  SimplexRef lower_triangle(int n, int a, int b) const {
    return *prism[n].complex.by_vertices(
        {vt[n][a][0], vt[n][b][0], vt[n][b][1]});
  }
};

}  // namespace detail

inline ScaledSlice scaled_slice(const ScaledSSet& C, const std::string& from,
                                int dim_bound,
                                std::optional<std::string> fiber_over =
                                    std::nullopt) {
  auto xv = C.base.find_vertex(from);
  if (!xv) throw PreconditionError("scaled_slice: vertex not in base");
  std::optional<SimplexRef> yv;
  if (fiber_over) {
    yv = C.base.find_vertex(*fiber_over);
    if (!yv) throw PreconditionError("scaled_slice: fiber vertex not in base");
  }
  detail::PrismTower T(dim_bound);

  // Totally degenerate simplex at a vertex.
  auto const_ref = [&](const SimplexRef& v, int d) {
    SimplexRef r = v;
    for (int i = 0; i < d; ++i) r = C.base.degeneracy(r, 0);
    return r;
  };

  std::vector<std::vector<SimplicialMap>> cells(
      static_cast<std::size_t>(dim_bound) + 1);
  std::vector<std::map<SimplicialMap, int>> cell_id(
      static_cast<std::size_t>(dim_bound) + 1);
  for (int n = 0; n <= dim_bound; ++n) {
    const auto& P = T.prism[n];
    // Force bottom-face generators to degenerate values at x (and top-face
    // at y for fibers); restrict edges by the thin upper-right rule.
    HomFilter filter = [&](int d, int g, const SimplexRef& cand) {
      const auto& [a, b] = P.pair_of[d][g];
      auto bv = FiniteSimplicialSet::simplex(1).vertex_gens(b);
      bool bottom = true, top = true;
      for (int v : bv) {
        bottom &= v == 0;
        top &= v == 1;
      }
      if (bottom && !(cand == const_ref(*xv, d))) return false;
      if (yv && top && !(cand == const_ref(*yv, d))) return false;
      return true;
    };
    for (auto& u : enumerate_maps(P.complex, C.base, filter)) {
      bool edges_ok = true;
      for (int i = 0; i <= n && edges_ok; ++i)
        for (int j = i; j <= n && edges_ok; ++j) {
          SimplexRef tri = u.apply(C.base, T.upper_triangle(n, i, j));
          if (!C.is_decorated(tri)) edges_ok = false;
        }
      if (!edges_ok) continue;
      cell_id[n][u] = static_cast<int>(cells[n].size());
      cells[n].push_back(u);
    }
  }

  LevelComplex L;
  for (int n = 0; n <= dim_bound; ++n)
    L.level_sizes.push_back(static_cast<int>(cells[n].size()));
  L.face.resize(static_cast<std::size_t>(dim_bound) + 1);
  L.deg.resize(static_cast<std::size_t>(dim_bound) + 1);
  for (int n = 1; n <= dim_bound; ++n) {
    L.face[n].assign(static_cast<std::size_t>(n) + 1,
                     std::vector<int>(cells[n].size()));
    for (int t = 0; t <= n; ++t)
      for (std::size_t c = 0; c < cells[n].size(); ++c)
        L.face[n][t][c] = cell_id[n - 1].at(
            compose(C.base, cells[n][c], T.face_incl[n][t]));
  }
  for (int n = 0; n < dim_bound; ++n) {
    L.deg[n].assign(static_cast<std::size_t>(n) + 1,
                    std::vector<int>(cells[n].size()));
    for (int t = 0; t <= n; ++t)
      for (std::size_t c = 0; c < cells[n].size(); ++c)
        L.deg[n][t][c] = cell_id[n + 1].at(
            compose(C.base, cells[n][c], T.deg_coll[n][t]));
  }
  L.label = [&](int n, int c) {
    return "s" + std::to_string(n) + "." + std::to_string(c);
  };
  auto N = L.normalize();

  ScaledSlice R;
  R.complex.kind = DecorKind::Marked;
  R.complex.base = std::move(N.sset);
  // Marked edges: both triangles of the square are thin.
  for (std::size_t c = 0; c < cells[1].size(); ++c) {
    SimplexRef ref = N.ref[1][c];
    if (ref.degenerate()) continue;
    SimplexRef lower = cells[1][c].apply(C.base, T.lower_triangle(1, 0, 1));
    if (C.is_decorated(lower)) R.complex.decorated.insert(ref.gen);
  }
  // Projection: restriction to the top face.
  R.projection.image.resize(
      static_cast<std::size_t>(R.complex.base.top_dim()) + 1);
  for (int d = 0; d <= R.complex.base.top_dim(); ++d)
    for (int g = 0; g < R.complex.base.num_generators(d); ++g)
      for (std::size_t c = 0; c < cells[d].size(); ++c)
        if (N.ref[d][c] == SimplexRef{d, g, {}}) {
          std::vector<int> top_verts;
          for (int i = 0; i <= d; ++i) top_verts.push_back(T.vt[d][i][1]);
          SimplexRef top = *T.prism[d].complex.by_vertices(top_verts);
          R.projection.image[d].push_back(cells[d][c].apply(C.base, top));
          break;
        }
  return R;
}

inline MarkedSSet hom_via_slice(const ScaledSSet& C, const std::string& from,
                                const std::string& to, int dim_bound) {
  return scaled_slice(C, from, dim_bound, to).complex;
}

// --- pattern-anodyne generators ---

struct PatternMap {
  DecoratedMap map;              // marked simplicial sets
  SimplicialMap target_to_base;  // anchoring over the pattern base
};

// A0: thin triangle with all edges marked.
inline PatternMap pattern_generator_a0(const CategoricalPattern& P,
                                       int triangle) {
  if (!P.thin.count(triangle))
    throw PreconditionError("A0: triangle is not thin");
  auto d2 = FiniteSimplicialSet::simplex(2);
  SimplexRef t{2, triangle, {}};
  for (int k = 0; k <= 2; ++k)
    if (!P.edge_marked(P.base.face(t, k)))
      throw PreconditionError("A0: edge " + std::to_string(k) +
                              " is not marked");
  PatternMap G;
  G.map.kind = "A0";
  G.map.source.base = d2;
  G.map.source.kind = DecorKind::Marked;
  G.map.source.decorated = {*d2.label_index(1, "0.1"),
                            *d2.label_index(1, "1.2")};
  G.map.target.base = d2;
  G.map.target.kind = DecorKind::Marked;
  G.map.target.decorated = {*d2.label_index(1, "0.1"), *d2.label_index(1, "1.2"),
                            *d2.label_index(1, "0.2")};
  G.map.underlying = identity_map(d2);
  G.target_to_base.image.resize(3);
  G.target_to_base.image[0] = {P.base.restrict(t, {0}), P.base.restrict(t, {1}),
                               P.base.restrict(t, {2})};
  // generator order of Delta^2 edges: 0.1, 0.2, 1.2
  G.target_to_base.image[1] = {P.base.face(t, 2), P.base.face(t, 1),
                               P.base.face(t, 0)};
  G.target_to_base.image[2] = {t};
  return G;
}

// A1: the flat-to-sharp inclusion of the collapsed three-simplex, over a map
// carrying edges into the marking and triangles into the scaling.
inline PatternMap pattern_generator_a1(const CategoricalPattern& P,
                                       const SimplicialMap& q) {
  auto K = collapsed_k();
  if (!q.valid(K, P.base)) throw PreconditionError("A1: map is not simplicial");
  for (int e = 0; e < K.num_generators(1); ++e)
    if (!P.edge_marked(q.image[1][e]))
      throw PreconditionError("A1: an edge misses the marking");
  for (int t = 0; t < K.num_generators(2); ++t)
    if (!P.triangle_thin(q.image[2][t]))
      throw PreconditionError("A1: a triangle misses the scaling");
  PatternMap G;
  G.map.kind = "A1";
  G.map.source.base = K;
  G.map.source.kind = DecorKind::Marked;
  G.map.target.base = K;
  G.map.target.kind = DecorKind::Marked;
  for (int e = 0; e < K.num_generators(1); ++e) G.map.target.decorated.insert(e);
  G.map.underlying = identity_map(K);
  G.target_to_base = q;
  return G;
}

// B0: vertex into a marked edge.
inline PatternMap pattern_generator_b0(const CategoricalPattern& P, int edge) {
  if (!P.marked.count(edge)) throw PreconditionError("B0: edge is not marked");
  auto d0 = FiniteSimplicialSet::simplex(0);
  auto d1 = FiniteSimplicialSet::simplex(1);
  PatternMap G;
  G.map.kind = "B0";
  G.map.source.base = d0;
  G.map.source.kind = DecorKind::Marked;
  G.map.target.base = d1;
  G.map.target.kind = DecorKind::Marked;
  G.map.target.decorated = {0};
  G.map.underlying.image.resize(1);
  G.map.underlying.image[0] = {make_vertex(0)};
  SimplexRef e{1, edge, {}};
  G.target_to_base.image.resize(2);
  G.target_to_base.image[0] = {P.base.face(e, 1), P.base.face(e, 0)};
  G.target_to_base.image[1] = {e};
  return G;
}

// B1: a cone base into its cone, everything marked.
inline PatternMap pattern_generator_b1(const CategoricalPattern& P, int cone) {
  const auto& K = P.cones.at(cone).K;
  auto KC = left_cone(K);
  PatternMap G;
  G.map.kind = "B1";
  G.map.source.base = K;
  G.map.source.kind = DecorKind::Marked;
  for (int e = 0; e < K.num_generators(1); ++e) G.map.source.decorated.insert(e);
  G.map.target.base = KC;
  G.map.target.kind = DecorKind::Marked;
  for (int e = 0; e < KC.num_generators(1); ++e)
    G.map.target.decorated.insert(e);
  G.map.underlying.image.resize(static_cast<std::size_t>(K.top_dim()) + 1);
  for (int d = 0; d <= K.top_dim(); ++d)
    for (int g = 0; g < K.num_generators(d); ++g)
      G.map.underlying.image[d].push_back(
          SimplexRef{d, *KC.label_index(d, "R." + K.label(d, g)), {}});
  // Constant cone: everything over the cone vertex.
  auto v = P.base.find_vertex(P.cones.at(cone).vertex);
  if (!v) throw PreconditionError("B1: cone vertex missing");
  G.target_to_base.image.resize(static_cast<std::size_t>(KC.top_dim()) + 1);
  for (int d = 0; d <= KC.top_dim(); ++d)
    for (int g = 0; g < KC.num_generators(d); ++g) {
      SimplexRef r = *v;
      for (int t = 0; t < d; ++t) r = P.base.degeneracy(r, 0);
      G.target_to_base.image[d].push_back(r);
    }
  return G;
}

// C0: initial horn with marked first edge, over a simplex whose {0,1,n}
// face is thin.
inline PatternMap pattern_generator_c0(const CategoricalPattern& P, int n,
                                       const SimplicialMap& sigma) {
  if (n <= 1) throw PreconditionError("C0: need n > 1");
  auto dn = FiniteSimplicialSet::simplex(n);
  if (!sigma.valid(dn, P.base))
    throw PreconditionError("C0: sigma is not simplicial");
  std::vector<int> window{0, 1, n};
  SimplexRef t01n = sigma.apply(
      P.base, dn.restrict(SimplexRef{n, 0, {}}, window));
  if (!P.triangle_thin(t01n))
    throw PreconditionError("C0: the {0,1,n} face is not thin");
  auto horn = FiniteSimplicialSet::horn(n, 0);
  PatternMap G;
  G.map.kind = "C0";
  G.map.source.base = horn;
  G.map.source.kind = DecorKind::Marked;
  G.map.source.decorated = {*horn.label_index(1, "0.1")};
  G.map.target.base = dn;
  G.map.target.kind = DecorKind::Marked;
  G.map.target.decorated = {*dn.label_index(1, "0.1")};
  G.map.underlying = inclusion_by_labels(horn, dn);
  G.target_to_base = sigma;
  return G;
}

// C1: flat inner horn inclusion over any simplex.
inline PatternMap pattern_generator_c1(const CategoricalPattern& P, int n,
                                       int i, const SimplicialMap& sigma) {
  if (!(0 < i && i < n)) throw PreconditionError("C1: need 0 < i < n");
  auto dn = FiniteSimplicialSet::simplex(n);
  if (!sigma.valid(dn, P.base))
    throw PreconditionError("C1: sigma is not simplicial");
  auto horn = FiniteSimplicialSet::horn(n, i);
  PatternMap G;
  G.map.kind = "C1";
  G.map.source.base = horn;
  G.map.source.kind = DecorKind::Marked;
  G.map.target.base = dn;
  G.map.target.kind = DecorKind::Marked;
  G.map.underlying = inclusion_by_labels(horn, dn);
  G.target_to_base = sigma;
  return G;
}

// C2: boundary-join inclusion into a cone extension.
inline PatternMap pattern_generator_c2(const CategoricalPattern& P, int cone,
                                       int n, const SimplicialMap& f) {
  if (n < 1) throw PreconditionError("C2: need n >= 1");
  const auto& K = P.cones.at(cone).K;
  auto dn_join = join(FiniteSimplicialSet::simplex(n), K);
  auto bd_join = join(FiniteSimplicialSet::boundary(n), K);
  if (!f.valid(dn_join, P.base))
    throw PreconditionError("C2: f is not simplicial");
  PatternMap G;
  G.map.kind = "C2";
  auto mark_cone_edges = [&](DecoratedSSet& D, const FiniteSimplicialSet& J) {
    // Edges of {n} * K: pairs (n, K-vertex) and the K-side edges.
    std::string apex_prefix = "(" + std::to_string(n) + "*";
    for (int e = 0; e < J.num_generators(1); ++e) {
      const std::string& l = J.label(1, e);
      if (l.rfind("R.", 0) == 0 || l.rfind(apex_prefix, 0) == 0)
        D.decorated.insert(e);
    }
  };
  G.map.source.base = bd_join;
  G.map.source.kind = DecorKind::Marked;
  mark_cone_edges(G.map.source, bd_join);
  G.map.target.base = dn_join;
  G.map.target.kind = DecorKind::Marked;
  mark_cone_edges(G.map.target, dn_join);
  // Inclusion: labels of the boundary join embed in the simplex join.
  G.map.underlying.image.resize(
      static_cast<std::size_t>(bd_join.top_dim()) + 1);
  for (int d = 0; d <= bd_join.top_dim(); ++d)
    for (int g = 0; g < bd_join.num_generators(d); ++g) {
      auto idx = dn_join.label_index(d, bd_join.label(d, g));
      if (!idx) throw ScxError("C2: join inclusion misses a label");
      G.map.underlying.image[d].push_back(SimplexRef{d, *idx, {}});
    }
  G.target_to_base = f;
  return G;
}

// --- bounded coCartesian machinery ---

// Bounded test: e is q-coCartesian for q: Y -> B when every initial horn
// with leading edge e lifts over every base extension, for 2 <= m <= bound.
inline bool cocartesian_bounded(const FiniteSimplicialSet& Y,
                                const SimplicialMap& q,
                                const FiniteSimplicialSet& B,
                                const SimplexRef& e, int bound) {
  for (int m = 2; m <= bound; ++m) {
    auto horn = FiniteSimplicialSet::horn(m, 0);
    auto dm = FiniteSimplicialSet::simplex(m);
    int lead = *horn.label_index(1, "0.1");
    HomFilter lead_is_e = [&](int d, int g, const SimplexRef& cand) {
      return d != 1 || g != lead || cand == e;
    };
    for (const auto& u : enumerate_maps(horn, Y, lead_is_e)) {
      // base extensions of q o u
      SimplicialMap qu = compose(B, q, u);
      HomFilter extend_base = [&](int d, int g, const SimplexRef& cand) {
        auto idx = horn.label_index(d, dm.label(d, g));
        if (!idx) return true;
        return cand == qu.image[d][*idx];
      };
      for (const auto& v : enumerate_maps(dm, B, extend_base)) {
        HomFilter lift_filter = [&](int d, int g, const SimplexRef& cand) {
          auto idx = horn.label_index(d, dm.label(d, g));
          if (idx && !(cand == u.image[d][*idx])) return false;
          return q.apply(B, cand) == v.image[d][g];
        };
        if (enumerate_maps(dm, Y, lift_filter, 1).empty()) return false;
      }
    }
  }
  return true;
}

// --- pattern-fibered checking ---

struct PatternFiberedReport {
  Verdict verdict = Verdict::SemiDecidedYes;
  std::string witness;
};

// Conditions (1)-(4) checked by bounded enumeration; cone conditions are
// automatic in the supported regime (constant cones over weakly contractible
// bases) and rejected otherwise.
inline PatternFiberedReport is_pattern_fibered(const MarkedSSet& X,
                                               const SimplicialMap& p,
                                               const CategoricalPattern& P,
                                               int dim_bound) {
  PatternFiberedReport R;
  auto no = [&](const std::string& w) {
    R.verdict = Verdict::No;
    R.witness = w;
    return R;
  };
  if (!p.valid(X.base, P.base))
    throw PreconditionError("is_pattern_fibered: p is not simplicial");
  for (const auto& cone : P.cones) {
    auto cert = contractibility_certificate(cone.K, cone.K.top_dim() + 1);
    if (!cert.contractible_grade())
      throw PreconditionError(
          "is_pattern_fibered: cone base not weakly contractible");
  }
  // Marked edges must sit over the base marking.
  for (int e : X.decorated)
    if (!P.edge_marked(p.image[1][e]))
      return no("marked edge over an unmarked base edge: " + X.base.label(1, e));

  // (1) inner fibration.
  for (int n = 2; n <= dim_bound; ++n) {
    auto dn = FiniteSimplicialSet::simplex(n);
    for (int i = 1; i < n; ++i) {
      auto horn = FiniteSimplicialSet::horn(n, i);
      for (const auto& u : enumerate_maps(horn, X.base)) {
        SimplicialMap pu = compose(P.base, p, u);
        HomFilter base_ext = [&](int d, int g, const SimplexRef& cand) {
          auto idx = horn.label_index(d, dn.label(d, g));
          return !idx || cand == pu.image[d][*idx];
        };
        for (const auto& v : enumerate_maps(dn, P.base, base_ext)) {
          HomFilter lift = [&](int d, int g, const SimplexRef& cand) {
            auto idx = horn.label_index(d, dn.label(d, g));
            if (idx && !(cand == u.image[d][*idx])) return false;
            return p.apply(P.base, cand) == v.image[d][g];
          };
          if (enumerate_maps(dn, X.base, lift, 1).empty())
            return no("inner horn (" + std::to_string(n) + "," +
                      std::to_string(i) + ") fails to lift");
        }
      }
    }
  }

  auto d1 = FiniteSimplicialSet::simplex(1);
  // (2)+(3) over every marked base edge, degenerate ones included: fiber
  // edges are marked exactly when locally coCartesian over the identity.
  std::vector<SimplexRef> marked_edge_maps;
  for (int me : P.marked) marked_edge_maps.push_back(SimplexRef{1, me, {}});
  for (int v = 0; v < P.base.num_generators(0); ++v)
    marked_edge_maps.push_back(P.base.degeneracy(make_vertex(v), 0));
  for (const auto& base_edge : marked_edge_maps) {
    SimplicialMap q;  // Delta^1 -> S
    q.image.resize(2);
    q.image[0] = {P.base.face(base_edge, 1), P.base.face(base_edge, 0)};
    q.image[1] = {base_edge};
    auto FP = fiber_product(X.base, p, d1, q, P.base, dim_bound + 1);
    for (int v0 = 0; v0 < FP.complex.num_generators(0); ++v0) {
      if (!(FP.proj_b.image[0][v0] == make_vertex(0))) continue;
      bool found = false;
      for (int e = 0; e < FP.complex.num_generators(1) && !found; ++e) {
        SimplexRef er{1, e, {}};
        if (!(FP.complex.face(er, 1) == make_vertex(v0))) continue;
        if (FP.proj_b.image[1][e].degenerate()) continue;
        if (cocartesian_bounded(FP.complex, FP.proj_b, d1, er, dim_bound))
          found = true;
      }
      if (!found)
        return no("no coCartesian lift over " + P.base.label(base_edge) +
                  " at a fiber vertex");
    }
    // (3) marked = locally coCartesian over this edge.
    for (int e = 0; e < FP.complex.num_generators(1); ++e) {
      SimplexRef er{1, e, {}};
      if (FP.proj_b.image[1][e].degenerate()) continue;
      SimplexRef ex = FP.proj_x.image[1][e];
      bool is_marked = ex.degenerate() || X.decorated.count(ex.gen) > 0;
      bool is_cocart =
          cocartesian_bounded(FP.complex, FP.proj_b, d1, er, dim_bound);
      if (is_marked != is_cocart)
        return no(std::string("condition (3) fails at ") +
                  FP.complex.label(1, e) +
                  (is_marked ? " (marked, not coCartesian)"
                             : " (coCartesian, not marked)"));
    }
  }
  // Marked edges over unmarked base edges would have been rejected above;
  // edges of X over M_S that are marked were checked coCartesian.  Finally,
  // (4): marked edges stay coCartesian over thin triangles.
  auto d2 = FiniteSimplicialSet::simplex(2);
  for (int tt : P.thin) {
    SimplexRef tri{2, tt, {}};
    SimplicialMap q;
    q.image.resize(3);
    q.image[0] = {P.base.restrict(tri, {0}), P.base.restrict(tri, {1}),
                  P.base.restrict(tri, {2})};
    // generator order of Delta^2 edges: 0.1, 0.2, 1.2
    q.image[1] = {P.base.face(tri, 2), P.base.face(tri, 1),
                  P.base.face(tri, 0)};
    q.image[2] = {tri};
    auto FP = fiber_product(X.base, p, d2, q, P.base, dim_bound + 1);
    for (int e = 0; e < FP.complex.num_generators(1); ++e) {
      SimplexRef er{1, e, {}};
      SimplexRef ex = FP.proj_x.image[1][e];
      if (ex.degenerate() || !X.decorated.count(ex.gen)) continue;
      // only lifts of the initial edge of the triangle
      auto bv = d2.vertex_gens(FP.proj_b.image[1][e]);
      if (!(bv == std::vector<int>{0, 1})) continue;
      if (!cocartesian_bounded(FP.complex, FP.proj_b, d2, er, dim_bound))
        return no("condition (4) fails over a thin triangle at " +
                  X.base.label(1, ex.gen));
    }
  }
  return R;
}

// --- flatness over a triangle ---

struct FlatnessReport {
  HomologyCertificate certificate;
  bool flat = true;
  std::string detail;
};

// Builds the double-slice fiber over f and certifies weak contractibility
// at the homology grade.
inline FlatnessReport is_flat_over_triangle(const FiniteSimplicialSet& M,
                                            const SimplicialMap& proj,
                                            const SimplexRef& f, int bound = 2) {
  auto d2 = FiniteSimplicialSet::simplex(2);
  if (!proj.valid(M, d2))
    throw PreconditionError("flatness: projection is not simplicial");
  SimplexRef pf = proj.apply(d2, f);
  if (pf.degenerate() || d2.vertex_gens(pf) != std::vector<int>{0, 2})
    throw PreconditionError("flatness: edge is not over the long edge");

  LevelComplex L;
  std::vector<std::vector<SimplexRef>> cells(static_cast<std::size_t>(bound) + 2);
  std::vector<std::map<SimplexRef, int>> cell_id(
      static_cast<std::size_t>(bound) + 2);
  auto middle_over_1 = [&](const SimplexRef& tau, int n) {
    std::vector<int> mid;
    for (int v = 1; v <= n + 1; ++v) mid.push_back(v);
    SimplexRef m = M.restrict(tau, mid);
    SimplexRef pm = proj.apply(d2, m);
    // totally degenerate at vertex 1
    SimplexRef one = make_vertex(1);
    for (int t = 0; t < n; ++t) one = d2.degeneracy(one, 0);
    return pm == one;
  };
  for (int n = 0; n <= bound + 1; ++n) {
    for (const auto& tau : M.all_simplices(n + 2)) {
      if (!(M.restrict(tau, {0, n + 2}) == f)) continue;
      if (!middle_over_1(tau, n)) continue;
      cell_id[n][tau] = static_cast<int>(cells[n].size());
      cells[n].push_back(tau);
    }
    L.level_sizes.push_back(static_cast<int>(cells[n].size()));
  }
  L.face.resize(static_cast<std::size_t>(bound) + 2);
  L.deg.resize(static_cast<std::size_t>(bound) + 2);
  for (int n = 1; n <= bound + 1; ++n) {
    L.face[n].assign(static_cast<std::size_t>(n) + 1,
                     std::vector<int>(cells[n].size()));
    for (int t = 0; t <= n; ++t)
      for (std::size_t c = 0; c < cells[n].size(); ++c)
        L.face[n][t][c] = cell_id[n - 1].at(M.face(cells[n][c], t + 1));
  }
  for (int n = 0; n <= bound; ++n) {
    L.deg[n].assign(static_cast<std::size_t>(n) + 1,
                    std::vector<int>(cells[n].size()));
    for (int t = 0; t <= n; ++t)
      for (std::size_t c = 0; c < cells[n].size(); ++c)
        L.deg[n][t][c] = cell_id[n + 1].at(M.degeneracy(cells[n][c], t + 1));
  }
  L.label = [&](int n, int c) {
    return "d" + std::to_string(n) + "." + std::to_string(c);
  };
  auto N = L.normalize();

  FlatnessReport R;
  if (N.sset.num_generators(0) == 0) {
    R.flat = false;
    R.detail = "double-slice fiber is empty";
    R.certificate.empty_complex = true;
    return R;
  }
  R.certificate = homology(N.sset, bound);
  R.flat = R.certificate.contractible_grade();
  if (!R.flat) R.detail = "double-slice fiber is not homology-contractible";
  return R;
}

}  // namespace scx
