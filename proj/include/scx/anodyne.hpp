#pragma once

// Generating scaled-anodyne and pattern-anodyne maps, brute-force extension
// search, bounded fibrancy verdicts, filtration certificates for the prism
// decompositions, scaled slices, and flatness certificates.
//
// Lifting-property checks are bounded by an explicit dimension and report
// SEMI_DECIDED_YES; failures are always definitive.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scx/decor.hpp"
#include "scx/homology.hpp"
#include "scx/maps.hpp"

namespace scx {

struct DecoratedMap {
  DecoratedSSet source, target;
  SimplicialMap underlying;
  std::string kind;

  bool mono() const { return underlying.injective(source.base); }
};

// --- scaled anodyne generators ---

// Inner horn with thin {i-1, i, i+1}.
inline DecoratedMap scaled_generator_a(int n, int i) {
  if (!(0 < i && i < n))
    throw PreconditionError("scaled generator A: need 0 < i < n");
  DecoratedMap G;
  G.kind = "A(" + std::to_string(n) + "," + std::to_string(i) + ")";
  auto horn = FiniteSimplicialSet::horn(n, i);
  auto simp = FiniteSimplicialSet::simplex(n);
  std::string thin_label = std::to_string(i - 1) + "." + std::to_string(i) +
                           "." + std::to_string(i + 1);
  G.source.base = horn;
  G.source.kind = DecorKind::Scaled;
  if (auto t = horn.label_index(2, thin_label)) G.source.decorated.insert(*t);
  G.target.base = simp;
  G.target.kind = DecorKind::Scaled;
  G.target.decorated.insert(*simp.label_index(2, thin_label));
  G.underlying = inclusion_by_labels(horn, simp);
  return G;
}

// The Delta^4 scaling enlargement.
inline DecoratedMap scaled_generator_b() {
  DecoratedMap G;
  G.kind = "B";
  auto d4 = FiniteSimplicialSet::simplex(4);
  G.source.base = d4;
  G.source.kind = DecorKind::Scaled;
  for (const char* t : {"0.2.4", "1.2.3", "0.1.3", "1.3.4", "0.1.2"})
    G.source.decorated.insert(*d4.label_index(2, t));
  G.target = G.source;
  for (const char* t : {"0.3.4", "1.3.4"})
    G.target.decorated.insert(*d4.label_index(2, t));
  G.underlying = identity_map(d4);
  return G;
}

// The initial-horn inclusion after collapsing the first edge, with the
// image of {0,1,n} thin.
inline DecoratedMap scaled_generator_c(int n) {
  if (n <= 2) throw PreconditionError("scaled generator C: need n > 2");
  DecoratedMap G;
  G.kind = "C(" + std::to_string(n) + ")";
  auto horn = FiniteSimplicialSet::horn(n, 0);
  auto simp = FiniteSimplicialSet::simplex(n);
  auto pt = FiniteSimplicialSet::simplex(0);
  auto e = FiniteSimplicialSet::simplex(1);
  auto embed = [&](const FiniteSimplicialSet& Z) {
    SimplicialMap m;
    m.image.resize(2);
    m.image[0] = {make_vertex(*Z.label_index(0, "0")),
                  make_vertex(*Z.label_index(0, "1"))};
    m.image[1] = {SimplexRef{1, *Z.label_index(1, "0.1"), {}}};
    return m;
  };
  SimplicialMap collapse;
  collapse.image.resize(2);
  collapse.image[0] = {make_vertex(0), make_vertex(0)};
  collapse.image[1] = {SimplexRef{0, 0, {0}}};
  auto src = pushout(e, horn, pt, embed(horn), collapse);
  auto tgt = pushout(e, simp, pt, embed(simp), collapse);
  G.source.base = src.complex;
  G.source.kind = DecorKind::Scaled;
  G.target.base = tgt.complex;
  G.target.kind = DecorKind::Scaled;
  std::string t01n = "0.1." + std::to_string(n);
  SimplexRef src_thin = src.leg_x.apply(
      src.complex, SimplexRef{2, *horn.label_index(2, t01n), {}});
  SimplexRef tgt_thin = tgt.leg_x.apply(
      tgt.complex, SimplexRef{2, *simp.label_index(2, t01n), {}});
  if (!src_thin.degenerate()) G.source.decorated.insert(src_thin.gen);
  if (!tgt_thin.degenerate()) G.target.decorated.insert(tgt_thin.gen);
  G.underlying = inclusion_by_labels(G.source.base, G.target.base);
  return G;
}

inline std::vector<DecoratedMap> scaled_generators_through(int dim_bound) {
  std::vector<DecoratedMap> out;
  for (int n = 2; n <= dim_bound; ++n)
    for (int i = 1; i < n; ++i) out.push_back(scaled_generator_a(n, i));
  if (dim_bound >= 4) out.push_back(scaled_generator_b());
  for (int n = 3; n <= dim_bound; ++n) out.push_back(scaled_generator_c(n));
  return out;
}

// --- extension search ---

// All decoration-preserving extensions of u along the monomorphism f.
inline std::vector<SimplicialMap> extensions(const DecoratedMap& f,
                                             const SimplicialMap& u,
                                             const DecoratedSSet& Z) {
  if (!f.mono()) throw PreconditionError("extensions: f is not mono");
  if (!u.valid(f.source.base, Z.base))
    throw PreconditionError("extensions: u is not a simplicial map");
  if (!preserves_decoration(f.source, Z, u))
    throw PreconditionError("extensions: u does not preserve decorations");
  // forced[d][g] = image of the target generator hit by the source.
  std::vector<std::map<int, SimplexRef>> forced(
      static_cast<std::size_t>(f.target.base.top_dim()) + 1);
  for (int d = 0; d <= f.source.base.top_dim(); ++d)
    for (int g = 0; g < f.source.base.num_generators(d); ++g) {
      SimplexRef img = f.underlying.image[d][g];
      forced[img.gdim][img.gen] = u.image[d][g];
    }
  int cell = f.target.cell_dim();
  HomFilter filter = [&](int d, int g, const SimplexRef& cand) {
    auto it = forced[d].find(g);
    if (it != forced[d].end() && !(it->second == cand)) return false;
    if (d == cell && f.target.decorated.count(g) && !Z.is_decorated(cand))
      return false;
    return true;
  };
  return enumerate_maps(f.target.base, Z.base, filter);
}

// --- bounded fibrancy for scaled simplicial sets ---

enum class Verdict { SemiDecidedYes, No };

struct BicategoryReport {
  Verdict verdict = Verdict::SemiDecidedYes;
  std::string witness_kind;
  std::optional<SimplicialMap> witness_map;
};

inline BicategoryReport is_weak_bicategory(const ScaledSSet& Z, int dim_bound) {
  if (dim_bound < 2)
    throw PreconditionError("is_weak_bicategory: dim_bound >= 2");
  BicategoryReport R;
  for (const auto& gen : scaled_generators_through(dim_bound)) {
    int cell = gen.source.cell_dim();
    HomFilter dec = [&](int d, int g, const SimplexRef& cand) {
      return d != cell || !gen.source.decorated.count(g) ||
             Z.is_decorated(cand);
    };
    for (const auto& u : enumerate_maps(gen.source.base, Z.base, dec)) {
      if (extensions(gen, u, Z).empty()) {
        R.verdict = Verdict::No;
        R.witness_kind = gen.kind;
        R.witness_map = u;
        return R;
      }
    }
  }
  return R;
}

// --- filtration certificates ---

struct FiltrationStep {
  SimplexRef attached;  // nondegenerate simplex of the ambient complex
  int horn_index = 0;   // expected attaching region Lambda^{dim}_{horn_index}
  std::vector<std::pair<int, int>> required_marked;  // vertex pairs
  std::vector<std::array<int, 3>> required_thin;     // vertex triples
};

struct FiltrationFamily {
  std::string name;
  DecoratedSSet ambient;               // carries the marking or scaling
  std::set<SimplexRef> start;          // nondegenerate simplices, face-closed
  std::vector<FiltrationStep> steps;
};

struct FiltrationCertificate {
  bool ok = true;
  std::string failure;
};

inline FiltrationCertificate verify_filtration(const FiltrationFamily& F) {
  FiltrationCertificate C;
  const FiniteSimplicialSet& X = F.ambient.base;
  std::set<SimplexRef> stage = F.start;
  auto fail = [&](const std::string& why) {
    C.ok = false;
    C.failure = F.name + ": " + why;
    return C;
  };
  for (std::size_t t = 0; t < F.steps.size(); ++t) {
    const auto& step = F.steps[t];
    int k = step.attached.dim();
    if (stage.count(step.attached))
      return fail("step " + std::to_string(t) + " already present");
    // Exact horn intersection on every proper vertex subset.
    std::vector<int> subset;
    bool ok = true;
    std::string why;
    std::function<void(int)> walk = [&](int lo) {
      if (!ok) return;
      if (!subset.empty() && static_cast<int>(subset.size()) <= k) {
        if (static_cast<int>(subset.size()) <= k) {
          bool in_horn = static_cast<int>(subset.size()) != k + 1;
          if (static_cast<int>(subset.size()) == k) {
            // facet: misses exactly one vertex
            int missing = k * (k + 1) / 2;
            for (int v : subset) missing -= v;
            in_horn = missing != step.horn_index;
          }
          SimplexRef r = X.restrict(step.attached, subset);
          bool present = r.degenerate() || stage.count(SimplexRef{r.gdim, r.gen, {}});
          if (present != in_horn) {
            ok = false;
            why = "step " + std::to_string(t) + " subset mismatch at " +
                  X.label(r);
          }
        }
      }
      if (static_cast<int>(subset.size()) == k + 1) return;
      for (int v = lo; v <= k; ++v) {
        subset.push_back(v);
        walk(v + 1);
        subset.pop_back();
      }
    };
    walk(0);
    if (!ok) return fail(why);
    for (auto [a, b] : step.required_marked) {
      SimplexRef e = X.restrict(step.attached, {a, b});
      if (!F.ambient.is_decorated(e))
        return fail("step " + std::to_string(t) + " edge not marked");
    }
    for (auto [a, b, c] : step.required_thin) {
      SimplexRef tri = X.restrict(step.attached, {a, b, c});
      if (!F.ambient.is_decorated(tri))
        return fail("step " + std::to_string(t) + " triangle not thin");
    }
    // Attach: add all faces of the attached simplex.
    std::function<void(const SimplexRef&)> add = [&](const SimplexRef& r) {
      if (r.degenerate()) return;
      if (!stage.insert(SimplexRef{r.gdim, r.gen, {}}).second) return;
      if (r.gdim == 0) return;
      for (int m = 0; m <= r.gdim; ++m) add(X.face(SimplexRef{r.gdim, r.gen, {}}, m));
    };
    add(step.attached);
  }
  for (int d = 0; d <= X.top_dim(); ++d)
    for (int g = 0; g < X.num_generators(d); ++g)
      if (!stage.count(SimplexRef{d, g, {}}))
        return fail("final stage misses " + X.label(d, g));
  return C;
}

namespace detail {

// Vertex-index table of a product of two standard simplices.
inline std::vector<std::vector<int>> product_vertex_table(
    const FiniteSimplicialSet& P, int a_max, int b_max) {
  std::vector<std::vector<int>> v(static_cast<std::size_t>(a_max) + 1,
                                  std::vector<int>(b_max + 1, -1));
  for (int i = 0; i <= a_max; ++i)
    for (int j = 0; j <= b_max; ++j) {
      auto idx = P.label_index(
          0, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!idx) throw ScxError("product vertex missing");
      v[i][j] = *idx;
    }
  return v;
}

inline SimplexRef simplex_by_vertices(const FiniteSimplicialSet& P,
                                      const std::vector<int>& verts) {
  auto r = P.by_vertices(verts);
  if (!r) throw ScxError("vertex chain not found");
  return *r;
}

}  // namespace detail

// Prism filtration over Delta^n x Delta^1 with the final edge marked: the
// steps attach sigma_i along Lambda^{n+1}_{i+1}, the last one along the
// marked-horn variant.
inline FiltrationFamily prism_last_family(int n) {
  if (n < 1) throw PreconditionError("prism_last_family: n >= 1");
  FiltrationFamily F;
  F.name = "prism-last(n=" + std::to_string(n) + ")";
  auto P = product(FiniteSimplicialSet::simplex(n),
                   FiniteSimplicialSet::simplex(1));
  auto vt = detail::product_vertex_table(P.complex, n, 1);
  F.ambient.base = P.complex;
  F.ambient.kind = DecorKind::Marked;
  // Marked: {n} x Delta^1.
  for (int e = 0; e < P.complex.num_generators(1); ++e) {
    auto vs = P.complex.vertex_gens(SimplexRef{1, e, {}});
    if (vs[0] == vt[n][0] && vs[1] == vt[n][1]) F.ambient.decorated.insert(e);
  }
  // Start: (Delta^n x {1}) u (boundary x Delta^1).
  for (int d = 0; d <= P.complex.top_dim(); ++d)
    for (int g = 0; g < P.complex.num_generators(d); ++g) {
      const auto& [a, b] = P.pair_of[d][g];
      auto av = FiniteSimplicialSet::simplex(n).vertex_gens(a);
      auto bv = FiniteSimplicialSet::simplex(1).vertex_gens(b);
      bool top_row = true;
      for (int v : bv) top_row &= v == 1;
      std::set<int> aset(av.begin(), av.end());
      bool in_boundary = static_cast<int>(aset.size()) < n + 1;
      if (top_row || in_boundary) F.start.insert(SimplexRef{d, g, {}});
    }
  for (int i = 0; i <= n; ++i) {
    FiltrationStep S;
    std::vector<int> verts;
    for (int j = 0; j <= n + 1; ++j)
      verts.push_back(j <= i ? vt[j][0] : vt[j - 1][1]);
    S.attached = detail::simplex_by_vertices(P.complex, verts);
    S.horn_index = i + 1;
    if (i == n) S.required_marked.push_back({n, n + 1});
    F.steps.push_back(std::move(S));
  }
  return F;
}

// Scaled prism filtration over Delta^n x Delta^1 around an inner horn: the
// tau family fills the hole left by the missing face, then the sigma family
// fills the prism; every attachment is along a horn with the stated thin
// triangle.
inline FiltrationFamily cone_prism_family(int n, int i) {
  if (!(0 < i && i < n))
    throw PreconditionError("cone_prism_family: need 0 < i < n");
  FiltrationFamily F;
  F.name = "cone-prism(n=" + std::to_string(n) + ",i=" + std::to_string(i) +
           ")";
  auto dn = FiniteSimplicialSet::simplex(n);
  auto d1 = FiniteSimplicialSet::simplex(1);
  auto P = product(dn, d1);
  auto vt = detail::product_vertex_table(P.complex, n, 1);
  F.ambient.base = P.complex;
  F.ambient.kind = DecorKind::Scaled;
  for (int t = 0; t < P.complex.num_generators(2); ++t) {
    const auto& [a, b] = P.pair_of[2][t];
    auto av = dn.vertex_gens(a);
    auto bv = d1.vertex_gens(b);
    bool bottom = bv == std::vector<int>{0, 0, 0};
    bool a_degenerate = av[0] == av[1] || av[1] == av[2];
    bool pattern001 = bv == std::vector<int>{0, 0, 1};
    bool first_edge_deg = av[0] == av[1];
    if (bottom || (a_degenerate && (!pattern001 || first_edge_deg)))
      F.ambient.decorated.insert(t);
  }
  for (int d = 0; d <= P.complex.top_dim(); ++d)
    for (int g = 0; g < P.complex.num_generators(d); ++g) {
      const auto& [a, b] = P.pair_of[d][g];
      auto av = dn.vertex_gens(a);
      auto bv = d1.vertex_gens(b);
      std::set<int> aset(av.begin(), av.end());
      bool in_horn = false;
      for (int j = 0; j <= n; ++j)
        if (j != i && !aset.count(j)) in_horn = true;
      std::set<int> bset(bv.begin(), bv.end());
      if (in_horn || bset.size() == 1) F.start.insert(SimplexRef{d, g, {}});
    }
  // tau_k, 1 <= k <= n-1: n-simplices through the face complement of i.
  std::vector<int> others;
  for (int v = 0; v <= n; ++v)
    if (v != i) others.push_back(v);
  for (int k = 1; k <= n - 1; ++k) {
    FiltrationStep S;
    std::vector<int> verts;
    for (int j = 0; j <= n; ++j)
      verts.push_back(j < k ? vt[others[j]][0] : vt[others[j - 1]][1]);
    S.attached = detail::simplex_by_vertices(P.complex, verts);
    S.horn_index = k;
    S.required_thin.push_back({k - 1, k, k + 1});
    F.steps.push_back(std::move(S));
  }
  // sigma_k, 0 <= k <= n.
  for (int k = 0; k <= n; ++k) {
    FiltrationStep S;
    std::vector<int> verts;
    for (int j = 0; j <= n + 1; ++j)
      verts.push_back(j <= k ? vt[j][0] : vt[j - 1][1]);
    S.attached = detail::simplex_by_vertices(P.complex, verts);
    if (k < n) {
      S.horn_index = k + 1;
      S.required_thin.push_back({k, k + 1, k + 2});
    } else {
      S.horn_index = i;
      S.required_thin.push_back({i - 1, i, i + 1});
    }
    F.steps.push_back(std::move(S));
  }
  return F;
}

// Prism filtration over Delta^1 x Delta^n with the initial edges marked:
// inner-horn attachments finishing with an initial-horn step whose first
// edge is marked.
inline FiltrationFamily prism_first_family(int n) {
  if (n < 0) throw PreconditionError("prism_first_family: n >= 0");
  FiltrationFamily F;
  F.name = "prism-first(n=" + std::to_string(n) + ")";
  auto d1 = FiniteSimplicialSet::simplex(1);
  auto dn = FiniteSimplicialSet::simplex(n);
  auto P = product(d1, dn);
  std::vector<std::vector<int>> vt(2, std::vector<int>(n + 1, -1));
  for (int t = 0; t <= 1; ++t)
    for (int b = 0; b <= n; ++b)
      vt[t][b] = *P.complex.label_index(
          0, "(" + std::to_string(t) + "," + std::to_string(b) + ")");
  F.ambient.base = P.complex;
  F.ambient.kind = DecorKind::Marked;
  for (int e = 0; e < P.complex.num_generators(1); ++e) {
    const auto& [a, b] = P.pair_of[1][e];
    if (b.degenerate()) F.ambient.decorated.insert(e);
  }
  for (int d = 0; d <= P.complex.top_dim(); ++d)
    for (int g = 0; g < P.complex.num_generators(d); ++g) {
      const auto& [a, b] = P.pair_of[d][g];
      auto av = d1.vertex_gens(a);
      auto bv = dn.vertex_gens(b);
      std::set<int> aset(av.begin(), av.end());
      std::set<int> bset(bv.begin(), bv.end());
      bool left_face = aset == std::set<int>{0};
      bool in_boundary = static_cast<int>(bset.size()) < n + 1;
      if (left_face || in_boundary) F.start.insert(SimplexRef{d, g, {}});
    }
  for (int i = 0; i <= n; ++i) {
    FiltrationStep S;
    std::vector<int> verts;
    for (int j = 0; j <= n + 1; ++j)
      verts.push_back(j <= n - i ? vt[0][j] : vt[1][j - 1]);
    S.attached = detail::simplex_by_vertices(P.complex, verts);
    S.horn_index = n - i;
    if (i == n) S.required_marked.push_back({0, 1});
    F.steps.push_back(std::move(S));
  }
  return F;
}

}  // namespace scx
