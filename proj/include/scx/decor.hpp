#pragma once

// Marked and scaled structures on finite simplicial sets.  Decorations are
// stored only on nondegenerate cells; degenerate cells are decorated
// implicitly, which turns the degeneracy-closure invariants into finite
// checks.

#include <set>
#include <string>
#include <vector>

#include "scx/maps.hpp"
#include "scx/sset.hpp"

namespace scx {

enum class DecorKind { Marked, Scaled };
enum class DecorStyle { Flat, Sharp };

// Shared representation: `cell_dim` is 1 for markings, 2 for scalings, and
// `decorated` holds generator indices in that dimension.
struct DecoratedSSet {
  FiniteSimplicialSet base;
  DecorKind kind = DecorKind::Marked;
  std::set<int> decorated;

  int cell_dim() const { return kind == DecorKind::Marked ? 1 : 2; }

  bool is_decorated(const SimplexRef& x) const {
    if (x.dim() != cell_dim()) return false;
    if (x.degenerate()) return true;
    return decorated.count(x.gen) > 0;
  }

  void validate() const {
    base.validate();
    for (int g : decorated)
      if (g < 0 || g >= base.num_generators(cell_dim()))
        throw ScxError("decoration refers to a missing cell");
  }
};

using MarkedSSet = DecoratedSSet;
using ScaledSSet = DecoratedSSet;

inline DecoratedSSet decorate(const FiniteSimplicialSet& X, DecorStyle style,
                              DecorKind kind) {
  DecoratedSSet D;
  D.base = X;
  D.kind = kind;
  if (style == DecorStyle::Sharp)
    for (int g = 0; g < X.num_generators(D.cell_dim()); ++g)
      D.decorated.insert(g);
  return D;
}

inline MarkedSSet marked_flat(const FiniteSimplicialSet& X) {
  return decorate(X, DecorStyle::Flat, DecorKind::Marked);
}
inline MarkedSSet marked_sharp(const FiniteSimplicialSet& X) {
  return decorate(X, DecorStyle::Sharp, DecorKind::Marked);
}
inline ScaledSSet scaled_flat(const FiniteSimplicialSet& X) {
  return decorate(X, DecorStyle::Flat, DecorKind::Scaled);
}
inline ScaledSSet scaled_sharp(const FiniteSimplicialSet& X) {
  return decorate(X, DecorStyle::Sharp, DecorKind::Scaled);
}

// A cell of the product is decorated iff both projections are decorated
// (degenerate projections count as decorated).
struct DecoratedProduct {
  DecoratedSSet complex;
  SimplicialMap proj_a, proj_b;
};

inline DecoratedProduct product_decorated(const DecoratedSSet& A,
                                          const DecoratedSSet& B) {
  if (A.kind != B.kind)
    throw PreconditionError("product_decorated: mixed decoration kinds");
  auto P = product(A.base, B.base);
  DecoratedProduct R;
  R.complex.base = std::move(P.complex);
  R.complex.kind = A.kind;
  int d = A.cell_dim();
  for (int g = 0; g < static_cast<int>(P.pair_of[d].size()); ++g) {
    const auto& [a, b] = P.pair_of[d][g];
    if (A.is_decorated(a) && B.is_decorated(b)) R.complex.decorated.insert(g);
  }
  R.proj_a = std::move(P.proj_a);
  R.proj_b = std::move(P.proj_b);
  return R;
}

// A map of decorated sets: underlying simplicial map carrying decorated
// cells to decorated cells.
inline bool preserves_decoration(const DecoratedSSet& A,
                                 const DecoratedSSet& B,
                                 const SimplicialMap& f) {
  if (A.kind != B.kind) return false;
  int d = A.cell_dim();
  for (int g : A.decorated)
    if (!B.is_decorated(f.apply(B.base, SimplexRef{d, g, {}}))) return false;
  return true;
}

struct DecoratedPushout {
  DecoratedSSet complex;
  SimplicialMap leg_x, leg_y;
};

// Decoration of the pushout is the union of the images, closed under
// degeneracy (implicit in the nondegenerate-only storage).
inline DecoratedPushout pushout_decorated(const DecoratedSSet& A,
                                          const DecoratedSSet& X,
                                          const DecoratedSSet& Y,
                                          const SimplicialMap& f,
                                          const SimplicialMap& g) {
  if (A.kind != X.kind || A.kind != Y.kind)
    throw PreconditionError("pushout_decorated: mixed decoration kinds");
  if (!preserves_decoration(A, X, f) || !preserves_decoration(A, Y, g))
    throw PreconditionError("pushout_decorated: legs do not preserve decorations");
  auto R = pushout(A.base, X.base, Y.base, f, g);
  DecoratedPushout out;
  out.complex.kind = A.kind;
  int d = A.cell_dim();
  auto mark_image = [&](const DecoratedSSet& side, const SimplicialMap& leg) {
    for (int gg : side.decorated) {
      SimplexRef img = leg.apply(R.complex, SimplexRef{d, gg, {}});
      if (!img.degenerate()) out.complex.decorated.insert(img.gen);
    }
  };
  mark_image(X, R.leg_x);
  mark_image(Y, R.leg_y);
  out.complex.base = std::move(R.complex);
  out.leg_x = std::move(R.leg_x);
  out.leg_y = std::move(R.leg_y);
  return out;
}

// Categorical pattern: a decorated base with both a marking and a scaling,
// plus cone diagrams.  Only constant cones over weakly contractible K are
// supported by the fibration checks.
struct CategoricalPattern {
  FiniteSimplicialSet base;
  std::set<int> marked;  // edge generators
  std::set<int> thin;    // triangle generators
  struct Cone {
    FiniteSimplicialSet K;
    std::string vertex;  // constant value of the cone diagram
  };
  std::vector<Cone> cones;

  bool edge_marked(const SimplexRef& e) const {
    return e.degenerate() || marked.count(e.gen) > 0;
  }
  bool triangle_thin(const SimplexRef& t) const {
    return t.degenerate() || thin.count(t.gen) > 0;
  }
};

// Canonical pattern of a scaled simplicial set: all edges marked.
inline CategoricalPattern pattern_of(const ScaledSSet& S) {
  CategoricalPattern P;
  P.base = S.base;
  for (int g = 0; g < P.base.num_generators(1); ++g) P.marked.insert(g);
  P.thin = S.decorated;
  return P;
}

}  // namespace scx
