#include <catch2/catch_amalgamated.hpp>

#include "scx/decor.hpp"

using namespace scx;

TEST_CASE("flat and sharp constructors") {
  auto d2 = FiniteSimplicialSet::simplex(2);
  CHECK(scaled_flat(d2).decorated.empty());
  CHECK(scaled_sharp(d2).decorated.size() == 1);
  auto d1 = FiniteSimplicialSet::simplex(1);
  CHECK(marked_sharp(d1).decorated.size() == 1);
  // degenerate cells are implicitly decorated
  auto F = scaled_flat(d2);
  CHECK(F.is_decorated(d2.degeneracy(SimplexRef{1, 0, {}}, 0)));
}

TEST_CASE("decorated products decorate componentwise") {
  auto d1 = FiniteSimplicialSet::simplex(1);
  auto R = product_decorated(marked_sharp(d1), marked_flat(d1));
  // marked nondegenerate edges = those projecting to a degenerate edge of
  // the flat factor: 2 of the 5
  CHECK(R.complex.base.num_generators(1) == 5);
  CHECK(R.complex.decorated.size() == 2);

  auto X = FiniteSimplicialSet::simplex(2);
  auto S = product_decorated(scaled_sharp(X), scaled_sharp(X));
  CHECK(static_cast<int>(S.complex.decorated.size()) ==
        S.complex.base.num_generators(2));

  auto pt = FiniteSimplicialSet::simplex(0);
  auto U = product_decorated(scaled_flat(X), scaled_flat(pt));
  CHECK(isomorphic(U.complex.base, X));
  CHECK(U.complex.decorated.empty());
}

TEST_CASE("decorated pushouts take image decorations") {
  auto horn = FiniteSimplicialSet::horn(2, 1);
  auto d2 = FiniteSimplicialSet::simplex(2);
  auto inc = inclusion_by_labels(horn, d2);

  SECTION("(horn)^sharp glued to flat 2-simplex along flat horn") {
    auto A = marked_flat(horn);
    auto Xs = marked_sharp(horn);
    auto Yf = marked_flat(d2);
    auto R = pushout_decorated(A, Xs, Yf, identity_map(horn), inc);
    // underlying pushout is Delta^2; both horn edges are marked
    CHECK(isomorphic(R.complex.base, d2));
    CHECK(R.complex.decorated.size() == 2);
  }

  SECTION("scaled variant marks nothing new") {
    auto A = scaled_flat(horn);
    auto R = pushout_decorated(A, scaled_sharp(horn), scaled_flat(d2),
                               identity_map(horn), inc);
    CHECK(R.complex.decorated.empty());
  }

  SECTION("union of scalings along the identity") {
    auto A = scaled_flat(d2);
    auto R = pushout_decorated(A, scaled_flat(d2), scaled_sharp(d2),
                               identity_map(d2), identity_map(d2));
    CHECK(R.complex.decorated.size() == 1);
    CHECK(isomorphic(R.complex.base, d2));
  }

  SECTION("pushout along identities returns the left input") {
    auto A = marked_sharp(d2);
    auto R = pushout_decorated(A, A, A, identity_map(d2), identity_map(d2));
    CHECK(isomorphic(R.complex.base, d2));
    CHECK(R.complex.decorated == A.decorated);
  }
}

TEST_CASE("product decoration is associative up to reassociation") {
  auto d1 = FiniteSimplicialSet::simplex(1);
  auto A = marked_sharp(d1);
  auto B = marked_flat(d1);
  auto C = marked_sharp(FiniteSimplicialSet::simplex(0));
  auto AB_C = product_decorated(product_decorated(A, B).complex, C);
  auto A_BC = product_decorated(A, product_decorated(B, C).complex);
  CHECK(AB_C.complex.decorated.size() == A_BC.complex.decorated.size());
  CHECK(isomorphic(AB_C.complex.base, A_BC.complex.base));
}
