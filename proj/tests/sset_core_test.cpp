#include <catch2/catch_amalgamated.hpp>

#include "scx/category.hpp"
#include "scx/maps.hpp"
#include "scx/sset.hpp"

using namespace scx;

TEST_CASE("standard simplices have the expected f-vectors") {
  CHECK(FiniteSimplicialSet::simplex(2).f_vector() == std::vector<int>{3, 3, 1});
  CHECK(FiniteSimplicialSet::simplex(3).f_vector() ==
        std::vector<int>{4, 6, 4, 1});
  CHECK(FiniteSimplicialSet::boundary(2).f_vector() == std::vector<int>{3, 3});
  CHECK(FiniteSimplicialSet::horn(2, 1).f_vector() == std::vector<int>{3, 2});
  CHECK_THROWS_AS(FiniteSimplicialSet::horn(2, 3), PreconditionError);
  FiniteSimplicialSet::simplex(4).validate();
}

TEST_CASE("operator algebra rewrites to normal form") {
  auto d1 = FiniteSimplicialSet::simplex(1);
  SimplexRef v = make_vertex(0);
  SimplexRef s0v = d1.degeneracy(v, 0);
  CHECK(s0v.word == std::vector<int>{0});
  // d_0 s_0 v = v
  CHECK(d1.face(s0v, 0) == v);

  // d_2 (s_0 e) = s_0 (d_1 e) for the edge e of Delta^1
  SimplexRef e{1, 0, {}};
  SimplexRef s0e = d1.degeneracy(e, 0);
  CHECK(d1.face(s0e, 2) == d1.degeneracy(d1.face(e, 1), 0));

  // s_1 s_0 v has the strictly decreasing word (1,0)
  SimplexRef x = d1.degeneracy(d1.degeneracy(v, 0), 1);
  CHECK(x.word == std::vector<int>{1, 0});
  // and equals s_0 s_0 v after normalization
  CHECK(x == d1.degeneracy(d1.degeneracy(v, 0), 0));
}

TEST_CASE("normal-form soundness: d_i d_j identities on every generator") {
  for (auto X : {FiniteSimplicialSet::simplex(3), FiniteSimplicialSet::horn(3, 1),
                 collapsed_k()}) {
    X.validate();
    // also exercise identities through a layer of degeneracies
    for (int d = 1; d <= X.top_dim(); ++d)
      for (int g = 0; g < X.num_generators(d); ++g) {
        SimplexRef x = X.degeneracy(SimplexRef{d, g, {}}, 0);
        for (int j = 1; j <= x.dim(); ++j)
          for (int i = 0; i < j; ++i)
            CHECK(X.face(X.face(x, j), i) == X.face(X.face(x, i), j - 1));
      }
  }
}

TEST_CASE("all_simplices counts match surjection counts") {
  auto d1 = FiniteSimplicialSet::simplex(1);
  // n-simplices of Delta^1 = monotone maps [n] -> [1] = n + 2
  for (int n = 0; n <= 5; ++n)
    CHECK(static_cast<int>(d1.all_simplices(n).size()) == n + 2);
}

TEST_CASE("collapsed_K is the double edge collapse of Delta^3") {
  auto K = collapsed_k();
  CHECK(K.f_vector() == std::vector<int>{2, 4, 4, 1});
  K.validate();
}

TEST_CASE("restrict and by_vertices agree on Delta^3") {
  auto d3 = FiniteSimplicialSet::simplex(3);
  SimplexRef top{3, 0, {}};
  auto edge = d3.restrict(top, {1, 3});
  CHECK(d3.label(edge) == "1.3");
  auto found = d3.by_vertices({0, 2, 2, 3});
  REQUIRE(found.has_value());
  CHECK(found->word == std::vector<int>{1});
  CHECK(d3.label(found->gdim, found->gen) == "0.2.3");
}

TEST_CASE("products of simplices match the shuffle oracle") {
  auto d1 = FiniteSimplicialSet::simplex(1);
  auto p = product(d1, d1);
  CHECK(p.complex.f_vector() == std::vector<int>{4, 5, 2});
  CHECK(p.complex.f_vector() == grid_chain_f_vector(1, 1));

  auto p21 = product(FiniteSimplicialSet::simplex(2), d1);
  CHECK(p21.complex.num_generators(3) == 3);
  CHECK(p21.complex.f_vector() == grid_chain_f_vector(2, 1));

  auto p22 = product(FiniteSimplicialSet::simplex(2),
                     FiniteSimplicialSet::simplex(2));
  CHECK(p22.complex.f_vector() == grid_chain_f_vector(2, 2));
  CHECK(p21.proj_a.valid(p21.complex, FiniteSimplicialSet::simplex(2)));
  CHECK(p21.proj_b.valid(p21.complex, d1));
}

TEST_CASE("product with a point is an isomorphism") {
  auto X = FiniteSimplicialSet::boundary(3);
  auto p = product(X, FiniteSimplicialSet::simplex(0));
  CHECK(isomorphic(p.complex, X));
}

TEST_CASE("hom counts: vertices, monotone maps, collapsed_K into an iso") {
  auto d0 = FiniteSimplicialSet::simplex(0);
  auto d1 = FiniteSimplicialSet::simplex(1);
  auto b2 = FiniteSimplicialSet::boundary(2);
  CHECK(sset_hom(d0, b2).size() == 3);
  CHECK(sset_hom(d1, d1).size() == 3);

  // walking isomorphism: two objects, mutually inverse arrows
  auto iso = FinCategory::preorder({"a", "b"}, {{0, 1}, {1, 0}});
  iso.validate();
  auto N = nerve(iso, 3);
  CHECK(sset_hom(collapsed_k(), N).size() == 4);
}

TEST_CASE("nerves of posets and the walking isomorphism") {
  auto c3 = FinCategory::poset_chain(3);
  c3.validate();
  CHECK(isomorphic(nerve(c3, 4), FiniteSimplicialSet::simplex(3)));

  // [1] x [1] grid poset
  auto grid = FinCategory::preorder(
      {"00", "01", "10", "11"},
      {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  grid.validate();
  CHECK(nerve(grid, 3).f_vector() == std::vector<int>{4, 5, 2});

  auto iso = FinCategory::preorder({"a", "b"}, {{0, 1}, {1, 0}});
  auto N = nerve(iso, 3);
  for (int d = 1; d <= 3; ++d) CHECK(N.num_generators(d) == 2);
}

TEST_CASE("pushouts: wedge, collapse, identity legs, universal property") {
  auto d1 = FiniteSimplicialSet::simplex(1);
  auto d0 = FiniteSimplicialSet::simplex(0);

  SECTION("gluing two intervals end to start") {
    SimplicialMap to_end;  // 0 -> vertex 1 of Delta^1
    to_end.image.resize(1);
    to_end.image[0] = {make_vertex(1)};
    SimplicialMap to_start;
    to_start.image.resize(1);
    to_start.image[0] = {make_vertex(0)};
    auto R = pushout(d0, d1, d1, to_end, to_start);
    CHECK(R.complex.f_vector() == std::vector<int>{3, 2});
  }

  SECTION("pushout along identity legs is an isomorphism") {
    auto X = FiniteSimplicialSet::boundary(2);
    auto R = pushout(X, X, X, identity_map(X), identity_map(X));
    CHECK(isomorphic(R.complex, X));
  }

  SECTION("collapsing both special edges of Delta^3 gives collapsed_K") {
    CHECK(collapsed_k().f_vector() == std::vector<int>{2, 4, 4, 1});
  }

  SECTION("universal property against enumerated cospans") {
    // Pushout P of Delta^1 <- Delta^0 -> Delta^1; maps P -> Z biject with
    // compatible pairs for small targets Z.
    SimplicialMap to_end, to_start;
    to_end.image.resize(1);
    to_end.image[0] = {make_vertex(1)};
    to_start.image.resize(1);
    to_start.image[0] = {make_vertex(0)};
    auto R = pushout(d0, d1, d1, to_end, to_start);
    for (auto Z : {FiniteSimplicialSet::simplex(2),
                   FiniteSimplicialSet::boundary(2)}) {
      auto from_pushout = sset_hom(R.complex, Z);
      auto hom_x = sset_hom(d1, Z);
      int compatible = 0;
      for (const auto& u : hom_x)
        for (const auto& v : hom_x)
          if (u.apply(Z, to_end.image[0][0]) ==
              v.apply(Z, to_start.image[0][0]))
            ++compatible;
      CHECK(static_cast<int>(from_pushout.size()) == compatible);
    }
  }
}
