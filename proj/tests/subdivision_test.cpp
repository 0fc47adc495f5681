#include <catch2/catch_amalgamated.hpp>

#include "scx/homology.hpp"
#include "scx/subdiv.hpp"

using namespace scx;

TEST_CASE("sd0 of small simplices") {
  CHECK(sd0(FiniteSimplicialSet::simplex(1)).base.f_vector() ==
        std::vector<int>{3, 2});
  CHECK(sd0(FiniteSimplicialSet::simplex(2)).base.f_vector() ==
        std::vector<int>{7, 12, 6});
  CHECK(sd0(FiniteSimplicialSet::simplex(0)).base.f_vector() ==
        std::vector<int>{1});
}

TEST_CASE("sd0 chain counts match the face-chain oracle") {
  for (int n = 1; n <= 3; ++n) {
    auto S = sd0(FiniteSimplicialSet::simplex(n));
    auto counts = simplex_face_chain_counts(n);
    auto fv = S.base.f_vector();
    REQUIRE(fv.size() == counts.size());
    for (std::size_t d = 0; d < fv.size(); ++d)
      CHECK(static_cast<long long>(fv[d]) == counts[d]);
  }
}

TEST_CASE("sd0 rejects complexes violating the face condition") {
  CHECK_THROWS_AS(sd0(collapsed_k()), PreconditionError);
}

TEST_CASE("sd0 preserves the homology of spheres") {
  for (int n = 2; n <= 4; ++n) {
    auto B = FiniteSimplicialSet::boundary(n);
    auto S = sd0(B);
    auto H = homology(S.base, n);
    std::vector<int> expect(static_cast<std::size_t>(n) + 1, 0);
    expect[0] = 1;
    expect[n - 1] += 1;
    CHECK(H.betti == expect);
    for (const auto& t : H.torsion) CHECK(t.empty());
  }
}

TEST_CASE("sd0 homology matches the original complex in low dimensions") {
  for (auto X : {FiniteSimplicialSet::simplex(2),
                 FiniteSimplicialSet::boundary(3), FiniteSimplicialSet::horn(2, 0),
                 product(FiniteSimplicialSet::simplex(1),
                         FiniteSimplicialSet::simplex(1))
                     .complex}) {
    auto S = sd0(X);
    auto HX = homology(X, 3);
    auto HS = homology(S.base, 3);
    CHECK(HX.betti == HS.betti);
  }
}

TEST_CASE("sd+ marking rules on the 2-simplex") {
  auto d2 = FiniteSimplicialSet::simplex(2);

  auto flat = sd_plus0(scaled_flat(d2));
  auto sharp = sd_plus0(scaled_sharp(d2));

  auto edge_marked = [&](const SubdividedComplex& S, const std::string& src,
                         const std::string& subset) {
    auto e = S.base.label_index(1, src + "|" + subset);
    REQUIRE(e.has_value());
    return S.marking.count(*e) > 0;
  };

  // (012) -> (01) has convex image, (012) -> (02) does not
  CHECK(edge_marked(flat, "0.1.2", "01"));
  CHECK_FALSE(edge_marked(flat, "0.1.2", "02"));
  // the sharp scaling marks the long-edge collapse via the thin rule
  CHECK(edge_marked(sharp, "0.1.2", "02"));

  // sharpening only adds marks
  for (int e : flat.marking) CHECK(sharp.marking.count(e) > 0);

  // rule (a) exactly characterizes marks in the flat case
  auto F = face_category(d2);
  for (int m = 0; m < F.cat.num_morphisms(); ++m) {
    if (F.cat.is_identity(m)) continue;
    const auto& S = F.morph_subset[m];
    bool convex = S.back() - S.front() == static_cast<int>(S.size()) - 1;
    auto e = flat.base.label_index(1, F.cat.morphisms[m].label);
    REQUIRE(e.has_value());
    CHECK(static_cast<bool>(flat.marking.count(*e)) == convex);
  }

  // both proper faces of an edge are convex
  auto d1_marks = sd_plus0(scaled_flat(FiniteSimplicialSet::simplex(1)));
  CHECK(d1_marks.marking.size() == 2);
}

TEST_CASE("Q levels count simplices in normal form") {
  auto q = q_levels(FiniteSimplicialSet::simplex(1), 4);
  for (int n = 0; n <= 4; ++n)
    CHECK(static_cast<int>(q[n].size()) == n + 2);
  auto q0 = q_levels(FiniteSimplicialSet::simplex(0), 3);
  for (auto& level : q0) CHECK(level.size() == 1);
  auto qb = q_levels(FiniteSimplicialSet::boundary(2), 1);
  CHECK(qb[0].size() == 3);
  CHECK(qb[1].size() == 6);
}

TEST_CASE("F levels decompose over Q") {
  auto d1 = FiniteSimplicialSet::simplex(1);
  auto R = f_level(d1, 1, 2);
  CHECK(R.num_components ==
        static_cast<int>(q_levels(d1, 1)[1].size()));

  auto pt = FiniteSimplicialSet::simplex(0);
  auto R0 = f_level(pt, 0, 2);
  CHECK(R0.num_components == 1);
  // vertex count = number of factorizations with k <= bound
  int expect = 0;
  for (int k = 0; k <= 2; ++k)
    expect += static_cast<int>(monotone_maps(0, k).size()) *
              static_cast<int>(pt.all_simplices(k).size());
  CHECK(R0.complex.num_generators(0) == expect);
}

TEST_CASE("beta fibers carry verified initial objects") {
  auto d2 = FiniteSimplicialSet::simplex(2);
  for (const auto& v : d2.all_simplices(0)) {
    auto C = beta_fiber_certificate(d2, 0, v, 1, 2, true);
    CHECK(C.witness_verified);
    CHECK(C.oracle_ran);
    CHECK(C.homology.contractible_grade());
  }
  auto b2 = FiniteSimplicialSet::boundary(2);
  for (int e = 0; e < b2.num_generators(1); ++e) {
    auto C = beta_fiber_certificate(b2, 1, SimplexRef{1, e, {}}, 2, 2);
    CHECK(C.witness_verified);
    CHECK(C.homology.contractible_grade());
  }
  // doubly degenerate simplex over a point
  auto pt = FiniteSimplicialSet::simplex(0);
  SimplexRef dd{0, 0, {1, 0}};
  auto C = beta_fiber_certificate(pt, 2, dd, 3, 2);
  CHECK(C.witness_verified);
  CHECK(C.homology.contractible_grade());
  // the homology oracle agrees with the witness on a small fiber
  auto C2 = beta_fiber_certificate(pt, 1, SimplexRef{0, 0, {0}}, 2, 1, true);
  CHECK(C2.witness_verified);
  CHECK(C2.oracle_ran);
  CHECK(C2.homology.contractible_grade());
}
