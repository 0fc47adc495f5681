#include <catch2/catch_amalgamated.hpp>

#include "scx/homology.hpp"
#include "scx/maps.hpp"

using namespace scx;

TEST_CASE("chain complexes of small complexes") {
  auto d1 = FiniteSimplicialSet::simplex(1);
  auto M = chain_complex(d1);
  REQUIRE(M.size() == 1);
  CHECK(M[0] == IntMatrix{{-1}, {1}});
  CHECK(smith_normal_form(M[0]).rank == 1);

  auto b2 = FiniteSimplicialSet::boundary(2);
  auto M2 = chain_complex(b2);
  REQUIRE(M2.size() == 1);
  CHECK(smith_normal_form(M2[0]).rank == 2);

  CHECK(chain_complex(FiniteSimplicialSet::simplex(0)).empty());
}

TEST_CASE("smith normal form basics") {
  CHECK(smith_normal_form({{Int(2)}}).invariant_factors ==
        std::vector<Int>{2});
  auto R = smith_normal_form({{Int(1), Int(0)}, {Int(0), Int(0)}});
  CHECK(R.rank == 1);
  CHECK(R.invariant_factors == std::vector<Int>{1});
  auto R2 = smith_normal_form({{Int(2), Int(4)}, {Int(6), Int(8)}});
  CHECK(R2.invariant_factors == std::vector<Int>{2, 4});
}

TEST_CASE("smith normal form is stable under permutations") {
  IntMatrix M = {{Int(6), Int(4), Int(2)},
                 {Int(0), Int(3), Int(9)},
                 {Int(12), Int(0), Int(5)}};
  auto base = smith_normal_form(M);
  IntMatrix P = {{M[2][1], M[2][0], M[2][2]},
                 {M[0][1], M[0][0], M[0][2]},
                 {M[1][1], M[1][0], M[1][2]}};
  auto perm = smith_normal_form(P);
  CHECK(base.invariant_factors == perm.invariant_factors);
  CHECK(base.rank == perm.rank);
}

TEST_CASE("sphere homology") {
  auto b3 = FiniteSimplicialSet::boundary(3);
  auto H = homology(b3, 3);
  CHECK(H.betti == std::vector<int>{1, 0, 1, 0});
  for (const auto& t : H.torsion) CHECK(t.empty());

  auto b2 = FiniteSimplicialSet::boundary(2);
  auto H1 = homology(b2, 2);
  CHECK(H1.betti == std::vector<int>{1, 1, 0});
}

TEST_CASE("euler characteristic agrees with betti numbers") {
  for (auto X : {FiniteSimplicialSet::boundary(3),
                 FiniteSimplicialSet::simplex(3), collapsed_k(),
                 product(FiniteSimplicialSet::simplex(1),
                         FiniteSimplicialSet::boundary(2))
                     .complex}) {
    auto H = homology(X, X.top_dim());
    long long chi = 0;
    for (std::size_t d = 0; d < H.betti.size(); ++d)
      chi += (d % 2 == 0 ? 1 : -1) * H.betti[d];
    bool torsion_free = true;
    for (const auto& t : H.torsion) torsion_free &= t.empty();
    if (torsion_free) CHECK(chi == euler_characteristic(X));
  }
}

TEST_CASE("poset with a least element gets a witness certificate") {
  auto C = FinCategory::poset_chain(2);
  auto cert = contractibility_certificate(C, 3);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.contractible_grade());
}

TEST_CASE("certificates detect non-contractibility") {
  auto H = contractibility_certificate(FiniteSimplicialSet::boundary(2), 2);
  CHECK_FALSE(H.acyclic());
  CHECK(H.connected);
}
