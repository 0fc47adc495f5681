#include <catch2/catch_amalgamated.hpp>

#include "scx/segal.hpp"

using namespace scx;

TEST_CASE("Segal verdicts") {
  auto grid = FinCategory::preorder(
      {"00", "01", "10", "11"}, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  CHECK(is_category_object(nerve(grid, 4), 3).ok);
  CHECK(is_category_object(FiniteSimplicialSet::simplex(1), 3).ok);
  CHECK_FALSE(is_category_object(FiniteSimplicialSet::boundary(2), 2).ok);
}

TEST_CASE("to_category round trips through the nerve") {
  for (auto C : {FinCategory::poset_chain(2),
                 FinCategory::preorder({"a", "b"}, {{0, 1}, {1, 0}}),
                 FinCategory::monoid("z2", {{0, 1}, {1, 0}})}) {
    C.validate();
    auto N = nerve(C, 4);
    auto C2 = to_category(N, 3);
    CHECK(C2.num_objects() == C.num_objects());
    CHECK(C2.num_morphisms() == C.num_morphisms());
    CHECK(isomorphic(nerve(C2, 4), N));
  }
}

TEST_CASE("invertible cores") {
  auto iso = FinCategory::preorder({"a", "b"}, {{0, 1}, {1, 0}});
  auto N = nerve(iso, 3);
  CHECK(isomorphic(invertible_core(N), N));

  auto d1 = FiniteSimplicialSet::simplex(1);
  auto core = invertible_core(d1);
  CHECK(core.f_vector() == std::vector<int>{2});

  auto z2 = nerve(FinCategory::monoid("z2", {{0, 1}, {1, 0}}), 3);
  CHECK(isomorphic(invertible_core(z2), z2));

  // the idempotent monoid has no nontrivial invertibles
  auto idem = nerve(FinCategory::monoid("e", {{0, 1}, {1, 1}}), 3);
  CHECK(invertible_core(idem).f_vector() == std::vector<int>{1});
}

TEST_CASE("invertible cores are groupoid objects") {
  for (auto C : {FinCategory::preorder({"a", "b"}, {{0, 1}, {1, 0}}),
                 FinCategory::monoid("z2", {{0, 1}, {1, 0}}),
                 FinCategory::preorder({"x", "y", "z"},
                                       {{0, 1}, {1, 0}, {0, 2}, {1, 2}})}) {
    auto core = invertible_core(nerve(C, 4));
    CHECK(is_category_object(core, 3).ok);
    auto G = to_category(core, 3);
    for (int m = 0; m < G.num_morphisms(); ++m) CHECK(G.is_invertible(m));
  }
}

TEST_CASE("the collapsed-simplex detector agrees with the core") {
  auto check_agreement = [](const FiniteSimplicialSet& N) {
    auto detected = detect_invertibles_via_k(N);
    auto C = to_category(N, 3);
    std::set<int> invertible;
    for (int e = 0; e < N.num_generators(1); ++e) {
      for (int m = 0; m < C.num_morphisms(); ++m)
        if (C.morphisms[m].label == N.label(1, e) && C.is_invertible(m))
          invertible.insert(e);
    }
    CHECK(detected == invertible);
    return detected;
  };
  auto iso = nerve(FinCategory::preorder({"a", "b"}, {{0, 1}, {1, 0}}), 3);
  CHECK(check_agreement(iso).size() == 2);
  CHECK(check_agreement(FiniteSimplicialSet::simplex(1)).empty());
  auto grid = nerve(FinCategory::preorder({"00", "01", "10", "11"},
                                          {{0, 1}, {0, 2}, {0, 3}, {1, 3},
                                           {2, 3}}),
                    3);
  CHECK(check_agreement(grid).empty());
}

TEST_CASE("free homs of the free preSegal data") {
  // |F(Fr^n(A))(i,j)| = |A|^{j-i}
  for (int n = 1; n <= 3; ++n)
    for (int a = 1; a <= 3; ++a) {
      auto P = PreSegalSet::free_on(n, a, n + 1);
      P.validate();
      for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          auto R = free_category_hom(P, i, j, n + 1);
          long long expect = 1;
          for (int t = 0; t < j - i; ++t) expect *= a;
          CHECK(R.count == expect);
          CHECK(R.stabilized);
        }
    }
  // identity hom of any preSegal datum with singleton diagonals
  auto P = PreSegalSet::free_on(2, 2, 3);
  CHECK(free_category_hom(P, 1, 1, 3).count == 1);
}

TEST_CASE("free homs match path counts in the free graph category") {
  // independent oracle: paths in the graph 0 -> 1 -> ... -> n with a edges
  // between consecutive vertices; |paths i -> j| = a^(j-i)
  for (int a = 1; a <= 3; ++a) {
    auto P = PreSegalSet::free_on(3, a, 4);
    for (int i = 0; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) {
        long long paths = 1;
        for (int t = i; t < j; ++t) paths *= a;
        CHECK(free_category_hom(P, i, j, 4).count == paths);
      }
  }
}

TEST_CASE("the free category composes correctly") {
  auto P = PreSegalSet::free_on(2, 2, 3);
  auto F = free_category(P, 3);
  CHECK(F.stabilized);
  CHECK(F.cat.num_objects() == 3);
  // Hom(0,2) = A x A = 4
  int hom02 = 0;
  for (int m = 0; m < F.cat.num_morphisms(); ++m)
    if (F.cat.morphisms[m].src == 0 && F.cat.morphisms[m].tgt == 2) ++hom02;
  CHECK(hom02 == 4);
  F.cat.validate();
}

TEST_CASE("unpre levels realize the coproduct formula") {
  auto P = PreSegalSet::free_on(1, 3, 3);
  auto U = unpre(P, 2);
  CHECK(U.num_generators(0) == 2);
  // level 1 has |A| = 3 nondegenerate elements
  CHECK(U.num_generators(1) == 3);
  // total level-1 count = values over all two-term sequences
  int total = 0;
  for (int s0 = 0; s0 <= 1; ++s0)
    for (int s1 = 0; s1 <= 1; ++s1) total += P.value({s0, s1});
  CHECK(static_cast<int>(U.all_simplices(1).size()) == total);

  // discrete preSegal: only degenerate positives
  auto C1 = FinCategory::poset_chain(0);
  auto D = PreSegalSet::from_category(C1, 3);
  auto UD = unpre(D, 2);
  CHECK(UD.f_vector() == std::vector<int>{1});
}

TEST_CASE("homotopy category of a Segal preSegal datum") {
  auto grid = FinCategory::preorder({"x", "y"}, {{0, 1}});
  auto P = PreSegalSet::from_category(grid, 3);
  P.validate();
  CHECK(presegal_is_segal(P));
  auto H = homotopy_category_presegal(P);
  CHECK(H.num_objects() == 2);
  CHECK(H.num_morphisms() == 3);

  auto z3 = FinCategory::monoid("z3", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  auto PM = PreSegalSet::from_category(z3, 3);
  auto HM = homotopy_category_presegal(PM);
  CHECK(HM.num_morphisms() == 3);
  HM.validate();
  // the free datum is not Segal (X([0,1,2]) = A, not A x A)
  auto F = PreSegalSet::free_on(2, 2, 3);
  CHECK_FALSE(presegal_is_segal(F));
}

TEST_CASE("embedded categories behave fully faithfully") {
  // preSegal maps between embedded categories biject with functors
  auto A = FinCategory::poset_chain(1);
  for (auto C : {FinCategory::poset_chain(1), FinCategory::poset_chain(2),
                 FinCategory::preorder({"a", "b"}, {{0, 1}, {1, 0}})}) {
    auto PA = PreSegalSet::from_category(A, 2);
    auto maps = presegal_maps_to_category(PA, C);
    auto funs = functors(A, C);
    CHECK(maps.size() == funs.size());
  }
}

TEST_CASE("adjunction between the free category and the embedding") {
  std::vector<FinCategory> targets;
  targets.push_back(FinCategory::poset_chain(0));
  targets.push_back(FinCategory::poset_chain(1));
  targets.push_back(FinCategory::poset_chain(2));
  targets.push_back(FinCategory::preorder({"a", "b"}, {{0, 1}, {1, 0}}));
  targets.push_back(FinCategory::monoid("z2", {{0, 1}, {1, 0}}));
  for (int n = 1; n <= 2; ++n)
    for (int a = 1; a <= 2; ++a) {
      auto P = PreSegalSet::free_on(n, a, n + 1);
      for (const auto& C : targets) {
        auto R = adjunction_check(P, C, n + 1);
        INFO("n=" << n << " a=" << a << " detail=" << R.detail);
        CHECK(R.ok);
        CHECK(R.functor_count == R.presegal_map_count);
      }
    }

  // discrete datum: both sides reduce to object functions
  FinCategory disc;
  disc.add_object("u");
  disc.add_object("v");
  auto D = PreSegalSet::from_category(disc, 2);
  for (const auto& C : targets) {
    auto R = adjunction_check(D, C, 2);
    CHECK(R.ok);
    int objs = C.num_objects();
    CHECK(R.functor_count == objs * objs);
  }
}
