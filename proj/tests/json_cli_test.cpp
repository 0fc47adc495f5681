#include <catch2/catch_amalgamated.hpp>

#include "scx/json_io.hpp"
#include "scx/suites.hpp"

using namespace scx;

TEST_CASE("complexes round-trip through JSON bit-exactly") {
  for (auto X : {FiniteSimplicialSet::simplex(3), FiniteSimplicialSet::horn(3, 1),
                 collapsed_k(),
                 product(FiniteSimplicialSet::simplex(1),
                         FiniteSimplicialSet::simplex(2))
                     .complex}) {
    auto j = sset_to_json(X);
    std::string bytes = dump_canonical(j);
    auto Y = sset_from_json(j);
    CHECK(isomorphic(X, Y));
    CHECK(dump_canonical(sset_to_json(Y)) == bytes);
  }
}

TEST_CASE("decorated complexes carry their markings through JSON") {
  auto S = scaled_sharp(FiniteSimplicialSet::simplex(2));
  auto j = decorated_to_json(S);
  auto S2 = decorated_from_json(j);
  CHECK(S2.kind == DecorKind::Scaled);
  CHECK(S2.decorated.size() == 1);
  CHECK(dump_canonical(decorated_to_json(S2)) == dump_canonical(j));

  auto M = marked_sharp(FiniteSimplicialSet::simplex(1));
  auto M2 = decorated_from_json(decorated_to_json(M));
  CHECK(M2.kind == DecorKind::Marked);
  CHECK(M2.decorated.size() == 1);
}

TEST_CASE("patterns round-trip with cones") {
  CategoricalPattern P = pattern_of(scaled_sharp(FiniteSimplicialSet::simplex(2)));
  P.cones.push_back({FiniteSimplicialSet::simplex(0), "0"});
  auto j = pattern_to_json(P);
  auto P2 = pattern_from_json(j);
  CHECK(P2.marked == P.marked);
  CHECK(P2.thin == P.thin);
  REQUIRE(P2.cones.size() == 1);
  CHECK(P2.cones[0].vertex == "0");
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(sset_from_json(json::object()), PreconditionError);
  json bad = sset_to_json(FiniteSimplicialSet::simplex(2));
  bad["faces"]["0.1.2"][0]["g"] = "missing";
  CHECK_THROWS_AS(sset_from_json(bad), PreconditionError);
}

TEST_CASE("suite reports are deterministic") {
  auto a = run_suite("flatness", 0).to_json();
  auto b = run_suite("flatness", 0).to_json();
  CHECK(dump_canonical(a) == dump_canonical(b));
  auto s1 = run_suite("segal-roundtrip", 7).to_json();
  auto s2 = run_suite("segal-roundtrip", 7).to_json();
  CHECK(dump_canonical(s1) == dump_canonical(s2));
}

TEST_CASE("homology certificates serialize") {
  auto H = homology(FiniteSimplicialSet::boundary(3), 3);
  auto j = certificate_to_json(H);
  CHECK(j["betti"] == json::array({1, 0, 1, 0}));
  CHECK(j["connected"] == true);
}
