#pragma once

// Verification suites: each check runs an exact property at desk scale and
// reports pass/fail with an optional witness payload.

#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "scx/anodyne.hpp"
#include "scx/coherent.hpp"
#include "scx/enriched.hpp"
#include "scx/homology.hpp"
#include "scx/json_io.hpp"
#include "scx/seeded.hpp"
#include "scx/segal.hpp"
#include "scx/slices.hpp"
#include "scx/subdiv.hpp"

namespace scx {

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "semi-decided-yes"
  long long ms = 0;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
  // Reports are byte-identical across runs: checks are ordered by name and
  // wall-clock times stay out of the JSON (the text format shows them).
  json to_json() const {
    json out;
    out["suite"] = suite;
    json cs = json::array();
    auto sorted = checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) {
                return a.name < b.name;
              });
    for (const auto& c : sorted) {
      json e{{"name", c.name}, {"status", c.status}};
      if (!c.witness.empty()) e["witness"] = c.witness;
      cs.push_back(e);
    }
    out["checks"] = cs;
    out["ok"] = ok();
    return out;
  }
};

namespace detail {

template <typename F>
void run_check(SuiteReport& R, const std::string& name, F&& body) {
  CheckResult C;
  C.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(C);
  } catch (const std::exception& e) {
    C.status = "fail";
    C.witness = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  C.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  R.checks.push_back(std::move(C));
}

}  // namespace detail

// 1. Mapping complexes of simplices are cubes, and union composition is
// associative and unital.
inline SuiteReport suite_coherent_cubes() {
  SuiteReport R{"coherent-cubes", {}};
  for (int n = 0; n <= 5; ++n) {
    auto dn = FiniteSimplicialSet::simplex(n);
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        detail::run_check(
            R,
            "cube-" + std::to_string(n) + "-" + std::to_string(i) + "-" +
                std::to_string(j),
            [&](CheckResult& C) {
              auto H = hom_complex(dn, std::to_string(i), std::to_string(j),
                                   std::max(j - i, 1));
              FiniteSimplicialSet cube = FiniteSimplicialSet::simplex(0);
              for (int t = 0; t < j - i - 1; ++t)
                cube = product(cube, FiniteSimplicialSet::simplex(1)).complex;
              C.status = H.f_vector() == cube.f_vector() ? "pass" : "fail";
            });
  }
  detail::run_check(R, "union-associativity", [&](CheckResult& C) {
    for (int n = 2; n <= 5; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          for (int k = j; k <= n; ++k)
            for (int l = k; l <= n; ++l) {
              auto Pij = MappingPoset::make(n, i, j);
              auto Pjk = MappingPoset::make(n, j, k);
              auto Pkl = MappingPoset::make(n, k, l);
              for (Subset a : Pij.elements)
                for (Subset b : Pjk.elements)
                  for (Subset c : Pkl.elements)
                    if (((a | b) | c) != (a | (b | c))) {
                      C.status = "fail";
                      return;
                    }
              auto Pii = MappingPoset::make(n, i, i);
              for (Subset a : Pij.elements)
                if (compose_union(Pii, Pij, Pii.elements[0], a) != a) {
                  C.status = "fail";
                  return;
                }
            }
    C.status = "pass";
  });
  return R;
}

// 2. Subdivision spheres and the marking rules.
inline SuiteReport suite_subdivision_spheres() {
  SuiteReport R{"subdivision-spheres", {}};
  for (int n = 2; n <= 4; ++n)
    detail::run_check(R, "sphere-" + std::to_string(n), [&](CheckResult& C) {
      auto S = sd0(FiniteSimplicialSet::boundary(n));
      auto H = homology(S.base, n);
      std::vector<int> expect(static_cast<std::size_t>(n) + 1, 0);
      expect[0] = 1;
      expect[n - 1] += 1;
      bool torsion_free = true;
      for (const auto& t : H.torsion) torsion_free &= t.empty();
      C.status = (H.betti == expect && torsion_free) ? "pass" : "fail";
    });
  detail::run_check(R, "marking-rules", [&](CheckResult& C) {
    auto d2 = FiniteSimplicialSet::simplex(2);
    auto F = face_category(d2);
    auto flat = sd_plus0(scaled_flat(d2));
    auto sharp = sd_plus0(scaled_sharp(d2));
    for (int m = 0; m < F.cat.num_morphisms(); ++m) {
      if (F.cat.is_identity(m)) continue;
      const auto& S = F.morph_subset[m];
      bool convex = S.back() - S.front() == static_cast<int>(S.size()) - 1;
      auto [d, g] = F.obj_simplex[F.cat.morphisms[m].src];
      bool long_edge = d == 2 && S == std::vector<int>{0, 2};
      auto e = flat.base.label_index(1, F.cat.morphisms[m].label);
      if (!e) {
        C.status = "fail";
        return;
      }
      bool flat_marked = flat.marking.count(*e) > 0;
      bool sharp_marked = sharp.marking.count(*e) > 0;
      if (flat_marked != convex || sharp_marked != (convex || long_edge)) {
        C.status = "fail";
        C.witness = F.cat.morphisms[m].label;
        return;
      }
    }
    C.status = "pass";
  });
  return R;
}

// 3. Beta fibers over the test complexes carry verified initial objects.
inline SuiteReport suite_jt_fibers() {
  SuiteReport R{"jt-fibers", {}};
  struct Cfg {
    std::string name;
    FiniteSimplicialSet X;
  };
  std::vector<Cfg> cfgs;
  cfgs.push_back({"point", FiniteSimplicialSet::simplex(0)});
  cfgs.push_back({"interval", FiniteSimplicialSet::simplex(1)});
  cfgs.push_back({"triangle", FiniteSimplicialSet::simplex(2)});
  cfgs.push_back({"circle", FiniteSimplicialSet::boundary(2)});
  for (const auto& cfg : cfgs)
    for (int n = 0; n <= 2; ++n)
      detail::run_check(
          R, "fibers-" + cfg.name + "-n" + std::to_string(n),
          [&](CheckResult& C) {
            auto q = q_levels(cfg.X, n);
            for (const auto& sigma : q[n]) {
              auto cert = beta_fiber_certificate(cfg.X, n, sigma, n + 1, 2);
              if (!cert.witness_verified ||
                  !cert.homology.contractible_grade()) {
                C.status = "fail";
                C.witness = cfg.X.label(sigma);
                return;
              }
            }
            C.status = "pass";
            C.witness = std::to_string(q[n].size()) + " fibers";
          });
  return R;
}

// 4. The chain posets of the grid are weakly contractible at the homology
// grade.
inline FinCategory grid_chain_poset(int m, int n) {
  // linearly ordered subsets of [m] x [n] (product order) surjecting onto
  // the first factor, ordered by inclusion
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= n; ++b) pts.push_back({a, b});
  auto leq = [](std::pair<int, int> u, std::pair<int, int> v) {
    return u.first <= v.first && u.second <= v.second;
  };
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (!cur.empty()) {
      std::set<int> firsts;
      for (int p : cur) firsts.insert(pts[p].first);
      if (static_cast<int>(firsts.size()) == m + 1) chains.push_back(cur);
    }
    for (int p = lo; p < static_cast<int>(pts.size()); ++p) {
      if (!cur.empty() && !(leq(pts[cur.back()], pts[p]) && cur.back() != p))
        continue;
      cur.push_back(p);
      rec(p + 1);
      cur.pop_back();
    }
  };
  rec(0);
  FinCategory C;
  std::map<std::vector<int>, int> id;
  for (const auto& ch : chains) {
    std::string lbl = "S";
    for (int p : ch)
      lbl += "(" + std::to_string(pts[p].first) + "," +
             std::to_string(pts[p].second) + ")";
    id[ch] = C.add_object(lbl);
  }
  std::map<std::pair<int, int>, int> arrow;
  for (const auto& [c1, o1] : id)
    for (const auto& [c2, o2] : id) {
      if (o1 == o2) {
        arrow[{o1, o2}] = C.identity[o1];
        continue;
      }
      bool subset = std::includes(c2.begin(), c2.end(), c1.begin(), c1.end());
      if (subset)
        arrow[{o1, o2}] = C.add_morphism("i" + std::to_string(o1) + ">" +
                                             std::to_string(o2),
                                         o1, o2);
    }
  for (const auto& [p1, m1] : arrow)
    for (const auto& [p2, m2] : arrow) {
      if (p1.second != p2.first) continue;
      C.set_composite(m2, m1, arrow.at({p1.first, p2.second}));
    }
  return C;
}

inline SuiteReport suite_chain_contractibility() {
  SuiteReport R{"chain-contractibility", {}};
  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {1, 2}, {2, 2}})
    detail::run_check(
        R, "grid-" + std::to_string(m) + "x" + std::to_string(n),
        [&, m = m, n = n](CheckResult& C) {
          auto cat = grid_chain_poset(m, n);
          auto N = nerve(cat, 4);
          auto H = homology(N, 3);
          C.status = H.contractible_grade() ? "pass" : "fail";
          C.witness = std::to_string(cat.num_objects()) + " chains";
        });
  return R;
}

// 5. Filtration certificates for the three prism families.
inline SuiteReport suite_filtrations() {
  SuiteReport R{"filtrations", {}};
  for (int n = 1; n <= 4; ++n)
    detail::run_check(R, "prism-last-" + std::to_string(n),
                      [&](CheckResult& C) {
                        auto cert = verify_filtration(prism_last_family(n));
                        C.status = cert.ok ? "pass" : "fail";
                        C.witness = cert.failure;
                      });
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i < n; ++i)
      detail::run_check(
          R, "cone-prism-" + std::to_string(n) + "-" + std::to_string(i),
          [&](CheckResult& C) {
            auto cert = verify_filtration(cone_prism_family(n, i));
            C.status = cert.ok ? "pass" : "fail";
            C.witness = cert.failure;
          });
  for (int n = 0; n <= 2; ++n)
    detail::run_check(R, "prism-first-" + std::to_string(n),
                      [&](CheckResult& C) {
                        auto cert = verify_filtration(prism_first_family(n));
                        C.status = cert.ok ? "pass" : "fail";
                        C.witness = cert.failure;
                      });
  return R;
}

// 6. Slice mapping spaces at the homology level.
inline SuiteReport suite_slice_homs() {
  SuiteReport R{"slice-homs", {}};
  detail::run_check(R, "two-point-hom", [&](CheckResult& C) {
    FinCategory cat;
    cat.add_object("a");
    cat.add_object("b");
    cat.add_morphism("p", 0, 1);
    cat.add_morphism("q", 0, 1);
    auto M = MarkedSimpCategory::from_category(cat, 3);
    auto N = scaled_nerve(M, 3);
    std::string va, vb;
    for (int v = 0; v < N.base.num_generators(0); ++v) {
      if (N.base.label(0, v).find(".a") != std::string::npos)
        va = N.base.label(0, v);
      if (N.base.label(0, v).find(".b") != std::string::npos)
        vb = N.base.label(0, v);
    }
    auto fiber = hom_via_slice(N, va, vb, 3);
    auto H = homology(fiber.base, 2);
    // the enriched hom is two points: H_0 = Z^2, higher homology zero
    auto enriched = homology(M.hom[0][1].base, 2);
    bool match = H.betti == enriched.betti && H.betti.size() == 3 &&
                 H.betti[0] == 2 && H.betti[1] == 0 && H.betti[2] == 0;
    for (const auto& t : H.torsion) match &= t.empty();
    C.status = match ? "pass" : "fail";
  });
  for (int n = 0; n <= 3; ++n)
    detail::run_check(R, "sharp-simplex-" + std::to_string(n),
                      [&](CheckResult& C) {
                        auto S = scaled_sharp(FiniteSimplicialSet::simplex(n));
                        auto fiber = hom_via_slice(S, "0", std::to_string(n), 3);
                        auto H = homology(fiber.base, 2);
                        C.status = H.contractible_grade() ? "pass" : "fail";
                      });
  return R;
}

// 7. Segal round trips on seeded random categories.
inline SuiteReport suite_segal_roundtrip(unsigned long long seed) {
  SuiteReport R{"segal-roundtrip", {}};
  Rng rng(seed);
  for (int t = 0; t < 20; ++t) {
    auto C = random_category(rng);
    detail::run_check(
        R, "category-" + std::to_string(t), [&](CheckResult& res) {
          auto N = nerve(C, 4);
          if (!is_category_object(N, 3).ok) {
            res.status = "fail";
            res.witness = "nerve is not a category object";
            return;
          }
          auto C2 = to_category(N, 3);
          if (!isomorphic(nerve(C2, 4), N)) {
            res.status = "fail";
            res.witness = "nerve round trip failed";
            return;
          }
          auto detected = detect_invertibles_via_k(N);
          std::set<int> invertible;
          for (int e = 0; e < N.num_generators(1); ++e)
            for (int m = 0; m < C2.num_morphisms(); ++m)
              if (C2.morphisms[m].label == N.label(1, e) &&
                  C2.is_invertible(m))
                invertible.insert(e);
          if (detected != invertible) {
            res.status = "fail";
            res.witness = "invertible detection mismatch";
            return;
          }
          res.status = "pass";
          res.witness = std::to_string(C.num_objects()) + " objects, " +
                        std::to_string(C.num_morphisms()) + " morphisms";
        });
  }
  return R;
}

// 8. Free-category cardinalities and the adjunction.
inline SuiteReport suite_free_adjunction() {
  SuiteReport R{"free-adjunction", {}};
  for (int n = 1; n <= 3; ++n)
    for (int a = 1; a <= 3; ++a)
      detail::run_check(
          R, "counts-n" + std::to_string(n) + "-a" + std::to_string(a),
          [&](CheckResult& C) {
            auto P = PreSegalSet::free_on(n, a, n + 1);
            for (int i = 0; i <= n; ++i)
              for (int j = i; j <= n; ++j) {
                auto res = free_category_hom(P, i, j, n + 1);
                long long expect = 1;
                for (int t = 0; t < j - i; ++t) expect *= a;
                if (res.count != expect || !res.stabilized) {
                  C.status = "fail";
                  C.witness = std::to_string(i) + "->" + std::to_string(j);
                  return;
                }
              }
            C.status = "pass";
          });
  std::vector<std::pair<std::string, FinCategory>> targets;
  targets.push_back({"chain0", FinCategory::poset_chain(0)});
  targets.push_back({"chain1", FinCategory::poset_chain(1)});
  targets.push_back({"chain2", FinCategory::poset_chain(2)});
  targets.push_back(
      {"iso", FinCategory::preorder({"a", "b"}, {{0, 1}, {1, 0}})});
  targets.push_back({"z2", FinCategory::monoid("z2", {{0, 1}, {1, 0}})});
  for (int n = 1; n <= 2; ++n)
    for (int a = 1; a <= 2; ++a)
      for (const auto& [tname, target] : targets)
        detail::run_check(
            R,
            "adjunction-n" + std::to_string(n) + "-a" + std::to_string(a) +
                "-" + tname,
            [&](CheckResult& C) {
              auto P = PreSegalSet::free_on(n, a, n + 1);
              auto res = adjunction_check(P, target, n + 1);
              C.status = res.ok ? "pass" : "fail";
              C.witness = std::to_string(res.functor_count) + " maps";
              if (!res.ok) C.witness += "; " + res.detail;
            });
  return R;
}

// 9. Weak-bicategory discrimination.
inline SuiteReport suite_bicategory() {
  SuiteReport R{"bicategory-checks", {}};
  detail::run_check(R, "flat-triangle-rejected", [&](CheckResult& C) {
    auto res = is_weak_bicategory(scaled_flat(FiniteSimplicialSet::simplex(2)), 4);
    C.status = (res.verdict == Verdict::No && res.witness_kind == "A(2,1)")
                   ? "pass"
                   : "fail";
    C.witness = res.witness_kind;
  });
  detail::run_check(R, "point-accepted", [&](CheckResult& C) {
    auto res = is_weak_bicategory(scaled_sharp(FiniteSimplicialSet::simplex(0)), 2);
    C.status = res.verdict == Verdict::SemiDecidedYes ? "semi-decided-yes"
                                                      : "fail";
  });
  detail::run_check(R, "discrete-two-arrows-accepted", [&](CheckResult& C) {
    FinCategory cat;
    cat.add_object("a");
    cat.add_object("b");
    cat.add_morphism("p", 0, 1);
    cat.add_morphism("q", 0, 1);
    auto N = scaled_nerve(MarkedSimpCategory::from_category(cat, 3), 3);
    auto res = is_weak_bicategory(N, 3);
    C.status = res.verdict == Verdict::SemiDecidedYes ? "semi-decided-yes"
                                                      : "fail";
    C.witness = res.witness_kind;
  });
  detail::run_check(R, "discrete-poset-accepted", [&](CheckResult& C) {
    auto N = scaled_nerve(
        MarkedSimpCategory::from_category(FinCategory::poset_chain(2), 4), 4);
    auto res = is_weak_bicategory(N, 4);
    C.status = res.verdict == Verdict::SemiDecidedYes ? "semi-decided-yes"
                                                      : "fail";
    C.witness = res.witness_kind;
  });
  return R;
}

// 10. Flatness certificates.
inline SuiteReport suite_flatness() {
  SuiteReport R{"flatness", {}};
  auto d2 = FiniteSimplicialSet::simplex(2);
  detail::run_check(R, "identity-flat", [&](CheckResult& C) {
    SimplexRef long_edge{1, *d2.label_index(1, "0.2"), {}};
    auto res = is_flat_over_triangle(d2, identity_map(d2), long_edge, 2);
    C.status = res.flat ? "pass" : "fail";
  });
  detail::run_check(R, "cocartesian-lift-flat", [&](CheckResult& C) {
    FinCategory M;
    M.add_object("c");
    M.add_object("d");
    M.add_object("e1");
    M.add_object("e2");
    int cd = M.add_morphism("cd", 0, 1);
    int de1 = M.add_morphism("de1", 1, 2);
    int de2 = M.add_morphism("de2", 1, 3);
    int ce1 = M.add_morphism("ce1", 0, 2);
    int ce2 = M.add_morphism("ce2", 0, 3);
    M.set_composite(de1, cd, ce1);
    M.set_composite(de2, cd, ce2);
    auto NM = nerve(M, 3);
    SimplicialMap proj;
    proj.image.resize(static_cast<std::size_t>(NM.top_dim()) + 1);
    auto obj_to = [&](const std::string& lbl) {
      if (lbl == "c") return 0;
      if (lbl == "d") return 1;
      return 2;
    };
    for (int d = 0; d <= NM.top_dim(); ++d)
      for (int g = 0; g < NM.num_generators(d); ++g) {
        auto vs = NM.vertex_gens(SimplexRef{d, g, {}});
        std::vector<int> target;
        for (int v : vs) target.push_back(obj_to(NM.label(0, v)));
        proj.image[d].push_back(*d2.by_vertices(target));
      }
    bool both = true;
    for (const char* e : {"ce1", "ce2"}) {
      auto eid = NM.label_index(1, e);
      auto res = is_flat_over_triangle(NM, proj, SimplexRef{1, *eid, {}}, 2);
      both &= res.flat;
    }
    C.status = both ? "pass" : "fail";
  });
  detail::run_check(R, "disconnected-fails", [&](CheckResult& C) {
    FiniteSimplicialSet M;
    M.add_generator(0, "c");
    M.add_generator(0, "e");
    M.add_generator(0, "mid");
    M.add_generator(1, "f", {make_vertex(1), make_vertex(0)});
    SimplicialMap proj;
    proj.image.resize(2);
    proj.image[0] = {make_vertex(0), make_vertex(2), make_vertex(1)};
    proj.image[1] = {SimplexRef{1, *d2.label_index(1, "0.2"), {}}};
    auto res = is_flat_over_triangle(M, proj, SimplexRef{1, 0, {}}, 2);
    C.status = (!res.flat && res.certificate.empty_complex) ? "pass" : "fail";
  });
  return R;
}

inline std::vector<std::string> suite_names() {
  return {"coherent-cubes",   "subdivision-spheres", "jt-fibers",
          "chain-contractibility", "filtrations",     "slice-homs",
          "segal-roundtrip",  "free-adjunction",     "bicategory-checks",
          "flatness"};
}

inline SuiteReport run_suite(const std::string& name,
                             unsigned long long seed = 0) {
  if (name == "coherent-cubes") return suite_coherent_cubes();
  if (name == "subdivision-spheres") return suite_subdivision_spheres();
  if (name == "jt-fibers") return suite_jt_fibers();
  if (name == "chain-contractibility") return suite_chain_contractibility();
  if (name == "filtrations") return suite_filtrations();
  if (name == "slice-homs") return suite_slice_homs();
  if (name == "segal-roundtrip") return suite_segal_roundtrip(seed);
  if (name == "free-adjunction") return suite_free_adjunction();
  if (name == "bicategory-checks") return suite_bicategory();
  if (name == "flatness") return suite_flatness();
  throw PreconditionError("unknown suite: " + name);
}

}  // namespace scx
