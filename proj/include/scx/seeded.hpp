#pragma once

// Seeded deterministic generation of test objects.  All draws go through
// rand_below so reports are byte-identical across platforms and runs.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "scx/category.hpp"

namespace scx {

using Rng = std::mt19937_64;

inline int rand_below(Rng& rng, int n) {
  return static_cast<int>(rng() % static_cast<unsigned long long>(n));
}

// Random finite category with at most 4 objects and 10 morphisms: a mix of
// preorders (transitive closures of random digraphs, so cycles produce
// isomorphic objects) and small monoids.
inline FinCategory random_category(Rng& rng) {
  for (;;) {
    int flavor = rand_below(rng, 4);
    if (flavor == 3) {
      switch (rand_below(rng, 3)) {
        case 0:
          return FinCategory::monoid("z2", {{0, 1}, {1, 0}});
        case 1:
          return FinCategory::monoid("z3",
                                     {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
        default:
          return FinCategory::monoid("e", {{0, 1}, {1, 1}});
      }
    }
    int k = 2 + rand_below(rng, 3);  // 2..4 objects
    std::set<std::pair<int, int>> rel;
    int arrows = 1 + rand_below(rng, 4);
    for (int t = 0; t < arrows; ++t) {
      int a = rand_below(rng, k), b = rand_below(rng, k);
      if (a != b) rel.insert({a, b});
    }
    // transitive closure
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto [a, b] : std::set<std::pair<int, int>>(rel))
        for (auto [c, d] : std::set<std::pair<int, int>>(rel))
          if (b == c && a != d && !rel.count({a, d})) {
            rel.insert({a, d});
            grew = true;
          }
    }
    if (static_cast<int>(rel.size()) + k > 10) continue;
    std::vector<std::string> names;
    for (int o = 0; o < k; ++o) names.push_back("o" + std::to_string(o));
    auto C = FinCategory::preorder(names, rel);
    C.validate();
    return C;
  }
}

}  // namespace scx
