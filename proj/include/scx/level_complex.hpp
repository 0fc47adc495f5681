#pragma once

// Conversion from a levelwise presentation (sets of cells per dimension with
// explicit face/degeneracy tables) to a FiniteSimplicialSet in normal form,
// together with the cell -> SimplexRef correspondence.

#include <functional>
#include <string>
#include <vector>

#include "scx/sset.hpp"

namespace scx {

struct LevelComplex {
  // cells per level 0..D; label(level, cell) for generator naming.
  std::vector<int> level_sizes;
  // face[n][k][c] = the cell d_k(c) at level n-1, for 1 <= n <= D, 0<=k<=n.
  std::vector<std::vector<std::vector<int>>> face;
  // deg[n][k][c] = the cell s_k(c) at level n+1, for 0 <= n < D, 0<=k<=n.
  std::vector<std::vector<std::vector<int>>> deg;
  std::function<std::string(int, int)> label;

  int top_level() const { return static_cast<int>(level_sizes.size()) - 1; }

  struct Normalized {
    FiniteSimplicialSet sset;
    // ref[n][c] = normal form of cell c at level n, expressed in sset.
    std::vector<std::vector<SimplexRef>> ref;
  };

  // Cells at the top level are only classified as generators when they are
  // not in the image of a degeneracy; their faces live one level down, so
  // faces of top-level generators are resolvable as long as D is at least
  // the dimension of interest plus one less than needed.  Levels are
  // processed bottom-up.
  Normalized normalize() const {
    Normalized out;
    int D = top_level();
    out.ref.assign(static_cast<std::size_t>(D) + 1, {});
    for (int n = 0; n <= D; ++n) {
      out.ref[n].assign(level_sizes[n], SimplexRef{});
      std::vector<bool> is_deg(level_sizes[n], false);
      if (n > 0) {
        for (int k = 0; k <= n - 1; ++k)
          for (int c = 0; c < level_sizes[n - 1]; ++c) {
            int img = deg[n - 1][k][c];
            if (!is_deg[img]) {
              is_deg[img] = true;
              out.ref[n][img] = out.sset.degeneracy(out.ref[n - 1][c], k);
            }
          }
      }
      for (int c = 0; c < level_sizes[n]; ++c) {
        if (is_deg[c]) continue;
        std::vector<SimplexRef> fs;
        if (n > 0) {
          fs.reserve(static_cast<std::size_t>(n) + 1);
          for (int k = 0; k <= n; ++k)
            fs.push_back(out.ref[n - 1][face[n][k][c]]);
        }
        int g = out.sset.add_generator(n, label(n, c), std::move(fs));
        out.ref[n][c] = SimplexRef{n, g, {}};
      }
    }
    out.sset.validate();
    return out;
  }
};

}  // namespace scx
