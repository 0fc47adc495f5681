#pragma once

// Finite categories with explicit composition tables, their nerves, and the
// face-category construction used by subdivision.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scx/sset.hpp"

namespace scx {

struct FinCategory {
  std::vector<std::string> objects;
  struct Morphism {
    std::string label;
    int src = 0, tgt = 0;
  };
  std::vector<Morphism> morphisms;
  std::vector<int> identity;             // per object
  std::map<std::pair<int, int>, int> comp;  // (g, f) -> g o f, tgt(f)==src(g)

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }

  int add_object(const std::string& label) {
    objects.push_back(label);
    int id = add_morphism("id:" + label,
                          static_cast<int>(objects.size()) - 1,
                          static_cast<int>(objects.size()) - 1);
    identity.push_back(id);
    return static_cast<int>(objects.size()) - 1;
  }
  int add_morphism(const std::string& label, int src, int tgt) {
    morphisms.push_back({label, src, tgt});
    return static_cast<int>(morphisms.size()) - 1;
  }
  void set_composite(int g, int f, int gf) { comp[{g, f}] = gf; }

  int compose(int g, int f) const {
    if (morphisms[f].tgt != morphisms[g].src)
      throw PreconditionError("compose: morphisms not composable");
    if (f == identity[morphisms[f].src]) return g;
    if (g == identity[morphisms[g].tgt]) return f;
    auto it = comp.find({g, f});
    if (it == comp.end()) throw ScxError("compose: missing table entry");
    return it->second;
  }

  bool is_identity(int f) const { return identity[morphisms[f].src] == f &&
                                         morphisms[f].src == morphisms[f].tgt; }

  // Unit and associativity on all composable pairs/triples.
  void validate() const {
    for (int f = 0; f < num_morphisms(); ++f) {
      if (compose(identity[morphisms[f].tgt], f) != f ||
          compose(f, identity[morphisms[f].src]) != f)
        throw ScxError("unit law fails at " + morphisms[f].label);
    }
    for (int f = 0; f < num_morphisms(); ++f)
      for (int g = 0; g < num_morphisms(); ++g) {
        if (morphisms[f].tgt != morphisms[g].src) continue;
        for (int h = 0; h < num_morphisms(); ++h) {
          if (morphisms[g].tgt != morphisms[h].src) continue;
          if (compose(h, compose(g, f)) != compose(compose(h, g), f))
            throw ScxError("associativity fails");
        }
      }
  }

  std::vector<int> morphisms_from_to(int x, int y) const {
    std::vector<int> out;
    for (int f = 0; f < num_morphisms(); ++f)
      if (morphisms[f].src == x && morphisms[f].tgt == y) out.push_back(f);
    return out;
  }

  bool is_invertible(int f) const {
    int x = morphisms[f].src, y = morphisms[f].tgt;
    for (int g : morphisms_from_to(y, x))
      if (compose(g, f) == identity[x] && compose(f, g) == identity[y])
        return true;
    return false;
  }

  static FinCategory poset_chain(int n) {
    FinCategory C;
    for (int i = 0; i <= n; ++i) C.add_object(std::to_string(i));
    std::map<std::pair<int, int>, int> arrow;
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        arrow[{i, j}] = i == j ? C.identity[i]
                               : C.add_morphism(std::to_string(i) + "<" +
                                                    std::to_string(j),
                                                i, j);
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int k = j; k <= n; ++k)
          C.set_composite(arrow[{j, k}], arrow[{i, j}], arrow[{i, k}]);
    return C;
  }

  // Thin category of a preorder given by a reachability relation.
  static FinCategory preorder(const std::vector<std::string>& objs,
                              const std::set<std::pair<int, int>>& rel) {
    FinCategory C;
    for (const auto& o : objs) C.add_object(o);
    std::map<std::pair<int, int>, int> arrow;
    for (int i = 0; i < C.num_objects(); ++i) arrow[{i, i}] = C.identity[i];
    for (auto [i, j] : rel)
      if (i != j)
        arrow[{i, j}] = C.add_morphism(objs[i] + "<" + objs[j], i, j);
    for (auto [i, j] : rel)
      for (auto [j2, k] : rel) {
        if (j2 != j) continue;
        if (!arrow.count({i, k}))
          throw PreconditionError("preorder: relation not transitive");
        C.set_composite(arrow[{j, k}], arrow[{i, j}], arrow[{i, k}]);
      }
    for (int i = 0; i < C.num_objects(); ++i)
      for (auto [a, b] : rel) {
        if (a == i)
          C.set_composite(arrow[{a, b}], C.identity[i], arrow[{a, b}]);
        if (b == i)
          C.set_composite(C.identity[i], arrow[{a, b}], arrow[{a, b}]);
      }
    return C;
  }

  // One-object category of a finite monoid given by its table; element 0 is
  // the unit.
  static FinCategory monoid(const std::string& name,
                            const std::vector<std::vector<int>>& table) {
    FinCategory C;
    C.add_object(name);
    std::vector<int> ids(table.size());
    ids[0] = C.identity[0];
    for (std::size_t m = 1; m < table.size(); ++m)
      ids[m] = C.add_morphism(name + ":m" + std::to_string(m), 0, 0);
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = 0; b < table.size(); ++b)
        C.set_composite(ids[a], ids[b], ids[table[a][b]]);
    return C;
  }
};

// Nerve of a finite category, truncated at dim_bound.  k-simplices are the
// composable k-chains; chains containing an identity are degenerate.
inline FiniteSimplicialSet nerve(const FinCategory& C, int dim_bound) {
  if (dim_bound < 0) throw PreconditionError("nerve: dim_bound >= 0");
  FiniteSimplicialSet N;
  std::map<std::vector<int>, int> index;  // nondegenerate chains
  for (int x = 0; x < C.num_objects(); ++x) N.add_generator(0, C.objects[x]);

  // Normal form of an arbitrary chain: identity at position p means the
  // chain is s_p of the chain without it.
  auto chain_ref = [&](const std::vector<int>& chain) -> SimplexRef {
    std::vector<int> core;
    std::vector<int> positions;  // ascending full-chain positions of ids
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (C.is_identity(chain[i]))
        positions.push_back(static_cast<int>(i));
      else
        core.push_back(chain[i]);
    }
    SimplexRef x = core.empty()
                       ? make_vertex(C.morphisms[chain.at(0)].src)
                       : SimplexRef{static_cast<int>(core.size()),
                                    index.at(core),
                                    {}};
    for (int p : positions) x = N.degeneracy(x, p);
    return x;
  };

  for (int d = 1; d <= dim_bound; ++d) {
    std::vector<std::vector<int>> chains;
    std::vector<int> c;
    std::function<void()> extend = [&]() {
      if (static_cast<int>(c.size()) == d) {
        chains.push_back(c);
        return;
      }
      for (int f = 0; f < C.num_morphisms(); ++f) {
        if (C.is_identity(f)) continue;
        if (!c.empty() && C.morphisms[f].src != C.morphisms[c.back()].tgt)
          continue;
        c.push_back(f);
        extend();
        c.pop_back();
      }
    };
    extend();
    for (const auto& chain : chains) {
      std::string lbl;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) lbl += "|";
        lbl += C.morphisms[chain[i]].label;
      }
      std::vector<SimplexRef> faces;
      for (int k = 0; k <= d; ++k) {
        if (d == 1) {
          faces.push_back(make_vertex(k == 0 ? C.morphisms[chain[0]].tgt
                                             : C.morphisms[chain[0]].src));
          continue;
        }
        std::vector<int> fc;
        if (k == 0) {
          fc.assign(chain.begin() + 1, chain.end());
        } else if (k == d) {
          fc.assign(chain.begin(), chain.end() - 1);
        } else {
          fc = chain;
          fc[k - 1] = C.compose(fc[k], fc[k - 1]);
          fc.erase(fc.begin() + k);
        }
        faces.push_back(chain_ref(fc));
      }
      index[chain] = N.add_generator(d, lbl, std::move(faces));
    }
    if (chains.empty()) break;
  }
  N.validate();
  return N;
}

}  // namespace scx
