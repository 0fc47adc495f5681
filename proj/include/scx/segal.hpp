#pragma once

// Set-level Segal theory: category objects and their inversion, groupoid
// cores, the collapsed-three-simplex detector for invertible edges, and
// finite-set-enriched preSegal categories with the free-category colimit
// and its adjunction.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scx/category.hpp"
#include "scx/level_complex.hpp"
#include "scx/maps.hpp"
#include "scx/sset.hpp"

namespace scx {

// --- category objects ---

struct SegalVerdict {
  bool ok = true;
  std::string failure;
};

// Bijectivity of the spine comparison maps X_n -> X_1 x_{X_0} ... x_{X_0} X_1
// for 2 <= n <= n_max.
inline SegalVerdict is_category_object(const FiniteSimplicialSet& X,
                                       int n_max) {
  SegalVerdict V;
  for (int n = 2; n <= n_max; ++n) {
    std::map<std::vector<SimplexRef>, int> spines;
    for (const auto& x : X.all_simplices(n)) {
      std::vector<SimplexRef> spine;
      for (int i = 0; i < n; ++i) spine.push_back(X.restrict(x, {i, i + 1}));
      if (++spines[spine] > 1) {
        V.ok = false;
        V.failure = "spine map not injective at level " + std::to_string(n);
        return V;
      }
    }
    // surjectivity: count composable spines
    long long composable = 0;
    auto edges = X.all_simplices(1);
    std::function<void(int, const SimplexRef*)> count =
        [&](int left, const SimplexRef* prev) {
          if (left == 0) {
            ++composable;
            return;
          }
          for (const auto& e : edges)
            if (!prev || X.face(*prev, 0) == X.face(e, 1)) count(left - 1, &e);
        };
    count(n, nullptr);
    if (composable != static_cast<long long>(spines.size())) {
      V.ok = false;
      V.failure = "spine map not surjective at level " + std::to_string(n);
      return V;
    }
  }
  return V;
}

// Extracts the finite category of a Segal complex: objects are vertices,
// morphisms are edges, composition through the unique 2-simplex filler.
inline FinCategory to_category(const FiniteSimplicialSet& X, int n_max = 3) {
  auto verdict = is_category_object(X, std::max(n_max, 3));
  if (!verdict.ok)
    throw PreconditionError("to_category: " + verdict.failure);
  FinCategory C;
  for (int v = 0; v < X.num_generators(0); ++v) C.add_object(X.label(0, v));
  // identities were created by add_object; nondegenerate edges follow
  std::map<SimplexRef, int> edge_morphism;
  for (int v = 0; v < X.num_generators(0); ++v)
    edge_morphism[X.degeneracy(make_vertex(v), 0)] = C.identity[v];
  for (int e = 0; e < X.num_generators(1); ++e) {
    SimplexRef er{1, e, {}};
    edge_morphism[er] = C.add_morphism(X.label(1, e), X.face(er, 1).gen,
                                       X.face(er, 0).gen);
  }
  // composition via the Segal filler at level 2
  std::map<std::pair<SimplexRef, SimplexRef>, SimplexRef> filler;
  for (const auto& t : X.all_simplices(2))
    filler[{X.face(t, 2), X.face(t, 0)}] = X.face(t, 1);
  for (const auto& [f, fid] : edge_morphism)
    for (const auto& [g, gid] : edge_morphism) {
      if (!(X.face(f, 0) == X.face(g, 1))) continue;
      auto it = filler.find({f, g});
      if (it == filler.end())
        throw PreconditionError("to_category: missing composite");
      C.set_composite(gid, fid, edge_morphism.at(it->second));
    }
  C.validate();
  return C;
}

// The simplicial subset spanned by simplices all of whose edges are
// invertible in to_category(X).
inline FiniteSimplicialSet invertible_core(const FiniteSimplicialSet& X,
                                           int n_max = 3) {
  auto C = to_category(X, n_max);
  std::set<int> invertible_edges;
  for (int e = 0; e < X.num_generators(1); ++e) {
    SimplexRef er{1, e, {}};
    int f = -1;
    for (int m = 0; m < C.num_morphisms(); ++m)
      if (C.morphisms[m].label == X.label(1, e)) f = m;
    if (C.is_invertible(f)) invertible_edges.insert(e);
  }
  FiniteSimplicialSet core;
  std::map<std::pair<int, int>, int> keep;  // (dim, gen) -> new index
  for (int v = 0; v < X.num_generators(0); ++v)
    keep[{0, v}] = core.add_generator(0, X.label(0, v));
  for (int d = 1; d <= X.top_dim(); ++d)
    for (int g = 0; g < X.num_generators(d); ++g) {
      SimplexRef x{d, g, {}};
      bool all_inv = true;
      for (int i = 0; i < d && all_inv; ++i)
        for (int j = i + 1; j <= d && all_inv; ++j) {
          SimplexRef e = X.restrict(x, {i, j});
          if (!e.degenerate() && !invertible_edges.count(e.gen))
            all_inv = false;
        }
      if (!all_inv) continue;
      std::vector<SimplexRef> faces;
      bool ok = true;
      for (int k = 0; k <= d && ok; ++k) {
        SimplexRef fc = X.face(x, k);
        auto it = keep.find({fc.gdim, fc.gen});
        if (it == keep.end()) {
          ok = false;
          break;
        }
        faces.push_back(SimplexRef{fc.gdim, it->second, fc.word});
      }
      if (ok) keep[{d, g}] = core.add_generator(d, X.label(d, g), faces);
    }
  core.validate();
  return core;
}

// Invertible-edge detection through maps from the collapsed three-simplex:
// the detected set is the image of the marked middle edge.
inline std::set<int> detect_invertibles_via_k(const FiniteSimplicialSet& X) {
  auto K = collapsed_k();
  // middle edge: image of {1,2}; its label in the quotient is "L.1.2"
  auto mid = K.label_index(1, "1.2");
  if (!mid) throw ScxError("collapsed_k: middle edge not found");
  std::set<int> out;
  for (const auto& u : sset_hom(K, X)) {
    SimplexRef img = u.image[1][*mid];
    if (!img.degenerate()) out.insert(img.gen);
  }
  return out;
}

// --- preSegal categories enriched in finite sets ---

// Values are finite sets stored per colored sequence up to a length bound,
// together with the generator actions of the sequence reindexings.
struct PreSegalSet {
  std::vector<std::string> objects;
  int length_bound = 3;  // sequences [s_0..s_n] stored for n <= length_bound

  // values[seq] = number of elements; elements are 0..count-1
  std::map<std::vector<int>, int> values;
  // face_action[seq][i]: value table X(seq) -> X(seq with i dropped)
  std::map<std::vector<int>, std::vector<std::vector<int>>> face_action;
  // deg_action[seq][i]: X(seq) -> X(seq with i doubled)
  std::map<std::vector<int>, std::vector<std::vector<int>>> deg_action;

  int num_objects() const { return static_cast<int>(objects.size()); }

  int value(const std::vector<int>& seq) const {
    auto it = values.find(seq);
    if (it == values.end())
      throw PreconditionError("presegal: sequence outside the stored bound");
    return it->second;
  }

  static std::vector<int> drop(const std::vector<int>& seq, int i) {
    std::vector<int> out = seq;
    out.erase(out.begin() + i);
    return out;
  }
  static std::vector<int> dup(const std::vector<int>& seq, int i) {
    std::vector<int> out = seq;
    out.insert(out.begin() + i, seq[i]);
    return out;
  }

  // Action of an arbitrary monotone-compatible reindexing f: [m] -> [n]
  // with seq' = seq o f, as a value table X(seq) -> X(seq').
  std::vector<int> action(const std::vector<int>& seq,
                          const std::vector<int>& f) const {
    // Factor f as degeneracies after faces: first drop the indices not in
    // the image, then duplicate for repeats.
    std::vector<int> table(value(seq));
    for (std::size_t v = 0; v < table.size(); ++v)
      table[v] = static_cast<int>(v);
    std::vector<int> cur = seq;
    auto apply = [&](const std::vector<int>& step) {
      for (std::size_t v = 0; v < table.size(); ++v)
        table[v] = step[table[v]];
    };
    // image of f as a sorted set
    std::vector<bool> in_image(seq.size(), false);
    for (int x : f) in_image[x] = true;
    for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
      if (in_image[i]) continue;
      apply(face_action.at(cur)[i]);
      cur = drop(cur, i);
    }
    // repeats, left to right
    int pos = 0;
    for (std::size_t t = 1; t < f.size(); ++t) {
      ++pos;
      if (f[t] == f[t - 1]) {
        apply(deg_action.at(cur)[pos - 1]);
        cur = dup(cur, pos - 1);
      }
    }
    return table;
  }

  void validate() const {
    for (const auto& [seq, count] : values) {
      if (seq.size() == 1 && count != 1)
        throw ScxError("presegal: singleton condition fails");
      for (int o : seq)
        if (o < 0 || o >= num_objects())
          throw ScxError("presegal: bad object in sequence");
    }
    // cosimplicial identities on the stored actions
    for (const auto& [seq, count] : values) {
      int n = static_cast<int>(seq.size()) - 1;
      if (n == 0) continue;
      const auto& faces = face_action.at(seq);
      for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        for (int v = 0; v < count; ++v)
          if (faces[i][v] < 0 || faces[i][v] >= value(drop(seq, i)))
            throw ScxError("presegal: face action out of range");
      if (n < 2) continue;
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          // d_i d_j = d_{j-1} d_i on values (contravariant: tables compose
          // in the same order as the drops)
          auto lhs = compose_tables(faces[j], face_action.at(drop(seq, j))[i]);
          auto rhs = compose_tables(faces[i], face_action.at(drop(seq, i))[j - 1]);
          if (lhs != rhs) throw ScxError("presegal: functoriality fails");
        }
    }
  }

  static std::vector<int> compose_tables(const std::vector<int>& first,
                                         const std::vector<int>& then) {
    std::vector<int> out(first.size());
    for (std::size_t v = 0; v < first.size(); ++v) out[v] = then[first[v]];
    return out;
  }

  // The free preSegal category on one generator set A in degree n.
  static PreSegalSet free_on(int n, int a_size, int length_bound) {
    PreSegalSet P;
    P.length_bound = length_bound;
    for (int i = 0; i <= n; ++i) P.objects.push_back(std::to_string(i));
    std::function<void(std::vector<int>&)> fill = [&](std::vector<int>& seq) {
      if (!seq.empty()) {
        bool monotone = true, constant = true;
        for (std::size_t t = 1; t < seq.size(); ++t) {
          if (seq[t] < seq[t - 1]) monotone = false;
          if (seq[t] != seq[t - 1]) constant = false;
        }
        P.values[seq] = !monotone ? 0 : (constant ? 1 : a_size);
      }
      if (static_cast<int>(seq.size()) == length_bound + 1) return;
      for (int o = 0; o <= n; ++o) {
        seq.push_back(o);
        fill(seq);
        seq.pop_back();
      }
    };
    std::vector<int> seq;
    fill(seq);
    P.build_free_actions();
    return P;
  }

  void build_free_actions() {
    // For the free family the action tables are identities between equal
    // nonzero values, collapses to the singleton, or empty.
    for (const auto& [seq, count] : values) {
      int n = static_cast<int>(seq.size()) - 1;
      if (n >= 1) {
        std::vector<std::vector<int>> faces;
        for (int i = 0; i <= n; ++i) {
          int target = value(drop(seq, i));
          std::vector<int> t(count);
          for (int v = 0; v < count; ++v)
            t[v] = target == count ? v : 0;
          faces.push_back(std::move(t));
        }
        face_action[seq] = std::move(faces);
      }
      if (static_cast<int>(seq.size()) <= length_bound) {
        std::vector<std::vector<int>> degs;
        for (int i = 0; i <= n; ++i) {
          int target = value(dup(seq, i));
          std::vector<int> t(count);
          for (int v = 0; v < count; ++v)
            t[v] = target == count ? v : 0;
          degs.push_back(std::move(t));
        }
        deg_action[seq] = std::move(degs);
      }
    }
  }

  // The preSegal category of an ordinary finite category: values are the
  // sets of composable chains with the given endpoints coloring.
  static PreSegalSet from_category(const FinCategory& C, int length_bound) {
    PreSegalSet P;
    P.length_bound = length_bound;
    P.objects = C.objects;
    // X([s_0..s_n]) = Hom(s_0,s_1) x ... x Hom(s_{n-1},s_n); elements are
    // encoded as mixed-radix tuples.
    std::function<void(std::vector<int>&)> fill = [&](std::vector<int>& seq) {
      if (!seq.empty()) {
        int count = 1;
        for (std::size_t t = 1; t < seq.size(); ++t)
          count *= static_cast<int>(
              C.morphisms_from_to(seq[t - 1], seq[t]).size());
        P.values[seq] = count;
      }
      if (static_cast<int>(seq.size()) == length_bound + 1) return;
      for (int o = 0; o < C.num_objects(); ++o) {
        seq.push_back(o);
        fill(seq);
        seq.pop_back();
      }
    };
    std::vector<int> seq;
    fill(seq);

    auto decode = [&](const std::vector<int>& s, int v) {
      std::vector<int> tuple;
      for (std::size_t t = 1; t < s.size(); ++t) {
        auto homs = C.morphisms_from_to(s[t - 1], s[t]);
        tuple.push_back(homs[v % homs.size()]);
        v /= static_cast<int>(homs.size());
      }
      return tuple;
    };
    auto encode = [&](const std::vector<int>& s, const std::vector<int>& tuple) {
      int v = 0;
      for (std::size_t t = s.size() - 1; t >= 1; --t) {
        auto homs = C.morphisms_from_to(s[t - 1], s[t]);
        int idx = -1;
        for (std::size_t h = 0; h < homs.size(); ++h)
          if (homs[h] == tuple[t - 1]) idx = static_cast<int>(h);
        v = v * static_cast<int>(homs.size()) + idx;
      }
      return v;
    };
    for (const auto& [s, count] : P.values) {
      int n = static_cast<int>(s.size()) - 1;
      if (n >= 1) {
        std::vector<std::vector<int>> faces;
        for (int i = 0; i <= n; ++i) {
          std::vector<int> table(count);
          for (int v = 0; v < count; ++v) {
            auto tuple = decode(s, v);
            std::vector<int> out;
            if (i == 0) {
              out.assign(tuple.begin() + 1, tuple.end());
            } else if (i == n) {
              out.assign(tuple.begin(), tuple.end() - 1);
            } else {
              out = tuple;
              out[i - 1] = C.compose(tuple[i], tuple[i - 1]);
              out.erase(out.begin() + i);
            }
            table[v] = encode(drop(s, i), out);
          }
          faces.push_back(std::move(table));
        }
        P.face_action[s] = std::move(faces);
      }
      if (static_cast<int>(s.size()) <= length_bound) {
        std::vector<std::vector<int>> degs;
        for (int i = 0; i <= n; ++i) {
          std::vector<int> table(count);
          for (int v = 0; v < count; ++v) {
            auto tuple = decode(s, v);
            std::vector<int> out = tuple;
            out.insert(out.begin() + i, C.identity[s[i]]);
            table[v] = encode(dup(s, i), out);
          }
          degs.push_back(std::move(table));
        }
        P.deg_action[s] = std::move(degs);
      }
    }
    return P;
  }
};

// --- the free category on a preSegal datum ---

struct JObject {
  std::vector<int> seq;   // s_0 = x, ..., s_n = y
  std::vector<int> cuts;  // 0 = i_0 < ... < i_k = n

  friend auto operator<=>(const JObject&, const JObject&) = default;
};

namespace detail {

struct JColimit {
  std::vector<JObject> objects;  // sorted by (length, seq, cuts)
  std::vector<int> h_sizes;
  std::vector<int> offset;
  std::vector<int> uf;
  int classes = 0;

  int find(int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }
  std::optional<int> object_index(const JObject& o) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == o) return static_cast<int>(i);
    return std::nullopt;
  }
};

// Elements of H(sigma) are tuples of values over the cut segments, encoded
// mixed-radix with the first segment least significant.  The trivial object
// carries the degenerate one-point segment, so that its singleton value is
// identified with identity elements downstream.
inline std::vector<std::pair<int, int>> segment_windows(const JObject& o) {
  if (o.cuts.size() == 1) return {{0, 0}};
  std::vector<std::pair<int, int>> out;
  for (std::size_t c = 0; c + 1 < o.cuts.size(); ++c)
    out.push_back({o.cuts[c], o.cuts[c + 1]});
  return out;
}

inline std::vector<std::vector<int>> segments(const JObject& o) {
  std::vector<std::vector<int>> out;
  for (auto [lo, hi] : segment_windows(o)) {
    std::vector<int> seg(o.seq.begin() + lo, o.seq.begin() + hi + 1);
    out.push_back(std::move(seg));
  }
  return out;
}

inline int h_size(const PreSegalSet& P, const JObject& o) {
  int total = 1;
  for (const auto& seg : segments(o)) total *= P.value(seg);
  return total;
}

// All morphisms from o to o2: monotone f into o's index set matching the
// colors, preserving endpoints, carrying each o2 segment into a segment.
inline std::vector<std::vector<int>> j_morphisms(const JObject& o,
                                                 const JObject& o2) {
  int n = static_cast<int>(o.seq.size()) - 1;
  int n2 = static_cast<int>(o2.seq.size()) - 1;
  std::vector<std::vector<int>> out;
  std::vector<int> f;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(f.size()) == n2 + 1) {
      if (f.back() != n) return;
      auto windows = segment_windows(o);
      for (std::size_t j = 0; j + 1 < o2.cuts.size(); ++j) {
        int lo = f[o2.cuts[j]], hi = f[o2.cuts[j + 1]];
        bool found = false;
        for (auto [wl, wh] : windows)
          if (wl <= lo && hi <= wh) found = true;
        if (!found) return;
      }
      out.push_back(f);
      return;
    }
    if (f.empty()) {
      if (o2.seq[0] == o.seq[0]) {
        f.push_back(0);
        rec();
        f.pop_back();
      }
      return;
    }
    for (int v = f.back(); v <= n; ++v) {
      if (o.seq[v] != o2.seq[f.size()]) continue;
      f.push_back(v);
      rec();
      f.pop_back();
    }
  };
  rec();
  return out;
}

// H(f): H(o) -> H(o2), componentwise presheaf actions on the segments.
inline int apply_h(const PreSegalSet& P, const JObject& o, const JObject& o2,
                   const std::vector<int>& f, int elem) {
  auto segs = segments(o);
  auto segs2 = segments(o2);
  auto windows = segment_windows(o);
  std::vector<int> vals;
  for (const auto& seg : segs) {
    int sz = P.value(seg);
    vals.push_back(elem % sz);
    elem /= sz;
  }
  auto windows2 = segment_windows(o2);
  int out = 0;
  for (std::size_t j = segs2.size(); j-- > 0;) {
    int lo = f[windows2[j].first], hi = f[windows2[j].second];
    int t = -1;
    for (std::size_t u = 0; u < windows.size(); ++u)
      if (windows[u].first <= lo && hi <= windows[u].second) {
        t = static_cast<int>(u);
        break;
      }
    if (t < 0) throw ScxError("apply_h: segment not located");
    std::vector<int> local;
    for (int v = windows2[j].first; v <= windows2[j].second; ++v)
      local.push_back(f[v] - windows[t].first);
    auto table = P.action(segs[t], local);
    int sz2 = P.value(segs2[j]);
    out = out * sz2 + table[vals[t]];
  }
  return out;
}

inline JColimit j_colimit(const PreSegalSet& P, int x, int y,
                          int length_bound) {
  JColimit J;
  std::vector<int> seq{x};
  std::function<void()> grow = [&]() {
    int n = static_cast<int>(seq.size()) - 1;
    if (seq.back() == y) {
      if (n == 0) {
        J.objects.push_back(JObject{seq, {0}});
        J.h_sizes.push_back(1);
      } else {
        std::vector<int> cuts{0};
        std::function<void(int)> pick = [&](int at) {
          if (at == n) {
            cuts.push_back(n);
            JObject o{seq, cuts};
            int hs = h_size(P, o);
            if (hs > 0) {
              J.objects.push_back(o);
              J.h_sizes.push_back(hs);
            }
            cuts.pop_back();
            return;
          }
          pick(at + 1);
          cuts.push_back(at);
          pick(at + 1);
          cuts.pop_back();
        };
        pick(1);
      }
    }
    if (n == length_bound) return;
    for (int o = 0; o < P.num_objects(); ++o) {
      seq.push_back(o);
      grow();
      seq.pop_back();
    }
  };
  grow();

  // Shortest representatives first.
  std::vector<std::size_t> order(J.objects.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto key = [&](std::size_t i) {
      return std::make_tuple(J.objects[i].seq.size(), J.objects[i].seq,
                             J.objects[i].cuts);
    };
    return key(a) < key(b);
  });
  std::vector<JObject> objs;
  std::vector<int> sizes;
  for (std::size_t i : order) {
    objs.push_back(J.objects[i]);
    sizes.push_back(J.h_sizes[i]);
  }
  J.objects = std::move(objs);
  J.h_sizes = std::move(sizes);

  J.offset.resize(J.objects.size());
  int total = 0;
  for (std::size_t i = 0; i < J.objects.size(); ++i) {
    J.offset[i] = total;
    total += J.h_sizes[i];
  }
  J.uf.resize(total);
  for (int i = 0; i < total; ++i) J.uf[i] = i;

  for (std::size_t a = 0; a < J.objects.size(); ++a)
    for (std::size_t b = 0; b < J.objects.size(); ++b)
      for (const auto& f : j_morphisms(J.objects[a], J.objects[b]))
        for (int v = 0; v < J.h_sizes[a]; ++v)
          J.unite(J.offset[a] + v,
                  J.offset[b] + apply_h(P, J.objects[a], J.objects[b], f, v));
  std::set<int> roots;
  for (int i = 0; i < total; ++i) roots.insert(J.find(i));
  J.classes = static_cast<int>(roots.size());
  return J;
}

}  // namespace detail

struct FreeHomResult {
  int count = 0;
  bool stabilized = false;
};

inline FreeHomResult free_category_hom(const PreSegalSet& P, int x, int y,
                                       int length_bound) {
  if (length_bound > P.length_bound)
    throw PreconditionError("free_category_hom: bound exceeds stored data");
  FreeHomResult R;
  auto J = detail::j_colimit(P, x, y, length_bound);
  R.count = J.classes;
  if (length_bound >= 1) {
    auto J0 = detail::j_colimit(P, x, y, length_bound - 1);
    R.stabilized = J0.classes == J.classes;
  }
  return R;
}

struct FreeCategoryResult {
  FinCategory cat;
  bool stabilized = true;
  std::map<std::pair<int, int>, detail::JColimit> colimits;
  // (object index, element) -> class; classes numbered in discovery order
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>> class_of;
  std::map<std::pair<int, int>, std::vector<std::pair<JObject, int>>> reps;
  std::map<std::pair<int, int>, std::vector<int>> morph_of_class;

  int class_of_element(int x, int y, const JObject& o, int elem) const {
    const auto& J = colimits.at({x, y});
    auto oid = J.object_index(o);
    if (!oid) throw ScxError("free_category: unknown colimit object");
    return class_of.at({x, y}).at({*oid, elem});
  }
};

inline FreeCategoryResult free_category(const PreSegalSet& P,
                                        int length_bound) {
  FreeCategoryResult R;
  for (const auto& o : P.objects) R.cat.add_object(o);
  int n = P.num_objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto J = detail::j_colimit(P, x, y, length_bound);
      auto J0 = detail::j_colimit(P, x, y, length_bound - 1);
      if (J.classes != J0.classes) R.stabilized = false;
      std::map<int, int> root_to_cls;
      int cls = 0;
      for (std::size_t i = 0; i < J.objects.size(); ++i)
        for (int v = 0; v < J.h_sizes[i]; ++v) {
          int r = J.find(J.offset[i] + v);
          if (!root_to_cls.count(r)) {
            root_to_cls[r] = cls++;
            R.reps[{x, y}].push_back({J.objects[i], v});
          }
          R.class_of[{x, y}][{static_cast<int>(i), v}] = root_to_cls.at(r);
        }
      for (int c = 0; c < cls; ++c) {
        const auto& rep = R.reps[{x, y}][c];
        if (x == y && rep.first.seq.size() == 1) {
          R.morph_of_class[{x, y}].push_back(R.cat.identity[x]);
          continue;
        }
        R.morph_of_class[{x, y}].push_back(R.cat.add_morphism(
            "F" + P.objects[x] + ">" + P.objects[y] + "#" + std::to_string(c),
            x, y));
      }
      R.colimits[{x, y}] = std::move(J);
    }
  // Composition by concatenating representatives.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto& fs = R.reps[{x, y}];
        const auto& gs = R.reps[{y, z}];
        for (std::size_t fi = 0; fi < fs.size(); ++fi)
          for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            const auto& [fo, fv] = fs[fi];
            const auto& [go, gv] = gs[gi];
            JObject cat;
            cat.seq = fo.seq;
            cat.seq.insert(cat.seq.end(), go.seq.begin() + 1, go.seq.end());
            int shift = static_cast<int>(fo.seq.size()) - 1;
            cat.cuts = fo.cuts;
            for (std::size_t t = 1; t < go.cuts.size(); ++t)
              cat.cuts.push_back(go.cuts[t] + shift);
            if (static_cast<int>(cat.seq.size()) - 1 > length_bound)
              throw PreconditionError(
                  "free_category: concatenated representatives exceed the "
                  "bound; increase length_bound");
            int fsize = detail::h_size(P, fo);
            int elem = gv * std::max(fsize, 1) + fv;
            int c = R.class_of_element(x, z, cat, elem);
            R.cat.set_composite(R.morph_of_class[{y, z}][gi],
                                R.morph_of_class[{x, y}][fi],
                                R.morph_of_class[{x, z}][c]);
          }
      }
  R.cat.validate();
  return R;
}

// --- the levelwise unwrapping into a simplicial set ---

inline FiniteSimplicialSet unpre(const PreSegalSet& P, int n_max) {
  if (n_max > P.length_bound)
    throw PreconditionError("unpre: bound exceeds stored data");
  LevelComplex L;
  std::vector<std::vector<std::pair<std::vector<int>, int>>> cells(
      static_cast<std::size_t>(n_max) + 1);
  std::vector<std::map<std::pair<std::vector<int>, int>, int>> id(
      static_cast<std::size_t>(n_max) + 1);
  for (int lvl = 0; lvl <= n_max; ++lvl) {
    std::vector<int> seq;
    std::function<void()> walk = [&]() {
      if (static_cast<int>(seq.size()) == lvl + 1) {
        int count = P.value(seq);
        for (int v = 0; v < count; ++v) {
          id[lvl][{seq, v}] = static_cast<int>(cells[lvl].size());
          cells[lvl].push_back({seq, v});
        }
        return;
      }
      for (int o = 0; o < P.num_objects(); ++o) {
        seq.push_back(o);
        walk();
        seq.pop_back();
      }
    };
    walk();
    L.level_sizes.push_back(static_cast<int>(cells[lvl].size()));
  }
  L.face.resize(static_cast<std::size_t>(n_max) + 1);
  L.deg.resize(static_cast<std::size_t>(n_max) + 1);
  for (int lvl = 1; lvl <= n_max; ++lvl) {
    L.face[lvl].assign(static_cast<std::size_t>(lvl) + 1,
                       std::vector<int>(cells[lvl].size()));
    for (int i = 0; i <= lvl; ++i)
      for (std::size_t c = 0; c < cells[lvl].size(); ++c) {
        const auto& [seq, v] = cells[lvl][c];
        L.face[lvl][i][c] = id[lvl - 1].at(
            {PreSegalSet::drop(seq, i), P.face_action.at(seq)[i][v]});
      }
  }
  for (int lvl = 0; lvl < n_max; ++lvl) {
    L.deg[lvl].assign(static_cast<std::size_t>(lvl) + 1,
                      std::vector<int>(cells[lvl].size()));
    for (int i = 0; i <= lvl; ++i)
      for (std::size_t c = 0; c < cells[lvl].size(); ++c) {
        const auto& [seq, v] = cells[lvl][c];
        L.deg[lvl][i][c] = id[lvl + 1].at(
            {PreSegalSet::dup(seq, i), P.deg_action.at(seq)[i][v]});
      }
  }
  L.label = [&](int lvl, int c) {
    const auto& [seq, v] = cells[lvl][c];
    std::string s = "u";
    for (int o : seq) s += "." + P.objects[o];
    return s + "#" + std::to_string(v);
  };
  return L.normalize().sset;
}

// --- the Set-level Segal condition and the homotopy category ---

inline bool presegal_is_segal(const PreSegalSet& P) {
  for (const auto& [seq, count] : P.values) {
    int n = static_cast<int>(seq.size()) - 1;
    if (n < 2) continue;
    long long prod = 1;
    for (int t = 1; t <= n; ++t) prod *= P.value({seq[t - 1], seq[t]});
    if (prod != count) return false;
    std::set<std::vector<int>> seen;
    for (int v = 0; v < count; ++v) {
      std::vector<int> key;
      for (int t = 1; t <= n; ++t)
        key.push_back(P.action(seq, {t - 1, t})[v]);
      if (!seen.insert(key).second) return false;
    }
  }
  return true;
}

inline FinCategory homotopy_category_presegal(const PreSegalSet& P) {
  if (!presegal_is_segal(P))
    throw PreconditionError("homotopy_category: Segal condition fails");
  FinCategory C;
  for (const auto& o : P.objects) C.add_object(o);
  std::map<std::tuple<int, int, int>, int> morph;
  for (int x = 0; x < P.num_objects(); ++x)
    for (int y = 0; y < P.num_objects(); ++y)
      for (int v = 0; v < P.value({x, y}); ++v) {
        if (x == y && v == P.deg_action.at({x})[0][0]) {
          morph[{x, y, v}] = C.identity[x];
          continue;
        }
        morph[{x, y, v}] = C.add_morphism(
            "m" + P.objects[x] + ">" + P.objects[y] + "#" + std::to_string(v),
            x, y);
      }
  for (int x = 0; x < P.num_objects(); ++x)
    for (int y = 0; y < P.num_objects(); ++y)
      for (int z = 0; z < P.num_objects(); ++z) {
        std::vector<int> seq{x, y, z};
        int count = P.value(seq);
        auto left = P.action(seq, {0, 1});
        auto right = P.action(seq, {1, 2});
        auto outer = P.action(seq, {0, 2});
        for (int v = 0; v < count; ++v)
          C.set_composite(morph.at({y, z, right[v]}),
                          morph.at({x, y, left[v]}),
                          morph.at({x, z, outer[v]}));
      }
  C.validate();
  return C;
}

// --- the adjunction ---

// A preSegal map (S,X) -> G(C): object assignment plus value components
// into the chain products of C, natural in the sequence reindexings.
struct PreSegalToCat {
  std::vector<int> alpha;
  std::map<std::vector<int>, std::vector<int>> component;

  friend auto operator<=>(const PreSegalToCat&, const PreSegalToCat&) = default;
};

inline std::vector<PreSegalToCat> presegal_maps_to_category(
    const PreSegalSet& P, const FinCategory& C) {
  auto G = PreSegalSet::from_category(C, P.length_bound);
  std::vector<PreSegalToCat> out;
  std::vector<std::vector<int>> seqs;
  for (const auto& [seq, cnt] : P.values) seqs.push_back(seq);
  std::sort(seqs.begin(), seqs.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
            });

  std::vector<int> alpha(P.num_objects(), 0);
  std::function<void(int)> pick = [&](int at) {
    if (at < P.num_objects()) {
      for (int o = 0; o < C.num_objects(); ++o) {
        alpha[at] = o;
        pick(at + 1);
      }
      return;
    }
    PreSegalToCat cand;
    cand.alpha = alpha;
    std::function<void(std::size_t)> assign = [&](std::size_t si) {
      if (si == seqs.size()) {
        // degeneracy naturality across all stored sequences
        for (const auto& [seq, cnt] : P.values) {
          if (static_cast<int>(seq.size()) > P.length_bound) continue;
          std::vector<int> gseq;
          for (int o : seq) gseq.push_back(alpha[o]);
          int nn = static_cast<int>(seq.size()) - 1;
          for (int i = 0; i <= nn; ++i) {
            auto longer = PreSegalSet::dup(seq, i);
            auto it = cand.component.find(longer);
            if (it == cand.component.end()) continue;
            for (int v = 0; v < cnt; ++v) {
              int lhs = it->second[P.deg_action.at(seq)[i][v]];
              (void)lhs;
              if (it->second[P.deg_action.at(seq)[i][v]] !=
                  G.deg_action.at(gseq)[i][cand.component.at(seq)[v]])
                return;
            }
          }
        }
        out.push_back(cand);
        return;
      }
      const auto& seq = seqs[si];
      std::vector<int> gseq;
      for (int o : seq) gseq.push_back(alpha[o]);
      int src = P.values.at(seq);
      int tgt = G.value(gseq);
      if (src == 0) {
        cand.component[seq] = {};
        assign(si + 1);
        cand.component.erase(seq);
        return;
      }
      if (tgt == 0) return;  // no map out of a nonempty value
      std::vector<int> table(src, 0);
      std::function<void(int)> fill = [&](int v) {
        if (v == src) {
          cand.component[seq] = table;
          assign(si + 1);
          cand.component.erase(seq);
          return;
        }
        for (int w = 0; w < tgt; ++w) {
          bool ok = true;
          int nn = static_cast<int>(seq.size()) - 1;
          if (nn >= 1) {
            for (int i = 0; i <= nn && ok; ++i) {
              auto shorter = PreSegalSet::drop(seq, i);
              auto it = cand.component.find(shorter);
              if (it == cand.component.end()) continue;
              if (it->second[P.face_action.at(seq)[i][v]] !=
                  G.face_action.at(gseq)[i][w])
                ok = false;
            }
          }
          if (!ok) continue;
          table[v] = w;
          fill(v + 1);
        }
      };
      fill(0);
    };
    assign(0);
  };
  pick(0);
  return out;
}

// All functors A -> C on explicit composition tables.
inline std::vector<std::map<int, int>> functors(const FinCategory& A,
                                                const FinCategory& C) {
  std::vector<std::map<int, int>> out;
  std::vector<int> obj(A.num_objects(), 0);
  std::function<void(int)> pick = [&](int at) {
    if (at < A.num_objects()) {
      for (int o = 0; o < C.num_objects(); ++o) {
        obj[at] = o;
        pick(at + 1);
      }
      return;
    }
    std::map<int, int> fmap;
    std::function<void(int)> assign = [&](int m) {
      if (m == A.num_morphisms()) {
        for (int f = 0; f < A.num_morphisms(); ++f)
          for (int g = 0; g < A.num_morphisms(); ++g) {
            if (A.morphisms[f].tgt != A.morphisms[g].src) continue;
            if (fmap.at(A.compose(g, f)) !=
                C.compose(fmap.at(g), fmap.at(f)))
              return;
          }
        out.push_back(fmap);
        return;
      }
      if (A.is_identity(m)) {
        fmap[m] = C.identity[obj[A.morphisms[m].src]];
        assign(m + 1);
        fmap.erase(m);
        return;
      }
      for (int cm = 0; cm < C.num_morphisms(); ++cm) {
        if (C.morphisms[cm].src != obj[A.morphisms[m].src]) continue;
        if (C.morphisms[cm].tgt != obj[A.morphisms[m].tgt]) continue;
        fmap[m] = cm;
        assign(m + 1);
        fmap.erase(m);
      }
    };
    assign(0);
  };
  pick(0);
  return out;
}

struct AdjunctionReport {
  bool ok = false;
  int functor_count = 0;
  int presegal_map_count = 0;
  std::string detail;
};

// Elementwise bijection between functors F(S,X) -> C and preSegal maps
// (S,X) -> G(C): the unit sends a value to the class of its single-cut
// window, and composing a functor with the unit must hit every preSegal map
// exactly once.
inline AdjunctionReport adjunction_check(const PreSegalSet& P,
                                         const FinCategory& C,
                                         int length_bound) {
  auto F = free_category(P, length_bound);
  if (!F.stabilized)
    throw PreconditionError("adjunction_check: free category not stabilized");
  auto Fs = functors(F.cat, C);
  auto Ms = presegal_maps_to_category(P, C);
  AdjunctionReport R;
  R.functor_count = static_cast<int>(Fs.size());
  R.presegal_map_count = static_cast<int>(Ms.size());
  if (Fs.size() != Ms.size()) {
    R.detail = "side counts differ";
    return R;
  }

  std::set<PreSegalToCat> images;
  for (const auto& f : Fs) {
    PreSegalToCat img;
    for (int x = 0; x < P.num_objects(); ++x)
      img.alpha.push_back(C.morphisms[f.at(F.cat.identity[x])].src);
    for (const auto& [seq, cnt] : P.values) {
      std::vector<int> gseq;
      for (int o : seq) gseq.push_back(img.alpha[o]);
      int n = static_cast<int>(seq.size()) - 1;
      std::vector<int> table(cnt);
      for (int v = 0; v < cnt; ++v) {
        int enc = 0;
        for (int t = n; t >= 1; --t) {
          auto window_table = P.action(seq, {t - 1, t});
          JObject o{{seq[t - 1], seq[t]}, {0, 1}};
          int cls =
              F.class_of_element(seq[t - 1], seq[t], o, window_table[v]);
          int mid = F.morph_of_class.at({seq[t - 1], seq[t]})[cls];
          int cm = f.at(mid);
          auto homs = C.morphisms_from_to(gseq[t - 1], gseq[t]);
          int idx = -1;
          for (std::size_t h = 0; h < homs.size(); ++h)
            if (homs[h] == cm) idx = static_cast<int>(h);
          if (idx < 0) throw ScxError("adjunction: image outside hom");
          enc = enc * static_cast<int>(homs.size()) + idx;
        }
        table[v] = enc;
      }
      img.component[seq] = std::move(table);
    }
    images.insert(std::move(img));
  }
  if (images.size() != Fs.size()) {
    R.detail = "unit composition is not injective";
    return R;
  }
  for (const auto& m : Ms)
    if (!images.count(m)) {
      R.detail = "unit composition misses a preSegal map";
      return R;
    }
  R.ok = true;
  return R;
}

}  // namespace scx
