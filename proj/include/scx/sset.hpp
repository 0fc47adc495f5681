#pragma once

// Finite simplicial sets with exact face/degeneracy algebra.
//
// Simplices are kept in Eilenberg-Zilber normal form: every simplex is a
// nondegenerate generator together with a strictly decreasing word of
// degeneracy indices.  Only nondegenerate generators are stored; all other
// simplices exist implicitly through the operator algebra.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace scx {

struct ScxError : std::runtime_error {
  explicit ScxError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations (bad indices, malformed input, unsupported bases).
struct PreconditionError : ScxError {
  explicit PreconditionError(const std::string& what) : ScxError(what) {}
};

// A simplex in normal form: generator of dimension `gdim` (index `gen` within
// that dimension) under the degeneracy word s_{w[0]} s_{w[1]} ... applied
// outermost-first, with w strictly decreasing.
struct SimplexRef {
  int gdim = 0;
  int gen = 0;
  std::vector<int> word;

  int dim() const { return gdim + static_cast<int>(word.size()); }
  bool degenerate() const { return !word.empty(); }

  friend bool operator==(const SimplexRef& a, const SimplexRef& b) {
    return a.gdim == b.gdim && a.gen == b.gen && a.word == b.word;
  }
  friend auto operator<=>(const SimplexRef& a, const SimplexRef& b) {
    if (auto c = a.gdim <=> b.gdim; c != 0) return c;
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.word <=> b.word;
  }
};

inline SimplexRef make_vertex(int gen) { return SimplexRef{0, gen, {}}; }

class FiniteSimplicialSet {
 public:
  FiniteSimplicialSet() { labels_.emplace_back(); }

  // --- construction ---

  int add_generator(int dim, std::string label,
                    std::vector<SimplexRef> faces = {}) {
    if (dim < 0) throw PreconditionError("negative dimension");
    while (static_cast<int>(labels_.size()) <= dim) {
      labels_.emplace_back();
      faces_.emplace_back();
    }
    if (dim > 0 && static_cast<int>(faces.size()) != dim + 1)
      throw PreconditionError("generator " + label + " needs " +
                              std::to_string(dim + 1) + " faces");
    for (const auto& f : faces)
      if (f.dim() != dim - 1)
        throw PreconditionError("face of " + label + " has wrong dimension");
    if (label_index(dim, label))
      throw PreconditionError("duplicate label " + label);
    labels_[dim].push_back(std::move(label));
    if (dim > 0) faces_[dim - 1].push_back(std::move(faces));
    return static_cast<int>(labels_[dim].size()) - 1;
  }

  // --- basic queries ---

  int top_dim() const { return static_cast<int>(labels_.size()) - 1; }
  int num_generators(int dim) const {
    if (dim < 0 || dim > top_dim()) return 0;
    return static_cast<int>(labels_[dim].size());
  }
  int total_generators() const {
    int t = 0;
    for (int d = 0; d <= top_dim(); ++d) t += num_generators(d);
    return t;
  }
  const std::string& label(int dim, int gen) const {
    return labels_.at(dim).at(gen);
  }
  std::string label(const SimplexRef& x) const {
    std::string s = label(x.gdim, x.gen);
    for (int i : x.word) s += ".s" + std::to_string(i);
    return s;
  }
  std::optional<int> label_index(int dim, const std::string& label) const {
    if (dim < 0 || dim > top_dim()) return std::nullopt;
    for (int g = 0; g < num_generators(dim); ++g)
      if (labels_[dim][g] == label) return g;
    return std::nullopt;
  }
  std::optional<SimplexRef> find_vertex(const std::string& label) const {
    auto g = label_index(0, label);
    if (!g) return std::nullopt;
    return make_vertex(*g);
  }

  const std::vector<SimplexRef>& generator_faces(int dim, int gen) const {
    return faces_.at(dim - 1).at(gen);
  }

  // --- operator algebra ---

  // d_k in normal form.
  SimplexRef face(const SimplexRef& x, int k) const {
    if (k < 0 || k > x.dim())
      throw PreconditionError("face index out of range");
    if (x.word.empty()) {
      if (x.gdim == 0) throw PreconditionError("vertex has no faces");
      return generator_faces(x.gdim, x.gen)[k];
    }
    int i = x.word.front();
    SimplexRef inner{x.gdim, x.gen,
                     std::vector<int>(x.word.begin() + 1, x.word.end())};
    if (k == i || k == i + 1) return inner;
    if (k < i) return degeneracy(face(inner, k), i - 1);
    return degeneracy(face(inner, k - 1), i);
  }

  // s_k in normal form; independent of this complex but kept here for
  // symmetry with face().
  SimplexRef degeneracy(const SimplexRef& x, int k) const {
    if (k < 0 || k > x.dim())
      throw PreconditionError("degeneracy index out of range");
    SimplexRef y = x;
    insert_degeneracy(y.word, k);
    return y;
  }

  static void insert_degeneracy(std::vector<int>& word, int k) {
    // s_k s_i = s_{i+1} s_k for k <= i: push k inward, bumping larger ones.
    std::size_t pos = 0;
    while (pos < word.size() && k <= word[pos]) {
      ++word[pos];
      ++pos;
    }
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos), k);
  }

  // Restriction of x along the vertex subset keep (strictly increasing
  // indices into [0, dim x]).  Deleting from the top keeps lower indices
  // stable, so face index j needs no adjustment.
  SimplexRef restrict(const SimplexRef& x, const std::vector<int>& keep) const {
    SimplexRef y = x;
    int n = x.dim();
    std::size_t kpos = keep.size();
    for (int j = n; j >= 0; --j) {
      if (kpos > 0 && keep[kpos - 1] == j)
        --kpos;
      else
        y = face(y, j);
    }
    return y;
  }

  SimplexRef vertex_of(const SimplexRef& x, int k) const {
    return restrict(x, {k});
  }
  std::vector<int> vertex_gens(const SimplexRef& x) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(x.dim()) + 1);
    for (int k = 0; k <= x.dim(); ++k) out.push_back(vertex_of(x, k).gen);
    return out;
  }

  // All n-simplices (including degenerate ones) in normal form.
  std::vector<SimplexRef> all_simplices(int n) const {
    std::vector<SimplexRef> out;
    for (int d = std::min(n, top_dim()); d >= 0; --d) {
      for (const auto& w : degeneracy_words(n - d, d)) {
        for (int g = 0; g < num_generators(d); ++g)
          out.push_back(SimplexRef{d, g, w});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Strictly decreasing words of length len that are valid on a
  // d-dimensional simplex.
  static std::vector<std::vector<int>> degeneracy_words(int len, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Innermost index first while building; reversed into the stored order.
    std::function<void(int, int)> rec = [&](int remaining, int dim_now) {
      if (remaining == 0) {
        std::vector<int> w(cur.rbegin(), cur.rend());
        out.push_back(std::move(w));
        return;
      }
      int lo = cur.empty() ? 0 : cur.back() + 1;
      for (int i = lo; i <= dim_now; ++i) {
        cur.push_back(i);
        rec(remaining - 1, dim_now + 1);
        cur.pop_back();
      }
    };
    rec(len, d);
    return out;
  }

  // --- validation ---

  // Checks every simplicial identity d_i d_j = d_{j-1} d_i (i < j) on every
  // generator, and that face entries have the right dimensions.
  void validate() const {
    for (int d = 1; d <= top_dim(); ++d) {
      for (int g = 0; g < num_generators(d); ++g) {
        const auto& fs = generator_faces(d, g);
        for (const auto& f : fs) {
          if (f.dim() != d - 1)
            throw ScxError("bad face dimension under " + label(d, g));
          if (f.gdim > top_dim() || f.gen >= num_generators(f.gdim))
            throw ScxError("dangling face under " + label(d, g));
        }
        if (d < 2) continue;
        SimplexRef x{d, g, {}};
        for (int j = 1; j <= d; ++j)
          for (int i = 0; i < j; ++i)
            if (!(face(face(x, j), i) == face(face(x, i), j - 1)))
              throw ScxError("simplicial identity fails on " + label(d, g) +
                             " at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      }
    }
  }

  std::vector<int> f_vector() const {
    std::vector<int> out;
    for (int d = 0; d <= top_dim(); ++d) out.push_back(num_generators(d));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

  // --- standard complexes ---

  static std::string subset_label(const std::vector<int>& verts) {
    std::string s;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(verts[i]);
    }
    return s;
  }

  // Full simplex on the vertex set [0, n].
  static FiniteSimplicialSet simplex(int n) {
    return from_subsets(n, [](const std::vector<int>&) { return true; });
  }

  static FiniteSimplicialSet boundary(int n) {
    if (n < 1) throw PreconditionError("boundary needs n >= 1");
    return from_subsets(n, [n](const std::vector<int>& s) {
      return static_cast<int>(s.size()) != n + 1;
    });
  }

  static FiniteSimplicialSet horn(int n, int i) {
    if (n < 1 || i < 0 || i > n)
      throw PreconditionError("horn index out of range");
    return from_subsets(n, [n, i](const std::vector<int>& s) {
      // Delta^S lies in the horn iff S misses some j != i.
      if (static_cast<int>(s.size()) == n + 1) return false;
      if (static_cast<int>(s.size()) == n) {
        int missing = (n * (n + 1)) / 2;
        for (int v : s) missing -= v;
        return missing != i;
      }
      return true;
    });
  }

  // Subcomplex of Delta^n spanned by the subsets accepted by keep.
  template <typename Pred>
  static FiniteSimplicialSet from_subsets(int n, Pred keep) {
    FiniteSimplicialSet X;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> level, next;
    for (int v = 0; v <= n; ++v) {
      std::vector<int> s{v};
      if (!keep(s)) continue;
      index[s] = X.add_generator(0, subset_label(s));
      level.push_back(s);
    }
    for (int d = 1; d <= n; ++d) {
      next.clear();
      std::vector<int> s;
      std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(s.size()) == d + 1) {
          if (!keep(s)) return;
          std::vector<SimplexRef> fs;
          for (int k = 0; k <= d; ++k) {
            std::vector<int> t = s;
            t.erase(t.begin() + k);
            auto it = index.find(t);
            if (it == index.end()) return;  // face missing: not a subcomplex
            fs.push_back(SimplexRef{d - 1, it->second, {}});
          }
          index[s] = X.add_generator(d, subset_label(s), std::move(fs));
          next.push_back(s);
          return;
        }
        for (int v = lo; v <= n; ++v) {
          s.push_back(v);
          rec(v + 1);
          s.pop_back();
        }
      };
      rec(0);
      level = next;
    }
    return X;
  }

  // Simplex lookup by vertex chain, for complexes whose nondegenerate
  // simplices are determined by their vertices (products of standard
  // simplices, nerves of posets).  Returns the normal form of the unique
  // simplex with the given (weakly monotone) vertex sequence, or nullopt.
  std::optional<SimplexRef> by_vertices(const std::vector<int>& verts) const;

  void rename_generators(
      const std::function<std::string(int, const std::string&)>& fn) {
    for (int d = 0; d <= top_dim(); ++d)
      for (auto& l : labels_[d]) l = fn(d, l);
  }

 private:
  // labels_[d] lists generators of dimension d; faces_[d-1][g] stores the
  // d+1 faces of generator g of dimension d.
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<SimplexRef>>> faces_;
};

inline std::optional<SimplexRef> FiniteSimplicialSet::by_vertices(
    const std::vector<int>& verts) const {
  // Strip repeats to find the nondegenerate core.
  std::vector<int> core;
  std::vector<int> repeats;  // ascending positions i with verts[i-1]==verts[i]
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!core.empty() && core.back() == verts[i])
      repeats.push_back(static_cast<int>(i));
    else
      core.push_back(verts[i]);
  }
  int d = static_cast<int>(core.size()) - 1;
  for (int g = 0; g < num_generators(d); ++g) {
    SimplexRef x{d, g, {}};
    if (vertex_gens(x) == core) {
      // Reinsert repeats left to right; earlier insertions keep the prefix
      // aligned with the target sequence.
      for (int i : repeats) x = degeneracy(x, i - 1);
      return x;
    }
  }
  return std::nullopt;
}

// Isomorphism search by dimension-ordered backtracking on generators.
inline bool isomorphic(const FiniteSimplicialSet& X,
                       const FiniteSimplicialSet& Y) {
  if (X.f_vector() != Y.f_vector()) return false;
  int D = X.top_dim();
  // assignment[d][g] = generator of Y, or -1.
  std::vector<std::vector<int>> assign(static_cast<std::size_t>(D) + 1);
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(D) + 1);
  for (int d = 0; d <= D; ++d) {
    assign[d].assign(X.num_generators(d), -1);
    used[d].assign(Y.num_generators(d), false);
  }
  auto map_ref = [&](const SimplexRef& x) -> std::optional<SimplexRef> {
    int g = assign[x.gdim][x.gen];
    if (g < 0) return std::nullopt;
    return SimplexRef{x.gdim, g, x.word};
  };
  std::function<bool(int, int)> rec = [&](int d, int g) -> bool {
    if (d > D) return true;
    if (g == X.num_generators(d)) return rec(d + 1, 0);
    for (int h = 0; h < Y.num_generators(d); ++h) {
      if (used[d][h]) continue;
      bool ok = true;
      if (d > 0) {
        for (int k = 0; k <= d && ok; ++k) {
          auto fx = map_ref(X.face(SimplexRef{d, g, {}}, k));
          if (!fx || !(*fx == Y.face(SimplexRef{d, h, {}}, k))) ok = false;
        }
      }
      if (!ok) continue;
      assign[d][g] = h;
      used[d][h] = true;
      if (rec(d, g + 1)) return true;
      assign[d][g] = -1;
      used[d][h] = false;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace scx
