#pragma once

// Integral simplicial homology of finite simplicial sets via Smith normal
// form on the normalized chain complex.  Arbitrary-precision integers guard
// against entry blowup during elimination.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "scx/category.hpp"
#include "scx/sset.hpp"

namespace scx {

using Int = mpz_class;
using IntMatrix = std::vector<std::vector<Int>>;  // row-major

// Boundary matrices of the normalized chain complex: columns indexed by
// nondegenerate d-simplices, rows by nondegenerate (d-1)-simplices; faces
// that normalize to degenerate simplices contribute zero.
inline std::vector<IntMatrix> chain_complex(const FiniteSimplicialSet& X,
                                            int bound = -1) {
  int D = bound < 0 ? X.top_dim() : std::min(bound, X.top_dim());
  std::vector<IntMatrix> out;
  for (int d = 1; d <= D; ++d) {
    IntMatrix M(X.num_generators(d - 1),
                std::vector<Int>(X.num_generators(d), 0));
    for (int g = 0; g < X.num_generators(d); ++g) {
      SimplexRef x{d, g, {}};
      for (int k = 0; k <= d; ++k) {
        SimplexRef f = X.face(x, k);
        if (f.degenerate()) continue;
        M[f.gen][g] += (k % 2 == 0) ? 1 : -1;
      }
    }
    out.push_back(std::move(M));
  }
  // del o del = 0
  for (std::size_t d = 1; d < out.size(); ++d) {
    const IntMatrix& A = out[d - 1];
    const IntMatrix& B = out[d];
    if (B.empty()) continue;
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = 0; j < B[0].size(); ++j) {
        Int s = 0;
        for (std::size_t k = 0; k < B.size(); ++k) s += A[i][k] * B[k][j];
        if (s != 0) throw ScxError("chain_complex: boundary squared nonzero");
      }
  }
  return out;
}

struct SmithResult {
  int rank = 0;
  std::vector<Int> invariant_factors;  // nonzero diagonal, divisibility chain
};

inline SmithResult smith_normal_form(IntMatrix M) {
  SmithResult R;
  std::size_t rows = M.size();
  std::size_t cols = rows ? M[0].size() : 0;
  std::size_t t = 0;
  while (true) {
    // Find a nonzero pivot of minimal absolute value in the remaining block.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (M[i][j] != 0 &&
            (!piv || cmp(abs(M[i][j]), abs(M[piv->first][piv->second])) < 0))
          piv = {{i, j}};
    if (!piv) break;
    std::swap(M[t], M[piv->first]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][t], M[i][piv->second]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (M[i][t] == 0) continue;
        Int q = M[i][t] / M[t][t];
        for (std::size_t j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
        if (M[i][t] != 0) {
          std::swap(M[t], M[i]);  // remainder is smaller; repeat
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (M[t][j] == 0) continue;
        Int q = M[t][j] / M[t][t];
        for (std::size_t i = t; i < rows; ++i) M[i][j] -= q * M[i][t];
        if (M[t][j] != 0) {
          for (std::size_t i = t; i < rows; ++i) std::swap(M[i][t], M[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (M[i][j] % M[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) M[t][jj] += M[i][jj];
            clean = false;
          }
    }
    if (M[t][t] < 0) M[t][t] = -M[t][t];
    ++t;
    if (t >= rows || t >= cols) break;
  }
  R.rank = static_cast<int>(t);
  for (std::size_t i = 0; i < t; ++i) R.invariant_factors.push_back(M[i][i]);
  return R;
}

struct HomologyCertificate {
  std::vector<int> betti;                       // degrees 0..bound
  std::vector<std::vector<Int>> torsion;        // coefficients >= 2 per degree
  bool connected = false;
  std::optional<std::string> witness;           // initial/final object label
  bool empty_complex = false;

  bool acyclic() const {
    if (empty_complex) return false;
    if (betti.empty() || betti[0] != 1) return false;
    for (std::size_t d = 1; d < betti.size(); ++d)
      if (betti[d] != 0) return false;
    for (const auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }
  bool contractible_grade() const { return acyclic() && connected; }
};

inline HomologyCertificate homology(const FiniteSimplicialSet& X, int bound) {
  if (bound < 0) throw PreconditionError("homology: bound >= 0");
  HomologyCertificate C;
  if (X.num_generators(0) == 0) {
    C.empty_complex = true;
    return C;
  }
  auto matrices = chain_complex(X, bound + 1);
  auto snf_of = [&](int d) -> SmithResult {
    if (d < 1 || d > static_cast<int>(matrices.size())) return {};
    return smith_normal_form(matrices[d - 1]);
  };
  std::vector<SmithResult> snf(static_cast<std::size_t>(bound) + 2);
  for (int d = 1; d <= bound + 1; ++d) snf[d] = snf_of(d);
  for (int d = 0; d <= bound; ++d) {
    int n = X.num_generators(d);
    int r = d >= 1 ? snf[d].rank : 0;
    int r_up = snf[d + 1].rank;
    C.betti.push_back(n - r - r_up);
    std::vector<Int> tor;
    for (const auto& f : snf[d + 1].invariant_factors)
      if (f > 1) tor.push_back(f);
    C.torsion.push_back(tor);
  }
  C.connected = !C.betti.empty() && C.betti[0] == 1;
  return C;
}

inline long long euler_characteristic(const FiniteSimplicialSet& X) {
  long long chi = 0;
  for (int d = 0; d <= X.top_dim(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(X.num_generators(d));
  return chi;
}

inline std::optional<int> initial_object(const FinCategory& C) {
  for (int x = 0; x < C.num_objects(); ++x) {
    bool ok = true;
    for (int y = 0; y < C.num_objects() && ok; ++y)
      if (C.morphisms_from_to(x, y).size() != 1) ok = false;
    if (ok) return x;
  }
  return std::nullopt;
}

inline std::optional<int> final_object(const FinCategory& C) {
  for (int y = 0; y < C.num_objects(); ++y) {
    bool ok = true;
    for (int x = 0; x < C.num_objects() && ok; ++x)
      if (C.morphisms_from_to(x, y).size() != 1) ok = false;
    if (ok) return y;
  }
  return std::nullopt;
}

// Witness-backed certificate when an initial or final object exists;
// otherwise homology-acyclicity plus connectivity.
inline HomologyCertificate contractibility_certificate(const FinCategory& C,
                                                       int bound) {
  auto N = nerve(C, bound + 1);
  HomologyCertificate cert = homology(N, bound);
  if (auto w = initial_object(C))
    cert.witness = C.objects[*w];
  else if (auto w2 = final_object(C))
    cert.witness = C.objects[*w2];
  return cert;
}

inline HomologyCertificate contractibility_certificate(
    const FiniteSimplicialSet& X, int bound) {
  return homology(X, bound);
}

}  // namespace scx
