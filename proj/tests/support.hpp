#pragma once

// Independent oracles shared by the unit tests. Nothing here calls the
// library's engines or matrix builders.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "permpoly/graph.hpp"
#include "permpoly/polyring.hpp"

namespace oracle {

using permpoly::BigInt;
using permpoly::Graph;
using permpoly::IntPoly;
using permpoly::MatrixKind;

using Dense = std::vector<std::vector<BigInt>>;

/// Row-by-row Laplace expansion of the permanent, skipping zero entries.
inline BigInt permanent(const Dense& m) {
  const std::size_t n = m.size();
  std::vector<char> used(n, 0);
  auto expand = [&](auto& self, std::size_t row) -> BigInt {
    if (row == n) return 1;
    BigInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || m[row][c] == 0) continue;
      used[c] = 1;
      total += m[row][c] * self(self, row + 1);
      used[c] = 0;
    }
    return total;
  };
  return expand(expand, 0);
}

/// t*I - M for the Laplacian or signless Laplacian, built from the edge list.
inline Dense shifted_matrix(const Graph& g, MatrixKind kind, long t) {
  const auto n = static_cast<std::size_t>(g.order());
  Dense m(n, std::vector<BigInt>(n, 0));
  const long off = kind == MatrixKind::laplacian ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i) m[i][i] = t;
  for (auto [u, v] : g.edges()) {
    const auto a = static_cast<std::size_t>(u);
    const auto b = static_cast<std::size_t>(v);
    m[a][a] -= 1;
    m[b][b] -= 1;
    m[a][b] += off;
    m[b][a] += off;
  }
  return m;
}

/// psi recovered by Lagrange interpolation through x = 0..n.
inline IntPoly charperm(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  std::vector<mpq_class> result(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    const mpq_class yi(permanent(shifted_matrix(g, kind, i)));
    // Basis polynomial prod_{j != i} (x - j) / (i - j), ascending.
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * j;
      }
      basis = std::move(next);
      denom *= i - j;
    }
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += yi * basis[k] / denom;
  }
  std::vector<BigInt> coeffs;
  for (auto& c : result) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("oracle interpolation is not integral");
    coeffs.push_back(c.get_num());
  }
  return IntPoly(std::move(coeffs));
}

/// psi(L(P_n)) by the tridiagonal recurrence p_k = (x - d_k) p_{k-1} + p_{k-2}.
inline IntPoly path_laplacian(int n) {
  if (n == 1) return IntPoly{0, 1};
  auto degree = [n](int k) { return (k == 1 || k == n) ? 1 : 2; };
  IntPoly prev2{1};
  IntPoly prev1 = IntPoly{-degree(1), 1};
  for (int k = 2; k <= n; ++k) {
    IntPoly cur = IntPoly{-degree(k), 1} * prev1 + prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double density, bool connected) {
  std::bernoulli_distribution coin(density);
  for (;;) {
    std::vector<Graph::Edge> edges;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (coin(rng)) edges.emplace_back(i, j);
      }
    }
    Graph g = permpoly::graph_new(n, edges);
    if (!connected || permpoly::is_connected(g)) return g;
  }
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline IntPoly random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& v : c) v = coef(rng);
  return IntPoly(std::move(c));
}

}  // namespace oracle
