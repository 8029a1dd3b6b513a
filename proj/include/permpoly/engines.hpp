#pragma once

#include <string_view>
#include <vector>

#include "permpoly/graph.hpp"
#include "permpoly/polyring.hpp"

namespace permpoly {

/// Size caps for the engines. These are configuration, not limits of the
/// algorithms.
struct EngineCaps {
  int naive = 9;
  int ryser = 24;
  /// `auto` uses permutation expansion up to this size.
  int auto_naive = 8;
  /// Components at or below this size are handed to a direct engine inside
  /// the reduction engine; 1 keeps the reduction purely structural.
  int reduce_leaf = 1;
  /// Leaf size used when `auto` falls back to the reduction engine.
  int auto_reduce_leaf = 12;
};

/// Parses "naive=9,ryser=24" style overrides on top of `base`.
EngineCaps parse_caps(std::string_view text, EngineCaps base = {});

enum class Method { automatic, naive, ryser, reduce };

Method parse_method(std::string_view name);
std::string to_string(Method m);

/// per(M) by permutation enumeration with zero pruning.
BigInt perm_naive(const IntMatrix& m, const EngineCaps& caps = {});

/// per(xI - M) by permutation enumeration.
IntPoly charperm_naive(const IntMatrix& m, const EngineCaps& caps = {});

/// per(xI - M) by Ryser inclusion-exclusion over column subsets in Gray-code
/// order. Row i contributes (x - s_i) when i is in the subset and -s_i
/// otherwise, s_i being the row sum of M over the subset.
IntPoly charperm_ryser(const IntMatrix& m, const EngineCaps& caps = {});

/// Simple cycles, each as a vertex sequence in cycle order starting at the
/// anchor. A cycle and its reversal are reported once.
struct CycleSet {
  std::vector<std::vector<int>> cycles;
};

CycleSet cycles_through(const Graph& g, int v);
CycleSet cycles_through(const Graph& g, Graph::Edge e);

/// Vertex expansion of psi at v, recursing on principal submatrices of the
/// original matrix (diagonals keep the degrees of g).
IntPoly charperm_reduce_vertex(const Graph& g, MatrixKind kind, int v, const EngineCaps& caps = {});

/// Edge expansion of psi at e.
IntPoly charperm_reduce_edge(const Graph& g, MatrixKind kind, Graph::Edge e,
                             const EngineCaps& caps = {});

/// psi of the principal submatrix of M(g) with `deleted` removed, by the
/// reduction engine.
IntPoly charperm_reduce_submatrix(const Graph& g, MatrixKind kind, VertexMask deleted,
                                  const EngineCaps& caps = {});

/// psi(M(g); x) for the Laplacian or signless Laplacian of g.
IntPoly psi(const Graph& g, MatrixKind kind, Method method = Method::automatic,
            const EngineCaps& caps = {});

}  // namespace permpoly
