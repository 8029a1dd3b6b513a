#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permpoly {

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

enum class MatrixKind { laplacian, signless };

std::string to_string(MatrixKind kind);
MatrixKind parse_kind(std::string_view name);

/// Simple undirected graph on 1..64 vertices stored as one adjacency word per vertex.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  /// Builds from raw adjacency rows; rows are validated for symmetry and loops.
  static Graph from_rows(std::vector<VertexMask> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const;
  VertexMask all_vertices() const;
  std::vector<Edge> edges() const;
  const std::vector<VertexMask>& rows() const { return adj_; }

  Graph without_edge(int u, int v) const;
  /// Vertex v of the result is vertex perm[v] of this graph.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  std::vector<VertexMask> adj_;
};

Graph graph_new(int n, std::span<const Graph::Edge> edges);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Square matrix of machine integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim), 0) {}
  IntMatrix(int dim, std::vector<long> entries);

  int dim() const { return dim_; }
  long operator()(int i, int j) const { return entries_[index(i, j)]; }
  long& operator()(int i, int j) { return entries_[index(i, j)]; }
  const std::vector<long>& entries() const { return entries_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * dim_ + j); }
  int dim_ = 0;
  std::vector<long> entries_;
};

IntMatrix matrix_of(const Graph& g, MatrixKind kind);
/// Principal submatrix with the rows and columns in `drop` removed.
IntMatrix delete_indices(const IntMatrix& m, std::span<const int> drop);

std::vector<int> degree_sequence(const Graph& g);
long triangle_count(const Graph& g);
bool is_bipartite(const Graph& g);
std::vector<VertexMask> components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexMask> components(const Graph& g, VertexMask within);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

// graph6 (short form, n <= 64). Decoding rejects sparse6 and digraph6 input.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

inline constexpr int kCanonicalMaxVertices = 10;

/// graph6 text of the relabeling whose column-major upper-triangle bitstring
/// is lexicographically smallest. Equal keys iff isomorphic.
std::string canonical_key(const Graph& g);
/// Backtracking isomorphism test with degree pruning; no size cap.
bool isomorphic(const Graph& a, const Graph& b);

inline constexpr int kEnumerationMaxVertices = 7;

/// One graph per isomorphism class on n vertices, in canonical labeling,
/// ordered by edge-subset index. Throws CapExceeded for n > 7.
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_connected(int n);
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace permpoly
