#include "permpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "permpoly/error.hpp"

namespace permpoly {

namespace {

VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

VertexMask bit(int v) { return VertexMask{1} << v; }

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(n) + " outside [1, 64]");
  }
}

}  // namespace

std::string to_string(MatrixKind kind) {
  return kind == MatrixKind::laplacian ? "laplacian" : "signless";
}

MatrixKind parse_kind(std::string_view name) {
  if (name == "laplacian" || name == "L") return MatrixKind::laplacian;
  if (name == "signless" || name == "Q") return MatrixKind::signless;
  throw InvalidArgument("unknown matrix kind '" + std::string(name) + "'");
}

Graph::Graph(int n, std::span<const Edge> edges) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
  }
}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  for (int v = 0; v < n; ++v) {
    VertexMask r = rows[static_cast<std::size_t>(v)];
    if (r & ~low_mask(n)) throw InvalidArgument("adjacency row has bits beyond n");
    if (r & bit(v)) throw InvalidArgument("self-loop at vertex " + std::to_string(v));
    for (VertexMask rest = r; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if (!((rows[static_cast<std::size_t>(u)] >> v) & 1U)) {
        throw InvalidArgument("adjacency rows are not symmetric");
      }
    }
  }
  Graph g;
  g.adj_ = std::move(rows);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (VertexMask r : adj_) twice += std::popcount(r);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

VertexMask Graph::all_vertices() const { return low_mask(order()); }

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexMask rest = adj_[static_cast<std::size_t>(u)] & ~low_mask(u + 1); rest;
         rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order() || !adjacent(u, v)) {
    throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") is not in the graph");
  }
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  g.adj_[static_cast<std::size_t>(v)] &= ~bit(u);
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int p = perm[static_cast<std::size_t>(i)];
    if (p < 0 || p >= n || inverse[static_cast<std::size_t>(p)] != -1) {
      throw InvalidArgument("not a permutation");
    }
    inverse[static_cast<std::size_t>(p)] = i;
  }
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (VertexMask rest = adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
         rest; rest &= rest - 1) {
      g.adj_[static_cast<std::size_t>(i)] |= bit(inverse[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
  }
  return g;
}

Graph graph_new(int n, std::span<const Graph::Edge> edges) { return Graph(n, edges); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  check_order(n);
  std::vector<VertexMask> rows = a.rows();
  for (VertexMask r : b.rows()) rows.push_back(r << a.order());
  return Graph::from_rows(std::move(rows));
}

IntMatrix::IntMatrix(int dim, std::vector<long> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 0 || entries_.size() != static_cast<std::size_t>(dim * dim)) {
    throw InvalidArgument("matrix entry count does not match dimension");
  }
}

IntMatrix matrix_of(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  const long off = kind == MatrixKind::laplacian ? -1 : 1;
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = g.degree(i);
    for (VertexMask rest = g.neighbors(i); rest; rest &= rest - 1) {
      m(i, std::countr_zero(rest)) = off;
    }
  }
  return m;
}

IntMatrix delete_indices(const IntMatrix& m, std::span<const int> drop) {
  std::vector<bool> gone(static_cast<std::size_t>(m.dim()), false);
  for (int i : drop) {
    if (i < 0 || i >= m.dim()) throw InvalidArgument("index " + std::to_string(i) + " out of range");
    if (gone[static_cast<std::size_t>(i)]) throw InvalidArgument("repeated index " + std::to_string(i));
    gone[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> keep;
  for (int i = 0; i < m.dim(); ++i) {
    if (!gone[static_cast<std::size_t>(i)]) keep.push_back(i);
  }
  const int k = static_cast<int>(keep.size());
  IntMatrix out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out(i, j) = m(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

long triangle_count(const Graph& g) {
  long t = 0;
  for (int u = 0; u < g.order(); ++u) {
    VertexMask higher = g.neighbors(u) & ~low_mask(u + 1);
    for (VertexMask rest = higher; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      t += std::popcount(g.neighbors(v) & higher & ~low_mask(v + 1));
    }
  }
  return t;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (VertexMask rest = g.neighbors(v); rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        if (color[static_cast<std::size_t>(u)] == -1) {
          color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<VertexMask> components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask unseen = within;
  while (unseen) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask rest = frontier; rest; rest &= rest - 1) {
        next |= g.neighbors(std::countr_zero(rest));
      }
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

std::vector<VertexMask> components(const Graph& g) { return components(g, g.all_vertices()); }

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_forest(const Graph& g) {
  return g.size() == g.order() - static_cast<int>(components(g).size());
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr int kBias = 63;

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + kBias));
    out.push_back(static_cast<char>((n & 0x3F) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':') throw ParseError("graph6: sparse6 input is not supported");
  if (text.front() == '&') throw ParseError("graph6: digraph6 input is not supported");
  for (char ch : text) {
    if (ch < 63 || ch > 126) {
      throw ParseError("graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(ch))) +
                       " outside the printable range 63..126");
    }
  }

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    if (text[1] == '~') throw ParseError("graph6: malformed header (n > 258047 unsupported)");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
    if (n <= 62) throw ParseError("graph6: malformed header (long form for n <= 62)");
  }
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("graph6: vertex count " + std::to_string(n) + " outside [1, 64]");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos < body) throw ParseError("graph6: truncated bit body");
  if (text.size() - pos > body) throw ParseError("graph6: trailing bytes after bit body");

  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

// ------------------------------------------------------ canonical labels

namespace {

// Column j of a labeling: bit (j-1-i) set iff positions i < j are adjacent.
// Comparing columns 1..n-1 as integers in order is the lexicographic
// comparison of the column-major upper-triangle bitstring.
class MinLabeling {
 public:
  explicit MinLabeling(const Graph& g) : g_(g), n_(g.order()) {
    cur_.assign(static_cast<std::size_t>(n_), 0);
    best_.assign(static_cast<std::size_t>(n_), 0);
    pos_.assign(static_cast<std::size_t>(n_), 0);
    best_pos_.assign(static_cast<std::size_t>(n_), 0);
    std::iota(best_pos_.begin(), best_pos_.end(), 0);
    for (int j = 0; j < n_; ++j) best_[static_cast<std::size_t>(j)] = column(best_pos_, j, j);
  }

  std::vector<int> run() {
    search(0, 0);
    return best_pos_;
  }

  // True iff some labeling is strictly smaller than the identity labeling.
  bool identity_is_minimal() {
    found_smaller_ = false;
    probe(0, 0);
    return !found_smaller_;
  }

 private:
  std::uint64_t column(const std::vector<int>& pos, int j, int v) const {
    std::uint64_t col = 0;
    for (int i = 0; i < j; ++i) {
      col = (col << 1) | (g_.adjacent(pos[static_cast<std::size_t>(i)], v) ? 1U : 0U);
    }
    return col;
  }

  // -1 / 0 / +1 comparing cur_[0..k] against best_[0..k].
  int compare_prefix(int k) const {
    for (int j = 0; j <= k; ++j) {
      auto a = cur_[static_cast<std::size_t>(j)];
      auto b = best_[static_cast<std::size_t>(j)];
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  void search(int k, VertexMask used) {
    if (k == n_) {
      if (compare_prefix(n_ - 1) < 0) {
        best_ = cur_;
        best_pos_ = pos_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      cur_[static_cast<std::size_t>(k)] = column(pos_, k, v);
      if (compare_prefix(k) > 0) continue;
      pos_[static_cast<std::size_t>(k)] = v;
      search(k + 1, used | bit(v));
      if (found_smaller_) return;
    }
  }

  void probe(int k, VertexMask used) {
    if (k == n_) return;
    for (int v = 0; v < n_ && !found_smaller_; ++v) {
      if ((used >> v) & 1U) continue;
      auto col = column(pos_, k, v);
      auto target = best_[static_cast<std::size_t>(k)];
      if (col > target) continue;
      if (col < target) {
        found_smaller_ = true;
        return;
      }
      pos_[static_cast<std::size_t>(k)] = v;
      probe(k + 1, used | bit(v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> cur_, best_;
  std::vector<int> pos_, best_pos_;
  bool found_smaller_ = false;
};

}  // namespace

std::string canonical_key(const Graph& g) {
  if (g.order() > kCanonicalMaxVertices) {
    throw CapExceeded("canonical_key: exhaustive canonicalization is limited to " +
                      std::to_string(kCanonicalMaxVertices) + " vertices");
  }
  MinLabeling search(g);
  std::vector<int> perm = search.run();
  return graph6_encode(g.relabeled(perm));
}

namespace {

std::vector<std::uint64_t> vertex_signatures(const Graph& g) {
  std::vector<std::uint64_t> sig(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> nd;
    for (VertexMask rest = g.neighbors(v); rest; rest &= rest - 1) {
      nd.push_back(g.degree(std::countr_zero(rest)));
    }
    std::sort(nd.begin(), nd.end());
    std::uint64_t h = static_cast<std::uint64_t>(g.degree(v)) * 0x9E3779B97F4A7C15ULL;
    for (int d : nd) h = (h ^ static_cast<std::uint64_t>(d)) * 0x100000001B3ULL + 7;
    sig[static_cast<std::size_t>(v)] = h;
  }
  return sig;
}

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& order,
                    const std::vector<std::uint64_t>& sa, const std::vector<std::uint64_t>& sb,
                    std::vector<int>& map, VertexMask used, std::size_t k) {
  if (k == order.size()) return true;
  const int v = order[k];
  for (int w = 0; w < b.order(); ++w) {
    if ((used >> w) & 1U) continue;
    if (sa[static_cast<std::size_t>(v)] != sb[static_cast<std::size_t>(w)]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      int u = order[i];
      ok = a.adjacent(u, v) == b.adjacent(map[static_cast<std::size_t>(u)], w);
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(v)] = w;
    if (extend_mapping(a, b, order, sa, sb, map, used | bit(w), k + 1)) return true;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  auto sa = vertex_signatures(a);
  auto sb = vertex_signatures(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  // Breadth-first order keeps each new vertex adjacent to mapped ones.
  std::vector<int> order;
  VertexMask seen = 0;
  for (int s = 0; s < a.order(); ++s) {
    if ((seen >> s) & 1U) continue;
    std::vector<int> queue{s};
    seen |= bit(s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      order.push_back(queue[h]);
      for (VertexMask rest = a.neighbors(queue[h]) & ~seen; rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        seen |= bit(u);
        queue.push_back(u);
      }
    }
  }
  std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
  return extend_mapping(a, b, order, sa, sb, map, 0, 0);
}

// ------------------------------------------------------------ enumeration

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
  check_order(n);
  if (n > kEnumerationMaxVertices) {
    throw CapExceeded("built-in enumeration is limited to " +
                      std::to_string(kEnumerationMaxVertices) +
                      " vertices; supply a graph6 stream instead");
  }
  std::vector<Graph::Edge> slots;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  const std::uint64_t subsets = std::uint64_t{1} << slots.size();
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      auto [i, j] = slots[static_cast<std::size_t>(std::countr_zero(rest))];
      rows[static_cast<std::size_t>(i)] |= bit(j);
      rows[static_cast<std::size_t>(j)] |= bit(i);
    }
    Graph g = Graph::from_rows(rows);
    if (connected_only && !is_connected(g)) continue;
    if (!MinLabeling(g).identity_is_minimal()) continue;
    visit(g);
  }
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  std::vector<Graph> out;
  for_each_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_connected(int n) { return enumerate_graphs(n, true); }

}  // namespace permpoly
