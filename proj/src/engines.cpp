#include "permpoly/engines.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <charconv>
#include <map>
#include <unordered_map>

#include "permpoly/error.hpp"

namespace permpoly {

EngineCaps parse_caps(std::string_view text, EngineCaps base) {
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("caps: expected key=value, got '" + std::string(item) + "'");
    std::string_view key = item.substr(0, eq);
    std::string_view val = item.substr(eq + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
    if (ec != std::errc{} || ptr != val.data() + val.size() || value < 0) {
      throw InvalidArgument("caps: bad value '" + std::string(val) + "'");
    }
    if (key == "naive") base.naive = value;
    else if (key == "ryser") base.ryser = value;
    else if (key == "auto_naive") base.auto_naive = value;
    else if (key == "reduce_leaf") base.reduce_leaf = value;
    else if (key == "auto_reduce_leaf") base.auto_reduce_leaf = value;
    else throw InvalidArgument("caps: unknown key '" + std::string(key) + "'");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return base;
}

Method parse_method(std::string_view name) {
  if (name == "auto") return Method::automatic;
  if (name == "naive") return Method::naive;
  if (name == "ryser") return Method::ryser;
  if (name == "reduce") return Method::reduce;
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::naive: return "naive";
    case Method::ryser: return "ryser";
    case Method::reduce: return "reduce";
  }
  return "?";
}

// ------------------------------------------------------------------ naive

namespace {

void check_cap(int dim, int cap, const char* engine) {
  if (dim > cap) {
    throw CapExceeded(std::string(engine) + ": dimension " + std::to_string(dim) +
                      " exceeds cap " + std::to_string(cap));
  }
}

void expand_scalar(const IntMatrix& m, int row, VertexMask used, const BigInt& prefix, BigInt& sum) {
  if (row == m.dim()) {
    sum += prefix;
    return;
  }
  for (int j = 0; j < m.dim(); ++j) {
    if ((used >> j) & 1U) continue;
    long e = m(row, j);
    if (e == 0) continue;
    expand_scalar(m, row + 1, used | (VertexMask{1} << j), prefix * e, sum);
  }
}

// Entries of xI - M: x - m_ii on the diagonal, -m_ij elsewhere.
void expand_poly(const IntMatrix& m, int row, VertexMask used, std::vector<IntPoly>& prefix,
                 IntPoly& sum) {
  if (row == m.dim()) {
    sum += prefix[static_cast<std::size_t>(row)];
    return;
  }
  const IntPoly& here = prefix[static_cast<std::size_t>(row)];
  for (int j = 0; j < m.dim(); ++j) {
    if ((used >> j) & 1U) continue;
    if (j == row) {
      prefix[static_cast<std::size_t>(row) + 1] = here * IntPoly::linear(m(row, row));
    } else {
      long e = m(row, j);
      if (e == 0) continue;
      prefix[static_cast<std::size_t>(row) + 1] = here * BigInt(-e);
    }
    expand_poly(m, row + 1, used | (VertexMask{1} << j), prefix, sum);
  }
}

}  // namespace

BigInt perm_naive(const IntMatrix& m, const EngineCaps& caps) {
  check_cap(m.dim(), caps.naive, "perm_naive");
  BigInt sum = 0;
  expand_scalar(m, 0, 0, BigInt(1), sum);
  return sum;
}

IntPoly charperm_naive(const IntMatrix& m, const EngineCaps& caps) {
  check_cap(m.dim(), caps.naive, "charperm_naive");
  std::vector<IntPoly> prefix(static_cast<std::size_t>(m.dim()) + 1);
  prefix[0] = IntPoly::one();
  IntPoly sum;
  expand_poly(m, 0, 0, prefix, sum);
  return sum;
}

// ------------------------------------------------------------------ ryser

namespace {

__extension__ using i128 = __int128;

BigInt to_big(i128 v) {
  const bool neg = v < 0;
  // Magnitude as unsigned avoids overflow at the minimum value.
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
  BigInt out = (hi << 64) + lo;
  return neg ? BigInt(-out) : out;
}

class RyserAccumulator {
 public:
  explicit RyserAccumulator(int n)
      : fast_(static_cast<std::size_t>(n) + 1, 0), slow_(static_cast<std::size_t>(n) + 1, 0) {}

  void add(std::size_t k, i128 term) {
    i128 out;
    if (__builtin_add_overflow(fast_[k], term, &out)) {
      slow_[k] += to_big(fast_[k]);
      fast_[k] = term;
    } else {
      fast_[k] = out;
    }
  }

  void add(std::size_t k, const BigInt& term) { slow_[k] += term; }

  IntPoly result() const {
    std::vector<BigInt> c(slow_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = slow_[k] + to_big(fast_[k]);
    return IntPoly(std::move(c));
  }

 private:
  std::vector<i128> fast_;
  std::vector<BigInt> slow_;
};

}  // namespace

IntPoly charperm_ryser(const IntMatrix& m, const EngineCaps& caps) {
  const int n = m.dim();
  check_cap(n, caps.ryser, "charperm_ryser");
  if (n > 62) throw CapExceeded("charperm_ryser: dimension above 62");
  if (n == 0) return IntPoly::one();

  std::vector<long> rowsum(static_cast<std::size_t>(n), 0);
  std::vector<i128> poly(static_cast<std::size_t>(n) + 1);
  RyserAccumulator acc(n);
  VertexMask subset = 0;
  const std::uint64_t total = std::uint64_t{1} << n;

  for (std::uint64_t step = 1; step < total; ++step) {
    const int j = std::countr_zero(step);
    const VertexMask flip = VertexMask{1} << j;
    subset ^= flip;
    const long dir = (subset & flip) ? 1 : -1;
    for (int i = 0; i < n; ++i) rowsum[static_cast<std::size_t>(i)] += dir * m(i, j);

    // Rows outside the subset contribute the constant -s_i.
    i128 scalar = 1;
    bool zero = false;
    bool overflow = false;
    for (int i = 0; i < n && !zero; ++i) {
      if ((subset >> i) & 1U) continue;
      long s = rowsum[static_cast<std::size_t>(i)];
      if (s == 0) {
        zero = true;
      } else if (!overflow) {
        overflow = __builtin_mul_overflow(scalar, static_cast<i128>(-s), &scalar);
      }
    }
    if (zero) continue;

    // (-1)^n from the outer factor and (-1)^{|S|} from the subset.
    const bool negate = ((n + std::popcount(subset)) & 1) != 0;

    int deg = 0;
    poly[0] = 1;
    for (int i = 0; i < n && !overflow; ++i) {
      if (!((subset >> i) & 1U)) continue;
      const i128 s = rowsum[static_cast<std::size_t>(i)];
      poly[static_cast<std::size_t>(deg) + 1] = poly[static_cast<std::size_t>(deg)];
      for (int k = deg; k >= 1 && !overflow; --k) {
        i128 t;
        overflow |= __builtin_mul_overflow(s, poly[static_cast<std::size_t>(k)], &t);
        overflow |= __builtin_sub_overflow(poly[static_cast<std::size_t>(k) - 1], t,
                                           &poly[static_cast<std::size_t>(k)]);
      }
      i128 t0;
      overflow |= __builtin_mul_overflow(-s, poly[0], &t0);
      poly[0] = t0;
      ++deg;
    }

    if (!overflow) {
      for (int k = 0; k <= deg && !overflow; ++k) {
        overflow = __builtin_mul_overflow(scalar, poly[static_cast<std::size_t>(k)],
                                          &poly[static_cast<std::size_t>(k)]);
      }
    }
    if (!overflow) {
      for (int k = 0; k <= deg; ++k) {
        const i128 term = poly[static_cast<std::size_t>(k)];
        acc.add(static_cast<std::size_t>(k), negate ? -term : term);
      }
      continue;
    }

    // Exact slow path for this subset.
    BigInt big_scalar = 1;
    IntPoly big_poly = IntPoly::one();
    for (int i = 0; i < n; ++i) {
      const long s = rowsum[static_cast<std::size_t>(i)];
      if ((subset >> i) & 1U) {
        big_poly *= IntPoly::linear(s);
      } else {
        big_scalar *= -s;
      }
    }
    if (negate) big_scalar = -big_scalar;
    big_poly *= big_scalar;
    for (int k = 0; k <= big_poly.degree(); ++k) acc.add(static_cast<std::size_t>(k), big_poly.coeff(k));
  }
  return acc.result();
}

// ----------------------------------------------------------------- cycles

namespace {

// Simple paths from `from` to `to` inside `within`, not using the direct
// from-to edge, with at least `min_inner` interior vertices.
void paths_between(const Graph& g, VertexMask within, int from, int to, int min_inner,
                   const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> path{from};
  std::function<void(int, VertexMask)> dfs = [&](int v, VertexMask used) {
    for (VertexMask rest = g.neighbors(v) & within & ~used; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (u == to) {
        if (static_cast<int>(path.size()) - 1 >= min_inner) {
          path.push_back(u);
          emit(path);
          path.pop_back();
        }
        continue;
      }
      path.push_back(u);
      dfs(u, used | (VertexMask{1} << u));
      path.pop_back();
    }
  };
  dfs(from, (VertexMask{1} << from));
}

// Cycles through v inside `within`: each as a vertex mask with multiplicity.
std::map<VertexMask, long> cycle_masks_through(const Graph& g, VertexMask within, int v) {
  std::map<VertexMask, long> out;
  std::vector<int> path{v};
  std::function<void(int, VertexMask, VertexMask)> dfs = [&](int w, VertexMask used, VertexMask mask) {
    for (VertexMask rest = g.neighbors(w) & within; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (u == v) {
        // Close only paths of >= 3 vertices, once per orientation pair.
        if (path.size() >= 3 && path[1] < path.back()) ++out[mask];
        continue;
      }
      if ((used >> u) & 1U) continue;
      path.push_back(u);
      dfs(u, used | (VertexMask{1} << u), mask | (VertexMask{1} << u));
      path.pop_back();
    }
  };
  dfs(v, VertexMask{1} << v, VertexMask{1} << v);
  return out;
}

}  // namespace

CycleSet cycles_through(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw InvalidArgument("cycles_through: vertex out of range");
  CycleSet out;
  std::vector<int> path{v};
  std::function<void(int, VertexMask)> dfs = [&](int w, VertexMask used) {
    for (VertexMask rest = g.neighbors(w); rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (u == v) {
        if (path.size() >= 3 && path[1] < path.back()) out.cycles.push_back(path);
        continue;
      }
      if ((used >> u) & 1U) continue;
      path.push_back(u);
      dfs(u, used | (VertexMask{1} << u));
      path.pop_back();
    }
  };
  dfs(v, VertexMask{1} << v);
  return out;
}

CycleSet cycles_through(const Graph& g, Graph::Edge e) {
  auto [u, v] = e;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw InvalidArgument("cycles_through: edge not in graph");
  }
  CycleSet out;
  paths_between(g, g.all_vertices(), u, v, 1, [&](const std::vector<int>& p) {
    out.cycles.push_back(p);
  });
  return out;
}

// ------------------------------------------------------------- reduction

namespace {

class ReductionEngine {
 public:
  ReductionEngine(const Graph& g, std::vector<long> diagonal, MatrixKind kind, int leaf,
                  const EngineCaps& caps)
      : g_(g), diag_(std::move(diagonal)), kind_(kind), leaf_(leaf), caps_(caps) {}

  IntPoly at(VertexMask deleted) { return solve(deleted); }

  // Expansion at a caller-chosen pivot for the top-level state.
  IntPoly at_pivot(VertexMask deleted, int pivot) { return expand(deleted, pivot); }

  int cycle_sign(int length) const {
    return kind_ == MatrixKind::signless && (length & 1) ? -1 : 1;
  }

 private:
  IntPoly solve(VertexMask deleted) {
    const VertexMask remaining = g_.all_vertices() & ~deleted;
    if (remaining == 0) return IntPoly::one();
    if (auto it = memo_.find(deleted); it != memo_.end()) return it->second;

    IntPoly result;
    auto comps = components(g_, remaining);
    if (comps.size() > 1) {
      result = IntPoly::one();
      for (VertexMask c : comps) result *= solve(g_.all_vertices() & ~c);
    } else if (std::popcount(remaining) <= leaf_) {
      result = direct(remaining);
    } else {
      result = expand(deleted, -1);
    }
    memo_.emplace(deleted, result);
    return result;
  }

  IntPoly direct(VertexMask remaining) const {
    std::vector<int> keep;
    for (VertexMask rest = remaining; rest; rest &= rest - 1) keep.push_back(std::countr_zero(rest));
    const int k = static_cast<int>(keep.size());
    if (k == 1) return IntPoly::linear(diag_[static_cast<std::size_t>(keep[0])]);
    const long off = kind_ == MatrixKind::laplacian ? -1 : 1;
    IntMatrix m(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const int a = keep[static_cast<std::size_t>(i)];
        const int b = keep[static_cast<std::size_t>(j)];
        m(i, j) = i == j ? diag_[static_cast<std::size_t>(a)] : (g_.adjacent(a, b) ? off : 0);
      }
    }
    return k <= caps_.auto_naive && k <= caps_.naive ? charperm_naive(m, caps_)
                                                      : charperm_ryser(m, caps_);
  }

  IntPoly expand(VertexMask deleted, int pivot) {
    const VertexMask remaining = g_.all_vertices() & ~deleted;
    if (pivot < 0) {
      int best_deg = -1;
      for (VertexMask rest = remaining; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int d = std::popcount(g_.neighbors(v) & remaining);
        if (d > best_deg) {
          best_deg = d;
          pivot = v;
        }
      }
    }
    const VertexMask pbit = VertexMask{1} << pivot;
    IntPoly result = IntPoly::linear(diag_[static_cast<std::size_t>(pivot)]) * solve(deleted | pbit);
    for (VertexMask rest = g_.neighbors(pivot) & remaining; rest; rest &= rest - 1) {
      result += solve(deleted | pbit | (VertexMask{1} << std::countr_zero(rest)));
    }
    for (auto [mask, count] : cycle_masks_through(g_, remaining, pivot)) {
      const long coef = 2 * count * cycle_sign(std::popcount(mask));
      result += solve(deleted | mask) * BigInt(coef);
    }
    return result;
  }

  const Graph& g_;
  std::vector<long> diag_;
  MatrixKind kind_;
  int leaf_;
  EngineCaps caps_;
  std::unordered_map<VertexMask, IntPoly> memo_;
};

std::vector<long> degrees_of(const Graph& g) {
  std::vector<long> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  return d;
}

int leaf_size(const EngineCaps& caps) { return caps.reduce_leaf < 1 ? 1 : caps.reduce_leaf; }

}  // namespace

IntPoly charperm_reduce_vertex(const Graph& g, MatrixKind kind, int v, const EngineCaps& caps) {
  if (v < 0 || v >= g.order()) throw InvalidArgument("charperm_reduce_vertex: vertex out of range");
  ReductionEngine engine(g, degrees_of(g), kind, leaf_size(caps), caps);
  return engine.at_pivot(0, v);
}

IntPoly charperm_reduce_edge(const Graph& g, MatrixKind kind, Graph::Edge e, const EngineCaps& caps) {
  auto [u, v] = e;
  const Graph minus = g.without_edge(u, v);
  const VertexMask ub = VertexMask{1} << u;
  const VertexMask vb = VertexMask{1} << v;

  ReductionEngine on_minus(minus, degrees_of(minus), kind, leaf_size(caps), caps);
  ReductionEngine on_g(g, degrees_of(g), kind, leaf_size(caps), caps);

  IntPoly result = on_minus.at(0);
  result -= on_minus.at(vb);
  result -= on_minus.at(ub);
  result += on_g.at(ub | vb) * BigInt(2);

  std::map<VertexMask, long> cycles;
  paths_between(g, g.all_vertices(), u, v, 1, [&](const std::vector<int>& p) {
    VertexMask mask = 0;
    for (int w : p) mask |= VertexMask{1} << w;
    ++cycles[mask];
  });
  for (auto [mask, count] : cycles) {
    const long coef = 2 * count * on_g.cycle_sign(std::popcount(mask));
    result += on_g.at(mask) * BigInt(coef);
  }
  return result;
}

IntPoly charperm_reduce_submatrix(const Graph& g, MatrixKind kind, VertexMask deleted,
                                  const EngineCaps& caps) {
  ReductionEngine engine(g, degrees_of(g), kind, leaf_size(caps), caps);
  return engine.at(deleted & g.all_vertices());
}

IntPoly psi(const Graph& g, MatrixKind kind, Method method, const EngineCaps& caps) {
  const int n = g.order();
  switch (method) {
    case Method::naive: return charperm_naive(matrix_of(g, kind), caps);
    case Method::ryser: return charperm_ryser(matrix_of(g, kind), caps);
    case Method::reduce: return charperm_reduce_submatrix(g, kind, 0, caps);
    case Method::automatic: break;
  }
  if (n <= caps.auto_naive && n <= caps.naive) return charperm_naive(matrix_of(g, kind), caps);
  if (n <= caps.ryser) return charperm_ryser(matrix_of(g, kind), caps);
  EngineCaps leafy = caps;
  leafy.reduce_leaf = std::min(caps.auto_reduce_leaf, caps.ryser);
  return charperm_reduce_submatrix(g, kind, 0, leafy);
}

}  // namespace permpoly
