#include "permpoly/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "permpoly/error.hpp"

namespace permpoly {

bool InvariantReport::same_system(const InvariantReport& other) const {
  return n == other.n && m == other.m && sum_d2 == other.sum_d2 && cubic == other.cubic &&
         kind == other.kind;
}

InvariantReport forward_invariants(const Graph& g, MatrixKind kind) {
  InvariantReport r;
  r.n = g.order();
  r.m = g.size();
  r.kind = kind;
  long cubes = 0;
  for (int v = 0; v < g.order(); ++v) {
    const long d = g.degree(v);
    r.sum_d2 += d * d;
    cubes += d * d * d;
  }
  const long t = triangle_count(g);
  r.triangles = t;
  r.cubic = cubes + (kind == MatrixKind::laplacian ? -6 * t : 6 * t);
  return r;
}

namespace {

long to_long_checked(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) {
    throw InvalidArgument(std::string("polynomial inversion: ") + what + " out of range");
  }
  return v.get_si();
}

}  // namespace

InvariantReport poly_invariants(const IntPoly& p, MatrixKind kind) {
  if (!p.is_monic()) throw InvalidArgument("polynomial inversion: input is not monic");
  const int n = p.degree();
  if (n < 1) throw InvalidArgument("polynomial inversion: degree must be at least 1");
  // psi = sum_j (-1)^j l_j x^{n-j}; l_j vanishes for j > n.
  const BigInt l1 = -p.coeff(n - 1);
  const BigInt l2 = p.coeff(n - 2);
  const BigInt l3 = -p.coeff(n - 3);
  if (l1 < 0 || l1 % 2 != 0) {
    throw InvalidArgument("polynomial inversion: x^{n-1} coefficient gives no integral edge count");
  }
  const BigInt m = l1 / 2;
  const BigInt sum_d2 = 2 * (2 * m * m + m - l2);
  if (sum_d2 < 2 * m) {
    throw InvalidArgument("polynomial inversion: sum of squared degrees below 2m");
  }
  const BigInt cubic = 3 * l3 - 6 * m * m + 3 * sum_d2 - 4 * m * m * m + 3 * m * sum_d2;
  InvariantReport r;
  r.n = n;
  r.m = to_long_checked(m, "edge count");
  r.sum_d2 = to_long_checked(sum_d2, "sum of squared degrees");
  r.cubic = to_long_checked(cubic, "cubic invariant");
  r.kind = kind;
  return r;
}

std::vector<int> DegreeSolution::degree_sequence() const {
  std::vector<int> out;
  for (int d = static_cast<int>(histogram.size()) - 1; d >= 0; --d) {
    out.insert(out.end(), static_cast<std::size_t>(histogram[static_cast<std::size_t>(d)]), d);
  }
  return out;
}

bool is_graphical(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const long n = static_cast<long>(degrees.size());
  long total = 0;
  for (int d : degrees) {
    if (d < 0 || d >= n) return false;
    total += d;
  }
  if (total % 2 != 0) return false;
  long prefix = 0;
  for (long k = 1; k <= n; ++k) {
    prefix += degrees[static_cast<std::size_t>(k - 1)];
    long tail = 0;
    for (long i = k; i < n; ++i) tail += std::min<long>(degrees[static_cast<std::size_t>(i)], k);
    if (prefix > k * (k - 1) + tail) return false;
  }
  return true;
}

namespace {

// Depth-first over k_i for i = n-1 down to 2; k_1 and k_0 are then forced by
// the first two moments, and t by the cubic.
class DegreeSolver {
 public:
  DegreeSolver(const InvariantReport& r, int max_degree)
      : report_(r),
        max_degree_(max_degree < 0 ? r.n - 1 : std::min(max_degree, r.n - 1)),
        histogram_(static_cast<std::size_t>(std::max(r.n, 2)), 0) {}

  std::vector<DegreeSolution> run() {
    if (report_.n >= 1 && report_.m >= 0 && report_.sum_d2 >= 0) {
      descend(max_degree_, report_.n, 2 * report_.m, report_.sum_d2, 0);
    }
    std::sort(solutions_.begin(), solutions_.end(),
              [](const DegreeSolution& a, const DegreeSolution& b) {
                return a.histogram < b.histogram;
              });
    return solutions_;
  }

 private:
  void descend(long degree, long count, long first, long second, long third) {
    if (degree <= 1) {
      if (degree < 1 && first != 0) return;
      // Degree-1 vertices contribute equally to the first and second moments.
      if (first != second || first < 0 || first > count) return;
      histogram_[1] = first;
      histogram_[0] = count - first;
      finish(third + first);
      histogram_[1] = histogram_[0] = 0;
      return;
    }
    // Every remaining vertex has degree <= `degree`, so the second moment is
    // at most degree times the first and at least the first.
    if (second > degree * first || second < first) return;
    const long cap = std::min({count, first / degree, second / (degree * degree)});
    for (long k = cap; k >= 0; --k) {
      histogram_[static_cast<std::size_t>(degree)] = k;
      descend(degree - 1, count - k, first - k * degree, second - k * degree * degree,
              third + k * degree * degree * degree);
    }
    histogram_[static_cast<std::size_t>(degree)] = 0;
  }

  void finish(long sum_cubes) {
    const long diff = report_.kind == MatrixKind::laplacian ? sum_cubes - report_.cubic
                                                             : report_.cubic - sum_cubes;
    if (diff < 0 || diff % 6 != 0) return;
    DegreeSolution s;
    s.triangles = diff / 6;
    s.histogram.assign(histogram_.begin(), histogram_.begin() + report_.n);
    s.graphical = is_graphical(s.degree_sequence());
    solutions_.push_back(std::move(s));
  }

  const InvariantReport& report_;
  int max_degree_;
  std::vector<long> histogram_;
  std::vector<DegreeSolution> solutions_;
};

}  // namespace

std::vector<DegreeSolution> solve_degree_system(const InvariantReport& report,
                                                const DegreeSystemOptions& options) {
  auto all = DegreeSolver(report, options.max_degree).run();
  if (options.graphical_only) {
    std::erase_if(all, [](const DegreeSolution& s) { return !s.graphical; });
  }
  return all;
}

namespace {

constexpr std::size_t kChunk = 2048;

class MateCollector {
 public:
  MateCollector(const Graph& target, const MateSearchOptions& options)
      : target_(target), options_(options) {
    if (options.kinds.empty()) throw InvalidArgument("mate search: no matrix kind requested");
    report_.target = graph6_encode(target);
    report_.kinds = options.kinds;
    for (auto kind : options.kinds) {
      report_.target_polys.push_back(psi(target, kind, options.method, options.caps));
    }
    use_keys_ = target.order() <= kCanonicalMaxVertices;
    if (use_keys_) target_key_ = canonical_key(target);
  }

  /// Candidates are consumed in order; their polynomials are computed in
  /// parallel and merged sequentially so the outcome is order-deterministic.
  void consume(const std::vector<Graph>& chunk) {
    std::vector<char> matched(chunk.size(), 0);
    std::vector<char> skipped(chunk.size(), 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        for (std::size_t i = next++; i < chunk.size(); i = next++) {
          const Graph& g = chunk[i];
          if (options_.connected_only && !is_connected(g)) {
            skipped[i] = 1;
            continue;
          }
          if (g.size() != target_.size()) {
            skipped[i] = 2;
            continue;
          }
          bool all = true;
          for (std::size_t k = 0; all && k < options_.kinds.size(); ++k) {
            all = psi(g, options_.kinds[k], options_.method, options_.caps) ==
                  report_.target_polys[k];
          }
          matched[i] = all ? 1 : 0;
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    const int jobs = std::max(1, std::min<int>(options_.jobs, static_cast<int>(chunk.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < chunk.size(); ++i) {
      if (skipped[i] == 1) continue;
      ++report_.census_size;
      if (skipped[i] == 2) {
        ++report_.pruned;
        continue;
      }
      if (matched[i]) admit(chunk[i]);
    }
    if (options_.progress) options_.progress(report_.census_size);
  }

  MateReport finish() {
    for (const auto& g : reps_) report_.mates.push_back(graph6_encode(g));
    std::sort(report_.mates.begin(), report_.mates.end());
    return std::move(report_);
  }

  MateReport& report() { return report_; }

 private:
  void admit(const Graph& g) {
    if (use_keys_) {
      std::string key = canonical_key(g);
      if (key == target_key_ || !keys_.insert(key).second) return;
      reps_.push_back(graph6_decode(key));
      return;
    }
    if (isomorphic(g, target_)) return;
    for (const auto& r : reps_) {
      if (isomorphic(g, r)) return;
    }
    reps_.push_back(g);
  }

  const Graph& target_;
  const MateSearchOptions& options_;
  MateReport report_;
  bool use_keys_ = false;
  std::string target_key_;
  std::set<std::string> keys_;
  std::vector<Graph> reps_;
};

}  // namespace

MateReport mate_search(const Graph& target, const MateSearchOptions& options) {
  if (target.order() > kEnumerationMaxVertices) {
    throw CapExceeded("built-in census supports at most " +
                      std::to_string(kEnumerationMaxVertices) + " vertices; supply a graph6 stream");
  }
  MateCollector collector(target, options);
  std::vector<Graph> chunk;
  for_each_graph(target.order(), options.connected_only, [&](const Graph& g) {
    chunk.push_back(g);
    if (chunk.size() == kChunk) {
      collector.consume(chunk);
      chunk.clear();
    }
  });
  if (!chunk.empty()) collector.consume(chunk);
  return collector.finish();
}

MateReport mate_search(const Graph& target, std::istream& graph6_lines,
                       const MateSearchOptions& options) {
  MateCollector collector(target, options);
  std::vector<Graph> chunk;
  std::string line;
  long line_no = 0;
  auto reject = [&](const std::string& message) {
    if (options.on_error == StreamErrorPolicy::abort) {
      throw ParseError("line " + std::to_string(line_no) + ": " + message);
    }
    collector.report().skipped.push_back({line_no, message});
  };
  while (std::getline(graph6_lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = graph6_decode(line);
      if (g.order() != target.order()) {
        reject("graph has " + std::to_string(g.order()) + " vertices, target has " +
               std::to_string(target.order()));
        continue;
      }
      chunk.push_back(std::move(g));
    } catch (const ParseError& e) {
      reject(e.what());
      continue;
    }
    if (chunk.size() == kChunk) {
      collector.consume(chunk);
      chunk.clear();
    }
  }
  if (!chunk.empty()) collector.consume(chunk);
  return collector.finish();
}

}  // namespace permpoly
