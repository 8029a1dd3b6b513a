#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/engines.hpp"
#include "permpoly/graph.hpp"
#include "permpoly/polyring.hpp"

namespace permpoly {

/// Quantities recoverable from the first four coefficients of psi.
/// cubic is -6t + sum d^3 for the Laplacian and +6t + sum d^3 for the
/// signless Laplacian.
struct InvariantReport {
  int n = 0;
  long m = 0;
  long sum_d2 = 0;
  long cubic = 0;
  MatrixKind kind = MatrixKind::laplacian;
  /// Only set when the report was computed from a graph.
  std::optional<long> triangles;

  /// Equality on (n, m, sum_d2, cubic, kind); triangles are ignored.
  bool same_system(const InvariantReport& other) const;
};

InvariantReport forward_invariants(const Graph& g, MatrixKind kind);

/// Inverts the coefficient formulas. Throws InvalidArgument when p is not
/// monic or the inversion yields a non-integral or infeasible system.
InvariantReport poly_invariants(const IntPoly& p, MatrixKind kind);

/// One non-negative integer solution of the degree system.
struct DegreeSolution {
  long triangles = 0;
  /// histogram[i] = number of vertices of degree i, i in [0, n).
  std::vector<long> histogram;
  bool graphical = false;

  std::vector<int> degree_sequence() const;  // descending
  friend bool operator==(const DegreeSolution&, const DegreeSolution&) = default;
};

/// Erdos-Gallai test on any ordering of the degrees.
bool is_graphical(std::vector<int> degrees);

struct DegreeSystemOptions {
  /// Drop sequences failing Erdos-Gallai.
  bool graphical_only = true;
  /// Largest admissible degree; negative means n - 1.
  int max_degree = -1;
};

/// All solutions, lexicographic in the histogram.
std::vector<DegreeSolution> solve_degree_system(const InvariantReport& report,
                                                const DegreeSystemOptions& options = {});

enum class StreamErrorPolicy { abort, skip };

struct MateSearchOptions {
  std::vector<MatrixKind> kinds{MatrixKind::laplacian};
  bool connected_only = false;
  int jobs = 1;
  Method method = Method::automatic;
  EngineCaps caps{};
  StreamErrorPolicy on_error = StreamErrorPolicy::abort;
  /// Called from the coordinating thread between chunks.
  std::function<void(long examined)> progress;
};

struct StreamIssue {
  long line = 0;
  std::string message;
};

struct MateReport {
  std::string target;  // graph6
  std::vector<MatrixKind> kinds;
  std::vector<IntPoly> target_polys;  // parallel to kinds
  long census_size = 0;
  long pruned = 0;
  /// graph6 of one representative per mate class, sorted.
  std::vector<std::string> mates;
  std::vector<StreamIssue> skipped;

  bool determined() const { return mates.empty(); }
};

/// Searches the built-in census of graphs on target.order() vertices.
/// Throws CapExceeded above the enumeration cap.
MateReport mate_search(const Graph& target, const MateSearchOptions& options);

/// Searches a newline-delimited graph6 stream. Blank lines are ignored.
/// Lines that fail to decode or have the wrong order raise ParseError with
/// the line number, or are recorded in `skipped` under the skip policy.
MateReport mate_search(const Graph& target, std::istream& graph6_lines,
                       const MateSearchOptions& options);

}  // namespace permpoly
