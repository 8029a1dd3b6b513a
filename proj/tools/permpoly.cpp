// Command-line front end: poly, family, closed-form, verify, invariants,
// degsys, mates, errata.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "permpoly/closedforms.hpp"
#include "permpoly/engines.hpp"
#include "permpoly/error.hpp"
#include "permpoly/families.hpp"
#include "permpoly/graph.hpp"
#include "permpoly/invariants.hpp"

namespace {

using namespace permpoly;
using nlohmann::ordered_json;

constexpr int kExitUsage = 64;
constexpr int kExitCap = 65;
constexpr int kExitInput = 66;
constexpr int kExitSoftware = 70;

struct Globals {
  bool json = false;
  std::string method = "auto";
  std::string caps;
  int jobs = 1;
  std::uint64_t seed = 1;

  Method parsed_method() const { return parse_method(method); }
  EngineCaps parsed_caps() const { return caps.empty() ? EngineCaps{} : parse_caps(caps); }
};

/// One of --family, --graph6, --g6 FILE or --random N selects the input graphs.
struct GraphInput {
  std::string family;
  std::string graph6;
  std::string file;
  int random_order = 0;

  void attach(CLI::App* cmd, bool allow_file = true) {
    auto* f = cmd->add_option("--family", family, "family spec name:p1[,p2]");
    auto* g = cmd->add_option("--graph6", graph6, "graph6 text");
    auto* r = cmd->add_option("--random", random_order, "uniform random graph on N vertices")
                  ->check(CLI::Range(1, kMaxVertices));
    f->excludes(g)->excludes(r);
    g->excludes(r);
    if (allow_file) {
      auto* h = cmd->add_option("--g6", file, "newline-delimited graph6 file");
      h->excludes(f)->excludes(g)->excludes(r);
    }
  }

  bool given() const {
    return !family.empty() || !graph6.empty() || !file.empty() || random_order > 0;
  }

  std::vector<Graph> load(std::uint64_t seed) const {
    if (!family.empty()) return {build(parse_family(family))};
    if (!graph6.empty()) return {graph6_decode(graph6)};
    if (random_order > 0) {
      std::mt19937_64 rng(seed);
      std::vector<Graph::Edge> edges;
      for (int j = 1; j < random_order; ++j) {
        for (int i = 0; i < j; ++i) {
          if (rng() & 1U) edges.emplace_back(i, j);
        }
      }
      return {graph_new(random_order, edges)};
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw ParseError("cannot open '" + file + "'");
      std::vector<Graph> out;
      std::string line;
      long line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
          out.push_back(graph6_decode(line));
        } catch (const ParseError& e) {
          throw ParseError(file + ":" + std::to_string(line_no) + ": " + e.what());
        }
      }
      return out;
    }
    throw CLI::ValidationError("input", "one of --family, --graph6, --g6 or --random is required");
  }
};

std::vector<MatrixKind> kinds_of(const std::string& text) {
  if (text == "both") return {MatrixKind::laplacian, MatrixKind::signless};
  std::vector<MatrixKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto k = parse_kind(item);
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  if (out.empty()) throw InvalidArgument("no matrix kind given");
  return out;
}

ordered_json poly_json(const IntPoly& p) {
  return {{"text", p.to_string()}, {"coeffs_ascending", p.to_decimal_strings()}};
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// ---------------------------------------------------------------------------

struct PolyCommand {
  GraphInput input;
  std::string kind = "both";

  int run(const Globals& g) const {
    const auto graphs = input.load(g.seed);
    const auto kinds = kinds_of(kind);
    const bool many = graphs.size() > 1;
    ordered_json records = ordered_json::array();
    for (const auto& graph : graphs) {
      std::vector<IntPoly> polys;
      for (auto k : kinds) polys.push_back(psi(graph, k, g.parsed_method(), g.parsed_caps()));
      const bool coincide = polys.size() == 2 && polys[0] == polys[1];
      const std::string g6 = graph6_encode(graph);
      if (g.json) {
        ordered_json rec{{"graph6", g6}, {"n", graph.order()}, {"m", graph.size()}};
        rec["results"] = ordered_json::array();
        for (std::size_t i = 0; i < kinds.size(); ++i) {
          auto p = poly_json(polys[i]);
          rec["results"].push_back({{"kind", to_string(kinds[i])},
                                    {"text", p["text"]},
                                    {"coeffs_ascending", p["coeffs_ascending"]}});
        }
        if (kinds.size() == 2) rec["coincide"] = coincide;
        records.push_back(std::move(rec));
        continue;
      }
      const std::string prefix = many ? g6 + "\t" : "";
      if (kinds.size() == 1) {
        std::cout << prefix << polys[0].to_string() << '\n';
        continue;
      }
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        std::cout << prefix << to_string(kinds[i]) << ": " << polys[i].to_string() << '\n';
      }
      if (coincide) {
        std::cout << prefix << "note: laplacian and signless polynomials coincide"
                  << (is_bipartite(graph) ? " (bipartite)" : "") << '\n';
      }
    }
    if (g.json) std::cout << (many ? records : records[0]).dump(2) << '\n';
    return 0;
  }
};

struct FamilyCommand {
  std::string family;

  int run(const Globals& g) const {
    const FamilySpec spec = parse_family(family);
    const Graph graph = build(spec);
    const auto degrees = degree_sequence(graph);
    if (g.json) {
      ordered_json out{{"family", to_string(spec)},
                       {"graph6", graph6_encode(graph)},
                       {"n", graph.order()},
                       {"m", graph.size()},
                       {"degrees", degrees},
                       {"triangles", triangle_count(graph)},
                       {"bipartite", is_bipartite(graph)},
                       {"connected", is_connected(graph)}};
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    std::cout << "family: " << to_string(spec) << '\n'
              << "graph6: " << graph6_encode(graph) << '\n'
              << "n: " << graph.order() << '\n'
              << "m: " << graph.size() << '\n'
              << "degrees: " << join(degrees) << '\n'
              << "triangles: " << triangle_count(graph) << '\n'
              << "bipartite: " << (is_bipartite(graph) ? "yes" : "no") << '\n'
              << "connected: " << (is_connected(graph) ? "yes" : "no") << '\n';
    return 0;
  }
};

struct ClosedFormCommand {
  std::string family;
  std::string kind = "both";

  int run(const Globals& g) const {
    const FamilySpec spec = parse_family(family);
    const auto kinds = kinds_of(kind);
    ordered_json out{{"family", to_string(spec)}, {"results", ordered_json::array()}};
    for (auto k : kinds) {
      auto p = closed_form(spec, k);
      if (!p) throw InvalidArgument("no closed form for family '" + to_string(spec) + "'");
      if (g.json) {
        auto j = poly_json(*p);
        out["results"].push_back({{"kind", to_string(k)},
                                  {"text", j["text"]},
                                  {"coeffs_ascending", j["coeffs_ascending"]}});
      } else if (kinds.size() == 1) {
        std::cout << p->to_string() << '\n';
      } else {
        std::cout << to_string(k) << ": " << p->to_string() << '\n';
      }
    }
    if (g.json) std::cout << out.dump(2) << '\n';
    return 0;
  }
};

ordered_json rows_json(const std::vector<VerifyRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"family", r.family},
                   {"kind", r.kind},
                   {"params", r.params},
                   {"power", r.power},
                   {"stated", r.stated},
                   {"computed", r.computed},
                   {"verdict", r.verdict}});
  }
  return arr;
}

void emit_rows(const std::vector<VerifyRow>& rows, bool json) {
  if (json) {
    std::cout << rows_json(rows).dump(2) << '\n';
    return;
  }
  std::cout << csv_header() << '\n';
  for (const auto& r : rows) std::cout << to_csv_line(r) << '\n';
}

/// Runs `work(i)` for i in [0, count) on `jobs` threads; results keep index order.
template <typename T, typename Work>
std::vector<T> parallel_map(std::size_t count, int jobs, Work work) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::min<int>(jobs, static_cast<int>(count)); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

struct VerifyCommand {
  std::string family;
  std::string n_range;
  std::string kind = "both";
  bool mismatches_only = false;

  std::vector<FamilySpec> instances() const {
    if (n_range.empty()) return {parse_family(family)};
    const auto colon = n_range.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--n-range", "expected a:b");
    int lo = 0;
    int hi = 0;
    try {
      lo = std::stoi(n_range.substr(0, colon));
      hi = std::stoi(n_range.substr(colon + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--n-range", "expected integers a:b");
    }
    if (lo > hi) throw CLI::ValidationError("--n-range", "empty range");
    const char sep = family.find(':') == std::string::npos ? ':' : ',';
    std::vector<FamilySpec> out;
    for (int n = lo; n <= hi; ++n) out.push_back(parse_family(family + sep + std::to_string(n)));
    return out;
  }

  int run(const Globals& g) const {
    std::vector<std::pair<FamilySpec, MatrixKind>> grid;
    for (const auto& spec : instances()) {
      for (auto k : kinds_of(kind)) grid.emplace_back(spec, k);
    }
    const auto method = g.parsed_method();
    const auto caps = g.parsed_caps();
    auto chunks = parallel_map<std::vector<VerifyRow>>(grid.size(), g.jobs, [&](std::size_t i) {
      return verify_instance(grid[i].first, grid[i].second, method, caps);
    });
    std::vector<VerifyRow> rows;
    for (auto& c : chunks) {
      for (auto& r : c) {
        if (!mismatches_only || !r.ok()) rows.push_back(std::move(r));
      }
    }
    emit_rows(rows, g.json);
    return 0;
  }
};

struct ErrataCommand {
  int run(const Globals& g) const {
    const auto grid = errata_grid();
    const auto caps = g.parsed_caps();
    auto chunks = parallel_map<std::vector<VerifyRow>>(grid.size(), g.jobs, [&](std::size_t i) {
      return verify_instance(grid[i].first, grid[i].second, Method::automatic, caps);
    });
    std::vector<VerifyRow> rows;
    for (auto& c : chunks) {
      for (auto& r : c) {
        if (!r.ok()) rows.push_back(std::move(r));
      }
    }
    emit_rows(rows, g.json);
    return 0;
  }
};

ordered_json report_json(const InvariantReport& r) {
  ordered_json j{{"kind", to_string(r.kind)},
                 {"n", r.n},
                 {"m", r.m},
                 {"sum_d2", r.sum_d2},
                 {"cubic", r.cubic}};
  j["triangles"] = r.triangles ? ordered_json(*r.triangles) : ordered_json(nullptr);
  return j;
}

void print_report(const InvariantReport& r) {
  std::cout << "kind: " << to_string(r.kind) << '\n'
            << "n: " << r.n << '\n'
            << "m: " << r.m << '\n'
            << "sum_d2: " << r.sum_d2 << '\n'
            << "cubic: " << r.cubic << '\n'
            << "triangles: " << (r.triangles ? std::to_string(*r.triangles) : "unknown") << '\n';
}

/// Graph input, or a polynomial given as text.
struct ReportSource {
  GraphInput input;
  std::string poly;
  bool from_poly = false;

  void attach(CLI::App* cmd) {
    input.attach(cmd, false);
    cmd->add_option("--poly", poly, "polynomial text, e.g. \"x^3 - 4x^2 + 7x - 4\"");
    cmd->add_flag("--from-poly", from_poly,
                  "for graph input, invert the computed polynomial instead of reading the graph");
  }

  InvariantReport report(MatrixKind kind, const Globals& g) const {
    if (!poly.empty()) {
      if (input.given()) throw CLI::ValidationError("--poly", "give either a graph or --poly");
      return poly_invariants(parse_poly(poly), kind);
    }
    const Graph graph = input.load(g.seed).front();
    if (from_poly) return poly_invariants(psi(graph, kind, g.parsed_method(), g.parsed_caps()), kind);
    return forward_invariants(graph, kind);
  }
};

struct InvariantsCommand {
  ReportSource source;
  std::string kind = "both";

  int run(const Globals& g) const {
    const auto kinds = kinds_of(kind);
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      const auto r = source.report(kinds[i], g);
      if (g.json) {
        arr.push_back(report_json(r));
      } else {
        if (i) std::cout << '\n';
        print_report(r);
      }
    }
    if (kinds.size() == 2 && !g.json) {
      // Both cubic values together recover the triangle count.
      const auto l = source.report(MatrixKind::laplacian, g);
      const auto q = source.report(MatrixKind::signless, g);
      const long diff = q.cubic - l.cubic;
      std::cout << "\ntriangles from cubic difference: "
                << (diff % 12 == 0 ? std::to_string(diff / 12) : "non-integral") << '\n';
    }
    if (g.json) std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
    return 0;
  }
};

struct DegsysCommand {
  ReportSource source;
  std::string kind = "laplacian";
  bool include_all = false;
  int max_degree = -1;
  long n = -1;
  long m = -1;
  long sum_d2 = -1;
  long cubic = 0;
  bool explicit_given = false;

  InvariantReport report(const Globals& g) const {
    const MatrixKind k = parse_kind(kind);
    if (explicit_given) {
      if (n < 1 || m < 0 || sum_d2 < 0) {
        throw CLI::ValidationError("degsys", "--n, --m and --sum-d2 are all required");
      }
      InvariantReport r;
      r.n = static_cast<int>(n);
      r.m = m;
      r.sum_d2 = sum_d2;
      r.cubic = cubic;
      r.kind = k;
      return r;
    }
    // The determination argument works from the polynomial alone.
    auto r = source.report(k, g);
    if (!source.poly.empty() || source.from_poly) return r;
    r.triangles.reset();
    return r;
  }

  int run(const Globals& g) const {
    const auto r = report(g);
    DegreeSystemOptions opts;
    opts.graphical_only = !include_all;
    opts.max_degree = max_degree;
    const auto sols = solve_degree_system(r, opts);
    if (g.json) {
      ordered_json out{{"report", report_json(r)},
                       {"graphical_only", opts.graphical_only},
                       {"max_degree", max_degree < 0 ? r.n - 1 : std::min(max_degree, r.n - 1)},
                       {"solutions", ordered_json::array()}};
      for (const auto& s : sols) {
        out["solutions"].push_back({{"triangles", s.triangles},
                                    {"histogram", s.histogram},
                                    {"graphical", s.graphical}});
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    std::cout << "system: n=" << r.n << " 2m=" << 2 * r.m << " sum_d2=" << r.sum_d2
              << " cubic=" << r.cubic << " (" << to_string(r.kind) << ")\n";
    std::cout << "solutions: " << sols.size() << '\n';
    for (const auto& s : sols) {
      std::cout << "t=" << s.triangles << " degrees: ";
      std::string sep;
      for (std::size_t i = 0; i < s.histogram.size(); ++i) {
        if (s.histogram[i] == 0) continue;
        std::cout << sep << "k" << i << "=" << s.histogram[i];
        sep = ",";
      }
      std::cout << (s.graphical ? "" : " (not graphical)") << '\n';
    }
    return 0;
  }
};

struct MatesCommand {
  GraphInput target;
  std::string kinds = "laplacian";
  std::string source = "builtin";
  std::string stream_file;
  std::string on_error = "abort";
  bool connected_only = false;
  bool progress = false;

  int run(const Globals& g) const {
    const Graph graph = target.load(g.seed).front();
    MateSearchOptions opts;
    opts.kinds = kinds_of(kinds);
    opts.connected_only = connected_only;
    opts.jobs = g.jobs;
    opts.method = g.parsed_method();
    opts.caps = g.parsed_caps();
    opts.on_error = on_error == "skip" ? StreamErrorPolicy::skip : StreamErrorPolicy::abort;
    if (progress) {
      opts.progress = [](long examined) { std::cerr << "examined " << examined << '\n'; };
    }
    MateReport rep;
    if (source == "builtin") {
      if (!stream_file.empty()) throw CLI::ValidationError("--g6", "only valid with --source g6");
      rep = mate_search(graph, opts);
    } else {
      if (stream_file.empty()) throw CLI::ValidationError("--source", "g6 source needs --g6 FILE");
      std::ifstream in(stream_file);
      if (!in) throw ParseError("cannot open '" + stream_file + "'");
      rep = mate_search(graph, in, opts);
    }
    if (g.json) {
      ordered_json out{{"target", rep.target}, {"source", source}, {"kinds", ordered_json::array()}};
      for (std::size_t i = 0; i < rep.kinds.size(); ++i) {
        auto p = poly_json(rep.target_polys[i]);
        out["kinds"].push_back({{"kind", to_string(rep.kinds[i])},
                                {"text", p["text"]},
                                {"coeffs_ascending", p["coeffs_ascending"]}});
      }
      out["connected_only"] = connected_only;
      out["census_size"] = rep.census_size;
      out["pruned"] = rep.pruned;
      out["mates"] = rep.mates;
      out["skipped"] = ordered_json::array();
      for (const auto& s : rep.skipped) {
        out["skipped"].push_back({{"line", s.line}, {"message", s.message}});
      }
      out["determined"] = rep.determined();
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "target: " << rep.target << '\n';
      for (std::size_t i = 0; i < rep.kinds.size(); ++i) {
        std::cout << to_string(rep.kinds[i]) << ": " << rep.target_polys[i].to_string() << '\n';
      }
      std::cout << "census: " << rep.census_size << " (pruned by edge count: " << rep.pruned
                << ")\n";
      for (const auto& s : rep.skipped) {
        std::cout << "skipped line " << s.line << ": " << s.message << '\n';
      }
      std::cout << "mates: " << rep.mates.size() << '\n';
      for (const auto& m : rep.mates) std::cout << m << '\n';
      std::cout << (rep.determined() ? "determined" : "not determined") << '\n';
    }
    return rep.determined() ? 0 : 1;
  }
};

int run_cli(int argc, char** argv) {
  CLI::App app{"Laplacian and signless Laplacian permanental polynomials of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_option("--method", g.method, "auto|naive|ryser|reduce")
      ->check(CLI::IsMember({"auto", "naive", "ryser", "reduce"}));
  app.add_option("--caps", g.caps, "engine caps, e.g. naive=9,ryser=24");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "seed for --random inputs");

  const auto kind_check = CLI::IsMember({"laplacian", "signless", "both"});

  PolyCommand poly;
  auto* poly_cmd = app.add_subcommand("poly", "permanental polynomial(s) of graphs");
  poly.input.attach(poly_cmd);
  poly_cmd->add_option("--kind", poly.kind, "laplacian|signless|both")->check(kind_check);

  FamilyCommand family;
  auto* family_cmd = app.add_subcommand("family", "build a family member and summarize it");
  family_cmd->add_option("--family", family.family, "family spec name:p1[,p2]")->required();

  ClosedFormCommand cf;
  auto* cf_cmd = app.add_subcommand("closed-form", "evaluate a closed-form family polynomial");
  cf_cmd->add_option("--family", cf.family, "family spec")->required();
  cf_cmd->add_option("--kind", cf.kind, "laplacian|signless|both")->check(kind_check);

  VerifyCommand verify;
  auto* verify_cmd = app.add_subcommand("verify", "closed forms and displayed values vs engines");
  verify_cmd->add_option("--family", verify.family, "family spec, last parameter swept by --n-range")
      ->required();
  verify_cmd->add_option("--n-range", verify.n_range, "a:b");
  verify_cmd->add_option("--kind", verify.kind, "laplacian|signless|both")->check(kind_check);
  verify_cmd->add_flag("--mismatches-only", verify.mismatches_only, "omit matching rows");

  InvariantsCommand inv;
  auto* inv_cmd = app.add_subcommand("invariants", "n, m, sum d^2 and the cubic invariant");
  inv.source.attach(inv_cmd);
  inv_cmd->add_option("--kind", inv.kind, "laplacian|signless|both")->check(kind_check);

  DegsysCommand deg;
  auto* deg_cmd = app.add_subcommand("degsys", "solve the degree system of an invariant report");
  deg.source.attach(deg_cmd);
  deg_cmd->add_option("--kind", deg.kind, "laplacian|signless")
      ->check(CLI::IsMember({"laplacian", "signless"}));
  deg_cmd->add_flag("--all", deg.include_all, "keep non-graphical solutions");
  deg_cmd->add_option("--max-degree", deg.max_degree, "largest admissible degree");
  auto* dn = deg_cmd->add_option("--n", deg.n, "vertex count");
  deg_cmd->add_option("--m", deg.m, "edge count")->needs(dn);
  deg_cmd->add_option("--sum-d2", deg.sum_d2, "sum of squared degrees")->needs(dn);
  deg_cmd->add_option("--cubic", deg.cubic, "cubic invariant")->needs(dn);

  MatesCommand mates;
  auto* mates_cmd = app.add_subcommand("mates", "search for co-permanental mates");
  mates.target.attach(mates_cmd, false);
  mates_cmd->add_option("--kinds,--kind", mates.kinds, "laplacian|signless|both or a comma list");
  mates_cmd->add_option("--source", mates.source, "builtin|g6")
      ->check(CLI::IsMember({"builtin", "g6"}));
  mates_cmd->add_option("--g6", mates.stream_file, "graph6 candidate stream");
  mates_cmd->add_option("--on-error", mates.on_error, "abort|skip")
      ->check(CLI::IsMember({"abort", "skip"}));
  mates_cmd->add_flag("--connected-only", mates.connected_only, "restrict to connected candidates");
  mates_cmd->add_flag("--progress", mates.progress, "report progress on standard error");

  ErrataCommand errata;
  app.add_subcommand("errata", "every displayed value that disagrees with the engines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool is_mates = mates_cmd->parsed();
  try {
    deg.explicit_given = deg_cmd->count("--n") > 0;
    if (poly_cmd->parsed()) return poly.run(g);
    if (family_cmd->parsed()) return family.run(g);
    if (cf_cmd->parsed()) return cf.run(g);
    if (verify_cmd->parsed()) return verify.run(g);
    if (inv_cmd->parsed()) return inv.run(g);
    if (deg_cmd->parsed()) return deg.run(g);
    if (is_mates) return mates.run(g);
    return errata.run(g);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_mates ? 2 : kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_mates ? 2 : kExitInput;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_mates ? 2 : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_mates ? 2 : kExitSoftware;
  }
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
