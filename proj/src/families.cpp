#include "permpoly/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "permpoly/error.hpp"

namespace permpoly {

namespace {

using Edges = std::vector<Graph::Edge>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

struct FamilyInfo {
  FamilyId id;
  const char* name;
  int arity;
};

constexpr FamilyInfo kFamilies[] = {
    {FamilyId::coconut, "coconut", 2},
    {FamilyId::spider, "spider", 2},
    {FamilyId::binary_tree, "binary_tree", 1},
    {FamilyId::corona_cycle_k1, "corona_cycle_k1", 1},
    {FamilyId::corona_cycle_empty, "corona_cycle_empty", 2},
    {FamilyId::h3n, "h3n", 1},
    {FamilyId::fig3, "fig3", 0},
    {FamilyId::fig4_t1, "fig4_t1", 0},
    {FamilyId::fig4_t2, "fig4_t2", 0},
    {FamilyId::cycle, "cycle", 1},
    {FamilyId::path, "path", 1},
    {FamilyId::star, "star", 1},
    {FamilyId::complete, "complete", 1},
    {FamilyId::empty, "empty", 1},
};

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : kFamilies) {
    if (f.id == id) return f;
  }
  throw InvalidArgument("unknown family id");
}

std::vector<int> parse_params(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw InvalidArgument("family '" + std::string(whole) + "': bad parameter '" +
                            std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string family_name(FamilyId id) { return info(id).name; }

int family_arity(FamilyId id) { return info(id).arity; }

FamilySpec parse_family(std::string_view text) {
  auto colon = text.find(':');
  std::string name(text.substr(0, colon));
  std::vector<int> params;
  if (colon != std::string_view::npos) params = parse_params(text.substr(colon + 1), text);

  static const std::map<std::string, std::pair<FamilyId, std::vector<int>>> aliases = {
      {"c3bar", {FamilyId::corona_cycle_empty, {3}}},
      {"c4bar", {FamilyId::corona_cycle_empty, {4}}},
      {"ct3", {FamilyId::coconut, {3}}},
      {"ct4", {FamilyId::coconut, {4}}},
      {"btree", {FamilyId::binary_tree, {}}},
  };
  FamilySpec spec{FamilyId::empty, {}};
  if (auto it = aliases.find(name); it != aliases.end()) {
    spec.family = it->second.first;
    spec.params = it->second.second;
    spec.params.insert(spec.params.end(), params.begin(), params.end());
  } else {
    auto f = std::find_if(std::begin(kFamilies), std::end(kFamilies),
                          [&](const FamilyInfo& fi) { return name == fi.name; });
    if (f == std::end(kFamilies)) throw InvalidArgument("unknown family '" + name + "'");
    spec.family = f->id;
    spec.params = std::move(params);
  }
  if (static_cast<int>(spec.params.size()) != family_arity(spec.family)) {
    throw InvalidArgument("family '" + std::string(text) + "' expects " +
                          std::to_string(family_arity(spec.family)) + " parameter(s)");
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out = family_name(spec.family);
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += (i == 0 ? ":" : ",");
    out += std::to_string(spec.params[i]);
  }
  return out;
}

Graph build(const FamilySpec& spec) {
  require(static_cast<int>(spec.params.size()) == family_arity(spec.family),
          "family " + family_name(spec.family) + ": wrong parameter count");
  const auto& p = spec.params;
  switch (spec.family) {
    case FamilyId::coconut: return coconut_tree(p[0], p[1]);
    case FamilyId::spider: return spider(p[0], p[1]);
    case FamilyId::binary_tree: return perfect_binary_tree(p[0]);
    case FamilyId::corona_cycle_k1:
      return corona(basic_graph(BasicKind::cycle, p[0]), basic_graph(BasicKind::complete, 1));
    case FamilyId::corona_cycle_empty:
      require(p[1] >= 1, "corona_cycle_empty: need n >= 1");
      return corona(basic_graph(BasicKind::cycle, p[0]), basic_graph(BasicKind::empty, p[1]));
    case FamilyId::h3n: return named_graph(NamedGraph::h3n, p[0]);
    case FamilyId::fig3: return named_graph(NamedGraph::fig3);
    case FamilyId::fig4_t1: return named_graph(NamedGraph::fig4_t1);
    case FamilyId::fig4_t2: return named_graph(NamedGraph::fig4_t2);
    case FamilyId::cycle: return basic_graph(BasicKind::cycle, p[0]);
    case FamilyId::path: return basic_graph(BasicKind::path, p[0]);
    case FamilyId::star: return basic_graph(BasicKind::star, p[0]);
    case FamilyId::complete: return basic_graph(BasicKind::complete, p[0]);
    case FamilyId::empty: return basic_graph(BasicKind::empty, p[0]);
  }
  throw InvalidArgument("unknown family");
}

// Path u_1..u_m on vertices 0..m-1; pendants m..m+n-1 hang off vertex 0.
Graph coconut_tree(int path_length, int pendants) {
  require(path_length >= 2 && pendants >= 2, "coconut_tree: need m >= 2 and n >= 2");
  Edges e;
  for (int i = 0; i + 1 < path_length; ++i) e.emplace_back(i, i + 1);
  for (int j = 0; j < pendants; ++j) e.emplace_back(0, path_length + j);
  return Graph(path_length + pendants, e);
}

// Center 0; leg l occupies 1 + l*m .. l*m + m, nearest the center first.
Graph spider(int legs, int leg_length) {
  require(legs >= 2 && leg_length >= 1, "spider: need n >= 2 legs of length m >= 1");
  Edges e;
  for (int l = 0; l < legs; ++l) {
    int first = 1 + l * leg_length;
    e.emplace_back(0, first);
    for (int k = 1; k < leg_length; ++k) e.emplace_back(first + k - 1, first + k);
  }
  return Graph(1 + legs * leg_length, e);
}

// Heap numbering: children of i are 2i+1 and 2i+2.
Graph perfect_binary_tree(int depth) {
  require(depth >= 1 && depth <= 5, "perfect_binary_tree: depth must be in [1, 5]");
  const int n = (1 << (depth + 1)) - 1;
  Edges e;
  for (int v = 1; v < n; ++v) e.emplace_back((v - 1) / 2, v);
  return Graph(n, e);
}

Graph corona(const Graph& hub, const Graph& attached) {
  const int p1 = hub.order();
  const int p2 = attached.order();
  const int n = p1 * (1 + p2);
  require(n <= kMaxVertices, "corona: result has " + std::to_string(n) + " vertices (> 64)");
  Edges e = hub.edges();
  for (int i = 0; i < p1; ++i) {
    const int base = p1 + i * p2;
    for (auto [u, v] : attached.edges()) e.emplace_back(base + u, base + v);
    for (int k = 0; k < p2; ++k) e.emplace_back(i, base + k);
  }
  return Graph(n, e);
}

Graph named_graph(NamedGraph id, int n) {
  switch (id) {
    case NamedGraph::h3n: {
      // v_1..v_{n+4} -> 0..n+3: chain v_3 - v_2 - v_1, branch v_1 - v_4 - v_5,
      // and pendants v_6..v_{n+4} on v_1.
      require(n >= 2, "h3n: need n >= 2");
      Edges e{{2, 1}, {1, 0}, {0, 3}, {3, 4}};
      for (int v = 5; v < n + 4; ++v) e.emplace_back(0, v);
      return Graph(n + 4, e);
    }
    case NamedGraph::fig3:
      // Square TL-TR-BR-BL with A on TR and BR; A-M; M carries T and B.
      // TL=0 TR=1 BR=2 BL=3 A=4 M=5 T=6 B=7.
      return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 2}, {4, 5}, {5, 6}, {5, 7}});
    case NamedGraph::fig4_t1:
      // Drawing labels 1..10 -> 0..9.
      return Graph(10, {{0, 2}, {2, 4}, {4, 5}, {5, 7}, {7, 9},
                        {1, 2}, {4, 3}, {3, 6}, {3, 5}, {7, 8}});
    case NamedGraph::fig4_t2:
      return Graph(10, {{0, 2}, {2, 4}, {4, 6}, {6, 7}, {2, 3},
                        {3, 1}, {3, 5}, {5, 4}, {5, 9}, {6, 8}});
  }
  throw InvalidArgument("unknown named graph");
}

Graph basic_graph(BasicKind kind, int n) {
  Edges e;
  switch (kind) {
    case BasicKind::cycle:
      require(n >= 3, "cycle: need n >= 3");
      for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
      break;
    case BasicKind::path:
      require(n >= 1, "path: need n >= 1");
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case BasicKind::star:
      require(n >= 1, "star: need n >= 1");
      for (int i = 1; i < n; ++i) e.emplace_back(0, i);
      break;
    case BasicKind::complete:
      require(n >= 1, "complete: need n >= 1");
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) e.emplace_back(i, j);
      }
      break;
    case BasicKind::empty:
      require(n >= 1, "empty: need n >= 1");
      break;
  }
  return Graph(n, e);
}

}  // namespace permpoly
