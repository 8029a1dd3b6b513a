#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permpoly/graph.hpp"

namespace permpoly {

enum class FamilyId {
  coconut,             // CT_{m,n}: params m, n
  spider,              // S_{n,m}: params n, m
  binary_tree,         // T_l: param l
  corona_cycle_k1,     // C_n (.) K_1: param n
  corona_cycle_empty,  // C_m (.) empty(n): params m, n
  h3n,                 // param n
  fig3,
  fig4_t1,
  fig4_t2,
  cycle,
  path,
  star,  // K_{1,n-1}: n vertices, center 0
  complete,
  empty,
};

struct FamilySpec {
  FamilyId family;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses "name[:p1[,p2]]". Accepts the aliases c3bar:n, c4bar:n (C_3/C_4
/// coronas with empty graphs), ct3:n, ct4:n (coconut trees) and btree:l.
FamilySpec parse_family(std::string_view text);
std::string family_name(FamilyId id);
/// Canonical "name:p1,p2" text, accepted back by parse_family.
std::string to_string(const FamilySpec& spec);
/// Number of integer parameters the family takes.
int family_arity(FamilyId id);

Graph build(const FamilySpec& spec);

Graph coconut_tree(int path_length, int pendants);
Graph spider(int legs, int leg_length);
Graph perfect_binary_tree(int depth);
Graph corona(const Graph& hub, const Graph& attached);

enum class NamedGraph { h3n, fig3, fig4_t1, fig4_t2 };
Graph named_graph(NamedGraph id, int n = 0);

enum class BasicKind { cycle, path, star, complete, empty };
Graph basic_graph(BasicKind kind, int n);

}  // namespace permpoly
