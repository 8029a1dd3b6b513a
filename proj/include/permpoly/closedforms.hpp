#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "permpoly/engines.hpp"
#include "permpoly/families.hpp"
#include "permpoly/polyring.hpp"

namespace permpoly {

using Rational = mpq_class;

/// T_i(j): T_0(j) = j and T_i(j) = T_{i-1}(1) + ... + T_{i-1}(j).
BigInt tri_number(int order, int arg);

/// Spider recurrence with A = x-2, B = x-1: C_0 = 1, C_1 = B, C_2 = AB + 1,
/// C_k = A C_{k-1} + C_{k-2}.
IntPoly spider_C(int index);
/// (x - n) C_m^n + n C_{m-1} C_m^{n-1}; equal for both kinds (spiders are trees).
IntPoly spider_psi(int legs, int leg_length);

/// A_0 = 1, A_1 = x-1, A_i = (x-3) A_{i-1}^2 + 2 A_{i-1} A_{i-2}^2.
IntPoly btree_A(int index);
/// (x-2) A_l^2 + 2 A_l A_{l-1}^2.
IntPoly btree_psi(int depth);

/// psi of C_n (.) K_1 assembled from its one-vertex, adjacent-pair and
/// pendant-pair deletions plus the single cycle term.
IntPoly corona_cycle_psi(int cycle_length, MatrixKind kind);
/// C_3 (.) empty(n), with A = x-(n+2), B = x-1.
IntPoly c3_bar_psi(int pendants, MatrixKind kind);
/// C_4 (.) empty(n), with A = x-(n+2), B = x-1. Identical for both kinds.
IntPoly c4_bar_psi(int pendants, MatrixKind kind);

/// Closed-form evaluator for the family, if one exists.
std::optional<IntPoly> closed_form(const FamilySpec& spec, MatrixKind kind);

/// What a displayed value refers to.
enum class ClaimTarget {
  coefficient,  // coefficient of x^exponent
  degree,       // degree of the polynomial
  vertex_count,
  degree_sum,       // sum i k_i
  square_sum,       // sum i^2 k_i
  cubic,            // -+6t + sum i^3 k_i
};

struct ClaimEntry {
  /// Power or quantity as displayed, e.g. "x^{n+1}" or "constant".
  std::string descriptor;
  ClaimTarget target = ClaimTarget::coefficient;
  int exponent = 0;
  Rational stated;
};

/// The displayed values for one family instance and kind under one reading
/// of the display (variant names such as "statement", "proof", "literal").
struct PartialClaim {
  FamilySpec family;
  MatrixKind kind;
  std::string variant;
  std::vector<ClaimEntry> stated;
};

/// Every recorded display applying to this instance and kind. Throws
/// InvalidArgument when the family carries no displayed claims at all.
std::vector<PartialClaim> stated_claims(const FamilySpec& spec, MatrixKind kind);

/// One comparison row; field order matches the CSV columns.
struct VerifyRow {
  std::string family;
  std::string kind;
  std::string params;
  std::string power;
  std::string stated;
  std::string computed;
  std::string verdict;  // "match", "mismatch" or "non-integral"

  bool ok() const { return verdict == "match"; }
};

/// Compares each claim entry with `computed`, which must be psi of the
/// claimed instance under the claim's kind.
std::vector<VerifyRow> check_claim(const PartialClaim& claim, const IntPoly& computed);

/// Rows for one instance: the closed-form evaluator against the engine (if
/// an evaluator exists) followed by every claim check.
std::vector<VerifyRow> verify_instance(const FamilySpec& spec, MatrixKind kind,
                                       Method method = Method::automatic,
                                       const EngineCaps& caps = {});

/// The full built-in grid of instances with recorded displays.
std::vector<std::pair<FamilySpec, MatrixKind>> errata_grid();

/// Mismatching rows over errata_grid(), in grid order.
std::vector<VerifyRow> errata_rows(const EngineCaps& caps = {});

std::string csv_header();
std::string to_csv_line(const VerifyRow& row);

}  // namespace permpoly
