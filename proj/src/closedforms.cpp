#include "permpoly/closedforms.hpp"

#include <algorithm>
#include <functional>

#include "permpoly/error.hpp"
#include "permpoly/invariants.hpp"

namespace permpoly {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

IntPoly shifted_x(long shift) { return IntPoly::linear(BigInt(shift)); }

IntPoly pow(const IntPoly& p, long k) { return poly_pow(p, static_cast<unsigned>(k)); }

IntPoly scaled(const IntPoly& p, long c) { return p * BigInt(c); }

}  // namespace

BigInt tri_number(int order, int arg) {
  require(order >= 0 && arg >= 0, "tri_number: order and argument must be non-negative");
  // Iterated prefix sums of the naturals are binomial coefficients.
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(arg + order),
               static_cast<unsigned long>(order + 1));
  return out;
}

IntPoly spider_C(int index) {
  require(index >= 0, "spider_C: index must be non-negative");
  const IntPoly a = shifted_x(2);
  IntPoly prev = IntPoly::one();
  IntPoly cur = shifted_x(1);
  if (index == 0) return prev;
  for (int k = 2; k <= index; ++k) {
    IntPoly next = a * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly spider_psi(int legs, int leg_length) {
  require(legs >= 2 && leg_length >= 1, "spider_psi: need n >= 2 legs of length m >= 1");
  const IntPoly cm = spider_C(leg_length);
  const IntPoly head = shifted_x(legs) * pow(cm, legs);
  const IntPoly tail = scaled(spider_C(leg_length - 1) * pow(cm, legs - 1), legs);
  return head + tail;
}

IntPoly btree_A(int index) {
  require(index >= 0, "btree_A: index must be non-negative");
  IntPoly older = IntPoly::one();
  if (index == 0) return older;
  IntPoly cur = shifted_x(1);
  const IntPoly a = shifted_x(3);
  for (int i = 2; i <= index; ++i) {
    IntPoly next = a * cur * cur + scaled(cur * older * older, 2);
    older = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly btree_psi(int depth) {
  require(depth >= 1, "btree_psi: depth must be at least 1");
  const IntPoly top = btree_A(depth);
  const IntPoly below = btree_A(depth - 1);
  return shifted_x(2) * top * top + scaled(top * below * below, 2);
}

namespace {

// Deletions of C_n (.) K_1 with A = x-3, B = x-1, AB+1 per hub vertex.
struct CoronaTerms {
  IntPoly a = shifted_x(3);
  IntPoly b = shifted_x(1);
  IntPoly ab1 = shifted_x(3) * shifted_x(1) + IntPoly::one();

  // Hub v_1 deleted: a path of n-1 hub vertices with their pendants plus the
  // isolated pendant of v_1. `b_extra` is 1 when that pendant is kept.
  IntPoly deleted(int n, int b_extra) const {
    IntPoly out = pow(ab1, n - 1) * pow(b, b_extra);
    for (int j = 0; 2 * j <= n - 3; ++j) {
      out += tri_number(j, n - 2 - 2 * j) * (pow(ab1, n - 3 - 2 * j) * pow(b, 2 + b_extra + 2 * j));
    }
    return out;
  }
  IntPoly one_vertex(int n) const { return deleted(n, 1); }
  IntPoly pendant_pair(int n) const { return deleted(n, 0); }
  IntPoly adjacent_pair(int n) const { return b * one_vertex(n - 1); }
};

}  // namespace

IntPoly corona_cycle_psi(int cycle_length, MatrixKind kind) {
  require(cycle_length >= 3, "corona_cycle_psi: cycle length must be at least 3");
  const int n = cycle_length;
  const CoronaTerms t;
  const long sign = (kind == MatrixKind::signless && n % 2 == 1) ? -1 : 1;
  return t.a * t.one_vertex(n) + scaled(t.adjacent_pair(n), 2) + t.pendant_pair(n) +
         scaled(pow(t.b, n), 2 * sign);
}

IntPoly c3_bar_psi(int pendants, MatrixKind kind) {
  require(pendants >= 1, "c3_bar_psi: need n >= 1");
  const long n = pendants;
  const IntPoly a = shifted_x(n + 2);
  const IntPoly b = shifted_x(1);
  const long cycle = kind == MatrixKind::laplacian ? 2 : -2;
  const IntPoly lead = pow(a, 3) + scaled(a, 3) + IntPoly::constant(cycle);
  return lead * pow(b, 3 * n) + scaled((a * a + IntPoly::one()) * pow(b, 3 * n - 1), 3 * n) +
         scaled(a * pow(b, 3 * n - 2), 3 * n * n) + scaled(pow(b, 3 * n - 3), n * n * n);
}

IntPoly c4_bar_psi(int pendants, MatrixKind /*kind*/) {
  require(pendants >= 1, "c4_bar_psi: need n >= 1");
  const long n = pendants;
  const IntPoly a = shifted_x(n + 2);
  const IntPoly b = shifted_x(1);
  const IntPoly a2 = a * a;
  const IntPoly two = IntPoly::constant(2);
  return pow(a2 + two, 2) * pow(b, 4 * n) + scaled(a * (a2 + two) * pow(b, 4 * n - 1), 4 * n) +
         scaled((scaled(a2, 3) + two) * pow(b, 4 * n - 2), 2 * n * n) +
         scaled(a * pow(b, 4 * n - 3), 4 * n * n * n) + scaled(pow(b, 4 * n - 4), n * n * n * n);
}

std::optional<IntPoly> closed_form(const FamilySpec& spec, MatrixKind kind) {
  const auto& p = spec.params;
  switch (spec.family) {
    case FamilyId::spider: return spider_psi(p.at(0), p.at(1));
    case FamilyId::binary_tree: return btree_psi(p.at(0));
    case FamilyId::corona_cycle_k1: return corona_cycle_psi(p.at(0), kind);
    case FamilyId::corona_cycle_empty:
      if (p.at(0) == 3) return c3_bar_psi(p.at(1), kind);
      if (p.at(0) == 4) return c4_bar_psi(p.at(1), kind);
      return std::nullopt;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Displayed claims.

namespace {

using Entries = std::vector<ClaimEntry>;
using Kinds = std::vector<MatrixKind>;

const Kinds kBoth{MatrixKind::laplacian, MatrixKind::signless};
const Kinds kLaplacian{MatrixKind::laplacian};
const Kinds kSignless{MatrixKind::signless};

constexpr int kFree = -1;

struct ClaimDef {
  FamilyId family;
  std::vector<int> pattern;  // kFree marks the swept parameter
  int lo;
  int hi;
  Kinds kinds;
  std::string variant;
  std::function<Entries(long, MatrixKind)> entries;
};

Rational q(long num, long den = 1) { return Rational(num, den); }

ClaimEntry coeff(std::string descriptor, long exponent, Rational stated) {
  stated.canonicalize();
  return {std::move(descriptor), ClaimTarget::coefficient, static_cast<int>(exponent),
          std::move(stated)};
}

long sign_pow(long n) { return n % 2 == 0 ? 1 : -1; }

long ipow(long base, long e) {
  long out = 1;
  while (e-- > 0) out *= base;
  return out;
}

Entries degree_system(long vertices, long degree_sum, long square_sum, long cubic) {
  return {{"sum k_i", ClaimTarget::vertex_count, 0, q(vertices)},
          {"sum i k_i", ClaimTarget::degree_sum, 0, q(degree_sum)},
          {"sum i^2 k_i", ClaimTarget::square_sum, 0, q(square_sum)},
          {"-6t + sum i^3 k_i", ClaimTarget::cubic, 0, q(cubic)}};
}

// Every coefficient of a fully displayed polynomial, highest power first.
Entries full_display(const IntPoly& p) {
  Entries out;
  out.push_back({"degree", ClaimTarget::degree, 0, q(p.degree())});
  for (int e = p.degree(); e >= 0; --e) {
    out.push_back(coeff(e == 0 ? "constant" : "x^" + std::to_string(e), e, Rational(p.coeff(e))));
  }
  return out;
}

Entries full_display(const std::vector<long>& descending) {
  std::vector<BigInt> ascending(descending.rbegin(), descending.rend());
  return full_display(IntPoly(std::move(ascending)));
}

// C_3 (.) empty(n) as displayed; `mid` is the coefficient of A B^{3n-2}.
IntPoly c3_display(long n, long cycle, long mid) {
  const IntPoly a = shifted_x(n + 2);
  const IntPoly b = shifted_x(1);
  return (pow(a, 3) + scaled(a, 3) + IntPoly::constant(cycle)) * pow(b, 3 * n) +
         scaled((a * a + IntPoly::one()) * pow(b, 3 * n - 1), 3 * n) +
         scaled(a * pow(b, 3 * n - 2), mid) + scaled(pow(b, 3 * n - 3), n * n * n);
}

// C_4 (.) empty(n) statement: the third term carries no power of B and the
// signless lead is A^2(A^2+4)B^{3n}.
IntPoly c4_statement(long n, MatrixKind kind) {
  const IntPoly a = shifted_x(n + 2);
  const IntPoly b = shifted_x(1);
  const IntPoly a2 = a * a;
  const IntPoly lead = kind == MatrixKind::laplacian
                           ? pow(a2 + IntPoly::constant(2), 2) * pow(b, 4 * n)
                           : a2 * (a2 + IntPoly::constant(4)) * pow(b, 3 * n);
  return lead + scaled(a * (scaled(a2, 2) + IntPoly::constant(3)) * pow(b, 4 * n - 1), 2 * n) +
         scaled(scaled(a2, 3) + IntPoly::one(), 2 * n * n) +
         scaled(a * pow(b, 4 * n - 3), 4 * n * n * n) + scaled(pow(b, 4 * n - 4), n * n * n * n);
}

IntPoly c4_proof(long n) {
  const IntPoly a = shifted_x(n + 2);
  const IntPoly b = shifted_x(1);
  const IntPoly a2 = a * a;
  return (a2 * a2 + scaled(a2, 4) + IntPoly::constant(4)) * pow(b, 4 * n) +
         (scaled(a2 * a, 4 * n) + scaled(a, 6 * n)) * pow(b, 4 * n - 1) +
         (scaled(a2, 6 * n * n) + IntPoly::constant(2 * n * n)) * pow(b, 4 * n - 2) +
         scaled(a * pow(b, 4 * n - 3), 4 * n * n * n) + scaled(pow(b, 4 * n - 4), n * n * n * n);
}

Entries coconut4_display(long n, bool shifted, Rational constant) {
  const long hi = shifted ? 1 : 0;
  return {coeff("x^{n+4}", n + 4, q(1)),
          coeff("x^{n+3}", n + 3, q(-(2 * n + 6))),
          coeff(shifted ? "x^{n+2}" : "x^{n+1}", n + 1 + hi, q(3 * n * n + 23 * n + 32, 2)),
          coeff(shifted ? "x^{n+1}" : "x^{n}", n + hi,
                q(-(2 * n * n * n + 24 * n * n + 82 * n + 60), 3)),
          coeff("constant", 0, constant)};
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = {
      {FamilyId::coconut, {3, kFree}, 2, 60, kBoth, "display",
       [](long n, MatrixKind) {
         return Entries{coeff("x^{n+3}", n + 3, q(1)),
                        coeff("x^{n+2}", n + 2, q(-(2 * n + 4))),
                        coeff("x^{n+1}", n + 1, q(3 * n * n + 15 * n + 14, 2)),
                        coeff("x^{n}", n, q(-(2 * n * n * n + 15 * n * n + 31 * n + 12), 3)),
                        coeff("constant", 0, q(2 * (3 * n + 2) * sign_pow(n)))};
       }},
      {FamilyId::coconut, {3, kFree}, 2, 60, kLaplacian, "degree-system",
       [](long n, MatrixKind) {
         return degree_system(n + 3, 2 * n + 4, n * n + 3 * n + 6, n * n * n + 3 * n * n + 4 * n + 10);
       }},
      {FamilyId::coconut, {4, kFree}, 2, 60, kBoth, "display-literal",
       [](long n, MatrixKind) { return coconut4_display(n, false, q((14 * n + 10) * sign_pow(n))); }},
      {FamilyId::coconut, {4, kFree}, 2, 60, kBoth, "display-shifted",
       [](long n, MatrixKind) { return coconut4_display(n, true, q((14 * n + 10) * sign_pow(n))); }},
      {FamilyId::coconut, {4, kFree}, 2, 60, kLaplacian, "degree-system",
       [](long n, MatrixKind) {
         return degree_system(n + 4, 2 * n + 6, n * n + 3 * n + 10, n * n * n + 3 * n * n + 4 * n + 18);
       }},
      {FamilyId::h3n, {kFree}, 2, 60, kBoth, "display-literal",
       [](long n, MatrixKind) { return coconut4_display(n, false, q((18 * n - 15) * sign_pow(n))); }},
      {FamilyId::h3n, {kFree}, 2, 60, kBoth, "display-shifted",
       [](long n, MatrixKind) { return coconut4_display(n, true, q((18 * n - 15) * sign_pow(n))); }},
      {FamilyId::spider, {kFree, 2}, 2, 31, kBoth, "display",
       [](long n, MatrixKind) {
         return Entries{coeff("x^{2n+1}", 2 * n + 1, q(1)),
                        coeff("x^{2n}", 2 * n, q(-4 * n)),
                        coeff("x^{2n-1}", 2 * n - 1, q(15 * n * n - n, 2)),
                        coeff("x^{2n-2}", 2 * n - 2, q(-n * (3 * n - 2) * (3 * n + 1))),
                        coeff("constant", 0, q(ipow(-3, n - 1) * (3 * n - 1)))};
       }},
      {FamilyId::spider, {kFree, 2}, 2, 31, kLaplacian, "degree-system",
       [](long n, MatrixKind) { return degree_system(2 * n + 1, 4 * n, n * n + 5 * n, n * n * n + 9 * n); }},
      {FamilyId::binary_tree, {kFree}, 2, 2, kBoth, "display",
       [](long, MatrixKind) { return full_display(std::vector<long>{1, -12, 65, -200, 371, -408, 243, -60}); }},
      {FamilyId::binary_tree, {kFree}, 2, 2, kLaplacian, "degree-system",
       [](long, MatrixKind) { return degree_system(7, 6, 26, 66); }},
      {FamilyId::binary_tree, {kFree}, 3, 3, kBoth, "display",
       [](long, MatrixKind) {
         return Entries{coeff("x^15", 15, q(1)), coeff("x^14", 14, q(-28)),
                        coeff("x^13", 13, q(371)), coeff("x^12", 12, q(-3074)),
                        coeff("constant", 0, q(-14200))};
       }},
      {FamilyId::binary_tree, {kFree}, 3, 3, kLaplacian, "degree-system",
       [](long, MatrixKind) { return degree_system(15, 14, 66, 178); }},
      {FamilyId::corona_cycle_k1, {kFree}, 3, 3, kLaplacian, "display",
       [](long, MatrixKind) { return full_display(std::vector<long>{1, -12, 63, -176, 273, -215, 74}); }},
      {FamilyId::corona_cycle_k1, {kFree}, 3, 3, kSignless, "display",
       [](long, MatrixKind) { return full_display(std::vector<long>{1, -12, 63, -180, 285, -227, 78}); }},
      {FamilyId::corona_cycle_k1, {kFree}, 3, 3, kLaplacian, "degree-system",
       [](long, MatrixKind) { return degree_system(6, 12, 30, 78); }},
      {FamilyId::corona_cycle_k1, {kFree}, 4, 5, kLaplacian, "display",
       [](long, MatrixKind) { return full_display(std::vector<long>{1, -16, 116, -488, 1288, -2144, 2190, -1280, 324}); }},
      {FamilyId::corona_cycle_k1, {kFree}, 4, 4, kLaplacian, "degree-system",
       [](long, MatrixKind) { return degree_system(8, 16, 40, 112); }},
      {FamilyId::corona_cycle_k1, {kFree}, 5, 5, kLaplacian, "degree-system",
       [](long, MatrixKind) { return degree_system(10, 20, 50, 140); }},
      {FamilyId::corona_cycle_empty, {3, kFree}, 1, 12, kLaplacian, "statement",
       [](long n, MatrixKind) { return full_display(c3_display(n, 2, 3 * n * n * n)); }},
      {FamilyId::corona_cycle_empty, {3, kFree}, 1, 12, kSignless, "statement",
       [](long n, MatrixKind) { return full_display(c3_display(n, -2, 3 * n * n * n)); }},
      {FamilyId::corona_cycle_empty, {3, kFree}, 1, 12, kLaplacian, "proof",
       [](long n, MatrixKind) { return full_display(c3_display(n, 2, 3 * n * n)); }},
      {FamilyId::corona_cycle_empty, {3, kFree}, 1, 12, kLaplacian, "expansion",
       [](long n, MatrixKind) {
         return Entries{
             coeff("x^{3n+3}", 3 * n + 3, q(1)),
             coeff("x^{3n+2}", 3 * n + 2, q(-(6 * n + 6))),
             coeff("x^{3n+1}", 3 * n + 1, q(33 * n * n + 63 * n + 30, 2)),
             coeff("x^{3n}", 3 * n, q(-(28 * n * n * n + 75 * n * n + 61 * n + 12))),
             coeff("constant", 0, q(8 * n * n * n + 24 * n * n + 30 * n + 12))};
       }},
      {FamilyId::corona_cycle_empty, {3, kFree}, 1, 12, kLaplacian, "expansion-sign-corrected",
       [](long n, MatrixKind) {
         return Entries{coeff("constant", 0,
                              q(sign_pow(n - 1) * (8 * n * n * n + 24 * n * n + 30 * n + 12)))};
       }},
      {FamilyId::corona_cycle_empty, {3, kFree}, 1, 12, kLaplacian, "degree-system",
       [](long n, MatrixKind) {
         return degree_system(3 * n + 3, 3 * n + 3, 3 * n * n + 17 * n + 12,
                              3 * n * n * n + 18 * n * n + 39 * n + 18);
       }},
      {FamilyId::corona_cycle_empty, {4, kFree}, 1, 12, kBoth, "statement",
       [](long n, MatrixKind kind) { return full_display(c4_statement(n, kind)); }},
      {FamilyId::corona_cycle_empty, {4, kFree}, 1, 12, kLaplacian, "proof",
       [](long n, MatrixKind) { return full_display(c4_proof(n)); }},
      {FamilyId::corona_cycle_empty, {4, kFree}, 1, 12, kLaplacian, "expansion",
       [](long n, MatrixKind) {
         return Entries{
             coeff("x^{4n+4}", 4 * n + 4, q(1)),
             coeff("x^{4n+3}", 4 * n + 3, q(-(8 * n + 8))),
             coeff("x^{4n+2}", 4 * n + 2, q(30 * n * n + 58 * n + 28)),
             coeff("x^{4n+1}", 4 * n + 1, q(-(212 * n * n * n + 588 * n * n + 520 * n + 144), 3)),
             coeff("constant", 0, q(-(13 * n * n - 4 * n - 36)))};
       }},
      {FamilyId::corona_cycle_empty, {4, kFree}, 1, 12, kLaplacian, "degree-system",
       [](long n, MatrixKind) {
         return degree_system(4 * n + 4, 4 * n + 4, 4 * n * n + 20 * n + 16,
                              4 * n * n * n + 24 * n * n + 52 * n + 32);
       }},
      {FamilyId::fig4_t2, {}, 0, 0, kLaplacian, "caption",
       [](long, MatrixKind) {
         return full_display(std::vector<long>{1, -20, 185, -1030, 3792, -9579, -16709, -19762, 15102, -6715, 1317});
       }},
  };
  return defs;
}

// The swept parameter if `spec` is an instance of `def`.
std::optional<long> instance_of(const ClaimDef& def, const FamilySpec& spec) {
  if (spec.family != def.family || spec.params.size() != def.pattern.size()) return std::nullopt;
  long free = 0;
  for (std::size_t i = 0; i < def.pattern.size(); ++i) {
    if (def.pattern[i] == kFree) {
      free = spec.params[i];
    } else if (def.pattern[i] != spec.params[i]) {
      return std::nullopt;
    }
  }
  if (free < def.lo || free > def.hi) return std::nullopt;
  return free;
}

}  // namespace

std::vector<PartialClaim> stated_claims(const FamilySpec& spec, MatrixKind kind) {
  bool family_known = false;
  std::vector<PartialClaim> out;
  for (const auto& def : registry()) {
    if (def.family == spec.family) family_known = true;
    auto n = instance_of(def, spec);
    if (!n) continue;
    if (std::find(def.kinds.begin(), def.kinds.end(), kind) == def.kinds.end()) continue;
    out.push_back({spec, kind, def.variant, def.entries(*n, kind)});
  }
  if (!family_known) {
    throw InvalidArgument("family '" + family_name(spec.family) + "' has no displayed claims");
  }
  return out;
}

namespace {

std::string rational_text(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

std::string params_text(const FamilySpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

std::string power_text(const ClaimEntry& e) {
  if (e.target != ClaimTarget::coefficient) return e.descriptor;
  const std::string concrete = e.exponent == 0 ? "constant" : "x^" + std::to_string(e.exponent);
  return e.descriptor == concrete ? concrete : e.descriptor + " [" + concrete + "]";
}

}  // namespace

std::vector<VerifyRow> check_claim(const PartialClaim& claim, const IntPoly& computed) {
  std::optional<InvariantReport> report;
  auto invariants = [&]() -> const InvariantReport& {
    if (!report) report = poly_invariants(computed, claim.kind);
    return *report;
  };
  std::vector<VerifyRow> rows;
  for (const auto& e : claim.stated) {
    BigInt value;
    switch (e.target) {
      case ClaimTarget::coefficient: value = computed.coeff(e.exponent); break;
      case ClaimTarget::degree: value = computed.degree(); break;
      case ClaimTarget::vertex_count: value = invariants().n; break;
      case ClaimTarget::degree_sum: value = 2 * invariants().m; break;
      case ClaimTarget::square_sum: value = invariants().sum_d2; break;
      case ClaimTarget::cubic: value = invariants().cubic; break;
    }
    std::string verdict;
    if (e.stated.get_den() != 1) {
      verdict = "non-integral";
    } else {
      verdict = e.stated.get_num() == value ? "match" : "mismatch";
    }
    rows.push_back({family_name(claim.family.family) + "/" + claim.variant, to_string(claim.kind),
                    params_text(claim.family), power_text(e), rational_text(e.stated),
                    value.get_str(), verdict});
  }
  return rows;
}

std::vector<VerifyRow> verify_instance(const FamilySpec& spec, MatrixKind kind, Method method,
                                       const EngineCaps& caps) {
  const auto form = closed_form(spec, kind);
  std::vector<PartialClaim> claims;
  try {
    claims = stated_claims(spec, kind);
  } catch (const InvalidArgument&) {
    if (!form) throw;
  }
  const IntPoly engine = psi(build(spec), kind, method, caps);
  std::vector<VerifyRow> rows;
  if (form) {
    rows.push_back({family_name(spec.family) + "/closed-form", to_string(kind), params_text(spec),
                    "polynomial", form->to_string(), engine.to_string(),
                    *form == engine ? "match" : "mismatch"});
  }
  for (const auto& c : claims) {
    auto more = check_claim(c, engine);
    rows.insert(rows.end(), more.begin(), more.end());
  }
  return rows;
}

std::vector<std::pair<FamilySpec, MatrixKind>> errata_grid() {
  std::vector<FamilySpec> specs;
  for (int n = 2; n <= 6; ++n) specs.push_back({FamilyId::coconut, {3, n}});
  for (int n = 2; n <= 6; ++n) specs.push_back({FamilyId::coconut, {4, n}});
  for (int n = 2; n <= 6; ++n) specs.push_back({FamilyId::h3n, {n}});
  for (int n = 2; n <= 6; ++n) specs.push_back({FamilyId::spider, {n, 2}});
  for (int l = 2; l <= 3; ++l) specs.push_back({FamilyId::binary_tree, {l}});
  for (int n = 3; n <= 5; ++n) specs.push_back({FamilyId::corona_cycle_k1, {n}});
  for (int n = 1; n <= 4; ++n) specs.push_back({FamilyId::corona_cycle_empty, {3, n}});
  for (int n = 1; n <= 3; ++n) specs.push_back({FamilyId::corona_cycle_empty, {4, n}});
  specs.push_back({FamilyId::fig4_t2, {}});
  std::vector<std::pair<FamilySpec, MatrixKind>> grid;
  for (const auto& s : specs) {
    for (auto k : kBoth) grid.emplace_back(s, k);
  }
  return grid;
}

std::vector<VerifyRow> errata_rows(const EngineCaps& caps) {
  std::vector<VerifyRow> out;
  for (const auto& [spec, kind] : errata_grid()) {
    for (auto& row : verify_instance(spec, kind, Method::automatic, caps)) {
      if (!row.ok()) out.push_back(std::move(row));
    }
  }
  return out;
}

std::string csv_header() { return "family,kind,params,power,stated,computed,verdict"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv_line(const VerifyRow& r) {
  return csv_field(r.family) + ',' + csv_field(r.kind) + ',' + csv_field(r.params) + ',' +
         csv_field(r.power) + ',' + csv_field(r.stated) + ',' + csv_field(r.computed) + ',' +
         csv_field(r.verdict);
}

}  // namespace permpoly
