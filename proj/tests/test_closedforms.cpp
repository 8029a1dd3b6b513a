#include <doctest.h>

#include <algorithm>
#include <set>

#include "permpoly/closedforms.hpp"
#include "permpoly/error.hpp"
#include "support.hpp"

using namespace permpoly;

namespace {

constexpr MatrixKind kKinds[] = {MatrixKind::laplacian, MatrixKind::signless};

IntPoly engine(const std::string& family, MatrixKind kind) {
  return psi(build(parse_family(family)), kind);
}

std::string fam(const std::string& name, int a) { return name + ":" + std::to_string(a); }
std::string fam(const std::string& name, int a, int b) {
  return name + ":" + std::to_string(a) + "," + std::to_string(b);
}

// Descending coefficient list, as the polynomials are usually written.
IntPoly descending(std::vector<long> c) {
  std::reverse(c.begin(), c.end());
  std::vector<BigInt> big(c.begin(), c.end());
  return IntPoly(std::move(big));
}

bool has_row(const std::vector<VerifyRow>& rows, const std::string& family, const std::string& kind,
             const std::string& params, const std::string& power, const std::string& stated,
             const std::string& computed) {
  return std::any_of(rows.begin(), rows.end(), [&](const VerifyRow& r) {
    return r.family == family && r.kind == kind && r.params == params && r.power == power &&
           r.stated == stated && r.computed == computed && r.verdict == "mismatch";
  });
}

}  // namespace

TEST_CASE("generalized triangular numbers") {
  CHECK(tri_number(0, 5) == 5);
  CHECK(tri_number(1, 4) == 10);
  CHECK(tri_number(2, 3) == 10);
  for (long j = 1; j <= 20; ++j) {
    CHECK(tri_number(1, static_cast<int>(j)) == j * (j + 1) / 2);
    CHECK(tri_number(2, static_cast<int>(j)) == j * (j + 1) * (j + 2) / 6);
  }
  // Defining recurrence, summed directly.
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 10; ++j) {
      BigInt sum = 0;
      for (int k = 1; k <= j; ++k) sum += tri_number(i - 1, k);
      CHECK(tri_number(i, j) == sum);
    }
  }
}

TEST_CASE("spider recurrence") {
  CHECK(spider_C(0) == IntPoly::one());
  CHECK(spider_C(1) == IntPoly{-1, 1});
  CHECK(spider_C(2) == IntPoly{3, -3, 1});
  CHECK(spider_C(3) == IntPoly{-7, 10, -5, 1});
  CHECK(spider_psi(2, 2) == oracle::path_laplacian(5));
  CHECK(spider_psi(3, 1) == oracle::charperm(basic_graph(BasicKind::star, 4), MatrixKind::laplacian));
}

TEST_CASE("displayed spider coefficients") {
  for (long n = 2; n <= 7; ++n) {
    const IntPoly p = spider_psi(static_cast<int>(n), 2);
    CHECK(p.coeff(static_cast<int>(2 * n)) == -4 * n);
    CHECK(p.coeff(static_cast<int>(2 * n - 1)) == (15 * n * n - n) / 2);
    CHECK(p.coeff(static_cast<int>(2 * n - 2)) == -n * (3 * n - 2) * (3 * n + 1));
  }
  // The constant term is -4n 3^{n-1}; the oracle agrees at n = 2 and n = 3.
  CHECK(spider_psi(2, 2).coeff(0) == -24);
  CHECK(oracle::charperm(spider(3, 2), MatrixKind::laplacian).coeff(0) == -108);
  for (int n = 2; n <= 7; ++n) {
    BigInt expected;
    mpz_pow_ui(expected.get_mpz_t(), BigInt(3).get_mpz_t(), static_cast<unsigned long>(n - 1));
    CHECK(spider_psi(n, 2).coeff(0) == -4 * n * expected);
  }
}

TEST_CASE("binary tree recurrence") {
  CHECK(btree_A(0) == IntPoly::one());
  CHECK(btree_A(2) == IntPoly{-5, 9, -5, 1});
  CHECK(btree_A(3).degree() == 7);
  CHECK(btree_psi(1) == IntPoly{-4, 7, -4, 1});
  CHECK(btree_psi(2) == IntPoly{-60, 243, -408, 371, -200, 65, -12, 1});
  const IntPoly t3 = btree_psi(3);
  CHECK(t3.degree() == 15);
  CHECK(t3.coeff(15) == 1);
  CHECK(t3.coeff(14) == -28);
  CHECK(t3.coeff(13) == 373);
  CHECK(t3.coeff(12) == -3120);
  CHECK(t3.coeff(1) == 152395);
  CHECK(t3.coeff(0) == -18700);
}

TEST_CASE("corona of a cycle with K_1") {
  const IntPoly l3 = descending({1, -12, 63, -176, 273, -222, 74});
  const IntPoly q3 = descending({1, -12, 63, -180, 285, -234, 78});
  CHECK(corona_cycle_psi(3, MatrixKind::laplacian) == l3);
  CHECK(corona_cycle_psi(3, MatrixKind::signless) == q3);
  CHECK(oracle::charperm(build(parse_family("corona_cycle_k1:3")), MatrixKind::laplacian) == l3);
  CHECK(oracle::charperm(build(parse_family("corona_cycle_k1:3")), MatrixKind::signless) == q3);
  CHECK(l3.eval(2) == 2);

  const IntPoly c4 = descending({1, -16, 116, -488, 1288, -2160, 2232, -1296, 324});
  CHECK(corona_cycle_psi(4, MatrixKind::laplacian) == c4);
  CHECK(corona_cycle_psi(4, MatrixKind::signless) == c4);
  CHECK(oracle::charperm(build(parse_family("corona_cycle_k1:4")), MatrixKind::laplacian) == c4);

  const IntPoly l5 = descending({1, -20, 185, -1030, 3790, -9562, 16660, -19720, 15145, -6810, 1362});
  const IntPoly q5 = descending({1, -20, 185, -1030, 3790, -9566, 16680, -19760, 15185, -6830, 1366});
  CHECK(corona_cycle_psi(5, MatrixKind::laplacian) == l5);
  CHECK(corona_cycle_psi(5, MatrixKind::signless) == q5);
  CHECK(oracle::charperm(build(parse_family("corona_cycle_k1:5")), MatrixKind::laplacian) == l5);
  CHECK(oracle::charperm(build(parse_family("corona_cycle_k1:5")), MatrixKind::signless) == q5);

  for (int n = 3; n <= 8; ++n) CHECK(corona_cycle_psi(n, MatrixKind::laplacian).eval(1) == 1);
}

TEST_CASE("fig4_t2 polynomial") {
  const IntPoly t2 = descending({1, -20, 185, -1030, 3792, -9580, 16720, -19804, 15172, -6768, 1332});
  const Graph g = build(parse_family("fig4_t2"));
  CHECK(oracle::charperm(g, MatrixKind::laplacian) == t2);
  CHECK(psi(g, MatrixKind::signless) == t2);
}

TEST_CASE("C_3 and C_4 coronas with empty graphs") {
  CHECK(c3_bar_psi(1, MatrixKind::laplacian) == descending({1, -12, 63, -176, 273, -222, 74}));
  for (long n = 1; n <= 4; ++n) {
    CHECK(abs(c3_bar_psi(static_cast<int>(n), MatrixKind::laplacian).coeff(0)) ==
          8 * n * n * n + 24 * n * n + 30 * n + 12);
  }
  CHECK(oracle::charperm(build(parse_family("c3bar:2")), MatrixKind::signless) ==
        c3_bar_psi(2, MatrixKind::signless));
  CHECK(oracle::charperm(build(parse_family("c4bar:1")), MatrixKind::laplacian) ==
        c4_bar_psi(1, MatrixKind::laplacian));
  CHECK(psi(build(parse_family("c4bar:2")), MatrixKind::laplacian, Method::ryser) ==
        c4_bar_psi(2, MatrixKind::laplacian));
}

TEST_CASE("closed forms equal the engines across the parameter grid") {
  for (auto kind : kKinds) {
    CAPTURE(to_string(kind));
    for (int n = 2; n <= 5; ++n) {
      for (int m = 1; m <= 4; ++m) {
        CHECK(spider_psi(n, m) == engine(fam("spider", n, m), kind));
        CHECK(spider_psi(n, m).degree() == n * m + 1);
      }
    }
    for (int depth = 1; depth <= 3; ++depth) {
      CHECK(btree_psi(depth) == engine(fam("btree", depth), kind));
      CHECK(btree_psi(depth).degree() == (1 << (depth + 1)) - 1);
    }
    for (int n = 3; n <= 8; ++n) {
      CHECK(corona_cycle_psi(n, kind) == engine(fam("corona_cycle_k1", n), kind));
      CHECK(corona_cycle_psi(n, kind).degree() == 2 * n);
    }
    for (int n = 1; n <= 4; ++n) {
      CHECK(c3_bar_psi(n, kind) == engine(fam("c3bar", n), kind));
      CHECK(c3_bar_psi(n, kind).degree() == 3 * n + 3);
    }
    for (int n = 1; n <= 3; ++n) {
      CHECK(c4_bar_psi(n, kind) == engine(fam("c4bar", n), kind));
      CHECK(c4_bar_psi(n, kind).degree() == 4 * n + 4);
    }
    CHECK(c3_bar_psi(1, kind) == corona_cycle_psi(3, kind));
    CHECK(c4_bar_psi(1, kind) == corona_cycle_psi(4, kind));
  }
}

TEST_CASE("closed-form dispatch") {
  CHECK(closed_form(parse_family("btree:2"), MatrixKind::laplacian) == btree_psi(2));
  CHECK(closed_form(parse_family("spider:3,2"), MatrixKind::signless) == spider_psi(3, 2));
  CHECK(closed_form(parse_family("c4bar:2"), MatrixKind::signless) == c4_bar_psi(2, MatrixKind::signless));
  CHECK_FALSE(closed_form(parse_family("path:4"), MatrixKind::laplacian).has_value());
  CHECK_FALSE(closed_form(parse_family("corona_cycle_empty:5,2"), MatrixKind::laplacian).has_value());
}

TEST_CASE("claim checking") {
  PartialClaim claim{parse_family("btree:2"), MatrixKind::laplacian, "probe", {}};
  claim.stated.push_back({"x^6", ClaimTarget::coefficient, 6, Rational(-12)});
  claim.stated.push_back({"x^5", ClaimTarget::coefficient, 5, Rational(66)});
  claim.stated.push_back({"x^0", ClaimTarget::coefficient, 0, Rational(-121, 2)});
  claim.stated.push_back({"degree", ClaimTarget::degree, 0, Rational(7)});
  const auto rows = check_claim(claim, btree_psi(2));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].verdict == "match");
  CHECK(rows[1].verdict == "mismatch");
  CHECK(rows[1].computed == "65");
  CHECK(rows[2].verdict == "non-integral");
  CHECK(rows[3].ok());
  CHECK_THROWS_AS(stated_claims(parse_family("path:4"), MatrixKind::laplacian), InvalidArgument);
}

TEST_CASE("every stated claim is either matched or reported") {
  for (const auto& [spec, kind] : errata_grid()) {
    const IntPoly computed = psi(build(spec), kind);
    for (const auto& claim : stated_claims(spec, kind)) {
      const auto rows = check_claim(claim, computed);
      CHECK(rows.size() == claim.stated.size());
    }
    const auto rows = verify_instance(spec, kind);
    for (const auto& r : rows) {
      const std::set<std::string> verdicts{"match", "mismatch", "non-integral"};
      CHECK(verdicts.count(r.verdict) == 1);
    }
  }
}

TEST_CASE("known display errors appear in the errata") {
  const auto rows = errata_rows();
  CHECK(std::none_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.ok(); }));
  CHECK(has_row(rows, "spider/display", "laplacian", "2,2", "constant", "-15", "-24"));
  CHECK(has_row(rows, "corona_cycle_k1/display", "laplacian", "3", "x^1", "-215", "-222"));
  CHECK(has_row(rows, "corona_cycle_k1/display", "signless", "3", "x^1", "-227", "-234"));
  CHECK(has_row(rows, "corona_cycle_k1/display", "laplacian", "5", "degree", "8", "10"));
  CHECK(has_row(rows, "binary_tree/display", "laplacian", "3", "x^13", "371", "373"));
  CHECK(has_row(rows, "binary_tree/display", "laplacian", "3", "x^12", "-3074", "-3120"));
  // The 3n^3 statement reading of the C_3 corona fails from n = 2 on.
  CHECK(std::any_of(rows.begin(), rows.end(), [](const VerifyRow& r) {
    return r.family == "corona_cycle_empty/statement" && r.params == "3,2";
  }));
  CHECK(std::none_of(rows.begin(), rows.end(), [](const VerifyRow& r) {
    return r.family == "corona_cycle_empty/proof" && r.params.rfind("3,", 0) == 0;
  }));
  CHECK(std::none_of(rows.begin(), rows.end(), [](const VerifyRow& r) {
    return r.family.find("closed-form") != std::string::npos;
  }));
}

TEST_CASE("csv rendering") {
  CHECK(csv_header() == "family,kind,params,power,stated,computed,verdict");
  const VerifyRow row{"spider/display", "laplacian", "2,2", "constant", "-15", "-24", "mismatch"};
  CHECK(to_csv_line(row) == "spider/display,laplacian,\"2,2\",constant,-15,-24,mismatch");
  const VerifyRow quoted{"a", "b", "c", "d", "say \"hi\"", "e", "match"};
  CHECK(to_csv_line(quoted) == "a,b,c,d,\"say \"\"hi\"\"\",e,match");
}
