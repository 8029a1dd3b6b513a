#include <doctest.h>

#include <random>

#include "permpoly/error.hpp"
#include "permpoly/polyring.hpp"
#include "support.hpp"

using namespace permpoly;

TEST_CASE("construction from ascending coefficients") {
  const IntPoly zero = poly_from_coeffs({0});
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.to_string() == "0");
  CHECK(poly_from_coeffs({2, -2, 1}).to_string() == "x^2 - 2x + 2");
  CHECK(poly_from_coeffs({1, 0, 0}) == IntPoly{1});
  CHECK(poly_from_coeffs({74, -222, 273, -176, 63, -12, 1}).to_string() ==
        "x^6 - 12x^5 + 63x^4 - 176x^3 + 273x^2 - 222x + 74");
}

TEST_CASE("addition") {
  CHECK(poly_add(IntPoly{-1, 1}, IntPoly{1}) == IntPoly::x());
  CHECK(poly_add(IntPoly{3, -3, 1}, IntPoly{-1, 1}) == IntPoly{2, -2, 1});
  const IntPoly p{5, 0, -7};
  CHECK(poly_add(IntPoly{}, p) == p);
  CHECK((IntPoly{0, 0, 1} - IntPoly{0, 0, 1}).degree() == -1);
}

TEST_CASE("multiplication") {
  CHECK(poly_mul(IntPoly{-1, 1}, IntPoly{-1, 1}) == IntPoly{1, -2, 1});
  CHECK(poly_mul(IntPoly{-2, 1}, IntPoly{3, -3, 1}) == IntPoly{-6, 9, -5, 1});
  CHECK(poly_mul(IntPoly{3, -3, 1}, IntPoly{}).is_zero());
}

TEST_CASE("powers") {
  CHECK(poly_pow(IntPoly{-1, 1}, 0) == IntPoly::one());
  CHECK(poly_pow(IntPoly{-2, 1}, 6) == IntPoly{64, -192, 240, -160, 60, -12, 1});
  CHECK(poly_pow(IntPoly{-1, 1}, 3) == IntPoly{-1, 3, -3, 1});
  CHECK(poly_pow(IntPoly{}, 0) == IntPoly::one());
}

TEST_CASE("evaluation") {
  CHECK(poly_eval(IntPoly{2, -2, 1}, 0) == 2);
  CHECK(poly_eval(oracle::path_laplacian(5), 0) == -24);
  CHECK(poly_eval(IntPoly{-1, 3, -3, 1}, 1) == 0);
  CHECK(poly_eval(IntPoly{}, 17) == 0);
}

TEST_CASE("big coefficients stay exact") {
  const IntPoly p = poly_pow(IntPoly{-7, 1}, 40);
  BigInt expected;
  mpz_pow_ui(expected.get_mpz_t(), BigInt(7).get_mpz_t(), 40);
  CHECK(p.coeff(0) == expected);
  CHECK(p.eval(7) == 0);
  CHECK(p.eval(8) == 1);
}

TEST_CASE("text rendering and parsing round trip") {
  CHECK(IntPoly{-1, 1}.to_string() == "x - 1");
  CHECK(IntPoly{0, -1}.to_string() == "-x");
  CHECK(IntPoly{-60, 243, -408, 371, -200, 65, -12, 1}.to_string() ==
        "x^7 - 12x^6 + 65x^5 - 200x^4 + 371x^3 - 408x^2 + 243x - 60");
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly p = oracle::random_poly(rng, 9, 1000);
    CHECK(parse_poly(p.to_string()) == p);
  }
  CHECK(parse_poly("x^3-4x^2 +7x- 4") == IntPoly{-4, 7, -4, 1});
  CHECK(parse_poly("-x^2 + x^2 + 3") == IntPoly{3});
  CHECK_THROWS_AS(parse_poly("x^^2"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("2y"), ParseError);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> point(-10, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPoly a = oracle::random_poly(rng, 6, 50);
    const IntPoly b = oracle::random_poly(rng, 6, 50);
    const IntPoly c = oracle::random_poly(rng, 6, 50);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == IntPoly{});
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    const BigInt t = point(rng);
    CHECK(poly_eval(a * b, t) == poly_eval(a, t) * poly_eval(b, t));
    // Normalized storage: rebuilding from the coefficients is the identity.
    CHECK(IntPoly(a.coeffs()) == a);
    CHECK((a.is_zero() || a.coeffs().back() != 0));
  }
}

TEST_CASE("decimal strings are ascending") {
  const auto s = IntPoly{-4, 7, -4, 1}.to_decimal_strings();
  REQUIRE(s.size() == 4);
  CHECK(s[0] == "-4");
  CHECK(s[3] == "1");
}
