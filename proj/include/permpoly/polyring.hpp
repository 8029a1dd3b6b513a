#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace permpoly {

using BigInt = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored ascending by power: coeffs()[k] multiplies x^k.
/// The zero polynomial is the empty coefficient vector and has degree -1;
/// every other value has a nonzero leading coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  /// x - root
  static IntPoly linear(const BigInt& root);
  static IntPoly x() { return IntPoly{0, 1}; }
  static IntPoly one() { return IntPoly{1}; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of x^k; zero outside [0, degree].
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& at) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& rhs);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& b) { return a *= b; }
  friend IntPoly operator*(const BigInt& a, IntPoly b) { return b *= a; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Descending human-readable form, e.g. "x^2 - 2x + 2".
  std::string to_string() const;
  /// Ascending decimal strings, the machine form.
  std::vector<std::string> to_decimal_strings() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPoly poly_from_coeffs(const std::vector<BigInt>& coeffs);
IntPoly poly_from_coeffs(std::initializer_list<long> coeffs);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, unsigned k);
BigInt poly_eval(const IntPoly& a, const BigInt& at);

/// Parses the descending text form produced by IntPoly::to_string().
/// Throws ParseError on malformed text.
IntPoly parse_poly(const std::string& text);

}  // namespace permpoly
