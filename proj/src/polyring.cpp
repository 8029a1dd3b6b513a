#include "permpoly/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "permpoly/error.hpp"

namespace permpoly {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::linear(const BigInt& root) {
  return IntPoly(std::vector<BigInt>{-root, BigInt(1)});
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPoly::eval(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::vector<std::string> IntPoly::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

IntPoly poly_from_coeffs(const std::vector<BigInt>& coeffs) { return IntPoly(coeffs); }
IntPoly poly_from_coeffs(std::initializer_list<long> coeffs) { return IntPoly(coeffs); }
IntPoly poly_add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }
BigInt poly_eval(const IntPoly& a, const BigInt& at) { return a.eval(at); }

IntPoly poly_pow(const IntPoly& a, unsigned k) {
  IntPoly result = IntPoly::one();
  IntPoly base = a;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

IntPoly parse_poly(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial text");
  if (s == "0") return {};

  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("polynomial text '" + text + "': " + why);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!coeffs.empty() || pos != 0) {
      fail("expected sign between terms");
    }
    std::size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt mag = 1;
    bool has_digits = pos > digits_begin;
    if (has_digits) mag = BigInt(s.substr(digits_begin, pos - digits_begin));
    std::size_t power = 0;
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t pb = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == pb) fail("missing exponent");
        power = std::stoul(s.substr(pb, pos - pb));
      }
    } else if (!has_digits) {
      fail("term without coefficient or x");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sign * mag;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace permpoly
