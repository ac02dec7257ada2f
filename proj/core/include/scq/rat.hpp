#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scq {

/// Exact rational on int64, always normalized with den > 0.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rat operator+(Rat a, Rat b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rat operator-(Rat a, Rat b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rat operator*(Rat a, Rat b) { return {a.num * b.num, a.den * b.den}; }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw std::invalid_argument("division by zero");
    return {a.num * b.den, a.den * b.num};
  }
  friend bool operator==(const Rat&, const Rat&) = default;
  friend bool operator<(Rat a, Rat b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(Rat a, Rat b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(Rat a, Rat b) { return b < a; }
  friend bool operator>=(Rat a, Rat b) { return b <= a; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Parses "p" or "p/q".
Rat parse_rat(const std::string& s);

}  // namespace scq
