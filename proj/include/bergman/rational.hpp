#ifndef BERGMAN_RATIONAL_HPP
#define BERGMAN_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace bergman {

// Exact rational number with 64-bit numerator and denominator.
// Always normalized: den > 0, gcd(|num|, den) == 1.
// Intermediate products use 128-bit arithmetic; overflow of the reduced
// result throws std::overflow_error.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n);  // NOLINT: implicit integer promotion is intended
  Rat(std::int64_t n, std::int64_t d);

  double to_double() const;
  std::string str() const;  // "num/den", or just "num" when den == 1

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;

  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this < o || *this == o; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }
};

// Parses "a", "a/b", or a finite decimal such as "2.5" / "-0.125".
// Throws domain_error on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

}  // namespace bergman

#endif
