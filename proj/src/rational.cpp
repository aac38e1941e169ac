#include "bergman/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rat make_normalized(i128 n, i128 d) {
  if (d == 0) throw domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rat r;
  r.num = checked_narrow(n);
  r.den = checked_narrow(d);
  return r;
}

}  // namespace

Rat::Rat(std::int64_t n) : num(n), den(1) {}

Rat::Rat(std::int64_t n, std::int64_t d) {
  *this = make_normalized(n, d);
}

double Rat::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rat Rat::operator-() const {
  Rat r;
  r.num = -num;
  r.den = den;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  return make_normalized(i128(num) * o.den + i128(o.num) * den,
                         i128(den) * o.den);
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
  return make_normalized(i128(num) * o.num, i128(den) * o.den);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw domain_error("rational division by zero");
  return make_normalized(i128(num) * o.den, i128(den) * o.num);
}

bool Rat::operator<(const Rat& o) const {
  return i128(num) * o.den < i128(o.num) * den;
}

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw domain_error("empty rational literal");

  auto parse_int = [](const std::string& t) -> std::int64_t {
    if (t.empty()) throw domain_error("malformed rational literal");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw domain_error("malformed rational literal");
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
        throw domain_error("malformed rational literal: " + t);
      }
    }
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(t.c_str(), &end, 10);
    if (errno == ERANGE || end != t.c_str() + t.size()) {
      throw domain_error("rational literal out of range: " + t);
    }
    return v;
  };

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    if (s.find('/', slash + 1) != std::string::npos || s.find('.') != std::string::npos) {
      throw domain_error("malformed rational literal: " + text);
    }
    return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(parse_int(s));

  std::string head = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  if (frac.empty() || frac.size() > 18) {
    throw domain_error("malformed rational literal: " + text);
  }
  bool neg = !head.empty() && head[0] == '-';
  if (head == "-" || head == "+" || head.empty()) head += "0";
  std::int64_t ip = parse_int(head);
  std::int64_t fp = parse_int(frac);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  i128 n = i128(ip) * scale + (neg ? -i128(fp) : i128(fp));
  return Rat(checked_narrow(n), scale);
}

}  // namespace bergman
