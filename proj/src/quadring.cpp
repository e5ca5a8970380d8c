#include "bianchi/quadring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace bianchi {

RingSpec make_ring(long d) {
  if (d == 0 || d == 1)
    throw std::invalid_argument("make_ring: d must not be 0 or 1");
  if (d > 1000000000000L || d < -1000000000000L)
    throw capacity_error("make_ring: |d| above 10^12 (squarefree check is "
                         "trial division)");
  if (long sq = square_factor(d); sq != 0)
    throw std::invalid_argument("make_ring: d = " + std::to_string(d) +
                                " is not squarefree (" + std::to_string(sq) +
                                " divides it)");
  RingSpec R;
  R.d = d;
  if (mod_floor(d, 4) == 1) {
    R.s = (d - 1) / 4;
    R.t = 1;
    R.disc = d;
  } else {
    R.s = d;
    R.t = 0;
    R.disc = 4 * d;
  }
  return R;
}

QuadInt mul(const QuadInt& x, const QuadInt& y, const RingSpec& R) {
  // (a1 + b1 w)(a2 + b2 w) = a1 a2 + s b1 b2 + (a1 b2 + a2 b1 + t b1 b2) w
  Int bb = x.b * y.b;
  QuadInt z;
  z.a = x.a * y.a + R.s * bb;
  z.b = x.a * y.b + x.b * y.a;
  if (R.t) z.b += bb;
  return z;
}

QuadInt conj(const QuadInt& x, const RingSpec& R) {
  return {x.a + R.t * x.b, -x.b};
}

Int norm(const QuadInt& x, const RingSpec& R) {
  // a^2 + t ab - s b^2
  Int n = x.a * x.a - R.s * x.b * x.b;
  if (R.t) n += x.a * x.b;
  return n;
}

Int trace(const QuadInt& x, const RingSpec& R) {
  return 2 * x.a + R.t * x.b;
}

std::string to_string(const QuadInt& x) {
  if (x.b == 0) return x.a.get_str();
  std::string wpart = x.b.get_str() + "*w";
  if (x.a == 0) return wpart;
  return x.a.get_str() + (x.b > 0 ? "+" : "") + wpart;
}

namespace {

// One term of "a+b*w": [sign] digits ['*'] ['w'] in any of the usual
// spellings (5, w, -w, 3*w, 3w).
void parse_term(const std::string& s, size_t& i, QuadInt& out) {
  int sign = 1;
  while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -sign;
    ++i;
  }
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  std::string digits;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    digits += s[i++];
  while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) ||
                          s[i] == '*'))
    ++i;
  bool has_w = false;
  if (i < s.size() && s[i] == 'w') {
    has_w = true;
    ++i;
  }
  if (digits.empty() && !has_w)
    throw std::invalid_argument("parse_quadint: empty term in '" + s + "'");
  Int coeff = digits.empty() ? Int(1) : Int(digits);
  if (sign < 0) coeff = -coeff;
  if (has_w)
    out.b += coeff;
  else
    out.a += coeff;
}

}  // namespace

QuadInt parse_quadint(const std::string& text) {
  QuadInt out;
  size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    parse_term(text, i, out);
    any = true;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i < text.size() && text[i] != '+' && text[i] != '-')
      throw std::invalid_argument("parse_quadint: unexpected '" +
                                  std::string(1, text[i]) + "' in '" + text +
                                  "'");
  }
  if (!any) throw std::invalid_argument("parse_quadint: empty input");
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
  return os << to_string(x);
}

}  // namespace bianchi
