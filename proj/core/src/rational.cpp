#include "hsmedian/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace hsm {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw std::invalid_argument("sign without digits: '" + text + "'");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("bad fraction literal: '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rat r(n, d);
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }

  // Decimal with optional exponent: digits[.digits][(e|E)[sign]digits]
  std::string mantissa = s;
  long exponent = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    std::string expo = s.substr(epos + 1);
    bool eneg = false;
    if (!expo.empty() && (expo[0] == '+' || expo[0] == '-')) {
      eneg = expo[0] == '-';
      expo.erase(0, 1);
    }
    if (!all_digits(expo)) throw std::invalid_argument("bad exponent: '" + text + "'");
    if (expo.size() > 6) throw std::invalid_argument("exponent out of range: '" + text + "'");
    exponent = std::stol(expo);
    if (eneg) exponent = -exponent;
  }

  std::string digits;
  auto dot = mantissa.find('.');
  if (dot == std::string::npos) {
    digits = mantissa;
  } else {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
  }
  if (!all_digits(digits)) throw std::invalid_argument("bad rational literal: '" + text + "'");

  mpz_class n(digits);
  Rat r(n);
  if (exponent > 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
    r *= Rat(p);
  } else if (exponent < 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-exponent));
    r /= Rat(p);
  }
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

std::string to_fraction_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rat& r) { return r.get_d(); }

std::string to_approx_string(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", r.get_d());
  return buf;
}

int sign(const Rat& r) { return sgn(r); }

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

long ceil_div(long a, long b) { return (a + b - 1) / b; }
long floor_div(long a, long b) { return a / b; }

int compare_lex(const Vec& a, const Vec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

}  // namespace hsm
