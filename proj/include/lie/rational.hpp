// Exact rational scalar type and small helpers shared by every module.
//
// All engine arithmetic is exact: coweight coordinates, automorphism phases
// and structure constants are rationals with small numerators, so
// boost::rational over long long has ample headroom.
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lie {

using Rat = boost::rational<long long>;

// Canonical representative of q modulo m (m > 0), in the range [0, m).
inline Rat mod(const Rat& q, long long m) {
  Rat r = q;
  const Rat period(m);
  // q - floor(q/m)*m, computed exactly.
  long long f = (q.numerator() >= 0)
                    ? q.numerator() / (q.denominator() * m)
                    : -((-q.numerator() + q.denominator() * m - 1) /
                        (q.denominator() * m));
  r -= Rat(f) * period;
  while (r >= period) r -= period;
  while (r < Rat(0)) r += period;
  return r;
}

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

// True when q is an even integer (phases are tracked modulo 2, where an
// even integer phase means "no sign").
inline bool is_even_integer(const Rat& q) {
  return q.denominator() == 1 && q.numerator() % 2 == 0;
}

inline long long to_int(const Rat& q) {
  if (q.denominator() != 1) throw std::domain_error("to_int: not an integer");
  return q.numerator();
}

inline std::string to_string(const Rat& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
  return s;
}

// Parses "n", "-n", or "n/d".  Throws std::invalid_argument on junk.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  }
}

using RatVec = std::vector<Rat>;

inline RatVec operator+(RatVec a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline RatVec operator-(RatVec a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline RatVec operator*(const Rat& c, RatVec a) {
  for (auto& x : a) x *= c;
  return a;
}

inline bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != Rat(0)) return false;
  return true;
}

}  // namespace lie
