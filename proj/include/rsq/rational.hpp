// Exact arithmetic aliases and parsing helpers. No floating point anywhere downstream.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <stdexcept>
#include <string>

namespace rsq {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const BigInt& n) { return n.sign(); }

// Accepts "p/q", "p", optional leading '-'. Throws std::invalid_argument on junk.
inline Rat parse_rational(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) bad();
    BigInt d(den);
    if (d == 0) bad();
    return Rat(BigInt(num), d);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat(0); // unreachable
}

inline std::string rational_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

using Vec3 = std::array<Rat, 3>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Rat dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Canonical representative of a projective point/line over Q: clear denominators,
// divide by content, first nonzero coordinate positive. Equal projective objects
// map to equal arrays.
Vec3 projective_normalize(const Vec3& v);

} // namespace rsq
