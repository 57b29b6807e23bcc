#include "rsq/rational.hpp"

#include <stdexcept>

namespace rsq {

Vec3 projective_normalize(const Vec3& v) {
  if (is_zero(v)) throw std::invalid_argument("cannot normalize the zero vector");
  BigInt l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, rat_den(x));
  std::array<BigInt, 3> n;
  for (int i = 0; i < 3; ++i) n[i] = rat_num(v[i]) * (l / rat_den(v[i]));
  BigInt g = 0;
  for (const auto& x : n) g = boost::multiprecision::gcd(g, abs(x));
  for (auto& x : n) x /= g;
  for (const auto& x : n) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : n) y = -y;
    break;
  }
  return Vec3{Rat(n[0]), Rat(n[1]), Rat(n[2])};
}

} // namespace rsq
