#include "blowup/exact.hpp"

#include <cmath>

#include "blowup/error.hpp"

namespace blowup {

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw InvalidInput("square root of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t ceil_sqrt(std::int64_t x) {
  const std::int64_t r = isqrt(x);
  return r * r == x ? r : r + 1;
}

bool leq_plus_sqrt(std::int64_t v, std::int64_t c, std::int64_t x) {
  const std::int64_t lhs = v - c;
  return lhs <= 0 || lhs * lhs <= x;
}

}  // namespace blowup
