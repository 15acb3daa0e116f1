#pragma once

#include <cstdint>

namespace blowup {

/// floor(sqrt(x)) for x >= 0.
std::int64_t isqrt(std::int64_t x);

/// ceil(sqrt(x)) for x >= 0.
std::int64_t ceil_sqrt(std::int64_t x);

/// v <= c + sqrt(x), decided without floating point.
bool leq_plus_sqrt(std::int64_t v, std::int64_t c, std::int64_t x);

/// v >= sqrt(x).
inline bool geq_sqrt(std::int64_t v, std::int64_t x) { return v >= 0 && v * v >= x; }

}  // namespace blowup
