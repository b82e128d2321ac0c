#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace symlift {

// Cantor pairing (a, b) -> (a+b)(a+b+1)/2 + b and its inverse, plus the
// usual zig-zag folding of the integers onto the naturals. These back all
// the column schemes, so monotonicity in b for fixed a matters: it makes
// each column enumerate its points in increasing order.

inline std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s * (s + 1) / 2 + b;
}

inline std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  while (w * (w + 1) / 2 > n) --w;
  std::uint64_t b = n - w * (w + 1) / 2;
  return {w - b, b};
}

// 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...
inline std::uint64_t fold_int(long long i) {
  return i >= 0 ? 2ull * static_cast<std::uint64_t>(i)
                : 2ull * static_cast<std::uint64_t>(-(i + 1)) + 1ull;
}

inline long long unfold_int(std::uint64_t a) {
  return a % 2 == 0 ? static_cast<long long>(a / 2)
                    : -static_cast<long long>(a / 2) - 1;
}

}  // namespace symlift
