#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace hamlift {

// Trial division; everything here is desk scale.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Least non-negative residue of a mod n, n > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Integer square root, floor(sqrt(n)).
constexpr std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t lo = 0, hi = std::uint64_t{1} << 32;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= n) lo = mid; else hi = mid;
  }
  return lo;
}

// Decides L <= A * sqrt(q) exactly, for integers L, A and q >= 0.
constexpr bool leq_times_sqrt(std::int64_t lhs, std::int64_t coef, std::uint64_t q) {
  const auto sq = [](std::int64_t v) { return static_cast<__int128>(v) * v; };
  if (coef >= 0) {
    if (lhs <= 0) return true;
    return sq(lhs) <= sq(coef) * static_cast<__int128>(q);
  }
  // A*sqrt(q) <= 0 here.
  if (lhs > 0) return false;
  return sq(lhs) >= sq(coef) * static_cast<__int128>(q);
}

}  // namespace hamlift
