#pragma once

// Two-variable diagonal equations a1 x1^k1 + a2 x2^k2 = b over GF(q):
// exact solution counts and the Weil-type bound
//   |N - q| <= [(d1-1)(d2-1) - (1 - q^{-1/2}) M(d1,d2)] q^{1/2},
// with d_i = gcd(k_i, q-1). The inequality is decided in integers: it is
// equivalent to |N - q| - M <= ((d1-1)(d2-1) - M) sqrt(q).

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "gf.hpp"

namespace hamlift {

struct DiagonalEquation {
  FieldElement a1, a2;
  std::uint64_t k1 = 1, k2 = 1;
  FieldElement b;
};

namespace detail {

// counts[v] = #{x : a x^e = v}
inline std::vector<std::uint64_t> value_counts(const Field& f, FieldElement a, std::uint64_t e) {
  std::vector<std::uint64_t> counts(f.order(), 0);
  for (auto x : f.elements()) ++counts[f.mul(a, f.pow(x, static_cast<std::int64_t>(e))).code()];
  return counts;
}

inline void check_equation(const Field& f, const DiagonalEquation& eq) {
  if (eq.a1.is_zero() || eq.a2.is_zero()) throw parameter_error("diag: coefficients must be nonzero");
  if (eq.k1 < 1 || eq.k2 < 1) throw parameter_error("diag: exponents must be positive");
  if (!f.contains(eq.a1) || !f.contains(eq.a2) || !f.contains(eq.b)) throw parameter_error("diag: element not in field");
}

}  // namespace detail

// N via the value multisets of a1 x^k1 and a2 y^k2: O(q) instead of O(q^2).
inline std::uint64_t count_solutions(const Field& f, const DiagonalEquation& eq) {
  detail::check_equation(f, eq);
  const auto c1 = detail::value_counts(f, eq.a1, eq.k1);
  const auto c2 = detail::value_counts(f, eq.a2, eq.k2);
  std::uint64_t n = 0;
  for (auto v : f.elements())
    if (c1[v.code()] != 0) n += c1[v.code()] * c2[f.sub(eq.b, v).code()];
  return n;
}

// Solutions with x2 = 0, i.e. #{x1 : a1 x1^k1 = b}.
inline std::uint64_t count_solutions_y_zero(const Field& f, const DiagonalEquation& eq) {
  detail::check_equation(f, eq);
  return detail::value_counts(f, eq.a1, eq.k1)[eq.b.code()];
}

inline std::uint64_t count_solutions_y_nonzero(const Field& f, const DiagonalEquation& eq) {
  return count_solutions(f, eq) - count_solutions_y_zero(f, eq);
}

inline bool has_nonzero_y_solution(const Field& f, const DiagonalEquation& eq) {
  return count_solutions_y_nonzero(f, eq) > 0;
}

// #{(j1, j2) : 1 <= j_i <= d_i - 1, j1/d1 + j2/d2 in Z}
inline std::uint64_t m_pairs(std::uint64_t d1, std::uint64_t d2) {
  if (d1 < 1 || d2 < 1) throw parameter_error("diag: m_pairs needs d1, d2 >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t j1 = 1; j1 < d1; ++j1)
    for (std::uint64_t j2 = 1; j2 < d2; ++j2)
      if ((j1 * d2 + j2 * d1) % (d1 * d2) == 0) ++count;
  return count;
}

struct WeilReport {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t d1 = 0, d2 = 0;
  std::uint64_t m = 0;
  // bound = sqrt_coef * sqrt(q) + m
  std::int64_t sqrt_coef = 0;
  double bound = 0;
  bool holds = false;
};

inline WeilReport weil_check(const Field& f, const DiagonalEquation& eq) {
  if (eq.b.is_zero()) throw parameter_error("diag: Weil bound needs b != 0");
  WeilReport r;
  r.q = f.order();
  r.n = count_solutions(f, eq);
  r.d1 = std::gcd(eq.k1, r.q - 1);
  r.d2 = std::gcd(eq.k2, r.q - 1);
  r.m = m_pairs(r.d1, r.d2);
  r.sqrt_coef = static_cast<std::int64_t>((r.d1 - 1) * (r.d2 - 1)) - static_cast<std::int64_t>(r.m);
  r.bound = static_cast<double>(r.sqrt_coef) * std::sqrt(static_cast<double>(r.q)) + static_cast<double>(r.m);
  const std::int64_t dev = r.n >= r.q ? static_cast<std::int64_t>(r.n - r.q) : static_cast<std::int64_t>(r.q - r.n);
  r.holds = leq_times_sqrt(dev - static_cast<std::int64_t>(r.m), r.sqrt_coef, r.q);
  return r;
}

// The specialised equations behind the quotient multiplicities in Y(i):
//   claim 1 (orbit n -> orbit j):         a^2 + c y^10 = 1,   c = -theta^{2(j-i+n)-1}
//   claim 2 (orbit n -> orbit 5+j):  theta b^2 + c y^10 = -1, c = -theta^{2(j-i+n)}
//   claim 3 (orbit 5+n -> orbit 5+j):     a^2 + c y^10 = 1,   c = -theta^{2(j-i+n)+1}
// Each has exactly 10 * d(A,B) solutions with y != 0.
inline DiagonalEquation claim_equation(const Field& f, int claim, std::uint32_t i, std::uint32_t j, std::uint32_t n) {
  if (i > 4 || j > 4 || n > 4) throw parameter_error("diag: claim indices must be in 0..4");
  const std::int64_t e = 2 * (static_cast<std::int64_t>(j) - i + n);
  switch (claim) {
    case 1: return {f.one(), f.neg(f.theta_pow(e - 1)), 2, 10, f.one()};
    case 2: return {f.theta(), f.neg(f.theta_pow(e)), 2, 10, f.neg(f.one())};
    case 3: return {f.one(), f.neg(f.theta_pow(e + 1)), 2, 10, f.one()};
    default: throw parameter_error("diag: claim must be 1, 2 or 3");
  }
}

// Orbit pair (A, B) of the quotient of Y(i) matching claim_equation(claim, i, j, n).
inline std::pair<std::uint32_t, std::uint32_t> claim_orbits(int claim, std::uint32_t j, std::uint32_t n) {
  switch (claim) {
    case 1: return {n, j};
    case 2: return {n, 5 + j};
    case 3: return {5 + n, 5 + j};
    default: throw parameter_error("diag: claim must be 1, 2 or 3");
  }
}

// N_{y != 0} >= k - 8 sqrt(k) - 3, decided exactly.
inline bool meets_claim_bound(std::uint64_t k, std::uint64_t nonzero_y) {
  // k - 3 - N <= 8 sqrt(k)
  return leq_times_sqrt(static_cast<std::int64_t>(k) - 3 - static_cast<std::int64_t>(nonzero_y), 8, k);
}

// One row per (claim, i, j, n).
inline void write_weil_report(std::ostream& os, const Field& f) {
  os << "k\tclaim\ti\tj\tn\tN_total\tN_y_nonzero\tbound\tholds\tclaim_bound_holds\n";
  for (int claim = 1; claim <= 3; ++claim)
    for (std::uint32_t i = 0; i < 5; ++i)
      for (std::uint32_t j = 0; j < 5; ++j)
        for (std::uint32_t n = 0; n < 5; ++n) {
          const auto eq = claim_equation(f, claim, i, j, n);
          const auto rep = weil_check(f, eq);
          const auto nonzero = rep.n - count_solutions_y_zero(f, eq);
          os << f.order() << '\t' << claim << '\t' << i << '\t' << j << '\t' << n << '\t' << rep.n << '\t' << nonzero
             << '\t' << std::fixed << std::setprecision(4) << rep.bound << '\t' << (rep.holds ? "yes" : "no") << '\t'
             << (meets_claim_bound(f.order(), nonzero) ? "yes" : "no") << '\n';
        }
}

}  // namespace hamlift
