#pragma once

// Quotient multigraph of an orbital graph by the S-orbit partition, its
// voltages in Z_p, and lifting of a quotient Hamilton cycle.
//
// Vertex (A, j) denotes orbit[A][j] = act(base(A), sigma^j). Because sigma
// acts as an automorphism, base(A) ~ (B, w) implies (A, j) ~ (B, j + w) for
// every j, so the neighbours of base(A) determine all edges.

#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "orbital.hpp"

namespace hamlift {

inline constexpr std::size_t kOrbitCount = 10;

class QuotientMultigraph {
 public:
  using VoltageTable = std::array<std::array<std::vector<std::uint32_t>, kOrbitCount>, kOrbitCount>;

  QuotientMultigraph(std::uint32_t p, std::vector<std::uint32_t> orbitals, VoltageTable voltages)
      : p_(p), orbitals_(std::move(orbitals)), voltages_(std::move(voltages)) {}

  std::uint32_t p() const { return p_; }
  const std::vector<std::uint32_t>& orbitals() const { return orbitals_; }

  // Sorted w in Z_p with base(a) ~ orbit[b][w].
  const std::vector<std::uint32_t>& voltages(std::size_t a, std::size_t b) const { return voltages_[a][b]; }

  // d(A,B); on the diagonal this is d(A), the valency inside A.
  std::uint32_t mult(std::size_t a, std::size_t b) const { return static_cast<std::uint32_t>(voltages_[a][b].size()); }
  std::uint32_t intra(std::size_t a) const { return mult(a, a); }

  std::uint32_t min_off_diagonal() const {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t a = 0; a < kOrbitCount; ++a)
      for (std::size_t b = 0; b < kOrbitCount; ++b)
        if (a != b) best = std::min(best, mult(a, b));
    return best;
  }

  // Underlying simple graph on the orbits is K_10.
  bool is_complete() const { return min_off_diagonal() >= 1; }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> orbitals_;
  VoltageTable voltages_;
};

// Reads voltages off the neighbours of each base vertex, then checks every
// other vertex of each orbit sees the same voltages shifted by its position.
inline QuotientMultigraph build_quotient(const CosetSpace& space, const OrbitalGraph& graph, const OrbitPartition& orbits) {
  if (orbits.count() != kOrbitCount) throw parameter_error("quotient: expected 10 S-orbits");
  const std::uint32_t p = orbits.orbit_size();
  QuotientMultigraph::VoltageTable vol;
  for (std::size_t a = 0; a < kOrbitCount; ++a) {
    for (auto v : graph.neighbors(space.index(orbits.base(a)))) {
      const auto loc = orbits.locate(v);
      vol[a][loc.orbit].push_back(loc.position);
    }
    for (auto& row : vol[a]) std::ranges::sort(row);
  }

  std::vector<std::uint32_t> counts(kOrbitCount);
  for (std::size_t a = 0; a < kOrbitCount; ++a) {
    for (std::uint32_t j = 1; j < p; ++j) {
      std::ranges::fill(counts, 0);
      for (auto v : graph.neighbors(space.index(orbits.orbit(a)[j]))) {
        const auto loc = orbits.locate(v);
        ++counts[loc.orbit];
        const std::uint32_t w = (loc.position + p - j) % p;
        if (!std::ranges::binary_search(vol[a][loc.orbit], w))
          throw invariant_violation("quotient", "voltage not S-invariant in orbit " + std::to_string(a));
      }
      for (std::size_t b = 0; b < kOrbitCount; ++b)
        if (counts[b] != vol[a][b].size())
          throw invariant_violation("quotient", "d(A,B) differs across orbit " + std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < kOrbitCount; ++a)
    for (std::size_t b = 0; b < kOrbitCount; ++b) {
      if (vol[a][b].size() != vol[b][a].size()) throw invariant_violation("quotient", "multiplicity matrix not symmetric");
      for (auto w : vol[a][b])
        if (!std::ranges::binary_search(vol[b][a], (p - w) % p))
          throw invariant_violation("quotient", "voltages[B][A] is not -voltages[A][B]");
    }
  return QuotientMultigraph(p, graph.orbitals(), std::move(vol));
}

// Cycle lengths of the lift of a closed quotient walk of length L with the
// given per-edge voltages: the permutation (r, j) -> (r+1 mod L, j + v_r) on
// L*p lifted vertices, decomposed into cycles.
inline std::vector<std::uint64_t> lift_components(std::span<const std::uint32_t> voltages, std::uint32_t p) {
  const std::size_t len = voltages.size();
  const std::size_t n = len * p;
  std::vector<char> seen(n, 0);
  std::vector<std::uint64_t> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    std::size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = 1;
      ++length;
      const std::size_t r = cur / p, j = cur % p;
      cur = ((r + 1) % len) * p + (j + voltages[r]) % p;
    }
    out.push_back(length);
  }
  return out;
}

struct HamiltonCertificate {
  std::uint32_t k = 0, s = 0, m = 0, p = 0;
  std::uint32_t orbital = 0;
  std::vector<std::uint32_t> orbit_cycle;   // length 10
  std::vector<std::uint32_t> voltages;      // voltage on edge orbit_cycle[r] -> orbit_cycle[r+1]
  std::uint32_t total_voltage = 0;
  std::vector<OmegaPoint> vertices;         // length 10p

  friend bool operator==(const HamiltonCertificate&, const HamiltonCertificate&) = default;
};

inline std::vector<std::uint32_t> identity_orbit_cycle() {
  std::vector<std::uint32_t> c(kOrbitCount);
  std::iota(c.begin(), c.end(), 0u);
  return c;
}

// Chooses one voltage per cycle edge with nonzero total mod p (smallest on
// every edge, then alternatives on the first edge of multiplicity >= 2) and
// unrolls the closed walk p times.
inline HamiltonCertificate lift_cycle(const CosetSpace& space, const QuotientMultigraph& q, const OrbitPartition& orbits,
                                      std::span<const std::uint32_t> cycle) {
  if (cycle.size() != kOrbitCount) throw parameter_error("quotient: cycle must visit all 10 orbits");
  if (std::set<std::uint32_t>(cycle.begin(), cycle.end()).size() != kOrbitCount ||
      *std::ranges::max_element(cycle) >= kOrbitCount)
    throw parameter_error("quotient: cycle must be a permutation of 0..9");
  const std::uint32_t p = q.p();
  const auto edge = [&](std::size_t r) -> const std::vector<std::uint32_t>& {
    return q.voltages(cycle[r], cycle[(r + 1) % cycle.size()]);
  };

  std::vector<std::uint32_t> chosen;
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < cycle.size(); ++r) {
    if (edge(r).empty()) throw parameter_error("quotient: cycle uses a non-edge of the quotient");
    chosen.push_back(edge(r).front());
    total += chosen.back();
  }
  if (total % p == 0) {
    bool fixed = false;
    for (std::size_t r = 0; r < cycle.size() && !fixed; ++r) {
      if (edge(r).size() < 2) continue;
      for (std::size_t alt = 1; alt < edge(r).size(); ++alt) {
        const std::uint64_t candidate = total - chosen[r] + edge(r)[alt];
        if (candidate % p != 0) {
          total = candidate;
          chosen[r] = edge(r)[alt];
          fixed = true;
          break;
        }
      }
    }
    if (!fixed) throw invariant_violation("quotient", "no voltage selection gives a nonzero total");
  }

  HamiltonCertificate cert;
  const Field& f = space.field();
  cert.k = f.order();
  cert.s = f.characteristic();
  cert.m = f.degree();
  cert.p = p;
  cert.orbital = q.orbitals().front();
  cert.orbit_cycle.assign(cycle.begin(), cycle.end());
  cert.voltages = chosen;
  cert.total_voltage = static_cast<std::uint32_t>(total % p);
  cert.vertices.reserve(static_cast<std::size_t>(cycle.size()) * p);
  std::uint32_t pos = 0;
  for (std::uint32_t lap = 0; lap < p; ++lap)
    for (std::size_t r = 0; r < cycle.size(); ++r) {
      cert.vertices.push_back(orbits.orbit(cycle[r])[pos]);
      pos = (pos + chosen[r]) % p;
    }
  return cert;
}

struct VerificationReport {
  bool ok = true;
  std::string failure;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline VerificationReport fail(std::string why) { return {false, std::move(why)}; }

template <class Adjacent>
VerificationReport check_hamilton_cycle(const CosetSpace& space, const std::vector<OmegaPoint>& cycle, Adjacent adjacent) {
  if (cycle.size() != space.size())
    return fail("cycle has " + std::to_string(cycle.size()) + " vertices, expected " + std::to_string(space.size()));
  std::vector<char> seen(space.size(), 0);
  for (const auto& w : cycle) {
    if (!space.contains(w)) return fail("invalid vertex " + space.to_string(w));
    auto& slot = seen[space.index(w)];
    if (slot) return fail("vertex " + space.to_string(w) + " repeated");
    slot = 1;
  }
  for (std::size_t r = 0; r < cycle.size(); ++r) {
    const auto& a = cycle[r];
    const auto& b = cycle[(r + 1) % cycle.size()];
    if (!adjacent(a, b))
      return fail("positions " + std::to_string(r) + " and " + std::to_string((r + 1) % cycle.size()) + " (" +
                  space.to_string(a) + ", " + space.to_string(b) + ") are not adjacent");
  }
  return {};
}

}  // namespace detail

// Independent check against closed-form neighbourhoods only: rebuilds the
// field and group from (s, m) and never consults a stored graph.
inline VerificationReport verify_certificate(const HamiltonCertificate& cert) {
  using detail::fail;
  std::optional<Field> field;
  try {
    field = make_field(cert.s, cert.m);
  } catch (const parameter_error& e) {
    return fail(std::string("bad field parameters: ") + e.what());
  }
  const Field& f = *field;
  if (f.order() != cert.k) return fail("k does not equal s^m");
  if (cert.k % 10 != 1 || cert.p != (cert.k + 1) / 2) return fail("p does not equal (k+1)/2");
  if (cert.orbital > 4) return fail("orbital index out of range");
  if (cert.orbit_cycle.size() != kOrbitCount || cert.voltages.size() != kOrbitCount) return fail("orbit cycle must have length 10");
  std::uint64_t total = 0;
  for (auto v : cert.voltages) total += v;
  if (total % cert.p != cert.total_voltage) return fail("total voltage does not match voltages");
  if (cert.total_voltage == 0) return fail("total voltage is 0 mod p");

  const CosetSpace space{Psl2(f)};
  const std::uint32_t i = cert.orbital;
  return detail::check_hamilton_cycle(space, cert.vertices, [&](const OmegaPoint& a, const OmegaPoint& b) {
    const auto nb = neighborhood(space, i, a);
    return std::ranges::binary_search(nb, space.index(b), {}, [&](const OmegaPoint& v) { return space.index(v); });
  });
}

// Checks `cycle` is a Hamilton cycle of an explicitly built graph.
inline VerificationReport verify_cycle_in(const CosetSpace& space, const OrbitalGraph& graph,
                                          const std::vector<OmegaPoint>& cycle) {
  return detail::check_hamilton_cycle(space, cycle, [&](const OmegaPoint& a, const OmegaPoint& b) {
    return graph.has_edge(space.index(a), space.index(b));
  });
}

}  // namespace hamlift
