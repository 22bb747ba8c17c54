#pragma once

// End-to-end construction: field -> group -> coset space -> Y(i) ->
// quotient -> lifted Hamilton cycle -> independent verification.

#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"
#include "diag.hpp"
#include "quotient.hpp"

namespace hamlift {

struct InstanceParams {
  std::uint32_t s = 0, m = 0, k = 0, p = 0;

  friend bool operator==(const InstanceParams&, const InstanceParams&) = default;
};

// Default desk-scale guard on k for graph construction.
inline constexpr std::uint32_t kDeskScaleLimit = 5000;

// s prime, p = (k+1)/2 prime, 10 | (k-1).
inline InstanceParams make_instance(std::uint64_t s, std::uint64_t m) {
  if (!is_prime(s)) throw parameter_error("s = " + std::to_string(s) + " is not prime");
  if (m < 1) throw parameter_error("m must be >= 1");
  std::uint64_t k = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    k *= s;
    if (k > kMaxFieldOrder) throw parameter_error("k = s^m is too large");
  }
  if ((k - 1) % 10 != 0) throw parameter_error("k = " + std::to_string(k) + " does not satisfy 10 | (k-1)");
  if (!is_prime((k + 1) / 2))
    throw parameter_error("k = " + std::to_string(k) + ": (k+1)/2 = " + std::to_string((k + 1) / 2) + " is not prime");
  return {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(k),
          static_cast<std::uint32_t>((k + 1) / 2)};
}

// All admissible (s, m) with k <= max_k, sorted by k.
inline std::vector<InstanceParams> list_instances(std::uint64_t max_k) {
  std::vector<InstanceParams> out;
  for (std::uint64_t s = 2; s <= max_k; ++s) {
    if (!is_prime(s)) continue;
    std::uint64_t k = s;
    for (std::uint64_t m = 1; k <= max_k; ++m, k *= s)
      if (k % 10 == 1 && is_prime((k + 1) / 2)) out.push_back(make_instance(s, m));
  }
  std::ranges::sort(out, {}, &InstanceParams::k);
  return out;
}

// The pieces of one instance that every stage needs.
struct Instance {
  InstanceParams params;
  Field field;
  Psl2 group;
  CosetSpace space;
  TorusS s;
  OrbitPartition orbits;

  static Instance build(const InstanceParams& params) {
    Field f = make_field(params.s, params.m);
    Psl2 g(f);
    CosetSpace space(g);
    TorusS s = enumerate_S(g);
    OrbitPartition orbits = s_orbits(space, s);
    return {params, std::move(f), std::move(g), std::move(space), std::move(s), std::move(orbits)};
  }
};

struct PipelineResult {
  HamiltonCertificate certificate;
  VerificationReport report;
  std::uint32_t min_multiplicity = 0;  // min off-diagonal d(A,B) of the quotient used
};

// Y(i) for i = min(orbitals); the cycle is re-verified against the union
// graph X of all requested orbitals (X contains Y(i) as a spanning subgraph).
inline PipelineResult full_graph_mode(const Instance& inst, std::vector<std::uint32_t> orbitals) {
  if (orbitals.empty()) throw parameter_error("need at least one orbital index");
  const OrbitalGraph x = build_union_graph(inst.space, orbitals);
  const std::uint32_t i = x.orbitals().front();
  const OrbitalGraph y = x.orbitals().size() == 1 ? x : build_graph(inst.space, i);
  const QuotientMultigraph q = build_quotient(inst.space, y, inst.orbits);
  if (!q.is_complete()) throw invariant_violation("quotient", "quotient of Y(" + std::to_string(i) + ") is not K10");
  // d(A,B) >= 2 everywhere is not required: lift_cycle only needs one cycle
  // edge with two voltages, and at k = 81 some d(A,B) are 1.

  PipelineResult result;
  result.min_multiplicity = q.min_off_diagonal();
  const auto cycle = identity_orbit_cycle();
  result.certificate = lift_cycle(inst.space, q, inst.orbits, cycle);
  result.report = verify_certificate(result.certificate);
  if (result.report && x.orbitals().size() > 1) result.report = verify_cycle_in(inst.space, x, result.certificate.vertices);
  return result;
}

inline PipelineResult run_pipeline(const Instance& inst, std::uint32_t i) {
  if (i > 4) throw parameter_error("orbital index must be in 0..4");
  return full_graph_mode(inst, {i});
}

inline PipelineResult run_pipeline(const InstanceParams& params, std::uint32_t i) {
  return run_pipeline(Instance::build(params), i);
}

}  // namespace hamlift
