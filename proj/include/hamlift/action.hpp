#pragma once

// The coset space Omega = G\H, |Omega| = 5(k+1), with G acting on the right.
//
// A coset Hg is labelled (beta, fiber):
//   beta  = image of infinity under g. With row-vector action,
//           infinity = [0:1] and beta = [1:beta], this is g22/g21 (or
//           infinity if g21 = 0). It depends only on the K-coset Kg.
//   fiber = dlog(a) mod 5, where g * g_beta^{-1} = [[a,b],[0,1/a]] lies in
//           K = G_infinity. Well defined in PSL because 5 | (k-1)/2.
// The transversal is g_inf = 1 and g_beta = [[0,-1],[1,beta]] = ell u^beta.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "psl2.hpp"

namespace hamlift {

class ProjectivePoint {
 public:
  static constexpr ProjectivePoint infinity() { return ProjectivePoint(kInf); }
  static constexpr ProjectivePoint finite(FieldElement x) { return ProjectivePoint(x.code()); }

  constexpr bool is_infinity() const { return code_ == kInf; }
  constexpr FieldElement value() const { return FieldElement(code_); }

  friend constexpr bool operator==(ProjectivePoint, ProjectivePoint) = default;

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  constexpr explicit ProjectivePoint(std::uint32_t c) : code_(c) {}
  std::uint32_t code_;
};

struct OmegaPoint {
  ProjectivePoint beta = ProjectivePoint::infinity();
  std::uint32_t fiber = 0;

  friend constexpr bool operator==(const OmegaPoint&, const OmegaPoint&) = default;
};

class CosetSpace {
 public:
  explicit CosetSpace(Psl2 group) : g_(std::move(group)) {
    const std::uint32_t k = field().order();
    if (k % 10 != 1) throw parameter_error("action: coset space needs 10 | (k-1), got k = " + std::to_string(k));
  }

  const Psl2& group() const { return g_; }
  const Field& field() const { return g_.field(); }

  std::uint32_t size() const { return 5 * (field().order() + 1); }

  // alpha = H
  OmegaPoint base_point() const { return {ProjectivePoint::infinity(), 0}; }

  // Fixed representative g_beta of the K-coset mapping infinity to beta.
  GroupElement transversal(ProjectivePoint beta) const {
    if (beta.is_infinity()) return g_.identity();
    const Field& f = field();
    return g_.make(f.zero(), f.neg(f.one()), f.one(), beta.value());
  }

  // rep((beta, i)) = t^i g_beta
  GroupElement representative(const OmegaPoint& w) const {
    return g_.mul(g_.t_power(w.fiber), transversal(w.beta));
  }

  ProjectivePoint infinity_image(const GroupElement& g) const {
    if (g.a21().is_zero()) return ProjectivePoint::infinity();
    return ProjectivePoint::finite(field().div(g.a22(), g.a21()));
  }

  // Label of the coset Hg.
  OmegaPoint point_of(const GroupElement& g) const {
    const ProjectivePoint beta = infinity_image(g);
    const GroupElement kappa = g_.mul(g, g_.inverse(transversal(beta)));
    if (!kappa.a21().is_zero()) throw invariant_violation("action", "coset decomposition left K");
    return {beta, field().dlog(kappa.a11()) % 5};
  }

  OmegaPoint act(const OmegaPoint& w, const GroupElement& g) const {
    return point_of(g_.mul(representative(w), g));
  }

  // Position in the fixed vertex order: sorted by (fiber, beta), infinity
  // first, finite beta by field-element code.
  std::uint32_t index(const OmegaPoint& w) const {
    const std::uint32_t slot = w.beta.is_infinity() ? 0 : 1 + w.beta.value().code();
    return w.fiber * (field().order() + 1) + slot;
  }

  OmegaPoint point(std::uint32_t idx) const {
    const std::uint32_t per = field().order() + 1;
    const std::uint32_t slot = idx % per;
    return {slot == 0 ? ProjectivePoint::infinity() : ProjectivePoint::finite(FieldElement(slot - 1)), idx / per};
  }

  bool contains(const OmegaPoint& w) const {
    return w.fiber < 5 && (w.beta.is_infinity() || field().contains(w.beta.value()));
  }

  std::vector<OmegaPoint> points() const {
    std::vector<OmegaPoint> out;
    out.reserve(size());
    for (std::uint32_t i = 0; i < size(); ++i) out.push_back(point(i));
    return out;
  }

  // "inf:f" or "<beta>:f"
  std::string to_string(const OmegaPoint& w) const {
    return (w.beta.is_infinity() ? std::string("inf") : field().to_string(w.beta.value())) + ":" +
           std::to_string(w.fiber);
  }

  OmegaPoint parse(std::string_view text) const {
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon + 2 != text.size() || text[colon + 1] < '0' || text[colon + 1] > '4')
      throw parameter_error("action: cannot parse point '" + std::string(text) + "'");
    const auto head = text.substr(0, colon);
    const std::uint32_t fiber = static_cast<std::uint32_t>(text[colon + 1] - '0');
    if (head == "inf") return {ProjectivePoint::infinity(), fiber};
    return {ProjectivePoint::finite(field().parse(head)), fiber};
  }

 private:
  Psl2 g_;
};

// The ten S-orbits: index i -> alpha^{t^i S}, 5+i -> alpha^{t^i ell S}, each
// listed by Z_p coordinate so that orbit[A][j] = act(orbit[A][0], sigma^j).
class OrbitPartition {
 public:
  struct Location {
    std::uint32_t orbit;
    std::uint32_t position;
  };

  OrbitPartition(std::vector<std::vector<OmegaPoint>> orbits, std::vector<Location> where)
      : orbits_(std::move(orbits)), where_(std::move(where)) {}

  std::size_t count() const { return orbits_.size(); }
  std::uint32_t orbit_size() const { return static_cast<std::uint32_t>(orbits_.front().size()); }
  const std::vector<OmegaPoint>& orbit(std::size_t a) const { return orbits_[a]; }
  const OmegaPoint& base(std::size_t a) const { return orbits_[a].front(); }
  const std::vector<std::vector<OmegaPoint>>& orbits() const { return orbits_; }

  // Indexed by CosetSpace::index.
  Location locate(std::uint32_t point_index) const { return where_[point_index]; }

 private:
  std::vector<std::vector<OmegaPoint>> orbits_;
  std::vector<Location> where_;
};

inline OrbitPartition s_orbits(const CosetSpace& space, const TorusS& s) {
  const Psl2& g = space.group();
  const GroupElement ell = g.ell();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<OrbitPartition::Location> where(space.size(), {kUnset, kUnset});
  std::vector<std::vector<OmegaPoint>> orbits;
  for (std::uint32_t a = 0; a < 10; ++a) {
    const GroupElement lead = a < 5 ? g.t_power(a) : g.mul(g.t_power(a - 5), ell);
    std::vector<OmegaPoint> orbit;
    orbit.reserve(s.size());
    for (std::uint32_t j = 0; j < s.size(); ++j) {
      const OmegaPoint w = space.point_of(g.mul(lead, s.power(j)));
      auto& slot = where[space.index(w)];
      if (slot.orbit != kUnset)
        throw invariant_violation("action", "S-orbits overlap at " + space.to_string(w));
      slot = {a, j};
      orbit.push_back(w);
    }
    orbits.push_back(std::move(orbit));
  }
  if (std::ranges::any_of(where, [](const auto& l) { return l.orbit == kUnset; }))
    throw invariant_violation("action", "S-orbits do not cover Omega");
  return OrbitPartition(std::move(orbits), std::move(where));
}

}  // namespace hamlift
