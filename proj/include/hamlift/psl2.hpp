#pragma once

// PSL(2,k) as 2x2 determinant-one matrices modulo {1,-1}.
//
// Every GroupElement is kept in canonical sign form: the first nonzero entry
// in reading order (a11, a12, a21, a22) has discrete log in [0, (k-1)/2).
// Since dlog(-x) = dlog(x) + (k-1)/2, exactly one of g, -g satisfies this.

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gf.hpp"

namespace hamlift {

class GroupElement {
 public:
  GroupElement() = default;

  FieldElement a11() const { return e_[0]; }
  FieldElement a12() const { return e_[1]; }
  FieldElement a21() const { return e_[2]; }
  FieldElement a22() const { return e_[3]; }
  const std::array<FieldElement, 4>& entries() const { return e_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  friend class Psl2;
  explicit GroupElement(std::array<FieldElement, 4> e) : e_(e) {}
  std::array<FieldElement, 4> e_{};
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : g.entries()) h = (h ^ x.code()) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

using GroupElementSet = std::unordered_set<GroupElement, GroupElementHash>;

class Psl2 {
 public:
  explicit Psl2(Field field) : f_(std::move(field)) {
    if (f_.order() % 2 == 0) throw parameter_error("psl2: field order must be odd");
  }

  const Field& field() const { return f_; }

  // |PSL(2,k)| = k(k^2-1)/2
  std::uint64_t order() const {
    const std::uint64_t k = f_.order();
    return k * (k * k - 1) / 2;
  }

  // Builds [[a,b],[c,d]]; throws unless ad - bc = 1.
  GroupElement make(FieldElement a, FieldElement b, FieldElement c, FieldElement d) const {
    if (f_.sub(f_.mul(a, d), f_.mul(b, c)) != f_.one())
      throw parameter_error("psl2: matrix does not have determinant 1");
    return canonical({a, b, c, d});
  }
  GroupElement make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const {
    return make(f_.from_int(a), f_.from_int(b), f_.from_int(c), f_.from_int(d));
  }

  GroupElement identity() const { return canonical({f_.one(), f_.zero(), f_.zero(), f_.one()}); }

  GroupElement mul(const GroupElement& g, const GroupElement& h) const {
    const auto& x = g.e_;
    const auto& y = h.e_;
    return canonical({f_.add(f_.mul(x[0], y[0]), f_.mul(x[1], y[2])),
                      f_.add(f_.mul(x[0], y[1]), f_.mul(x[1], y[3])),
                      f_.add(f_.mul(x[2], y[0]), f_.mul(x[3], y[2])),
                      f_.add(f_.mul(x[2], y[1]), f_.mul(x[3], y[3]))});
  }

  GroupElement inverse(const GroupElement& g) const {
    const auto& x = g.e_;
    return canonical({x[3], f_.neg(x[1]), f_.neg(x[2]), x[0]});
  }

  GroupElement negate(const GroupElement& g) const {
    const auto& x = g.e_;
    return GroupElement({f_.neg(x[0]), f_.neg(x[1]), f_.neg(x[2]), f_.neg(x[3])});
  }

  GroupElement power(GroupElement g, std::int64_t e) const {
    if (e < 0) {
      g = inverse(g);
      e = -e;
    }
    GroupElement acc = identity();
    while (e > 0) {
      if (e & 1) acc = mul(acc, g);
      g = mul(g, g);
      e >>= 1;
    }
    return acc;
  }

  // g^h = h^{-1} g h
  GroupElement conj(const GroupElement& g, const GroupElement& h) const {
    return mul(mul(inverse(h), g), h);
  }

  // Element order by repeated multiplication.
  std::uint64_t element_order(const GroupElement& g) const {
    const GroupElement id = identity();
    GroupElement cur = g;
    std::uint64_t n = 1;
    while (cur != id) {
      cur = mul(cur, g);
      if (++n > order()) throw invariant_violation("psl2", "element order exceeds group order");
    }
    return n;
  }

  // Canonical sign form of a determinant-one matrix.
  GroupElement canonical(std::array<FieldElement, 4> e) const {
    const std::uint32_t half = (f_.order() - 1) / 2;
    for (auto x : e) {
      if (x.is_zero()) continue;
      if (f_.dlog(x) < half) return GroupElement(e);
      for (auto& y : e) y = f_.neg(y);
      return GroupElement(e);
    }
    throw invariant_violation("psl2", "zero matrix");
  }

  bool is_canonical(const GroupElement& g) const { return canonical(g.e_) == g; }

  // Uniformly random element.
  template <class Rng>
  GroupElement random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> any(0, f_.order() - 1);
    while (true) {
      const FieldElement a(any(rng)), b(any(rng)), c(any(rng));
      if (!a.is_zero()) return make(a, b, c, f_.div(f_.add(f_.one(), f_.mul(b, c)), a));
      const FieldElement d(any(rng));
      if (b.is_zero()) continue;
      // a = 0 needs bc = -1.
      return make(a, b, f_.neg(f_.inv(b)), d);
    }
  }

  std::string to_string(const GroupElement& g) const {
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) out += (i ? " " : "") + f_.to_string(g.e_[i]);
    return out;
  }

  // ell = [[0,-1],[1,0]]
  GroupElement ell() const { return make(0, -1, 1, 0); }
  // t = [[theta,0],[0,theta^{-1}]]
  GroupElement t() const { return make(f_.theta(), f_.zero(), f_.zero(), f_.inv(f_.theta())); }
  // u = [[1,1],[0,1]]
  GroupElement u() const { return make(1, 1, 0, 1); }
  // [[1,x],[0,1]]
  GroupElement unipotent(FieldElement x) const { return make(f_.one(), x, f_.zero(), f_.one()); }
  // t^e, computed directly from theta powers.
  GroupElement t_power(std::int64_t e) const {
    return make(f_.theta_pow(e), f_.zero(), f_.zero(), f_.theta_pow(-e));
  }

  // s(a,b) = [[a,b],[b*theta,a]], requires a^2 - b^2 theta = 1.
  GroupElement s_element(FieldElement a, FieldElement b) const {
    if (f_.sub(f_.mul(a, a), f_.mul(f_.mul(b, b), f_.theta())) != f_.one())
      throw parameter_error("psl2: s(a,b) requires a^2 - b^2*theta = 1");
    return make(a, b, f_.mul(b, f_.theta()), a);
  }

 private:
  Field f_;
};

struct Generators {
  GroupElement ell, t, u;
};

inline Generators generators(const Psl2& g) {
  if (g.field().order() % 4 != 1) throw parameter_error("psl2: generators need k = 1 (mod 4)");
  return {g.ell(), g.t(), g.u()};
}

// The cyclic subgroup S, listed as powers of a fixed generator sigma so that
// list position is the Z_p coordinate.
class TorusS {
 public:
  TorusS(std::vector<GroupElement> powers)
      : powers_(std::move(powers)) {
    for (std::uint32_t i = 0; i < powers_.size(); ++i) index_.emplace(powers_[i], i);
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(powers_.size()); }
  const GroupElement& generator() const { return powers_.at(1); }
  const GroupElement& power(std::uint32_t j) const { return powers_[j % powers_.size()]; }
  const std::vector<GroupElement>& elements() const { return powers_; }

  // Z_p coordinate of g, if g lies in S.
  std::optional<std::uint32_t> position(const GroupElement& g) const {
    if (auto it = index_.find(g); it != index_.end()) return it->second;
    return std::nullopt;
  }

 private:
  std::vector<GroupElement> powers_;
  std::unordered_map<GroupElement, std::uint32_t, GroupElementHash> index_;
};

// All s(a,b), enumerated with b then a ascending; sigma is the first one of
// full order (k+1)/2.
inline TorusS enumerate_S(const Psl2& g) {
  const Field& f = g.field();
  std::vector<GroupElement> raw;
  GroupElementSet seen;
  for (auto b : f.elements()) {
    const auto rhs = f.add(f.one(), f.mul(f.theta(), f.mul(b, b)));
    const auto root = f.sqrt(rhs);
    if (!root) continue;
    FieldElement roots[2] = {*root, f.neg(*root)};
    if (roots[1] < roots[0]) std::swap(roots[0], roots[1]);
    for (auto a : roots) {
      auto el = g.s_element(a, b);
      if (seen.insert(el).second) raw.push_back(el);
    }
  }
  const std::uint32_t p = (f.order() + 1) / 2;
  if (raw.size() != p)
    throw invariant_violation("psl2", "|S| = " + std::to_string(raw.size()) + ", expected " + std::to_string(p));
  for (const auto& sigma : raw) {
    if (g.element_order(sigma) != p) continue;
    std::vector<GroupElement> powers{g.identity()};
    for (std::uint32_t j = 1; j < p; ++j) powers.push_back(g.mul(powers.back(), sigma));
    return TorusS(std::move(powers));
  }
  throw invariant_violation("psl2", "S is not cyclic");
}

// H = U <t^5>, the full unipotent group extended by <t^5>.
inline std::vector<GroupElement> enumerate_H(const Psl2& g) {
  const Field& f = g.field();
  const std::uint32_t k = f.order();
  if ((k - 1) % 10 != 0) throw parameter_error("psl2: H needs 10 | (k-1)");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(k) * (k - 1) / 10);
  for (std::uint32_t r = 0; r < (k - 1) / 10; ++r) {
    const auto diag = g.t_power(5 * static_cast<std::int64_t>(r));
    for (auto x : f.elements()) out.push_back(g.mul(g.unipotent(x), diag));
  }
  return out;
}

// Subgroup generated by `gens`, by breadth-first closure.
inline std::vector<GroupElement> closure(const Psl2& g, const std::vector<GroupElement>& gens) {
  std::vector<GroupElement> out{g.identity()};
  GroupElementSet seen(out.begin(), out.end());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& x : gens) {
      auto y = g.mul(out[head], x);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  return out;
}

enum class SubgroupName { K, H, S, U };

struct SubgroupSpec {
  SubgroupName name;
  std::string generators;
  std::uint64_t order;
};

inline SubgroupSpec subgroup_spec(const Field& f, SubgroupName name) {
  const std::uint64_t k = f.order();
  switch (name) {
    case SubgroupName::K: return {name, "<u, t>", k * (k - 1) / 2};
    case SubgroupName::H: return {name, "U <t^5>", k * (k - 1) / 10};
    case SubgroupName::S: return {name, "<s(a,b) : a^2 - b^2 theta = 1>", (k + 1) / 2};
    case SubgroupName::U: return {name, "{[[1,x],[0,1]]}", k};
  }
  throw parameter_error("psl2: unknown subgroup");
}

}  // namespace hamlift
