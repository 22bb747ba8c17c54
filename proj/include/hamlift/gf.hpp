#pragma once

// Exact arithmetic in GF(s^m).
//
// Elements are stored as a single integer code: the polynomial-basis
// coordinates (c0, c1, ..., c_{m-1}) read as base-s digits with c0 the most
// significant. Integer order on codes is therefore the coordinate
// lexicographic order (constant term compared first), which is the order
// used to pick both the modulus and the primitive element theta.
//
// Multiplication goes through exp/log tables relative to theta; addition is
// digit-wise mod s.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace hamlift {

class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t code_ = 0;
};

// Largest field order we build tables for.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;

namespace detail {

using Poly = std::vector<std::uint32_t>;  // constant term first

// a * b mod (x^m + tail), tail = modulus without its leading 1.
inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& tail, std::uint32_t s) {
  const std::size_t m = tail.size();
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % s;
  for (std::size_t d = 2 * m - 1; d >= m; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^{d-m} * x^m = -x^{d-m} * tail
    for (std::size_t i = 0; i < m; ++i)
      prod[d - m + i] = (prod[d - m + i] + (s - tail[i]) % s * c) % s;
  }
  return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m));
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& tail, std::uint32_t s) {
  Poly acc(tail.size(), 0);
  acc[0] = 1;
  while (e > 0) {
    if (e & 1) acc = poly_mulmod(acc, base, tail, s);
    base = poly_mulmod(base, base, tail, s);
    e >>= 1;
  }
  return acc;
}

// Remainder of a monic `num` (full coefficient list, constant first) divided
// by a monic `den`; true iff the remainder is zero.
inline bool poly_divides(const Poly& den, Poly num, std::uint32_t s) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t top = num.size() - 1; top >= dd; --top) {
    const std::uint64_t c = num[top];
    if (c != 0) {
      for (std::size_t i = 0; i <= dd; ++i) {
        auto& slot = num[top - dd + i];
        slot = static_cast<std::uint32_t>((slot + (s - den[i]) % s * c) % s);
      }
    }
    if (top == 0) break;
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) return false;
  return true;
}

// Steps `digits` (c0 most significant) to its lexicographic successor.
// Returns false on wrap-around.
inline bool next_lex(std::vector<std::uint32_t>& digits, std::uint32_t s) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < s) return true;
    digits[i] = 0;
  }
  return false;
}

inline bool is_irreducible(const Poly& monic, std::uint32_t s) {
  const std::size_t m = monic.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::vector<std::uint32_t> low(d, 0);
    do {
      Poly den(low.begin(), low.end());
      den.push_back(1);
      if (poly_divides(den, monic, s)) return false;
    } while (next_lex(low, s));
  }
  return true;
}

struct FieldTables {
  std::uint32_t s = 0;
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  Poly modulus;                         // length m+1, monic
  std::vector<std::uint32_t> place;     // place[i] = s^{m-1-i}
  std::vector<std::uint32_t> exp;       // exp[e] = theta^e, e in [0, k-2]
  std::vector<std::uint32_t> log;       // log[code], log[0] unused
  std::uint32_t theta = 0;
};

}  // namespace detail

// FieldSpec: an immutable handle to GF(s^m) together with its fixed modulus
// and primitive element. Copies share the underlying tables.
class Field {
 public:
  static Field make(std::uint64_t s, std::uint64_t m);

  std::uint32_t characteristic() const { return t_->s; }
  std::uint32_t degree() const { return t_->m; }
  std::uint32_t order() const { return t_->k; }
  // Monic modulus, constant term first, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  FieldElement theta() const { return FieldElement(t_->theta); }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return from_int(1); }

  // Image of an integer under Z -> GF(s) -> GF(s^m).
  FieldElement from_int(std::int64_t n) const {
    return FieldElement(static_cast<std::uint32_t>(mod_floor(n, t_->s)) * t_->place[0]);
  }
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;
  std::uint32_t coeff(FieldElement x, std::size_t i) const { return x.code() / t_->place[i] % t_->s; }

  bool contains(FieldElement x) const { return x.code() < t_->k; }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const {
    if (x.is_zero() || y.is_zero()) return zero();
    const std::uint32_t e = t_->log[x.code()] + t_->log[y.code()];
    return FieldElement(t_->exp[e >= t_->k - 1 ? e - (t_->k - 1) : e]);
  }
  FieldElement inv(FieldElement x) const {
    if (x.is_zero()) throw std::domain_error("gf: inverse of zero");
    const std::uint32_t e = t_->log[x.code()];
    return FieldElement(t_->exp[e == 0 ? 0 : t_->k - 1 - e]);
  }
  FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
  FieldElement pow(FieldElement x, std::int64_t e) const;

  // theta^e for any integer e.
  FieldElement theta_pow(std::int64_t e) const {
    return FieldElement(t_->exp[static_cast<std::size_t>(mod_floor(e, t_->k - 1))]);
  }
  // Discrete log to base theta, in [0, k-2].
  std::uint32_t dlog(FieldElement x) const {
    if (x.is_zero()) throw std::domain_error("gf: discrete log of zero");
    return t_->log[x.code()];
  }
  // Multiplicative order of a nonzero element.
  std::uint64_t mult_order(FieldElement x) const {
    const std::uint64_t n = t_->k - 1;
    return n / std::gcd<std::uint64_t>(n, dlog(x));
  }

  // A square root of x, if x is a square.
  std::optional<FieldElement> sqrt(FieldElement x) const;

  // All field elements in code order.
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(t_->k);
    for (std::uint32_t c = 0; c < t_->k; ++c) out.emplace_back(c);
    return out;
  }

  // "7" for prime fields, "[c0,c1,...]" otherwise.
  std::string to_string(FieldElement x) const;
  FieldElement parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_->s == b.t_->s && a.t_->m == b.t_->m;
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

inline Field make_field(std::uint64_t s, std::uint64_t m) { return Field::make(s, m); }

inline Field Field::make(std::uint64_t s, std::uint64_t m) {
  if (!is_prime(s)) throw parameter_error("gf: characteristic " + std::to_string(s) + " is not prime");
  if (m < 1) throw parameter_error("gf: extension degree must be >= 1");
  std::uint64_t k = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    k *= s;
    if (k > kMaxFieldOrder)
      throw parameter_error("gf: field order " + std::to_string(s) + "^" + std::to_string(m) +
                            " exceeds supported maximum " + std::to_string(kMaxFieldOrder));
  }

  auto t = std::make_shared<detail::FieldTables>();
  t->s = static_cast<std::uint32_t>(s);
  t->m = static_cast<std::uint32_t>(m);
  t->k = static_cast<std::uint32_t>(k);
  t->place.resize(m);
  for (std::uint32_t i = 0, p = 1; i < m; ++i, p *= t->s) t->place[m - 1 - i] = p;

  // Smallest monic irreducible: scan tails (c0, ..., c_{m-1}) lexicographically.
  std::vector<std::uint32_t> tail(m, 0);
  bool found = false;
  do {
    detail::Poly candidate(tail.begin(), tail.end());
    candidate.push_back(1);
    if (detail::is_irreducible(candidate, t->s)) {
      t->modulus = std::move(candidate);
      found = true;
      break;
    }
  } while (detail::next_lex(tail, t->s));
  if (!found) throw invariant_violation("gf", "no irreducible polynomial found");
  const detail::Poly mod_tail(t->modulus.begin(), t->modulus.end() - 1);

  const auto to_poly = [&](std::uint32_t code) {
    detail::Poly p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = code / t->place[i] % t->s;
    return p;
  };
  const auto to_code = [&](const detail::Poly& p) {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < m; ++i) c += p[i] * t->place[i];
    return c;
  };

  // Smallest element of multiplicative order k-1.
  const std::uint64_t n = k - 1;
  const auto factors = distinct_prime_factors(n);
  const std::uint32_t one_code = t->place[0];
  for (std::uint32_t c = 1; c < t->k && t->theta == 0; ++c) {
    const auto x = to_poly(c);
    bool generator = true;
    for (const auto q : factors) {
      if (to_code(detail::poly_powmod(x, n / q, mod_tail, t->s)) == one_code) {
        generator = false;
        break;
      }
    }
    if (generator) t->theta = c;
  }
  if (t->theta == 0) throw invariant_violation("gf", "no primitive element found");

  t->exp.resize(n);
  t->log.assign(k, 0);
  const auto theta = to_poly(t->theta);
  detail::Poly cur = to_poly(one_code);
  for (std::uint32_t e = 0; e < n; ++e) {
    const std::uint32_t c = to_code(cur);
    if (e > 0 && c == one_code) throw invariant_violation("gf", "theta order below k-1");
    t->exp[e] = c;
    t->log[c] = e;
    cur = detail::poly_mulmod(cur, theta, mod_tail, t->s);
  }
  return Field(std::move(t));
}

inline FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != t_->m) throw parameter_error("gf: expected " + std::to_string(t_->m) + " coordinates");
  std::uint32_t c = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= t_->s) throw parameter_error("gf: coordinate not reduced mod s");
    c += coeffs[i] * t_->place[i];
  }
  return FieldElement(c);
}

inline std::vector<std::uint32_t> Field::coeffs(FieldElement x) const {
  std::vector<std::uint32_t> out(t_->m);
  for (std::size_t i = 0; i < t_->m; ++i) out[i] = coeff(x, i);
  return out;
}

inline FieldElement Field::add(FieldElement x, FieldElement y) const {
  const std::uint32_t s = t_->s;
  if (t_->m == 1) {
    const std::uint32_t r = x.code() + y.code();
    return FieldElement(r >= s ? r - s : r);
  }
  std::uint32_t a = x.code(), b = y.code(), out = 0;
  for (std::uint32_t i = 0, p = 1; i < t_->m; ++i, p *= s) {
    std::uint32_t d = a % s + b % s;
    if (d >= s) d -= s;
    out += d * p;
    a /= s;
    b /= s;
  }
  return FieldElement(out);
}

inline FieldElement Field::neg(FieldElement x) const {
  const std::uint32_t s = t_->s;
  std::uint32_t a = x.code(), out = 0;
  for (std::uint32_t i = 0, p = 1; i < t_->m; ++i, p *= s) {
    out += (s - a % s) % s * p;
    a /= s;
  }
  return FieldElement(out);
}

inline FieldElement Field::pow(FieldElement x, std::int64_t e) const {
  if (x.is_zero()) {
    if (e < 0) throw std::domain_error("gf: zero raised to a negative power");
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = t_->k - 1;
  const std::int64_t le = static_cast<std::int64_t>(t_->log[x.code()]);
  const auto r = static_cast<std::int64_t>((static_cast<__int128>(le) * mod_floor(e, n)) % n);
  return FieldElement(t_->exp[static_cast<std::size_t>(r)]);
}

inline std::optional<FieldElement> Field::sqrt(FieldElement x) const {
  if (x.is_zero()) return zero();
  const std::uint32_t e = dlog(x);
  if (t_->s == 2) return theta_pow(static_cast<std::int64_t>(e) * ((t_->k) / 2));  // x^{k/2}
  if (e % 2 != 0) return std::nullopt;
  return theta_pow(e / 2);
}

inline std::string Field::to_string(FieldElement x) const {
  if (t_->m == 1) return std::to_string(x.code());
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t_->m; ++i) os << (i ? "," : "") << coeff(x, i);
  os << ']';
  return os.str();
}

inline FieldElement Field::parse(std::string_view text) const {
  const auto fail = [&] { return parameter_error("gf: cannot parse field element '" + std::string(text) + "'"); };
  std::vector<std::uint32_t> coords;
  std::string_view body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw fail();
    body = body.substr(1, body.size() - 2);
  } else if (t_->m != 1) {
    throw fail();
  }
  while (true) {
    const auto comma = body.find(',');
    const auto tok = body.substr(0, comma);
    if (tok.empty() || tok.size() > 9) throw fail();
    std::uint32_t v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw fail();
      v = v * 10 + static_cast<std::uint32_t>(ch - '0');
    }
    coords.push_back(v);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return from_coeffs(coords);
}

}  // namespace hamlift
