#ifndef CROSSINT_FIELD_HPP
#define CROSSINT_FIELD_HPP

/// Exact arithmetic in GF(p^k).
///
/// Elements are integer encodings in [0, q): the base-p digits of an encoding
/// are the coefficients of a polynomial in x (digit i is the coefficient of
/// x^i), reduced modulo a fixed monic irreducible polynomial of degree k. For
/// k = 1 this is plain arithmetic mod p. The modulus is the smallest monic
/// irreducible of degree k when read as the integer sum c_i p^i, so every run
/// produces identical encodings.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossint {

using Element = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p), coefficient i at index i, no trailing zeros.
using Poly = std::vector<int>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x)
      if ((x * m.back()) % p == 1) return x;
    return 1;
  }();
  while (a.size() >= m.size()) {
    const int factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - factor * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_from_int(std::uint64_t v, int p, std::size_t len) {
  Poly a(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    a[i] = static_cast<int>(v % p);
    v /= p;
  }
  return a;
}

// Irreducible iff no monic divisor of degree 1..k/2.
inline bool is_irreducible(const Poly& f, int p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = poly_from_int(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline Poly smallest_irreducible(int p, int k) {
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f = poly_from_int(low, p, k);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace detail

/// A finite field GF(p^k). Cheap to copy; tables are shared and immutable.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 16;
  static constexpr std::uint64_t kTableOrder = 256;

  Field() : Field(2, 1) {}

  Field(int p, int k) {
    if (!detail::is_prime(p > 0 ? static_cast<std::uint64_t>(p) : 0))
      throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("field degree must be >= 1, got " + std::to_string(k));
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
      q *= static_cast<std::uint64_t>(p);
      if (q > kMaxOrder)
        throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                    " exceeds 2^16");
    }
    auto s = std::make_shared<State>();
    s->p = p;
    s->k = k;
    s->q = static_cast<Element>(q);
    if (k > 1) s->modulus = detail::smallest_irreducible(p, k);
    if (q <= kTableOrder) {
      s->mul_table.resize(q * q);
      for (Element a = 0; a < q; ++a)
        for (Element b = 0; b < q; ++b) s->mul_table[a * q + b] = raw_mul(*s, a, b);
    }
    state_ = std::move(s);
  }

  int p() const { return state_->p; }
  int k() const { return state_->k; }
  Element q() const { return state_->q; }
  /// Coefficients c0..ck of the modulus; empty for prime fields.
  const std::vector<int>& modulus() const { return state_->modulus; }

  bool contains(Element a) const { return a < q(); }

  Element add(Element a, Element b) const {
    check(a);
    check(b);
    if (k() == 1) return (a + b) % q();
    if (p() == 2) return a ^ b;
    Element r = 0, scale = 1;
    const Element pp = static_cast<Element>(p());
    for (int i = 0; i < k(); ++i) {
      r += ((a % pp + b % pp) % pp) * scale;
      a /= pp;
      b /= pp;
      scale *= pp;
    }
    return r;
  }

  Element neg(Element a) const {
    check(a);
    if (k() == 1) return (q() - a) % q();
    if (p() == 2) return a;
    Element r = 0, scale = 1;
    const Element pp = static_cast<Element>(p());
    for (int i = 0; i < k(); ++i) {
      r += ((pp - a % pp) % pp) * scale;
      a /= pp;
      scale *= pp;
    }
    return r;
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    check(a);
    check(b);
    if (!state_->mul_table.empty()) return state_->mul_table[a * q() + b];
    return raw_mul(*state_, a, b);
  }

  /// Throws std::domain_error for a == 0.
  Element inv(Element a) const {
    check(a);
    if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q()) + ")");
    return pow(a, static_cast<std::int64_t>(q()) - 2);
  }

  /// Negative exponents go through the inverse.
  Element pow(Element a, std::int64_t e) const {
    check(a);
    if (e < 0) return pow(inv(a), -e);
    Element result = 1, base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t v) const {
    const std::int64_t pp = p();
    return static_cast<Element>(((v % pp) + pp) % pp);
  }

  friend bool operator==(const Field& a, const Field& b) { return a.p() == b.p() && a.k() == b.k(); }

 private:
  struct State {
    int p = 2;
    int k = 1;
    Element q = 2;
    std::vector<int> modulus;
    std::vector<Element> mul_table;
  };

  void check(Element a) const {
    if (a >= q())
      throw std::out_of_range("element " + std::to_string(a) + " outside GF(" + std::to_string(q()) + ")");
  }

  static Element raw_mul(const State& s, Element a, Element b) {
    if (s.k == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % s.q);
    const auto pa = detail::poly_from_int(a, s.p, s.k);
    const auto pb = detail::poly_from_int(b, s.p, s.k);
    detail::Poly prod(2 * s.k - 1, 0);
    for (int i = 0; i < s.k; ++i)
      for (int j = 0; j < s.k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % s.p;
    const auto r = detail::poly_mod(prod, s.modulus, s.p);
    Element v = 0;
    for (std::size_t i = r.size(); i-- > 0;) v = v * s.p + static_cast<Element>(r[i]);
    return v;
  }

  std::shared_ptr<const State> state_;
};

inline Field make_field(int p, int k) { return Field(p, k); }

}  // namespace crossint

#endif  // CROSSINT_FIELD_HPP
