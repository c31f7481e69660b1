#pragma once

// Finite fields GF(p^k) and Singer (planar) difference sets.
//
// Elements of GF(p^k) are encoded as integers 0..q-1 whose base-p digits are
// the polynomial coefficients, constant term least significant. The field
// is built modulo the monic irreducible of degree k whose lower coefficients
// have the smallest such encoding.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "radiolab/errors.hpp"

namespace radiolab {

using Element = std::uint32_t;

namespace detail {

// Returns {p, k} with q = p^k, or {0, 0} when q is not a prime power.
inline std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(long long q) {
  if (q < 2) return {0, 0};
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(q), 1};
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

inline std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor b.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  // Monic candidate divisors of degree 1..k/2, enumerated by lower coefficients.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class FieldSpec {
 public:
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  // Coefficients c_0..c_k of the modulus, c_k = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Element primitive() const { return primitive_; }

  Element add(Element a, Element b) const {
    if (k_ == 1) return (a + b) % p_;
    Element out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      out += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  Element neg(Element a) const {
    if (k_ == 1) return (p_ - a) % p_;
    Element out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      out += ((p_ - a % p_) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return out;
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  Element inv(Element a) const {
    if (a == 0) throw ZeroInverse();
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Element pow(Element a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
  }

  // Discrete logarithm to the base primitive(); a must be nonzero.
  std::uint32_t log(Element a) const {
    if (a == 0) throw ZeroInverse();
    return log_[a];
  }

  friend FieldSpec make_field(long long q);

 private:
  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element primitive_ = 0;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;

  detail::Poly decode(Element a) const {
    detail::Poly out(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  }

  Element encode(const detail::Poly& a) const {
    Element out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_ && i < a.size(); ++i) {
      out += a[i] * place;
      place *= p_;
    }
    return out;
  }

  // Schoolbook product reduced mod the modulus; used before the log tables exist.
  Element raw_mul(Element a, Element b) const {
    const detail::Poly x = decode(a), y = decode(b);
    detail::Poly prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      for (std::uint32_t j = 0; j < k_; ++j) {
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
      }
    }
    return encode(detail::poly_mod(prod, modulus_, p_));
  }

  Element raw_pow(Element a, std::uint64_t e) const {
    Element result = 1;
    while (e) {
      if (e & 1) result = raw_mul(result, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return result;
  }
};

inline FieldSpec make_field(long long q) {
  const auto [p, k] = detail::prime_power_decompose(q);
  if (p == 0) throw NotPrimePower(q);
  FieldSpec f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);

  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    detail::Poly cand(k + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      cand[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    cand[k] = 1;
    if (detail::is_irreducible(cand, p)) {
      f.modulus_ = std::move(cand);
      break;
    }
  }

  const std::uint64_t group = f.q_ - 1;
  const auto factors = detail::prime_factors(group);
  if (group == 1) {
    f.primitive_ = 1;
  } else {
    for (Element a = 1; a < f.q_; ++a) {
      const bool generates = std::all_of(factors.begin(), factors.end(), [&](std::uint32_t r) {
        return f.raw_pow(a, group / r) != 1;
      });
      if (generates) {
        f.primitive_ = a;
        break;
      }
    }
  }

  f.exp_.assign(f.q_ - 1, 0);
  f.log_.assign(f.q_, 0);
  Element x = 1;
  for (std::uint32_t i = 0; i < f.q_ - 1; ++i) {
    f.exp_[i] = x;
    f.log_[x] = i;
    x = f.raw_mul(x, f.primitive_);
  }
  return f;
}

inline bool is_prime_power(long long q) { return detail::prime_power_decompose(q).first != 0; }

inline Element field_mul(const FieldSpec& f, Element a, Element b) { return f.mul(a, b); }
inline Element field_inv(const FieldSpec& f, Element a) { return f.inv(a); }

// Smallest element (in encoding order) of multiplicative order q-1.
inline Element primitive_element(const FieldSpec& f) { return f.primitive(); }

// A planar difference set: q+1 residues mod q^2+q+1 whose nonzero
// differences hit every nonzero residue exactly once.
struct DifferenceSet {
  int modulus = 0;
  std::vector<int> elements;  // sorted ascending

  bool contains(int r) const {
    r %= modulus;
    if (r < 0) r += modulus;
    return std::binary_search(elements.begin(), elements.end(), r);
  }
  friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;
};

inline bool is_planar_difference_set(const std::vector<int>& residues, int n) {
  if (n < 1) return false;
  std::set<int> s;
  for (int r : residues) s.insert(((r % n) + n) % n);
  if (s.size() != residues.size()) return false;
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (int a : s) {
    for (int b : s) {
      if (a != b) ++hits[static_cast<std::size_t>(((a - b) % n + n) % n)];
    }
  }
  for (int r = 1; r < n; ++r) {
    if (hits[static_cast<std::size_t>(r)] != 1) return false;
  }
  return true;
}

// Lexicographically smallest sorted translate D + t.
inline std::vector<int> smallest_translate(const std::vector<int>& d, int n) {
  std::vector<int> best;
  for (int t = 0; t < n; ++t) {
    std::vector<int> shifted;
    shifted.reserve(d.size());
    for (int x : d) shifted.push_back((x + t) % n);
    std::sort(shifted.begin(), shifted.end());
    if (best.empty() || shifted < best) best = std::move(shifted);
  }
  return best;
}

// Points of PG(2,q) are indexed by discrete logs of a generator of
// GF(q^3)* modulo GF(q)*; the trace-zero hyperplane is one line, and its
// indices form the difference set.
inline DifferenceSet singer_difference_set(long long q) {
  make_field(q);
  const FieldSpec big = make_field(q * q * q);
  const int n = static_cast<int>(q * q + q + 1);
  const Element g = big.primitive();
  const auto qq = static_cast<std::uint64_t>(q);
  std::vector<int> members;
  Element x = 1;
  for (int i = 0; i < n; ++i) {
    const Element trace = big.add(big.add(x, big.pow(x, qq)), big.pow(x, qq * qq));
    if (trace == 0) members.push_back(i);
    x = big.mul(x, g);
  }
  if (static_cast<long long>(members.size()) != q + 1 || !is_planar_difference_set(members, n)) {
    throw ConstructionFailed("Singer construction did not yield a planar difference set");
  }
  return DifferenceSet{n, smallest_translate(members, n)};
}

}  // namespace radiolab
