#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "radiolab/field.hpp"

using namespace radiolab;

namespace {

std::vector<long long> prime_powers_up_to(long long limit) {
  std::vector<long long> out;
  for (long long q = 2; q <= limit; ++q) {
    if (is_prime_power(q)) out.push_back(q);
  }
  return out;
}

// Schoolbook product of encoded polynomials reduced by the field's modulus.
Element naive_mul(const FieldSpec& f, Element a, Element b) {
  const std::uint32_t p = f.characteristic(), k = f.degree();
  std::vector<std::uint32_t> x(k), y(k), prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    x[i] = a % p;
    a /= p;
    y[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  const auto& m = f.modulus();
  for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
  }
  Element out = 0, place = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    out += prod[i] * place;
    place *= p;
  }
  return out;
}

bool irreducible_by_trial(const FieldSpec& f) {
  // No root and no factor of degree <= k/2: test by multiplying out all monic pairs.
  const std::uint32_t p = f.characteristic(), k = f.degree();
  if (k == 1) return true;
  const auto& m = f.modulus();
  for (std::uint32_t da = 1; da <= k / 2; ++da) {
    const std::uint32_t db = k - da;
    std::uint64_t ca = 1, cb = 1;
    for (std::uint32_t i = 0; i < da; ++i) ca *= p;
    for (std::uint32_t i = 0; i < db; ++i) cb *= p;
    for (std::uint64_t ia = 0; ia < ca; ++ia) {
      for (std::uint64_t ib = 0; ib < cb; ++ib) {
        std::vector<std::uint32_t> a(da + 1, 0), b(db + 1, 0), prod(k + 1, 0);
        auto t = ia;
        for (std::uint32_t i = 0; i < da; ++i, t /= p) a[i] = static_cast<std::uint32_t>(t % p);
        t = ib;
        for (std::uint32_t i = 0; i < db; ++i, t /= p) b[i] = static_cast<std::uint32_t>(t % p);
        a[da] = b[db] = 1;
        for (std::uint32_t i = 0; i <= da; ++i)
          for (std::uint32_t j = 0; j <= db; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        if (prod == m) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Field, PrimeFieldHasLinearModulus) {
  const FieldSpec f = make_field(5);
  EXPECT_EQ(f.characteristic(), 5u);
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(f.modulus().size(), 2u);
}

TEST(Field, GF4ModulusAndProduct) {
  const FieldSpec f = make_field(4);
  EXPECT_EQ(f.characteristic(), 2u);
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(field_mul(f, 2, 2), 3u);
}

TEST(Field, RejectsNonPrimePowers) {
  EXPECT_THROW(make_field(6), NotPrimePower);
  EXPECT_THROW(make_field(12), NotPrimePower);
  EXPECT_THROW(make_field(1), NotPrimePower);
  EXPECT_FALSE(is_prime_power(10));
  EXPECT_TRUE(is_prime_power(27));
}

TEST(Field, SmallInverses) {
  const FieldSpec f = make_field(5);
  EXPECT_EQ(field_mul(f, 2, 3), 1u);
  EXPECT_EQ(field_inv(f, 2), 3u);
  for (long long q : prime_powers_up_to(32)) EXPECT_EQ(field_inv(make_field(q), 1), 1u) << q;
  EXPECT_THROW(field_inv(f, 0), ZeroInverse);
}

TEST(Field, PrimitiveElements) {
  EXPECT_EQ(primitive_element(make_field(2)), 1u);
  EXPECT_EQ(primitive_element(make_field(5)), 2u);
  EXPECT_EQ(primitive_element(make_field(7)), 3u);
}

TEST(Field, PrimitiveIsSmallestGenerator) {
  for (long long q : prime_powers_up_to(64)) {
    const FieldSpec f = make_field(q);
    const auto order_of = [&](Element a) {
      Element x = a;
      std::uint32_t k = 1;
      while (x != 1) {
        x = naive_mul(f, x, a);
        ++k;
      }
      return k;
    };
    const Element g = primitive_element(f);
    EXPECT_EQ(order_of(g), f.order() - 1) << q;
    for (Element a = 1; a < g; ++a) EXPECT_LT(order_of(a), f.order() - 1) << q;
  }
}

TEST(Field, ModulusIsIrreducibleAndSmallest) {
  for (long long q : prime_powers_up_to(64)) {
    const FieldSpec f = make_field(q);
    EXPECT_TRUE(irreducible_by_trial(f)) << q;
  }
  EXPECT_EQ(make_field(8).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(make_field(9).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, AxiomsByEnumeration) {
  for (long long q : prime_powers_up_to(64)) {
    const FieldSpec f = make_field(q);
    const Element n = f.order();
    for (Element a = 0; a < n; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) { EXPECT_EQ(f.mul(a, f.inv(a)), 1u); }
      for (Element b = 0; b < n; ++b) {
        ASSERT_EQ(f.mul(a, b), naive_mul(f, a, b)) << q;
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        for (Element c = 0; c < n; ++c) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(DifferenceSetTest, PlanarCheck) {
  EXPECT_TRUE(is_planar_difference_set({1, 2, 4}, 7));
  EXPECT_TRUE(is_planar_difference_set({0, 1, 3, 9}, 13));
  EXPECT_FALSE(is_planar_difference_set({1, 2, 3}, 7));
}

TEST(DifferenceSetTest, SingerSmallCases) {
  EXPECT_EQ(singer_difference_set(2).elements, smallest_translate({1, 2, 4}, 7));
  EXPECT_EQ(singer_difference_set(2).elements, (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(singer_difference_set(3).elements, (std::vector<int>{0, 1, 3, 9}));
  EXPECT_EQ(singer_difference_set(3).modulus, 13);
  EXPECT_THROW(singer_difference_set(6), NotPrimePower);
}

TEST(DifferenceSetTest, SingerValidUpTo16) {
  for (long long q : prime_powers_up_to(16)) {
    const DifferenceSet d = singer_difference_set(q);
    EXPECT_EQ(d.modulus, q * q + q + 1) << q;
    EXPECT_EQ(static_cast<long long>(d.elements.size()), q + 1) << q;
    EXPECT_TRUE(is_planar_difference_set(d.elements, d.modulus)) << q;
    EXPECT_EQ(d.elements, smallest_translate(d.elements, d.modulus)) << q;
    EXPECT_EQ(d.elements.front(), 0) << q;
  }
}
