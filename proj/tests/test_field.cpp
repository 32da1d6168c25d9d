#include <gtest/gtest.h>

#include <random>

#include "cplab/error.hpp"
#include "cplab/field.hpp"
#include "oracles.hpp"

using namespace cplab;

namespace {

oracle::IPoly to_ipoly(const poly::Poly& f) { return oracle::IPoly(f.begin(), f.end()); }

// Field product through the schoolbook oracle on codes.
std::uint64_t oracle_mul(const FiniteField& f, std::uint64_t a, std::uint64_t b) {
  const long p = f.characteristic();
  const auto k = static_cast<std::size_t>(f.degree());
  return oracle::to_code(
      oracle::polymod(oracle::polymul(oracle::from_code(a, p, k), oracle::from_code(b, p, k), p),
                      to_ipoly(f.modulus()), p),
      p);
}

}  // namespace

TEST(Poly, ArithmeticAgainstOracle) {
  std::mt19937 rng(1);
  const std::uint32_t p = 7;
  for (int t = 0; t < 200; ++t) {
    poly::Poly a(1 + rng() % 6), b(1 + rng() % 4);
    for (auto& c : a) c = rng() % p;
    for (auto& c : b) c = rng() % p;
    poly::trim(a);
    poly::trim(b);
    EXPECT_EQ(to_ipoly(poly::mul(a, b, p)), oracle::polymul(to_ipoly(a), to_ipoly(b), p));
    if (b.empty()) {
      EXPECT_THROW(poly::mod(a, b, p), Error);
      continue;
    }
    poly::Poly q, r;
    poly::divmod(a, b, p, q, r);
    EXPECT_LT(poly::degree(r), poly::degree(b));
    EXPECT_EQ(poly::add(poly::mul(q, b, p), r, p), a);
    EXPECT_EQ(to_ipoly(r), oracle::polymod(to_ipoly(a), to_ipoly(b), p));
  }
}

TEST(Poly, GcdIsMonicCommonDivisor) {
  const std::uint32_t p = 5;
  const poly::Poly f = poly::mul({1, 1}, {2, 0, 1}, p);  // (t+1)(t^2+2)
  const poly::Poly g = poly::mul({1, 1}, {3, 1}, p);     // (t+1)(t+3)
  EXPECT_EQ(poly::gcd(f, g, p), (poly::Poly{1, 1}));
}

TEST(Poly, IrreducibilityAgainstTrialDivision) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int deg = 1; deg <= 4; ++deg) {
      const std::uint64_t count = ipow(p, deg);
      for (std::uint64_t code = 0; code < count; ++code) {
        const poly::Poly f = poly::monic_from_code(code, deg, p);
        EXPECT_EQ(poly::is_irreducible(f, p), oracle::irreducible_by_trial(to_ipoly(f), p))
            << "p=" << p << " code=" << code << " deg=" << deg;
      }
    }
  }
}

TEST(Poly, LeastIrreducibleCubicOverF5) {
  EXPECT_EQ(poly::least_irreducible(3, 5), (poly::Poly{1, 1, 0, 1}));  // t^3 + t + 1
  EXPECT_EQ(poly::least_irreducible(2, 2), (poly::Poly{1, 1, 1}));
}

TEST(Poly, Cyclotomic) {
  EXPECT_EQ(poly::cyclotomic(3, 5), (poly::Poly{1, 1, 1}));
  EXPECT_EQ(poly::cyclotomic(4, 7), (poly::Poly{1, 0, 1}));
  EXPECT_EQ(poly::cyclotomic(1, 7), (poly::Poly{6, 1}));
  // Phi_6 = t^2 - t + 1
  EXPECT_EQ(poly::cyclotomic(6, 5), (poly::Poly{1, 4, 1}));
}

TEST(Numbers, Helpers) {
  EXPECT_EQ(ipow(5, 3), 125u);
  EXPECT_EQ(multiplicative_order_mod(2, 7), 3u);
  EXPECT_EQ(multiplicative_order_mod(5, 3), 2u);
  EXPECT_TRUE(is_prime(31));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

TEST(FiniteField, ConstructorValidates) {
  EXPECT_THROW(FiniteField(4, {1, 1}), Error);
  EXPECT_THROW(FiniteField(5, {1, 0, 1}), Error);  // t^2+1 = (t-2)(t-3) mod 5
  EXPECT_THROW(FiniteField(5, {1, 1, 0, 2}), Error);  // not monic
  EXPECT_NO_THROW(FiniteField(5, {2, 0, 1}));
}

TEST(FiniteField, MultiplicationMatchesOracle) {
  const FiniteField f = FiniteField::with_least_modulus(5, 3);
  std::mt19937 rng(17);
  for (int t = 0; t < 2000; ++t) {
    const auto a = static_cast<FiniteField::Elem>(rng() % 125), b = static_cast<FiniteField::Elem>(rng() % 125);
    EXPECT_EQ(f.mul(a, b), oracle_mul(f, a, b));
  }
}

TEST(FiniteField, Generators) {
  EXPECT_EQ(FiniteField::prime_field(5).multiplicative_generator(), 2u);
  EXPECT_EQ(FiniteField::prime_field(7).multiplicative_generator(), 3u);
  const FiniteField f = FiniteField::with_least_modulus(5, 3);
  const auto g = f.multiplicative_generator();
  EXPECT_EQ(f.multiplicative_order(g), 124u);
  for (FiniteField::Elem x = 2; x < g; ++x) EXPECT_NE(f.multiplicative_order(x), 124u);
  EXPECT_EQ(f.multiplicative_order(0), 0u);
}

TEST(FiniteField, InverseAndDivision) {
  const FiniteField f = FiniteField::with_least_modulus(3, 4);
  for (FiniteField::Elem a = 1; a < f.size(); ++a) {
    EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
  }
  try {
    (void)f.inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(FiniteField, FrobeniusOnGF125) {
  const FiniteField f = FiniteField::with_least_modulus(5, 3);
  EXPECT_EQ(f.frobenius(3), 3u);
  for (FiniteField::Elem a = 0; a < f.size(); ++a) {
    EXPECT_EQ(f.frobenius(f.frobenius(f.frobenius(a))), a);
    EXPECT_EQ(f.frobenius(a) == a, a < 5u);
  }
}

TEST(FieldElement, Operators) {
  const FiniteField f = FiniteField::with_least_modulus(2, 4);
  const FieldElement a(f, 6), b(f, 11);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a - a, FieldElement(f, 0));
  EXPECT_EQ(a + (-a), FieldElement(f, 0));
  EXPECT_EQ(a.pow(15), FieldElement(f, 1));
  EXPECT_EQ(a.inverse() * a, FieldElement(f, 1));
}

// Field axioms and Frobenius multiplicativity on random triples in several
// fields.
TEST(Properties, FieldAxioms) {
  std::mt19937 rng(4242);
  for (auto [p, k] : {std::pair{2u, 5}, std::pair{3u, 3}, std::pair{5u, 3}, std::pair{7u, 2}, std::pair{13u, 1}}) {
    const FiniteField f = FiniteField::with_least_modulus(p, k);
    auto draw = [&] { return static_cast<FiniteField::Elem>(rng() % f.size()); };
    for (int t = 0; t < 300; ++t) {
      const auto a = draw(), b = draw(), c = draw();
      EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
      EXPECT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
      if (a != 0) {
        EXPECT_EQ(f.pow(a, f.size() - 1), f.one());
      }
    }
  }
}

TEST(Properties, CodesRoundTripThroughCoefficients) {
  const FiniteField f = FiniteField::with_least_modulus(3, 3);
  for (FiniteField::Elem a = 0; a < f.size(); ++a) {
    EXPECT_EQ(f.from_coeffs(f.coeffs(a)), a);
  }
  EXPECT_EQ(f.from_int(-1), 2u);
  EXPECT_EQ(f.generator_t(), 3u);
}
