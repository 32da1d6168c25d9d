#pragma once

// Arithmetic in GF(p^k) = F_p[t] / (modulus). Elements are encoded as the
// base-p integer of their coefficient vector (constant term least
// significant), so the prime subfield occupies codes 0..p-1 and the code
// order is the canonical element order used everywhere else.

#include <cstdint>
#include <vector>

namespace cplab {

// Dense polynomials over F_p, coefficients low degree first, no trailing
// zeros (the zero polynomial is empty).
namespace poly {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
int degree(const Poly& f);
Poly add(const Poly& f, const Poly& g, std::uint32_t p);
Poly sub(const Poly& f, const Poly& g, std::uint32_t p);
Poly mul(const Poly& f, const Poly& g, std::uint32_t p);
// Throws DivisionByZero for g = 0.
void divmod(const Poly& f, const Poly& g, std::uint32_t p, Poly& quotient, Poly& remainder);
Poly mod(const Poly& f, const Poly& g, std::uint32_t p);
Poly gcd(Poly f, Poly g, std::uint32_t p);  // monic
Poly powmod(const Poly& f, std::uint64_t e, const Poly& modulus, std::uint32_t p);

// Rabin's test: no roots-of-lower-degree, i.e. gcd(t^(p^i) - t, f) = 1 for
// i <= deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p);

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of code.
Poly monic_from_code(std::uint64_t code, int degree, std::uint32_t p);
Poly least_irreducible(int degree, std::uint32_t p);

// n-th cyclotomic polynomial reduced mod p.
Poly cyclotomic(std::uint64_t n, std::uint32_t p);

}  // namespace poly

std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t n);
bool is_prime(std::uint64_t n);

class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Throws NotIrreducible / PreconditionViolated.
  FiniteField(std::uint32_t p, poly::Poly modulus);

  static FiniteField prime_field(std::uint32_t p);
  // Least monic irreducible modulus of degree k in code order.
  static FiniteField with_least_modulus(std::uint32_t p, int k);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t size() const { return q_; }
  const poly::Poly& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;
  Elem from_coeffs(const poly::Poly& coeffs) const;  // reduces first
  poly::Poly coeffs(Elem a) const;                   // length k
  // The class of t.
  Elem generator_t() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  std::uint64_t multiplicative_order(Elem a) const;  // 0 for a = 0
  // Least element (code order) of multiplicative order p^k - 1.
  Elem multiplicative_generator() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint32_t p_;
  int k_;
  std::uint64_t q_;
  poly::Poly modulus_;
  std::vector<std::uint32_t> digits_scale_;  // p^i
};

// Value wrapper with operators, for readable field code in builders and
// tests. The referenced field must outlive the element.
class FieldElement {
 public:
  FieldElement(const FiniteField& field, FiniteField::Elem code)
      : field_(&field), code_(code) {}

  const FiniteField& field() const { return *field_; }
  FiniteField::Elem code() const { return code_; }
  poly::Poly coeffs() const { return field_->coeffs(code_); }

  FieldElement operator+(const FieldElement& o) const { return {*field_, field_->add(code_, o.code_)}; }
  FieldElement operator-(const FieldElement& o) const { return {*field_, field_->sub(code_, o.code_)}; }
  FieldElement operator-() const { return {*field_, field_->neg(code_)}; }
  FieldElement operator*(const FieldElement& o) const { return {*field_, field_->mul(code_, o.code_)}; }
  FieldElement operator/(const FieldElement& o) const { return {*field_, field_->div(code_, o.code_)}; }
  FieldElement inverse() const { return {*field_, field_->inv(code_)}; }
  FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow(code_, e)}; }
  FieldElement frobenius() const { return {*field_, field_->frobenius(code_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_;
  }

 private:
  const FiniteField* field_;
  FiniteField::Elem code_;
};

}  // namespace cplab
