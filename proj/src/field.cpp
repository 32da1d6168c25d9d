#include "cplab/field.hpp"

#include <algorithm>
#include <string>

#include "cplab/error.hpp"

namespace cplab {

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + g[i]) % p;
  trim(out);
  return out;
}

Poly sub(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + p - g[i]) % p;
  trim(out);
  return out;
}

Poly mul(const Poly& f, const Poly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  std::vector<std::uint64_t> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{f[i]} * g[j]) % p;
    }
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

void divmod(const Poly& f, const Poly& g, std::uint32_t p, Poly& quotient, Poly& remainder) {
  if (g.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  remainder = f;
  trim(remainder);
  quotient.assign(remainder.size() >= g.size() ? remainder.size() - g.size() + 1 : 0, 0);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (remainder.size() >= g.size()) {
    const std::size_t shift = remainder.size() - g.size();
    const std::uint32_t c =
        static_cast<std::uint32_t>(std::uint64_t{remainder.back()} * lead_inv % p);
    quotient[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) {
      remainder[shift + i] = static_cast<std::uint32_t>(
          (remainder[shift + i] + p - std::uint64_t{c} * g[i] % p) % p);
    }
    trim(remainder);
  }
  trim(quotient);
}

Poly mod(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly q, r;
  divmod(f, g, p, q, r);
  return r;
}

Poly gcd(Poly f, Poly g, std::uint32_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    for (auto& c : f) c = static_cast<std::uint32_t>(std::uint64_t{c} * lead_inv % p);
  }
  return f;
}

Poly powmod(const Poly& f, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  Poly result{1};
  result = mod(result, modulus, p);
  Poly base = mod(f, modulus, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base, p), modulus, p);
    base = mod(mul(base, base, p), modulus, p);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly t{0, 1};
  Poly frob = t;  // t^(p^i) mod f
  for (int i = 1; i <= n / 2; ++i) {
    frob = powmod(frob, p, f, p);
    Poly g = gcd(sub(frob, t, p), f, p);
    if (degree(g) > 0) return false;
  }
  return true;
}

Poly monic_from_code(std::uint64_t code, int degree, std::uint32_t p) {
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

Poly least_irreducible(int degree, std::uint32_t p) {
  const std::uint64_t count = ipow(p, static_cast<unsigned>(degree));
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = monic_from_code(code, degree, p);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::NotFound, "no irreducible polynomial found");
}

Poly cyclotomic(std::uint64_t n, std::uint32_t p) {
  // t^n - 1 divided by Phi_d for every proper divisor d of n; all divisors
  // are monic so the division is exact over F_p.
  Poly f(n + 1, 0);
  f[0] = p - 1;
  f[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly q, r;
    divmod(f, cyclotomic(d, p), p, q, r);
    f = std::move(q);
  }
  return f;
}

}  // namespace poly

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  a %= n;
  std::uint64_t x = a;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (x == 1) return k;
    x = x * a % n;
  }
  return 0;  // not a unit
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, poly::Poly modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated, std::to_string(p) + " is not prime");
  }
  poly::trim(modulus_);
  k_ = poly::degree(modulus_);
  if (k_ < 1 || modulus_.back() != 1) {
    throw Error(ErrorCode::PreconditionViolated, "modulus must be monic of degree >= 1");
  }
  if (!poly::is_irreducible(modulus_, p_)) {
    throw Error(ErrorCode::NotIrreducible, "modulus is reducible over F_" + std::to_string(p));
  }
  q_ = ipow(p_, static_cast<unsigned>(k_));
  if (q_ > (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::PreconditionViolated, "field too large for 32-bit codes");
  }
  digits_scale_.resize(k_);
  std::uint32_t s = 1;
  for (int i = 0; i < k_; ++i) {
    digits_scale_[i] = s;
    s *= p_;
  }
}

FiniteField FiniteField::prime_field(std::uint32_t p) { return FiniteField(p, {0, 1}); }

FiniteField FiniteField::with_least_modulus(std::uint32_t p, int k) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated, std::to_string(p) + " is not prime");
  }
  return FiniteField(p, poly::least_irreducible(k, p));
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

poly::Poly FiniteField::coeffs(Elem a) const {
  poly::Poly c(k_, 0);
  for (int i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FiniteField::Elem FiniteField::from_coeffs(const poly::Poly& coeffs) const {
  poly::Poly r = poly::mod(coeffs, modulus_, p_);
  Elem code = 0;
  for (std::size_t i = 0; i < r.size(); ++i) code += r[i] * digits_scale_[i];
  return code;
}

FiniteField::Elem FiniteField::generator_t() const { return from_coeffs({0, 1}); }

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  Elem out = 0;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * digits_scale_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  Elem out = 0;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * digits_scale_[i];
    a /= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  return from_coeffs(poly::mul(coeffs(a), coeffs(b), p_));
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

std::uint64_t FiniteField::multiplicative_order(Elem a) const {
  if (a == 0) return 0;
  // The order divides q-1: strip prime factors while the power stays 1.
  std::uint64_t order = q_ - 1;
  std::uint64_t n = order;
  for (std::uint64_t d = 2; d * d <= n || n > 1; ++d) {
    if (d * d > n) d = n;
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    while (order % d == 0 && pow(a, order / d) == one()) order /= d;
  }
  return order;
}

FiniteField::Elem FiniteField::multiplicative_generator() const {
  for (Elem a = 1; a < q_; ++a) {
    if (multiplicative_order(a) == q_ - 1) return a;
  }
  throw Error(ErrorCode::NotFound, "no multiplicative generator");
}

}  // namespace cplab
