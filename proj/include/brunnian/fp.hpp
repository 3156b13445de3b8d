// Exact arithmetic in the prime field F_p.
//
// A Field validates primality of p once; Fp values carry their modulus
// and refuse to mix with another modulus. All operations reduce
// canonically, so value < modulus holds at all times.
#pragma once

#include <cstdint>

#include "brunnian/bigint.hpp"
#include "brunnian/errors.hpp"
#include "brunnian/factor.hpp"
#include "brunnian/primality.hpp"

namespace brunnian {

namespace fp_detail {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;  // a, b < p <= 2^63 so no overflow
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return r;
}

// Extended Euclid. Requires gcd(a, p) = 1.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw domain_error("inverse of zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw domain_error("element not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace fp_detail

class Fp {
 public:
  Fp(std::uint64_t value, std::uint64_t modulus)
      : v_(value % modulus), p_(modulus) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check_same(a, b);
    return Fp::raw(fp_detail::add_mod(a.v_, b.v_, a.p_), a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check_same(a, b);
    return Fp::raw(fp_detail::sub_mod(a.v_, b.v_, a.p_), a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check_same(a, b);
    return Fp::raw(fp_detail::mul_mod(a.v_, b.v_, a.p_), a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    check_same(a, b);
    return Fp::raw(fp_detail::mul_mod(a.v_, fp_detail::inv_mod(b.v_, a.p_), a.p_),
                   a.p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp inverse() const { return raw(fp_detail::inv_mod(v_, p_), p_); }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp e(0, p);
    e.v_ = v;
    return e;
  }
  static void check_same(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) throw domain_error("mixing elements of different fields");
  }
  std::uint64_t v_;
  std::uint64_t p_;
};

// The field context: primality of p is checked here, once, and elements
// are then created without re-checking.
class Field {
 public:
  explicit Field(std::uint64_t p) : p_(p) {
    if (p >= (1ull << 63)) throw domain_error("modulus too large");
    if (!is_prime_u64(p)) throw domain_error("modulus is not prime");
  }
  std::uint64_t modulus() const { return p_; }
  Fp element(std::uint64_t v) const { return Fp(v, p_); }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }

 private:
  std::uint64_t p_;
};

// base^exp by square-and-multiply. fp_pow(x, 0) = 1 for every x, zero
// included (empty product convention).
inline Fp fp_pow(const Fp& base, const Natural& exp) {
  Fp result(1, base.modulus());
  if (exp == 0) return result;
  Fp sq = base;
  const unsigned top = boost::multiprecision::msb(exp);
  for (unsigned i = 0; i <= top; ++i) {
    if (boost::multiprecision::bit_test(exp, i)) result = result * sq;
    sq = sq * sq;
  }
  return result;
}

inline Fp fp_pow(const Fp& base, std::uint64_t exp) {
  return Fp(fp_detail::pow_mod(base.value(), exp, base.modulus()), base.modulus());
}

// Least e >= 1 with x^e = 1, found by dividing prime factors out of the
// group order p - 1.
inline std::uint64_t element_order(const Fp& x,
                                   const Factorization& group_order_factorization) {
  if (x.is_zero()) throw domain_error("element_order: x must be nonzero");
  const std::uint64_t p = x.modulus();
  std::uint64_t e = p - 1;
  for (const auto& entry : group_order_factorization.factors) {
    const std::uint64_t q = static_cast<std::uint64_t>(entry.prime);
    while (e % q == 0 && fp_detail::pow_mod(x.value(), e / q, p) == 1)
      e /= q;
  }
  return e;
}

inline bool is_generator(const Fp& x, const Factorization& fac_p_minus_1) {
  if (x.is_zero()) throw domain_error("is_generator: x must be nonzero");
  const std::uint64_t p = x.modulus();
  if (p == 2) return true;  // the trivial group is generated by 1
  for (const auto& entry : fac_p_minus_1.factors) {
    const std::uint64_t q = static_cast<std::uint64_t>(entry.prime);
    if (fp_detail::pow_mod(x.value(), (p - 1) / q, p) == 1) return false;
  }
  return true;
}

inline bool is_generator(const Fp& x) {
  return is_generator(x, factorize(Natural(x.modulus()) - 1));
}

}  // namespace brunnian
