// Polynomials over F_p with exact arithmetic, modular exponentiation,
// Rabin irreducibility and the order-of-X primitivity test.
//
// Coefficients are stored constant-term first and kept trimmed: the
// leading coefficient is nonzero unless the polynomial is zero (empty
// coefficient vector, degree -1).
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "brunnian/errors.hpp"
#include "brunnian/factor.hpp"
#include "brunnian/fp.hpp"

namespace brunnian {

class Polynomial {
 public:
  Polynomial(std::vector<std::uint64_t> coefficients, std::uint64_t p)
      : c_(std::move(coefficients)), p_(p) {
    if (p < 2) throw domain_error("polynomial modulus must be >= 2");
    for (auto& c : c_) c %= p_;
    trim();
  }

  static Polynomial zero(std::uint64_t p) { return Polynomial({}, p); }
  static Polynomial one(std::uint64_t p) { return Polynomial({1}, p); }
  static Polynomial x(std::uint64_t p) { return Polynomial({0, 1}, p); }
  static Polynomial monomial(unsigned exp, std::uint64_t coeff, std::uint64_t p) {
    std::vector<std::uint64_t> c(exp + 1, 0);
    c[exp] = coeff;
    return Polynomial(std::move(c), p);
  }
  // X^n - 1, the characteristic polynomial of the cyclic shift.
  static Polynomial x_pow_minus_one(unsigned n, std::uint64_t p) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = p - 1;
    c[n] = 1;
    return Polynomial(std::move(c), p);
  }

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  // Coefficient of X^i; zero beyond the degree.
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = fp_detail::add_mod(a.coeff(i), b.coeff(i), a.p_);
    return Polynomial(std::move(c), a.p_);
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = fp_detail::sub_mod(a.coeff(i), b.coeff(i), a.p_);
    return Polynomial(std::move(c), a.p_);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return zero(a.p_);
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = fp_detail::add_mod(
            c[i + j], fp_detail::mul_mod(a.c_[i], b.c_[j], a.p_), a.p_);
    }
    return Polynomial(std::move(c), a.p_);
  }

  std::uint64_t evaluate(std::uint64_t x) const {
    std::uint64_t acc = 0;
    x %= p_;
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = fp_detail::add_mod(fp_detail::mul_mod(acc, x, p_), c_[i], p_);
    return acc;
  }

  Polynomial monic_scaled() const {
    if (is_zero() || is_monic()) return *this;
    std::uint64_t inv = fp_detail::inv_mod(c_.back(), p_);
    std::vector<std::uint64_t> c(c_);
    for (auto& v : c) v = fp_detail::mul_mod(v, inv, p_);
    return Polynomial(std::move(c), p_);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.p_ != b.p_) throw domain_error("mixing polynomials over different fields");
  }

  std::vector<std::uint64_t> c_;
  std::uint64_t p_;
};

// Euclidean division; the divisor may have any nonzero leading
// coefficient.
inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& num,
                                                     const Polynomial& den) {
  if (den.is_zero()) throw domain_error("polynomial division by zero");
  const std::uint64_t p = num.modulus();
  if (num.degree() < den.degree()) return {Polynomial::zero(p), num};

  std::vector<std::uint64_t> rem(num.coefficients());
  const int dn = den.degree();
  std::vector<std::uint64_t> quot(rem.size() - dn, 0);
  const std::uint64_t lead_inv = fp_detail::inv_mod(den.coeff(dn), p);

  for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(dn);) {
    if (rem[i] == 0) continue;
    const std::uint64_t q = fp_detail::mul_mod(rem[i], lead_inv, p);
    quot[i - dn] = q;
    for (int j = 0; j <= dn; ++j)
      rem[i - dn + j] =
          fp_detail::sub_mod(rem[i - dn + j], fp_detail::mul_mod(q, den.coeff(j), p), p);
  }
  return {Polynomial(std::move(quot), p), Polynomial(std::move(rem), p)};
}

inline Polynomial poly_mod(const Polynomial& num, const Polynomial& den) {
  return poly_divmod(num, den).second;
}

// Monic gcd.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic_scaled();
}

// base^e mod f by square-and-multiply on residues.
inline Polynomial poly_powmod(const Polynomial& base, const Natural& e,
                              const Polynomial& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw domain_error("poly_powmod: modulus must be monic of degree >= 1");
  Polynomial result = Polynomial::one(f.modulus());
  if (e == 0) return result;
  Polynomial sq = poly_mod(base, f);
  const unsigned top = boost::multiprecision::msb(e);
  for (unsigned i = 0; i <= top; ++i) {
    if (boost::multiprecision::bit_test(e, i)) result = poly_mod(result * sq, f);
    sq = poly_mod(sq * sq, f);
  }
  return result;
}

// X^e mod f.
inline Polynomial poly_powmod_x(const Natural& e, const Polynomial& f) {
  return poly_powmod(Polynomial::x(f.modulus()), e, f);
}

// Rabin's test: f of degree n is irreducible over F_p iff
// X^(p^n) = X (mod f) and gcd(X^(p^(n/q)) - X, f) = 1 for every prime
// q dividing n.
inline bool is_irreducible(const Polynomial& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw domain_error("is_irreducible: f must be monic of degree >= 1");
  const unsigned n = static_cast<unsigned>(f.degree());
  const std::uint64_t p = f.modulus();
  const Polynomial x = Polynomial::x(p);

  if (poly_powmod_x(natural_pow(p, n), f) != poly_mod(x, f)) return false;
  for (const auto& entry : factorize(Natural(n)).factors) {
    const unsigned q = static_cast<unsigned>(entry.prime);
    Polynomial h = poly_powmod_x(natural_pow(p, n / q), f) - poly_mod(x, f);
    if (poly_gcd(h, f).degree() != 0) return false;
  }
  return true;
}

// f is primitive iff it is irreducible and the residue class of X has
// multiplicative order p^n - 1 in F_p[X]/(f), checked via
// X^((p^n-1)/q) != 1 for each prime q | p^n - 1.
inline bool is_primitive(const Polynomial& f, const Factorization& fac_pn_minus_1) {
  if (!f.is_monic() || f.degree() < 1)
    throw domain_error("is_primitive: f must be monic of degree >= 1");
  if (f.coeff(0) == 0) return false;  // X divides f, or f = X itself
  if (!is_irreducible(f)) return false;
  const Natural pn_minus_1 = fac_pn_minus_1.n;
  for (const auto& entry : fac_pn_minus_1.factors) {
    Polynomial h = poly_powmod_x(pn_minus_1 / entry.prime, f);
    if (h == Polynomial::one(f.modulus())) return false;
  }
  return true;
}

inline bool is_primitive(const Polynomial& f, const FactorBudget& budget = {}) {
  if (!f.is_monic() || f.degree() < 1)
    throw domain_error("is_primitive: f must be monic of degree >= 1");
  const Natural pn_minus_1 =
      natural_pow(f.modulus(), static_cast<unsigned>(f.degree())) - 1;
  return is_primitive(f, factorize(pn_minus_1, budget));
}

// Multiplicative order of X in F_p[X]/(f) for irreducible f (the order
// then divides p^n - 1, so prime factors can be divided out).
inline Natural order_of_x(const Polynomial& f, const Factorization& fac_pn_minus_1) {
  Natural e = fac_pn_minus_1.n;
  const Polynomial one = Polynomial::one(f.modulus());
  for (const auto& entry : fac_pn_minus_1.factors) {
    for (unsigned i = 0; i < entry.exponent; ++i) {
      if (e % entry.prime != 0) break;
      Natural candidate = e / entry.prime;
      if (poly_powmod_x(candidate, f) == one)
        e = candidate;
      else
        break;
    }
  }
  return e;
}

// Lexicographically first primitive polynomial of degree n over F_p:
// monic, coefficient vectors enumerated with a0 varying fastest.
inline Polynomial first_primitive(std::uint64_t p, unsigned n,
                                  const FactorBudget& budget = {}) {
  if (n < 1) throw domain_error("first_primitive: degree must be >= 1");
  const Factorization fac = factorize(natural_pow(p, n) - 1, budget);
  std::vector<std::uint64_t> c(n + 1, 0);
  c[n] = 1;
  while (true) {
    Polynomial f(c, p);
    if (is_primitive(f, fac)) return f;
    // Increment the coefficient vector, a0 as the fastest digit.
    unsigned i = 0;
    while (i < n && c[i] == p - 1) c[i++] = 0;
    if (i == n)
      throw domain_error("no primitive polynomial found");  // unreachable for prime p
    ++c[i];
  }
}

}  // namespace brunnian
