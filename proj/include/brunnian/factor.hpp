// Integer factorization: trial division below a fixed bound, then
// Brent-cycle Pollard rho with an iteration cap. Every reported prime is
// certified by is_prime, so a Factorization can back an order
// computation unconditionally.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "brunnian/bigint.hpp"
#include "brunnian/errors.hpp"
#include "brunnian/primality.hpp"

namespace brunnian {

struct FactorEntry {
  Natural prime;
  unsigned exponent = 0;
};

// Invariant: product of prime^exponent equals n; entries strictly
// increasing by prime.
struct Factorization {
  Natural n;
  std::vector<FactorEntry> factors;
};

struct FactorBudget {
  std::uint64_t trial_division_bound = 1'000'000;
  std::uint64_t rho_iteration_cap = 20'000'000;
};

namespace detail {

inline Natural abs_diff(const Natural& a, const Natural& b) {
  return a >= b ? Natural(a - b) : Natural(b - a);
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of odd
// composite n, or 0 if the iteration cap ran out.
inline Natural pollard_rho(const Natural& n, const FactorBudget& budget) {
  using boost::multiprecision::gcd;
  std::uint64_t spent = 0;
  for (std::uint64_t c = 1; spent < budget.rho_iteration_cap; ++c) {
    Natural y = 2, g = 1, q = 1, x = y, ys = y;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    while (g == 1 && spent < budget.rho_iteration_cap) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
        ys = y;
        std::uint64_t steps = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = (q * abs_diff(x, y)) % n;
        }
        g = gcd(q, n);
        spent += steps;
      }
      r <<= 1;
    }
    if (g == n) {
      // Backtrack one step at a time to recover the factor.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs_diff(x, ys), n);
      }
    }
    if (g != n && g > 1) return g;
    // g == n: cycle degenerated for this c, retry with the next one.
  }
  return 0;
}

inline void factor_into(const Natural& n, std::map<Natural, unsigned>& out,
                        const FactorBudget& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Natural d = pollard_rho(n, budget);
  if (d == 0)
    throw infeasible_error(
        "factorization budget exhausted on cofactor " + n.str(), n.str());
  factor_into(d, out, budget);
  factor_into(n / d, out, budget);
}

}  // namespace detail

inline Factorization factorize(Natural n, const FactorBudget& budget = {}) {
  if (n == 0) throw domain_error("factorize: n must be >= 1");
  Factorization result;
  result.n = n;
  std::map<Natural, unsigned> found;

  auto strip = [&](std::uint64_t d) {
    while (n % d == 0) {
      ++found[Natural(d)];
      n /= d;
    }
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= budget.trial_division_bound && Natural(d) * d <= n;
       d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) detail::factor_into(n, found, budget);

  for (const auto& [prime, exp] : found) result.factors.push_back({prime, exp});
  return result;
}

inline Natural reassemble(const Factorization& f) {
  Natural prod = 1;
  for (const auto& e : f.factors)
    for (unsigned i = 0; i < e.exponent; ++i) prod *= e.prime;
  return prod;
}

}  // namespace brunnian
