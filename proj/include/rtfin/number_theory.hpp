#pragma once

#include <cstdint>
#include <vector>

namespace rtfin::nt {

bool is_prime(std::int64_t n);
bool is_odd_prime(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

// Odd primes in [lo, hi], ascending.
std::vector<int> odd_primes(int lo, int hi);

// Floor-style remainder, always in [0, m).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace rtfin::nt
