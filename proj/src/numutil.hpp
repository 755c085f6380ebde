#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace polylab {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
bool is_prime(std::uint64_t n);

/// Prime factorization (trial division + Pollard rho), exponents included.
std::map<std::uint64_t, int> factorize(std::uint64_t n);

/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Multiplicative order of a mod m (gcd(a,m)=1 required).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace polylab
