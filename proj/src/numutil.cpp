#include "numutil.hpp"

#include <algorithm>

#include "error.hpp"

namespace polylab {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for 64-bit with these bases
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd_u64(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  for (std::uint64_t p = 2; p * p <= n && p < 100000; ++p) {
    if (n % p == 0) {
      while (n % p == 0) { out[p]++; n /= p; }
      factor_into(n, out);
      return;
    }
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<std::uint64_t, int> factorize(std::uint64_t n) {
  std::map<std::uint64_t, int> out;
  if (n == 0) throw Error(Errc::DomainError, "factorize(0)");
  factor_into(n, out);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  auto f = factorize(n);
  std::vector<std::uint64_t> ds{1};
  for (auto [p, e] : f) {
    std::size_t base = ds.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2 || gcd_u64(a % m, m) != 1) throw Error(Errc::DomainError, "order: not a unit");
  // order divides the group exponent; search divisors of Carmichael via phi of m
  std::uint64_t phi = 1;
  for (auto [p, e] : factorize(m)) {
    std::uint64_t pe = 1;
    for (int i = 0; i < e - 1; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  std::uint64_t best = 0;
  for (std::uint64_t d : divisors(phi)) {
    if (powmod(a % m, d, m) == 1) { best = d; break; }
  }
  if (best == 0) throw Error(Errc::DomainError, "order: no exponent found");
  return best;
}

}  // namespace polylab
