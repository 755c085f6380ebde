#pragma once

#include <random>

#include "arrangement.hpp"

namespace polylab::testutil {

inline std::mt19937_64 rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) { return std::mt19937_64(seed); }

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& g) {
  if (f.is_rationals()) {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    return Scalar(f, mpq_class(num(g), den(g)));
  }
  std::uniform_int_distribution<long> r(0, static_cast<long>(f.p()) - 1);
  return Scalar(f, r(g));
}

inline Scalar random_nonzero(const FieldSpec& f, std::mt19937_64& g) {
  for (;;) {
    Scalar s = random_scalar(f, g);
    if (!s.is_zero()) return s;
  }
}

inline ProjPoint random_point(const FieldSpec& f, std::mt19937_64& g) {
  for (;;) {
    Scalar a = random_scalar(f, g), b = random_scalar(f, g), c = random_scalar(f, g);
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    return make_point(a, b, c);
  }
}

inline ProjTransform random_transform(const FieldSpec& f, std::mt19937_64& g) {
  for (;;) {
    std::array<Scalar, 9> m{random_scalar(f, g), random_scalar(f, g), random_scalar(f, g),
                            random_scalar(f, g), random_scalar(f, g), random_scalar(f, g),
                            random_scalar(f, g), random_scalar(f, g), random_scalar(f, g)};
    bool allzero = true;
    for (auto& s : m) allzero = allzero && s.is_zero();
    if (allzero) continue;
    try {
      return ProjTransform(m);
    } catch (const Error&) {
      continue;
    }
  }
}

}  // namespace polylab::testutil
