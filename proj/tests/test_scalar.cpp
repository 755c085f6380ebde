#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scalar.hpp"
#include "test_util.hpp"

using namespace polylab;

TEST_CASE("canonical rationals: a/b equals (ka)/(kb)") {
  FieldSpec Q = FieldSpec::rationals();
  CHECK(Scalar(Q, mpq_class(2, 4)) == Scalar(Q, mpq_class(1, 2)));
  CHECK(Scalar(Q, mpq_class(-6, 9)) == Scalar(Q, mpq_class(mpz_class(2), mpz_class(-3))));
  CHECK(Scalar(Q, mpq_class(2, 4)).to_string() == "1/2");
  CHECK(Scalar(Q, 7).to_string() == "7");
}

TEST_CASE("field axioms hold exactly on random triples") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101), FieldSpec::prime_square(7)}) {
    auto g = testutil::rng(11);
    auto rnd = [&] {
      if (f.kind() == FieldKind::PrimeSquare) {
        std::uniform_int_distribution<long> r(0, 6);
        return Scalar::ext(f, static_cast<std::uint64_t>(r(g)), static_cast<std::uint64_t>(r(g)));
      }
      return testutil::random_scalar(f, g);
    };
    for (int i = 0; i < 200; ++i) {
      Scalar a = rnd(), b = rnd(), c = rnd();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar::one(f));
        CHECK(a / a == Scalar::one(f));
      }
    }
  }
}

TEST_CASE("primes <= 3 are rejected") {
  CHECK_THROWS_AS(FieldSpec::prime(3), Error);
  CHECK_THROWS_AS(FieldSpec::prime(2), Error);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
}

TEST_CASE("primitive_nth_root against exhaustive search over F29") {
  FieldSpec f = FieldSpec::prime(29);
  // oracle: all elements of order exactly 7 in F29*
  std::set<std::uint64_t> order7;
  for (std::uint64_t g = 1; g < 29; ++g) {
    std::uint64_t x = 1;
    int ord = 0;
    for (int k = 1; k <= 28; ++k) {
      x = (x * g) % 29;
      if (x == 1) { ord = k; break; }
    }
    if (ord == 7) order7.insert(g);
  }
  CHECK(order7.size() == 6);
  Scalar z = primitive_nth_root(f, 7);
  CHECK(order7.count(z.residue()) == 1);
  CHECK(z.pow(7).is_one());
  CHECK(!z.is_one());
  CHECK(primitive_nth_root(f, 1) == Scalar::one(f));
  CHECK_THROWS_WITH_AS(static_cast<void>(primitive_nth_root(FieldSpec::prime(7), 7)), doctest::Contains("NoRoot"),
                       Error);
}

TEST_CASE("root of unity has exact order on every proper divisor") {
  FieldSpec f = FieldSpec::prime(97);  // 96 = 2^5 * 3
  for (std::uint64_t n : {2ull, 3ull, 4ull, 6ull, 8ull, 12ull, 16ull, 24ull, 32ull, 48ull, 96ull}) {
    Scalar z = primitive_nth_root(f, n);
    CHECK(z.pow(static_cast<long long>(n)).is_one());
    for (std::uint64_t d = 1; d < n; ++d)
      if (n % d == 0) CHECK(!z.pow(static_cast<long long>(d)).is_one());
  }
}

TEST_CASE("sqrt_in_field against exhaustive square tables") {
  FieldSpec f11 = FieldSpec::prime(11);
  Scalar r = sqrt_in_field(f11, Scalar(f11, 5));
  CHECK(r * r == Scalar(f11, 5));
  CHECK((r.residue() == 4 || r.residue() == 7));
  CHECK(sqrt_in_field(f11, Scalar::zero(f11)).is_zero());
  FieldSpec f7 = FieldSpec::prime(7);
  // squares mod 7 are {0,1,2,4}
  for (long a = 0; a < 7; ++a) {
    bool is_square = a == 0 || a == 1 || a == 2 || a == 4;
    if (is_square) {
      Scalar s = sqrt_in_field(f7, Scalar(f7, a));
      CHECK(s * s == Scalar(f7, a));
    } else {
      CHECK_THROWS_AS(static_cast<void>(sqrt_in_field(f7, Scalar(f7, a))), Error);
    }
  }
}

TEST_CASE("F_p^2 basics: nonresidue, u^2 = d, parsing round trip") {
  FieldSpec f = FieldSpec::prime_square(7);
  CHECK(f.nonresidue() == 3);
  Scalar u = Scalar::ext(f, 0, 1);
  CHECK(u * u == Scalar(f, 3));
  CHECK(f.unit_group_order() == 48);
  Scalar w = Scalar::ext(f, 4, 5);
  CHECK(Scalar::parse(f, w.to_string()) == w);
  // every F_p element has a square root in F_p^2
  for (long a = 1; a < 7; ++a) {
    Scalar s = sqrt_in_field(f, Scalar(f, a));
    CHECK(s * s == Scalar(f, a));
  }
}

TEST_CASE("scalar string round trips") {
  FieldSpec Q = FieldSpec::rationals();
  auto g = testutil::rng(5);
  for (int i = 0; i < 100; ++i) {
    Scalar s = testutil::random_scalar(Q, g);
    CHECK(Scalar::parse(Q, s.to_string()) == s);
  }
  FieldSpec f = FieldSpec::prime(499);
  for (int i = 0; i < 100; ++i) {
    Scalar s = testutil::random_scalar(f, g);
    CHECK(Scalar::parse(f, s.to_string()) == s);
  }
}
