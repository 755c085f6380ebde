#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modular.hpp"
#include "pentagon.hpp"
#include "test_util.hpp"

using namespace polylab;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
Scalar q(long v) { return Scalar(QQ, v); }
ProjPoint qp(long a, long b, long c) { return make_point(q(a), q(b), q(c)); }
}  // namespace

TEST_CASE("lambda0 of the family has the closed-form normal columns") {
  auto g = testutil::rng(41);
  int done = 0;
  while (done < 20) {
    ProjPoint w = testutil::random_point(QQ, g);
    try {
      Arrangement C1 = lambda0(pentagon_family(w));
      auto cols = lambda0_normal_columns(w);
      for (int i = 0; i < 5; ++i) CHECK(C1.member(static_cast<std::size_t>(i)) == cols[static_cast<std::size_t>(i)]);
      ++done;
    } catch (const Error&) {
      continue;  // degenerate parameter
    }
  }
}

TEST_CASE("lambda0 formula equals the geometric map over Q and F101") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    auto g = testutil::rng(43);
    int done = 0;
    while (done < 50) {
      ProjPoint w = testutil::random_point(f, g);
      try {
        ProjPoint geo = lambda0_geometric(w);
        ProjPoint form = lambda0_formula(w);
        CHECK(geo == form);
        ++done;
      } catch (const Error&) {
        continue;
      }
    }
  }
}

TEST_CASE("exactly the eight listed base points over fields containing sqrt 5") {
  for (std::uint64_t p : {11ull, 19ull, 29ull}) {
    FieldSpec f = FieldSpec::prime(p);
    std::set<Triple> expected;
    for (const auto& bp : pentagon_base_points(f)) expected.insert(bp.t);
    CHECK(expected.size() == 8);
    std::set<Triple> found;
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    auto probe = [&](const Triple& t) {
      try {
        static_cast<void>(lambda0_formula(ProjPoint{t}));
      } catch (const Error& e) {
        if (e.code() == Errc::BasePoint) found.insert(t);
      }
    };
    for (long b = 0; b < static_cast<long>(p); ++b)
      for (long c = 0; c < static_cast<long>(p); ++c) probe(Triple(one, Scalar(f, b), Scalar(f, c)));
    for (long c = 0; c < static_cast<long>(p); ++c) probe(Triple(zero, one, Scalar(f, c)));
    probe(Triple(zero, zero, one));
    CHECK(found == expected);
  }
}

TEST_CASE("golden-ratio parameter: base point whose pentagon image is a symmetry star") {
  FieldSpec f = FieldSpec::prime(11);
  Scalar s5 = sqrt_in_field(f, Scalar(f, 5));
  ProjPoint w = make_point(s5 + Scalar(f, 3), s5 + Scalar::one(f), Scalar(f, 2));
  CHECK_THROWS_AS(static_cast<void>(lambda0_formula(w)), Error);
  // geometrically the image is five concurrent lines (the regular pentagon star)
  Arrangement C1 = lambda0(pentagon_family(w));
  auto sp = singular_points(C1);
  CHECK(sp.size() == 1);
  CHECK(sp[0].second == 5);
}

TEST_CASE("lambda_minus undoes lambda_plus label by label") {
  auto g = testutil::rng(47);
  int done = 0;
  while (done < 50) {
    ProjPoint w = testutil::random_point(QQ, g);
    try {
      Arrangement C = pentagon_family(w);
      CHECK(lambda_minus(lambda_plus(C)) == C);
      ++done;
    } catch (const Error&) {
      continue;
    }
  }
}

TEST_CASE("lambda_plus image is projectively equivalent to the pentagon; lambda0 image is not") {
  auto g = testutil::rng(53);
  int done = 0;
  while (done < 25) {
    ProjPoint w = testutil::random_point(QQ, g);
    try {
      Arrangement C = pentagon_family(w);
      CHECK(projectively_equivalent(C, lambda_plus(C)).has_value());
      CHECK(!projectively_equivalent(C, lambda0(C)).has_value());
      ++done;
    } catch (const Error&) {
      continue;
    }
  }
}

TEST_CASE("pentagram equals lambda_minus composed with the label shift") {
  auto g = testutil::rng(59);
  int done = 0;
  while (done < 25) {
    ProjPoint w = testutil::random_point(QQ, g);
    try {
      Arrangement C = pentagon_family(w);
      Arrangement P = pentagram(C);
      Arrangement LM = lambda_minus(C);
      for (int r = 0; r < 5; ++r)
        CHECK(P.member(static_cast<std::size_t>(r)) == LM.member(static_cast<std::size_t>((r + 4) % 5)));
      ++done;
    } catch (const Error&) {
      continue;
    }
  }
}

TEST_CASE("pentagram on a quadrilateral degenerates") {
  Arrangement quad(Kind::Lines, QQ,
                   {Triple(q(1), q(0), q(0)), Triple(q(0), q(1), q(0)), Triple(q(0), q(0), q(1)),
                    Triple(q(1), q(1), q(1))});
  CHECK_THROWS_AS(static_cast<void>(pentagram(quad)), Error);
}

TEST_CASE("E_w contains all ten normals and matches the interpolation oracle") {
  auto g = testutil::rng(61);
  int done = 0;
  while (done < 20) {
    ProjPoint w = testutil::random_point(QQ, g);
    try {
      PlaneCubic E = pentagon_Ew(w);
      Arrangement C0 = pentagon_family(w);
      Arrangement C1 = lambda0(C0);
      std::vector<ProjPoint> normals;
      for (std::size_t i = 0; i < 5; ++i) normals.push_back(ProjPoint{C0.member(i)});
      for (std::size_t i = 0; i < 5; ++i) normals.push_back(ProjPoint{C1.member(i)});
      for (const auto& n : normals) CHECK(E.contains(n));
      CubicFit fit = fit_cubic(normals);
      CHECK(fit.rank == 9);
      REQUIRE(fit.cubic.has_value());
      CHECK(*fit.cubic == E);
      ++done;
    } catch (const Error& e) {
      if (e.code() != Errc::Degenerate && e.code() != Errc::DegenerateFrame) throw;
      continue;
    }
  }
  CHECK_THROWS_AS(static_cast<void>(pentagon_Ew(qp(2, 1, 1))), Error);  // b = 1 excluded
}

TEST_CASE("psi0 on a 5-term torsion progression multiplies p and t by -2") {
  // Tate curve with a 5-torsion point over Q plus a small rational point
  for (long dpar = 2; dpar <= 6; ++dpar) {
    TorsionDatum datum = tate_curve(5, q(dpar));
    auto p = tate_rational_point(datum, 14);
    if (!p) continue;
    TorsionProgression prog = torsion_progression(datum, *p);
    // arrange T_p in the operator's labeling: slot i holds p + (i+1) t
    Arrangement C(Kind::Lines, QQ);
    for (int i = 0; i < 5; ++i)
      C.push_back(prog.points[static_cast<std::size_t>((i + 1) % 5)].t, std::to_string(i + 1));
    Arrangement C1 = lambda0(C);
    ProjPoint m2p = datum.group.scalar_mul(-2, *p);
    ProjPoint m2t = datum.group.scalar_mul(-2, datum.t);
    for (int j = 0; j < 5; ++j) {
      ProjPoint expect = datum.group.add(m2p, datum.group.scalar_mul(j + 1, m2t));
      CHECK(ProjPoint{C1.member(static_cast<std::size_t>(j))} == expect);
    }
    return;
  }
  FAIL("no Tate parameter with a small rational point found");
}
