#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matroid.hpp"
#include "test_util.hpp"

using namespace polylab;

namespace {
const FieldSpec Q = FieldSpec::rationals();
Scalar q(long v) { return Scalar(Q, v); }
}  // namespace

TEST_CASE("matroid of generic vs concurrent triples") {
  Arrangement generic(Kind::Lines, Q,
                      {Triple(q(1), q(0), q(0)), Triple(q(0), q(1), q(0)), Triple(q(0), q(0), q(1))});
  CHECK(matroid_of_arrangement(generic).nonbases.empty());
  Arrangement conc(Kind::Lines, Q,
                   {Triple(q(1), q(0), q(0)), Triple(q(0), q(1), q(0)), Triple(q(1), q(1), q(0))});
  Rank3Matroid M = matroid_of_arrangement(conc);
  CHECK(M.nonbases == std::set<std::array<int, 3>>{{1, 2, 3}});
}

TEST_CASE("build_Mn counts: n(n-1)/2 non-bases for 5 <= n <= 24") {
  for (int n = 5; n <= 24; ++n) {
    Rank3Matroid M = build_Mn(n);
    CHECK(M.m == 2 * n);
    CHECK(static_cast<long long>(M.nonbases.size()) == static_cast<long long>(n) * (n - 1) / 2);
    // no non-basis inside either block, none within the first four atoms
    for (const auto& t : M.nonbases) {
      CHECK(t[0] <= n);
      CHECK(t[1] <= n);
      CHECK(t[2] > n);
    }
  }
}

TEST_CASE("build_Mn per-slot counts for odd and even n") {
  // n=7: 3 pairs per primed slot; n=8: 4 per odd slot, 3 per even slot
  auto slot_count = [](const Rank3Matroid& M, int n, int r) {
    int cnt = 0;
    for (const auto& t : M.nonbases)
      if (t[2] == n + r + 1) ++cnt;
    return cnt;
  };
  Rank3Matroid M7 = build_Mn(7);
  CHECK(M7.nonbases.size() == 21);
  for (int r = 0; r < 7; ++r) CHECK(slot_count(M7, 7, r) == 3);
  Rank3Matroid M8 = build_Mn(8);
  CHECK(M8.nonbases.size() == 28);
  for (int r = 0; r < 8; ++r) CHECK(slot_count(M8, 8, r) == (r % 2 == 1 ? 4 : 3));
}

TEST_CASE("rule instance: {0,3;2'} is a non-basis of M5") {
  Rank3Matroid M = build_Mn(5);
  CHECK(M.is_nonbasis(1, 4, 5 + 2 + 1));  // atoms: residues 0,3 and primed 2
}

TEST_CASE("basis exchange holds for build_Mn(n), small n") {
  // validate the matroid axioms once on the explicitly constructed family
  for (int n : {5, 6, 7}) {
    Rank3Matroid M = build_Mn(n);
    std::vector<std::array<int, 3>> bases;
    for (int i = 1; i <= M.m; ++i)
      for (int j = i + 1; j <= M.m; ++j)
        for (int k = j + 1; k <= M.m; ++k)
          if (!M.is_nonbasis(i, j, k)) bases.push_back({i, j, k});
    auto contains = [&](int a, int b, int c) {
      std::array<int, 3> t{a, b, c};
      std::sort(t.begin(), t.end());
      return !M.is_nonbasis(t[0], t[1], t[2]) && t[0] != t[1] && t[1] != t[2];
    };
    std::mt19937_64 g(5);
    for (int rep = 0; rep < 2000; ++rep) {
      const auto& A = bases[g() % bases.size()];
      const auto& B = bases[g() % bases.size()];
      if (A == B) continue;
      for (int a : A) {
        if (std::find(B.begin(), B.end(), a) != B.end()) continue;
        bool exchanged = false;
        std::array<int, 2> rest{};
        int idx = 0;
        for (int x : A)
          if (x != a) rest[static_cast<std::size_t>(idx++)] = x;
        for (int b : B) {
          if (std::find(A.begin(), A.end(), b) != A.end()) continue;
          if (contains(rest[0], rest[1], b)) { exchanged = true; break; }
        }
        CHECK(exchanged);
      }
    }
  }
}

TEST_CASE("verify_realization of an arrangement-derived matroid is consistent") {
  auto g = testutil::rng(101);
  Arrangement a(Kind::Lines, Q);
  while (a.size() < 7) {
    Triple t = testutil::random_point(Q, g).t;
    if (!a.contains(t)) a.push_back(t, std::to_string(a.size()));
  }
  Rank3Matroid M = matroid_of_arrangement(a);
  CHECK(verify_realization(a, M).ok);
  // perturb one member: violations appear (re-checked against the old matroid)
  std::vector<Triple> mem = a.members();
  mem[3] = testutil::random_point(Q, g).t;
  Arrangement b(Kind::Lines, Q, mem);
  Rank3Matroid Mb = matroid_of_arrangement(b);
  if (!(Mb == M)) {
    VerifyReport rep = verify_realization(b, M);
    CHECK(!rep.ok);
    CHECK(!rep.violations.empty());
  }
}

TEST_CASE("affine relabeling is an automorphism of build_Mn") {
  for (int n : {7, 8}) {
    Rank3Matroid M = build_Mn(n);
    for (int a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      for (int b : {0, 1, 3}) {
        std::vector<int> perm = affine_relabel(n, a, b);
        std::set<std::array<int, 3>> image;
        for (const auto& t : M.nonbases) {
          std::array<int, 3> u{perm[static_cast<std::size_t>(t[0] - 1)] + 1,
                               perm[static_cast<std::size_t>(t[1] - 1)] + 1,
                               perm[static_cast<std::size_t>(t[2] - 1)] + 1};
          std::sort(u.begin(), u.end());
          image.insert(u);
        }
        CHECK(image == M.nonbases);
      }
    }
  }
  CHECK(affine_relabel(7, 1, 0) == std::vector<int>({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}));
  CHECK_THROWS_AS(static_cast<void>(affine_relabel(8, 2, 0)), Error);
}

TEST_CASE("relabel rule example: n=7, (a,b)=(2,1)") {
  // {0,6;1'} maps to {1,6;0'}, still a non-basis
  std::vector<int> perm = affine_relabel(7, 2, 1);
  CHECK(perm[0] == 1);        // 0 -> 1
  CHECK(perm[6] == 6);        // 6 -> 2*6+1 = 13 = 6
  CHECK(perm[7 + 1] == 7 + 0);  // 1' -> (2*1-2)' = 0'
  Rank3Matroid M = build_Mn(7);
  CHECK(M.is_nonbasis(1, 7, 7 + 1 + 1));
  CHECK(M.is_nonbasis(2, 7, 7 + 0 + 1));
}
