#include "dynamics.hpp"

#include <algorithm>

#include "numutil.hpp"

namespace polylab {

long long order_of_minus2(long long r) {
  if (r < 3) throw Error(Errc::DomainError, "order_of_minus2 needs r >= 3");
  if (r % 2 == 0) throw Error(Errc::NotAUnit, "-2 is not a unit mod even r");
  std::uint64_t m = static_cast<std::uint64_t>(r);
  return static_cast<long long>(multiplicative_order(m - 2, m));
}

std::vector<PeriodRow> period_table(const std::vector<int>& ks) {
  std::vector<PeriodRow> rows;
  for (int k : ks) {
    if (k < 3 || k > 62) throw Error(Errc::DomainError, "period table needs 3 <= k <= 62");
    PeriodRow row;
    row.k = k;
    // (-2)^k = 1 mod r  iff  r | 2^k - (-1)^k
    std::uint64_t N = (k % 2 == 0) ? ((1ull << k) - 1) : ((1ull << k) + 1);
    for (std::uint64_t r : divisors(N)) {
      if (r < 3) continue;
      if (multiplicative_order(r - 2, r) == static_cast<std::uint64_t>(k)) row.rs.push_back(static_cast<long long>(r));
    }
    std::sort(row.rs.begin(), row.rs.end());
    row.count = static_cast<long long>(row.rs.size());
    row.lowest = row.rs.empty() ? 0 : row.rs.front();
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

bool iterates_equal(const Arrangement& a, const Arrangement& b, EqualityMode mode) {
  switch (mode) {
    case EqualityMode::LabeledExact: return a == b;
    case EqualityMode::UnlabeledSet: return a.same_member_set(b);
    case EqualityMode::Projective: return projectively_equivalent(a, b).has_value();
  }
  return false;
}

}  // namespace

OrbitRecord orbit(const Arrangement& seed, const std::function<Arrangement(const Arrangement&)>& op, int max_iter,
                  EqualityMode mode) {
  OrbitRecord rec;
  rec.mode = mode;
  rec.iterates.push_back(seed);
  for (int m = 1; m <= max_iter; ++m) {
    Arrangement next = [&] {
      try {
        return op(rec.iterates.back());
      } catch (const Error& e) {
        throw Error(Errc::OperatorFailure, "iterate " + std::to_string(m) + ": " + e.what());
      }
    }();
    if (iterates_equal(seed, next, mode)) {
      rec.period = m;
      return rec;
    }
    rec.iterates.push_back(std::move(next));
  }
  return rec;  // period undetected within max_iter
}

Arrangement orbit_union(const OrbitRecord& rec) {
  if (rec.iterates.empty()) throw Error(Errc::DomainError, "empty orbit");
  if (!rec.period) throw Error(Errc::DomainError, "orbit union needs a detected period");
  const Arrangement& seed = rec.iterates.front();
  Arrangement u(seed.kind(), seed.field());
  for (const auto& it : rec.iterates) {
    for (std::size_t i = 0; i < it.size(); ++i) {
      if (!u.contains(it.member(i))) u.push_back(it.member(i), std::to_string(u.size()));
    }
  }
  return u.sorted_unlabeled();
}

SingularityProfile orbit_union_stats(const OrbitRecord& rec) { return stats(orbit_union(rec)); }

}  // namespace polylab
