#pragma once

#include <functional>
#include <optional>

#include "arrangement.hpp"

namespace polylab {

/// Least m >= 1 with (-2)^m = 1 mod r; NotAUnit for even r.
long long order_of_minus2(long long r);

struct PeriodRow {
  int k = 0;
  long long count = 0;
  long long lowest = 0;
  std::vector<long long> rs;
};

/// All odd r with order_of_minus2(r) = k, from the divisors of 2^k - (-1)^k.
std::vector<PeriodRow> period_table(const std::vector<int>& ks);

enum class EqualityMode { LabeledExact, UnlabeledSet, Projective };

struct OrbitRecord {
  std::vector<Arrangement> iterates;  // iterate 0 = seed
  std::optional<int> period;
  EqualityMode mode = EqualityMode::UnlabeledSet;
};

/// Iterates op until iterate 0 repeats (per mode) or max_iter; the period is
/// detected exactly. Operator failures carry the failing iterate index.
OrbitRecord orbit(const Arrangement& seed, const std::function<Arrangement(const Arrangement&)>& op, int max_iter,
                  EqualityMode mode);

/// Union of one full period of iterates, duplicate lines merged.
Arrangement orbit_union(const OrbitRecord& rec);
SingularityProfile orbit_union_stats(const OrbitRecord& rec);

}  // namespace polylab
