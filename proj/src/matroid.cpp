#include "matroid.hpp"

#include <algorithm>

#include "numutil.hpp"

namespace polylab {

bool Rank3Matroid::is_nonbasis(int i, int j, int k) const {
  std::array<int, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  return nonbases.count(t) > 0;
}

Rank3Matroid matroid_of_arrangement(const Arrangement& C) {
  if (C.size() < 3) throw Error(Errc::DomainError, "matroid needs >= 3 members");
  Rank3Matroid M;
  M.m = static_cast<int>(C.size());
  for (int i = 0; i < M.m; ++i)
    for (int j = i + 1; j < M.m; ++j)
      for (int k = j + 1; k < M.m; ++k)
        if (det3(C.member(static_cast<std::size_t>(i)), C.member(static_cast<std::size_t>(j)),
                 C.member(static_cast<std::size_t>(k)))
                .is_zero())
          M.nonbases.insert({i + 1, j + 1, k + 1});
  return M;
}

Rank3Matroid build_Mn(int n) {
  if (n < 5) throw Error(Errc::DomainError, "build_Mn needs n >= 5");
  Rank3Matroid M;
  M.m = 2 * n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int r = ((-(i + j)) % n + n) % n;
      std::array<int, 3> t{i + 1, j + 1, n + r + 1};
      std::sort(t.begin(), t.end());
      M.nonbases.insert(t);
    }
  }
  return M;
}

VerifyReport verify_realization(const Arrangement& C, const Rank3Matroid& M) {
  if (static_cast<int>(C.size()) != M.m) throw Error(Errc::DomainError, "arrangement length != matroid ground set");
  VerifyReport rep;
  rep.ok = true;
  for (int i = 0; i < M.m; ++i)
    for (int j = i + 1; j < M.m; ++j)
      for (int k = j + 1; k < M.m; ++k) {
        bool dep = det3(C.member(static_cast<std::size_t>(i)), C.member(static_cast<std::size_t>(j)),
                        C.member(static_cast<std::size_t>(k)))
                       .is_zero();
        bool expected = M.is_nonbasis(i + 1, j + 1, k + 1);
        if (dep != expected) {
          rep.ok = false;
          rep.violations.push_back({{i + 1, j + 1, k + 1}, dep});
        }
      }
  return rep;
}

std::vector<int> affine_relabel(int n, int a, int b) {
  int am = ((a % n) + n) % n;
  if (gcd_u64(static_cast<std::uint64_t>(am), static_cast<std::uint64_t>(n)) != 1)
    throw Error(Errc::NotAUnit, std::to_string(a) + " is not a unit mod " + std::to_string(n));
  std::vector<int> perm(static_cast<std::size_t>(2 * n));
  auto mod = [&](long long v) { return static_cast<int>(((v % n) + n) % n); };
  for (int i = 0; i < n; ++i) {
    perm[static_cast<std::size_t>(i)] = mod(static_cast<long long>(a) * i + b);
    perm[static_cast<std::size_t>(n + i)] = n + mod(static_cast<long long>(a) * i - 2ll * b);
  }
  return perm;
}

Arrangement apply_relabel(const Arrangement& C, const std::vector<int>& perm) {
  if (perm.size() != C.size()) throw Error(Errc::DomainError, "permutation size mismatch");
  // place old atom i at new slot perm[i]
  std::vector<const Triple*> slots(C.size(), nullptr);
  std::vector<std::string> labels(C.size());
  for (std::size_t i = 0; i < C.size(); ++i) {
    std::size_t to = static_cast<std::size_t>(perm[i]);
    if (to >= C.size() || slots[to]) throw Error(Errc::DomainError, "not a permutation");
    slots[to] = &C.member(i);
    labels[to] = C.label(i);
  }
  std::vector<Triple> out;
  out.reserve(C.size());
  for (auto* s : slots) out.push_back(*s);
  return Arrangement(C.kind(), C.field(), std::move(out), std::move(labels));
}

}  // namespace polylab
