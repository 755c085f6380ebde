#pragma once

#include <array>
#include <set>
#include <vector>

#include "arrangement.hpp"

namespace polylab {

/// Rank-3 matroid on atoms 1..m, stored as its set of non-basis triples.
struct Rank3Matroid {
  int m = 0;
  std::set<std::array<int, 3>> nonbases;  // sorted 1-based triples

  bool is_nonbasis(int i, int j, int k) const;
  bool operator==(const Rank3Matroid& o) const { return m == o.m && nonbases == o.nonbases; }
};

/// Non-basis = vanishing 3x3 minor (three concurrent lines / collinear points).
Rank3Matroid matroid_of_arrangement(const Arrangement& C);

/// M_n on Z/n u Z/n': atoms 1..n are residues 0..n-1, atom n+1+r is the primed
/// residue r; non-bases are {i, j, r'} with i != j and i+j+r = 0 mod n.
Rank3Matroid build_Mn(int n);

struct Violation {
  std::array<int, 3> triple;       // 1-based atoms
  bool unexpected_dependence;      // false = missing dependence
};

struct VerifyReport {
  bool ok = false;
  std::vector<Violation> violations;
};

VerifyReport verify_realization(const Arrangement& C, const Rank3Matroid& M);

/// Affine automorphism of M_n: i -> a i + b unprimed, r' -> (a r - 2 b)' primed.
/// Returned as a permutation of 0-based atom indices (size 2n).
std::vector<int> affine_relabel(int n, int a, int b);

/// Arrangement with members permuted so new atom i holds old atom perm[i].
Arrangement apply_relabel(const Arrangement& C, const std::vector<int>& perm);

}  // namespace polylab
