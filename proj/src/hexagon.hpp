#pragma once

#include "cubic.hpp"

namespace polylab {

/// A(p): 12 lines whose normals are the four canonical-basis vectors followed
/// by the eight family vectors, in the published order. The first six lines
/// form the hexagon C0, the last six its image C1 = Lambda_{2|3}(C0).
Arrangement hexagon_family(const ProjPoint& p);

/// Primed-block relabeling under which A(p) realizes M_6 with the i+j+r = 0
/// convention (the family labels the r-th symmetry line by i+j = r instead).
std::vector<int> hexagon_to_mn_relabel();

struct Lambda23Result {
  Arrangement lines;
  bool hexagonal;  // exactly six output lines, labeled 0'..5'
};

/// The combinatorial hexagon operator: slot k collects the lines through at
/// least two points of S_k; slots 0,2,4 give one line, slots 1,3,5 one or
/// three. NonHexagonal outputs are returned, not thrown.
Lambda23Result lambda23(const Arrangement& C0);

/// The degree-6 parameter map; Indeterminate at (0:0:1), (-1:0:1), (1:1:0).
ProjPoint lambda23_formula(const ProjPoint& p);

/// mu: recovers the family parameter of a frame-normalized hexagon from the
/// fifth and sixth normals.
ProjPoint mu_inverse(const Arrangement& framed_C0);

/// Geometric route for the parameter map: apply lambda23, frame-normalize the
/// image hexagon, read the parameter off through mu.
ProjPoint lambda23_geometric(const ProjPoint& p);

/// The parameter-plane actions of the hexagon symmetries and of the pentagram
/// map (an involution not in the Klein group of s1', s2').
ProjPoint s1p(const ProjPoint& p);
ProjPoint s2p(const ProjPoint& p);
ProjPoint s_pentagram(const ProjPoint& p);

}  // namespace polylab
