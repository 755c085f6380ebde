#pragma once

#include "cubic.hpp"

namespace polylab {

/// C0(w): the pentagon with normal vectors the canonical basis and w.
/// Members are stored in the labeling of the join tables below: index i holds
/// the (i+1)-th line, indices taken mod 5.
Arrangement pentagon_family(const ProjPoint& w);

/// The labeled pentagon operators. Each output line joins two of the ten
/// vertices; the index law is r+s = t+u = 2j mod 5 for lambda0 and the
/// adjacent/skew vertex pairs for lambda_plus/lambda_minus.
Arrangement lambda0(const Arrangement& C);
Arrangement lambda_plus(const Arrangement& C);
Arrangement lambda_minus(const Arrangement& C);

/// Pentagram map on n labeled lines: label r joins the meets (r, r+2) and
/// (r+1, r+3). On pentagons it is lambda_minus up to a label shift.
Arrangement pentagram(const Arrangement& C);

/// The degree-8 parameter map, hardcoded; BasePoint when all three
/// coordinates vanish.
ProjPoint lambda0_formula(const ProjPoint& w);

/// Geometric route: build C0(w), apply lambda0, send the first four output
/// normals to the canonical frame, read off the fifth.
ProjPoint lambda0_geometric(const ProjPoint& w);

/// Expected normals of lambda0(C0(w)) as closed-form columns.
std::array<Triple, 5> lambda0_normal_columns(const ProjPoint& w);

/// The unique cubic through the ten normals of C0(w) and lambda0(C0(w)),
/// from its displayed equation. Degenerate on the excluded parameters.
PlaneCubic pentagon_Ew(const ProjPoint& w);

/// The eight base points of the degree-8 map (requires sqrt(5) in the field).
std::vector<ProjPoint> pentagon_base_points(const FieldSpec& field);

}  // namespace polylab
