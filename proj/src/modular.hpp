#pragma once

#include <random>

#include "cubic.hpp"
#include "matroid.hpp"

namespace polylab {

/// T_p = (p + k t) for k in 0..n-1, t of exact order n, 6p outside <t>.
struct TorsionProgression {
  TorsionDatum datum;
  ProjPoint p;
  std::vector<ProjPoint> points;
};

TorsionProgression torsion_progression(const TorsionDatum& datum, const ProjPoint& p);

/// The points of T_p as a labeled arrangement (label k = p + k t).
Arrangement progression_points(const TorsionProgression& prog);

/// D(T_p): the dual labeled line arrangement.
Arrangement progression_lines(const TorsionProgression& prog);

/// Labeled line operator of the M_n family: the line with primed label r joins
/// the double points p_{i,j} with i + j + r = 0 mod n. NotCollinear(r) when the
/// input is not in the family.
Arrangement labeled_lambda(const Arrangement& C0, int n);

/// D(T_p) u D(T_{-2p}) with the M_n labeling (unprimed, then primed block).
Arrangement gamma_map(const TorsionDatum& datum, const ProjPoint& p);

/// Multiplication by -2 computed purely from incidences: dual of the labeled
/// line operator applied to the dual. Label k receives (-2p) + k t.
Arrangement multiply_by_minus2_via_psi(const Arrangement& points, int n);

/// Gamma(E,t,p) projectively equivalent to Gamma(E,t,p+t3) as labeled
/// arrangements (t3 of order dividing 3).
bool fiber_equivalence_check(const TorsionDatum& datum, const ProjPoint& p, const ProjPoint& t3);

/// Nodal-cubic realization: C0 = D(gamma(t zeta^k)) for a fixed primitive n-th
/// root zeta, C1 = labeled_lambda(C0). Requires t^(6n) != 1.
Arrangement realize_from_nodal(int n, const Scalar& t, const FieldSpec& field);

enum class ParamMap { PentagonLambda0, HexagonLambda23, NodalInverseSquare };

struct FiberHistogram {
  long long samples = 0;
  std::map<int, long long> histogram;   // fiber size -> number of sampled targets
  long long skipped = 0;                // indeterminacy/base locus points skipped
};

/// Brute-force preimage counts of the induced parameter map over P^2(F_p)
/// (or over G_m(F_p) for the nodal parameter line).
FiberHistogram lambda_degree_experiment(ParamMap map, const FieldSpec& field, int samples, std::mt19937_64& rng);

/// Curve with t of exact order n and p of exact order r, trivially meeting
/// subgroups (gcd(n,r) = 1 required); searched over the given prime fields.
struct ProgressionSeed {
  TorsionDatum datum;
  ProjPoint p;
  std::uint64_t q;  // field characteristic used
};
ProgressionSeed find_progression_seed(int n, int r, const std::vector<std::uint64_t>& primes);

/// Instance with full rational 3-torsion (nine points) plus a valid p.
struct ThreeTorsionInstance {
  TorsionDatum datum;
  ProjPoint p;
  std::vector<ProjPoint> three_torsion;  // all nine points of E[3]
  std::uint64_t q;
};
ThreeTorsionInstance find_full_3torsion_instance(int n, const std::vector<std::uint64_t>& primes);

}  // namespace polylab
