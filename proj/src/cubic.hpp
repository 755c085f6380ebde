#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "arrangement.hpp"

namespace polylab {

/// Monomial order of cubic coefficients throughout:
/// x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3.
class PlaneCubic {
 public:
  PlaneCubic(const FieldSpec& field, const std::array<Scalar, 10>& coeffs);
  const FieldSpec& field() const { return field_; }
  const std::array<Scalar, 10>& coeffs() const { return co_; }

  Scalar eval(const Triple& t) const;
  std::array<Scalar, 3> gradient(const Triple& t) const;
  bool contains(const ProjPoint& p) const { return eval(p.t).is_zero(); }
  bool singular_at(const ProjPoint& p) const;

  bool operator==(const PlaneCubic& o) const { return field_ == o.field_ && co_ == o.co_; }

 private:
  FieldSpec field_;
  std::array<Scalar, 10> co_;
};

struct CubicFit {
  enum class Status { Unique, Pencil, NoCubic };
  int rank = 0;
  Status status = Status::NoCubic;
  std::optional<PlaneCubic> cubic;                   // set when rank == 9
  std::vector<std::array<Scalar, 10>> nullspace;     // basis, dimension 10 - rank
};

/// Rank of the evaluation matrix plus the through-cubic(s) when they exist.
CubicFit fit_cubic(const std::vector<ProjPoint>& points);

/// Third point of the intersection cycle of the secant/tangent line with the
/// curve, computed by dividing out the two known roots of the binary cubic.
ProjPoint third_intersection(const PlaneCubic& curve, const ProjPoint& p, const ProjPoint& q);

/// Smooth plane cubic with a flex origin; chord-tangent group law.
class CubicGroup {
 public:
  CubicGroup(const PlaneCubic& curve, const ProjPoint& origin);
  const PlaneCubic& curve() const { return curve_; }
  const ProjPoint& origin() const { return origin_; }

  ProjPoint add(const ProjPoint& p, const ProjPoint& q) const;
  ProjPoint neg(const ProjPoint& p) const;
  ProjPoint scalar_mul(long long k, const ProjPoint& p) const;

 private:
  PlaneCubic curve_;
  ProjPoint origin_;
};

struct TorsionDatum {
  CubicGroup group;
  ProjPoint t;
  int n;
};

/// Exact order of a point, assuming it divides `bound`; nullopt otherwise.
std::optional<long long> point_order(const CubicGroup& g, const ProjPoint& p, long long bound);

/// t of exact order n and 6p outside <t> (hypothesis of the torsion-progression
/// construction); checked by explicit scalar multiplications.
bool valid_progression(const TorsionDatum& datum, const ProjPoint& p);

/// One enumerated short-Weierstrass curve y^2 z = x^3 + a x z^2 + b z^3.
struct WeierstrassScan {
  FieldSpec field;
  Scalar a, b;
  PlaneCubic cubic;
  long long group_order;
  std::vector<ProjPoint> points;  // all rational points, origin first
};

/// Enumerates nonsingular curves in a fixed deterministic order until the
/// visitor returns true; returns false when the budget runs out.
bool scan_weierstrass(const FieldSpec& field, long long max_curves,
                      const std::function<bool(const WeierstrassScan&)>& visit);

/// Point of exact order d on a scanned curve, via cofactor multiples.
std::optional<ProjPoint> point_of_exact_order(const WeierstrassScan& scan, long long d);

/// Brute-force search over F_p Weierstrass curves for an order-n point.
TorsionDatum find_torsion_point(const FieldSpec& field, int n, long long max_curves = 20000);

/// Tate normal form y^2 + (1-c) x y - b y = x^3 - b x^2 with (0,0) of exact
/// order n; b, c rational functions of the parameter. Degenerate on vanishing
/// discriminant; every instance is re-verified by the group law.
TorsionDatum tate_curve(int n, const Scalar& param);

/// Small-height rational point search on a Tate curve (for Q instances).
std::optional<ProjPoint> tate_rational_point(const TorsionDatum& datum, int height);

/// Nodal cubic y^2 z = x^3 + x^2 z with node (0:0:1); parametrization of the
/// smooth locus by the multiplicative group.
PlaneCubic nodal_cubic(const FieldSpec& field);
ProjPoint nodal_gamma(const Scalar& t);
Scalar nodal_inverse(const ProjPoint& P);

/// l points on the cuspidal cubic y^2 z = x^3 (cusp removed) in additive
/// progression p0 + k step; three points are collinear iff the parameters sum
/// to zero, which is validated internally.
Arrangement cuspidal_progression(const FieldSpec& field, const Scalar& p0, const Scalar& step);

}  // namespace polylab
