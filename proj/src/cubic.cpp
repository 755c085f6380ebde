#include "cubic.hpp"

#include <algorithm>

#include "numutil.hpp"

namespace polylab {

namespace {

constexpr int MONO[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                             {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};

Scalar spow(const Scalar& s, int e) {
  Scalar r = Scalar::one(s.field());
  for (int i = 0; i < e; ++i) r *= s;
  return r;
}

}  // namespace

PlaneCubic::PlaneCubic(const FieldSpec& field, const std::array<Scalar, 10>& coeffs) : field_(field), co_(coeffs) {
  for (auto& c : co_)
    if (c.field() != field_) throw Error(Errc::DomainError, "cubic coefficient field mismatch");
  for (auto& c : co_) {
    if (!c.is_zero()) {
      Scalar inv = c.inverse();
      for (auto& w : co_) w *= inv;
      return;
    }
  }
  throw Error(Errc::DegenerateInput, "zero cubic");
}

Scalar PlaneCubic::eval(const Triple& t) const {
  Scalar s = Scalar::zero(field_);
  for (int m = 0; m < 10; ++m) {
    if (co_[static_cast<std::size_t>(m)].is_zero()) continue;
    s += co_[static_cast<std::size_t>(m)] * spow(t[0], MONO[m][0]) * spow(t[1], MONO[m][1]) * spow(t[2], MONO[m][2]);
  }
  return s;
}

std::array<Scalar, 3> PlaneCubic::gradient(const Triple& t) const {
  std::array<Scalar, 3> g{Scalar::zero(field_), Scalar::zero(field_), Scalar::zero(field_)};
  for (int m = 0; m < 10; ++m) {
    const Scalar& c = co_[static_cast<std::size_t>(m)];
    if (c.is_zero()) continue;
    for (int v = 0; v < 3; ++v) {
      int e = MONO[m][v];
      if (e == 0) continue;
      Scalar term = c * Scalar(field_, e);
      for (int w = 0; w < 3; ++w) term *= spow(t[w], w == v ? MONO[m][w] - 1 : MONO[m][w]);
      g[static_cast<std::size_t>(v)] += term;
    }
  }
  return g;
}

bool PlaneCubic::singular_at(const ProjPoint& p) const {
  if (!contains(p)) return false;
  auto g = gradient(p.t);
  return g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
}

CubicFit fit_cubic(const std::vector<ProjPoint>& points) {
  if (points.empty()) throw Error(Errc::DomainError, "fit_cubic needs at least one point");
  const FieldSpec f = points[0].t.field();
  std::vector<std::array<Scalar, 10>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    std::array<Scalar, 10> row{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                               Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    for (int m = 0; m < 10; ++m)
      row[static_cast<std::size_t>(m)] = spow(p.t[0], MONO[m][0]) * spow(p.t[1], MONO[m][1]) * spow(p.t[2], MONO[m][2]);
    rows.push_back(row);
  }
  // exact Gauss elimination, tracking pivot columns
  std::size_t nrows = rows.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < 10 && r < nrows; ++c) {
    std::size_t sel = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (!rows[i][static_cast<std::size_t>(c)].is_zero()) { sel = i; break; }
    if (sel == nrows) continue;
    std::swap(rows[r], rows[sel]);
    Scalar inv = rows[r][static_cast<std::size_t>(c)].inverse();
    for (int j = c; j < 10; ++j) rows[r][static_cast<std::size_t>(j)] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r) continue;
      Scalar factor = rows[i][static_cast<std::size_t>(c)];
      if (factor.is_zero()) continue;
      for (int j = c; j < 10; ++j)
        rows[i][static_cast<std::size_t>(j)] -= factor * rows[r][static_cast<std::size_t>(j)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  CubicFit fit;
  fit.rank = static_cast<int>(r);
  // nullspace basis from free columns
  std::vector<bool> is_pivot(10, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int fc = 0; fc < 10; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    std::array<Scalar, 10> v{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                             Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    v[static_cast<std::size_t>(fc)] = Scalar::one(f);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[static_cast<std::size_t>(pivot_col[i])] = -rows[i][static_cast<std::size_t>(fc)];
    fit.nullspace.push_back(v);
  }
  if (fit.rank == 10) {
    fit.status = CubicFit::Status::NoCubic;
  } else if (fit.rank == 9) {
    fit.status = CubicFit::Status::Unique;
    fit.cubic = PlaneCubic(f, fit.nullspace[0]);
  } else {
    fit.status = CubicFit::Status::Pencil;
  }
  return fit;
}

namespace {

// coefficients of F(mu P + la Q) = c0 mu^3 + c1 mu^2 la + c2 mu la^2 + c3 la^3,
// recovered from four evaluations (char != 2, 3 by field precondition)
std::array<Scalar, 4> binary_cubic(const PlaneCubic& F, const Triple& P, const Triple& Q) {
  const FieldSpec& f = F.field();
  auto comb = [&](long mu, long la) {
    Scalar m(f, mu), l(f, la);
    Scalar x = m * P[0] + l * Q[0], y = m * P[1] + l * Q[1], z = m * P[2] + l * Q[2];
    std::array<Scalar, 3> raw{x, y, z};
    Scalar s = Scalar::zero(f);
    // evaluate without canonicalizing (the triple may be zero only if P=Q)
    for (int mdx = 0; mdx < 10; ++mdx) {
      const Scalar& c = F.coeffs()[static_cast<std::size_t>(mdx)];
      if (c.is_zero()) continue;
      Scalar term = c;
      for (int v = 0; v < 3; ++v)
        for (int e = 0; e < MONO[mdx][v]; ++e) term *= raw[static_cast<std::size_t>(v)];
      s += term;
    }
    return s;
  };
  Scalar f10 = comb(1, 0), f01 = comb(0, 1), f11 = comb(1, 1), f1m1 = comb(1, -1);
  Scalar half = Scalar(f, 2).inverse();
  Scalar c0 = f10, c3 = f01;
  Scalar c1 = (f11 - f1m1) * half - c3;
  Scalar c2 = (f11 + f1m1) * half - c0;
  return {c0, c1, c2, c3};
}

Triple line_point_off(const std::array<Scalar, 3>& L, const Triple& avoid) {
  // some point on the line L other than `avoid`
  const FieldSpec& f = L[0].field();
  Scalar z = Scalar::zero(f);
  std::array<std::array<Scalar, 3>, 3> cands{{{L[1], -L[0], z}, {L[2], z, -L[0]}, {z, L[2], -L[1]}}};
  for (auto& c : cands) {
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
    Triple t(c[0], c[1], c[2]);
    if (t != avoid) return t;
  }
  throw Error(Errc::DegenerateInput, "degenerate tangent line");
}

}  // namespace

ProjPoint third_intersection(const PlaneCubic& curve, const ProjPoint& p, const ProjPoint& q) {
  if (!curve.contains(p) || !curve.contains(q)) throw Error(Errc::DomainError, "third_intersection: point off curve");
  if (curve.singular_at(p) || curve.singular_at(q)) throw Error(Errc::SingularPoint, "input point is singular");
  const FieldSpec& f = curve.field();
  ProjPoint r = p;
  if (p == q) {
    auto g = curve.gradient(p.t);
    Triple q2 = line_point_off(g, p.t);
    auto c = binary_cubic(curve, p.t, q2);
    if (!c[0].is_zero() || !c[1].is_zero()) throw Error(Errc::DomainError, "tangency arithmetic failed");
    if (c[2].is_zero() && c[3].is_zero()) throw Error(Errc::Degenerate, "line contained in cubic");
    // la^2 (c2 mu + c3 la): third root at (c3 : -c2)
    Scalar mu = c[3], la = -c[2];
    r = make_point(mu * p.t[0] + la * q2[0], mu * p.t[1] + la * q2[1], mu * p.t[2] + la * q2[2]);
  } else {
    auto c = binary_cubic(curve, p.t, q.t);
    if (c[1].is_zero() && c[2].is_zero()) throw Error(Errc::Degenerate, "line contained in cubic");
    // mu la (c1 mu + c2 la): third root at (c2 : -c1)
    Scalar mu = c[2], la = -c[1];
    r = make_point(mu * p.t[0] + la * q.t[0], mu * p.t[1] + la * q.t[1], mu * p.t[2] + la * q.t[2]);
  }
  if (curve.singular_at(r)) throw Error(Errc::SingularPoint, "chord passes through a singular point");
  (void)f;
  return r;
}

CubicGroup::CubicGroup(const PlaneCubic& curve, const ProjPoint& origin) : curve_(curve), origin_(origin) {
  if (!curve_.contains(origin_)) throw Error(Errc::DomainError, "origin not on curve");
  if (curve_.singular_at(origin_)) throw Error(Errc::SingularPoint, "origin is singular");
  if (third_intersection(curve_, origin_, origin_) != origin_)
    throw Error(Errc::DomainError, "origin is not a flex");
}

ProjPoint CubicGroup::add(const ProjPoint& p, const ProjPoint& q) const {
  return third_intersection(curve_, origin_, third_intersection(curve_, p, q));
}

ProjPoint CubicGroup::neg(const ProjPoint& p) const { return third_intersection(curve_, origin_, p); }

ProjPoint CubicGroup::scalar_mul(long long k, const ProjPoint& p) const {
  if (k < 0) return scalar_mul(-k, neg(p));
  ProjPoint acc = origin_;
  ProjPoint base = p;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1) acc = add(acc, base);
    base = add(base, base);
    e >>= 1;
  }
  return acc;
}

std::optional<long long> point_order(const CubicGroup& g, const ProjPoint& p, long long bound) {
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(bound))) {
    if (g.scalar_mul(static_cast<long long>(d), p) == g.origin()) return static_cast<long long>(d);
  }
  return std::nullopt;
}

bool valid_progression(const TorsionDatum& datum, const ProjPoint& p) {
  const CubicGroup& g = datum.group;
  if (!g.curve().contains(p)) return false;
  ProjPoint sixp = g.scalar_mul(6, p);
  ProjPoint kt = g.origin();
  for (int k = 0; k < datum.n; ++k) {
    if (sixp == kt) return false;
    kt = g.add(kt, datum.t);
  }
  return true;
}

namespace {

PlaneCubic weierstrass_cubic(const FieldSpec& f, const Scalar& a, const Scalar& b) {
  // y^2 z = x^3 + a x z^2 + b z^3
  Scalar z = Scalar::zero(f), one = Scalar::one(f);
  std::array<Scalar, 10> co{one, z, z, z, z, a, z, -one, z, b};
  return PlaneCubic(f, co);
}

}  // namespace

bool scan_weierstrass(const FieldSpec& field, long long max_curves,
                      const std::function<bool(const WeierstrassScan&)>& visit) {
  if (field.kind() != FieldKind::Prime) throw Error(Errc::DomainError, "scan_weierstrass needs a prime field");
  const std::uint64_t p = field.p();
  // quadratic residue table: sqrt_table[v] = s with s^2 = v, or p if none
  std::vector<std::uint64_t> sqrt_table(p, p);
  for (std::uint64_t s = 0; s <= p / 2; ++s) sqrt_table[mulmod(s, s, p)] = s;
  long long scanned = 0;
  for (std::uint64_t a = 0; a < p && scanned < max_curves; ++a) {
    for (std::uint64_t b = 0; b < p && scanned < max_curves; ++b) {
      // discriminant of y^2 = x^3 + ax + b: -16(4a^3 + 27b^2)
      std::uint64_t disc = (mulmod(4, mulmod(a, mulmod(a, a, p), p), p) + mulmod(27, mulmod(b, b, p), p)) % p;
      if (disc == 0) continue;
      ++scanned;
      WeierstrassScan scan{field, Scalar(field, static_cast<long>(a)), Scalar(field, static_cast<long>(b)),
                           weierstrass_cubic(field, Scalar(field, static_cast<long>(a)), Scalar(field, static_cast<long>(b))),
                           0, {}};
      scan.points.push_back(make_point(Scalar::zero(field), Scalar::one(field), Scalar::zero(field)));
      for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t rhs = (mulmod(x, mulmod(x, x, p), p) + mulmod(a, x, p) + b) % p;
        std::uint64_t s = sqrt_table[rhs];
        if (s == p) continue;
        Scalar xs(field, static_cast<long>(x)), one = Scalar::one(field);
        scan.points.push_back(make_point(xs, Scalar(field, static_cast<long>(s)), one));
        if (s != 0) scan.points.push_back(make_point(xs, Scalar(field, static_cast<long>(p - s)), one));
      }
      scan.group_order = static_cast<long long>(scan.points.size());
      if (visit(scan)) return true;
    }
  }
  return false;
}

std::optional<ProjPoint> point_of_exact_order(const WeierstrassScan& scan, long long d) {
  if (scan.group_order % d != 0) return std::nullopt;
  CubicGroup g(scan.cubic, scan.points[0]);
  if (d == 1) return scan.points[0];
  auto fac = factorize(static_cast<std::uint64_t>(d));
  long long cof = scan.group_order / d;
  int tried = 0;
  for (std::size_t i = 1; i < scan.points.size() && tried < 60; ++i, ++tried) {
    ProjPoint q = g.scalar_mul(cof, scan.points[i]);
    if (q == g.origin()) continue;
    bool exact = g.scalar_mul(d, q) == g.origin();
    for (auto [pr, e] : fac) {
      (void)e;
      if (!exact) break;
      if (g.scalar_mul(d / static_cast<long long>(pr), q) == g.origin()) exact = false;
    }
    if (exact) return q;
  }
  return std::nullopt;
}

TorsionDatum find_torsion_point(const FieldSpec& field, int n, long long max_curves) {
  if (n < 1) throw Error(Errc::DomainError, "torsion order must be positive");
  const std::uint64_t p = field.p();
  std::uint64_t root = 0;
  while ((root + 1) * (root + 1) <= p) ++root;
  if (static_cast<std::uint64_t>(n) > p + 1 + 2 * root)
    throw Error(Errc::NotFound, "Hasse bound excludes order " + std::to_string(n) + " over " + field.to_string());
  std::optional<TorsionDatum> found;
  scan_weierstrass(field, max_curves, [&](const WeierstrassScan& scan) {
    if (scan.group_order % n != 0) return false;
    auto t = point_of_exact_order(scan, n);
    if (!t) return false;
    found = TorsionDatum{CubicGroup(scan.cubic, scan.points[0]), *t, n};
    return true;
  });
  if (!found) throw Error(Errc::NotFound, "no order-" + std::to_string(n) + " point within budget");
  return *found;
}

namespace {

PlaneCubic tate_cubic(const FieldSpec& f, const Scalar& b, const Scalar& c) {
  // y^2 z + (1-c) x y z - b y z^2 = x^3 - b x^2 z
  Scalar z = Scalar::zero(f), one = Scalar::one(f);
  std::array<Scalar, 10> co{-one, z, b, z, one - c, z, z, one, -b, z};
  return PlaneCubic(f, co);
}

Scalar tate_discriminant(const Scalar& b, const Scalar& c) {
  // a1 = 1-c, a2 = -b, a3 = -b, a4 = a6 = 0
  const FieldSpec& f = b.field();
  Scalar a1 = Scalar::one(f) - c, a2 = -b, a3 = -b;
  Scalar b2 = a1 * a1 + Scalar(f, 4) * a2;
  Scalar b4 = a1 * a3;
  Scalar b6 = a3 * a3;
  Scalar b8 = a2 * a3 * a3;
  return -b2 * b2 * b8 - Scalar(f, 8) * b4 * b4 * b4 - Scalar(f, 27) * b6 * b6 + Scalar(f, 9) * b2 * b4 * b6;
}

}  // namespace

TorsionDatum tate_curve(int n, const Scalar& param) {
  const FieldSpec& f = param.field();
  const Scalar d = param;
  const Scalar one = Scalar::one(f);
  Scalar b = Scalar::zero(f), c = Scalar::zero(f);
  auto nonzero = [&](const Scalar& v, const char* what) {
    if (v.is_zero()) throw Error(Errc::Degenerate, std::string("parameter hits excluded locus: ") + what);
    return v;
  };
  switch (n) {
    case 5: b = d; c = d; break;
    case 6: b = d * d + d; c = d; break;
    case 7: b = d * d * (d - one); c = d * (d - one); break;
    case 8: {
      Scalar t = (Scalar(f, 2) * d - one) * (d - one);
      b = t;
      c = t / nonzero(d, "d=0");
      break;
    }
    case 9: {
      c = d * d * (d - one);
      b = c * (d * d - d + one);
      break;
    }
    case 10: {
      Scalar den = nonzero((d + Scalar(f, 3)) * (d * d - Scalar(f, 5)), "(d+3)(d^2-5)=0");
      Scalar num = (d - one) * (d + one);
      b = Scalar(f, 8) * num / nonzero(den * (d * d - Scalar(f, 5)), "(d^2-5)=0");
      c = -Scalar(f, 2) * num / den;
      break;
    }
    case 12: {
      Scalar m1 = nonzero(d - one, "d=1"), p1 = nonzero(d + one, "d=-1");
      Scalar q1 = d * d - Scalar(f, 4) * d + Scalar(f, 7);
      Scalar q2 = d * d - Scalar(f, 2) * d + Scalar(f, 5);
      Scalar num = -Scalar(f, 2) * (d - Scalar(f, 3));
      b = num * q1 * q2 / (m1.pow(4) * p1 * p1);
      c = num * q1 / (m1.pow(3) * p1);
      break;
    }
    default:
      throw Error(Errc::DomainError, "tate_curve supports n in {5,6,7,8,9,10,12}");
  }
  if (tate_discriminant(b, c).is_zero()) throw Error(Errc::Degenerate, "singular Tate curve at this parameter");
  PlaneCubic cubic = tate_cubic(f, b, c);
  ProjPoint O = make_point(Scalar::zero(f), one, Scalar::zero(f));
  CubicGroup g(cubic, O);
  ProjPoint t = make_point(Scalar::zero(f), Scalar::zero(f), one);
  // re-verify the table entry with the group law
  auto ord = point_order(g, t, n);
  if (!ord || *ord != n)
    throw Error(Errc::Degenerate, "torsion table verification failed for n=" + std::to_string(n));
  return TorsionDatum{g, t, n};
}

std::optional<ProjPoint> tate_rational_point(const TorsionDatum& datum, int height) {
  const FieldSpec& f = datum.group.curve().field();
  if (!f.is_rationals()) throw Error(Errc::DomainError, "tate_rational_point is a Q-only search");
  // y^2 + (a1 x + a3) y = x^3 + a2 x^2 with a1 = 1-c, a3 = -b, a2 = -b from the cubic coefficients
  const auto& co = datum.group.curve().coeffs();
  // co is canonicalized up to scale; recover affine coefficients relative to y^2 z coefficient
  Scalar s = co[7].inverse();
  Scalar a1 = co[4] * s, a3 = co[8] * s, a2 = -(co[2] * s);
  Scalar one = Scalar::one(f);
  if (co[0] * s != -one) throw Error(Errc::DomainError, "unexpected cubic shape");
  for (int den = 1; den <= height; ++den) {
    for (int num = -height; num <= height; ++num) {
      Scalar x(f, mpq_class(num, den));
      Scalar lin = a1 * x + a3;
      Scalar rhs = x * x * x + a2 * x * x;
      Scalar disc = lin * lin + Scalar(f, 4) * rhs;
      if (disc.rational() < 0) continue;
      mpq_class dr = disc.rational();
      mpz_class sn = sqrt(dr.get_num()), sd = sqrt(dr.get_den());
      if (sn * sn != dr.get_num() || sd * sd != dr.get_den()) continue;
      Scalar root(f, mpq_class(sn, sd));
      Scalar y = (root - lin) / Scalar(f, 2);
      ProjPoint P = make_point(x, y, one);
      if (!datum.group.curve().contains(P)) continue;
      if (valid_progression(datum, P)) return P;
    }
  }
  return std::nullopt;
}

PlaneCubic nodal_cubic(const FieldSpec& field) {
  Scalar z = Scalar::zero(field), one = Scalar::one(field);
  // y^2 z = x^3 + x^2 z
  std::array<Scalar, 10> co{one, z, one, z, z, z, z, -one, z, z};
  return PlaneCubic(field, co);
}

ProjPoint nodal_gamma(const Scalar& t) {
  const FieldSpec& f = t.field();
  if (t.is_zero()) throw Error(Errc::DomainError, "gamma(0) is the node");
  Scalar one = Scalar::one(f), four(f, 4);
  if (t == one) return make_point(Scalar::zero(f), one, Scalar::zero(f));
  Scalar t2 = t * t;
  return make_point(four * t2 - four * t, four * t2 + four * t, (t - one).pow(3));
}

Scalar nodal_inverse(const ProjPoint& P) {
  const FieldSpec& f = P.t.field();
  if (!nodal_cubic(f).contains(P)) throw Error(Errc::DomainError, "point not on the nodal cubic");
  if (P == make_point(Scalar::zero(f), Scalar::zero(f), Scalar::one(f)))
    throw Error(Errc::DomainError, "the node is excluded");
  const Scalar &x = P.t[0], &y = P.t[1], &z = P.t[2];
  if (y.is_zero()) throw Error(Errc::DomainError, "inverse chart needs y != 0");
  Scalar two(f, 2);
  return (two * x * x + two * x * y + y * y + two * x * z + two * y * z) / (y * y);
}

Arrangement cuspidal_progression(const FieldSpec& field, const Scalar& p0, const Scalar& step) {
  std::uint64_t l = field.characteristic();
  if (l < 7) throw Error(Errc::DomainError, "cuspidal progression needs characteristic >= 7");
  if (step.is_zero()) throw Error(Errc::DomainError, "step must be nonzero");
  Arrangement out(Kind::Points, field);
  std::vector<Scalar> params;
  Scalar t = p0;
  for (std::uint64_t k = 0; k < l; ++k) {
    params.push_back(t);
    out.push_back(Triple(t, Scalar::one(field), t.pow(3)), std::to_string(k));
    t += step;
  }
  // collinear iff parameter sum vanishes; exhaustive for small l, sampled above
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    bool dep = det3(out.member(i), out.member(j), out.member(k)).is_zero();
    bool sum0 = (params[i] + params[j] + params[k]).is_zero();
    if (dep != sum0) throw Error(Errc::DomainError, "cuspidal collinearity law violated");
  };
  if (l <= 13) {
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j)
        for (std::size_t k = j + 1; k < l; ++k) check(i, j, k);
  } else {
    for (std::size_t i = 0; i + 2 < l; ++i) check(i, i + 1, i + 2);
  }
  return out;
}

}  // namespace polylab
