#include "modular.hpp"

#include <algorithm>

#include "hexagon.hpp"
#include "numutil.hpp"
#include "pentagon.hpp"

namespace polylab {

TorsionProgression torsion_progression(const TorsionDatum& datum, const ProjPoint& p) {
  if (!datum.group.curve().contains(p)) throw Error(Errc::DomainError, "p not on the curve");
  if (!valid_progression(datum, p))
    throw Error(Errc::InvalidProgression, "6p lies in <t>");
  TorsionProgression prog{datum, p, {}};
  ProjPoint q = p;
  for (int k = 0; k < datum.n; ++k) {
    prog.points.push_back(q);
    q = datum.group.add(q, datum.t);
  }
  return prog;
}

Arrangement progression_points(const TorsionProgression& prog) {
  Arrangement out(Kind::Points, prog.datum.group.curve().field());
  for (std::size_t k = 0; k < prog.points.size(); ++k) out.push_back(prog.points[k].t, std::to_string(k));
  return out;
}

Arrangement progression_lines(const TorsionProgression& prog) { return progression_points(prog).dualized(); }

Arrangement labeled_lambda(const Arrangement& C0, int n) {
  if (C0.kind() != Kind::Lines) throw Error(Errc::DomainError, "labeled_lambda acts on lines");
  if (static_cast<int>(C0.size()) != n) throw Error(Errc::DomainError, "labeled_lambda needs exactly n lines");
  // only double points: all pairwise meets distinct
  std::map<Triple, std::pair<int, int>> vertex;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ProjPoint v = meet(C0.line(static_cast<std::size_t>(i)), C0.line(static_cast<std::size_t>(j)));
      if (!vertex.emplace(v.t, std::make_pair(i, j)).second)
        throw Error(Errc::DegenerateInput, "input has a point of multiplicity > 2");
    }
  Arrangement out(Kind::Lines, C0.field());
  for (int r = 0; r < n; ++r) {
    std::vector<ProjPoint> S;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((i + j + r) % n == 0) S.push_back(meet(C0.line(static_cast<std::size_t>(i)), C0.line(static_cast<std::size_t>(j))));
    if (S.size() < 2) throw Error(Errc::NotCollinear, "slot " + std::to_string(r) + " has fewer than two points");
    ProjLine l = join(S[0], S[1]);
    for (std::size_t s = 2; s < S.size(); ++s)
      if (!incident(l, S[s]))
        throw Error(Errc::NotCollinear, "candidate points for primed label " + std::to_string(r) + " are not collinear");
    out.push_back(l.t, std::to_string(r) + "'");
  }
  return out;
}

Arrangement gamma_map(const TorsionDatum& datum, const ProjPoint& p) {
  TorsionProgression prog = torsion_progression(datum, p);
  ProjPoint m2p = datum.group.scalar_mul(-2, p);
  Arrangement out(Kind::Lines, datum.group.curve().field());
  for (int k = 0; k < datum.n; ++k) out.push_back(prog.points[static_cast<std::size_t>(k)].t, std::to_string(k));
  ProjPoint q = m2p;
  for (int k = 0; k < datum.n; ++k) {
    out.push_back(q.t, std::to_string(k) + "'");
    q = datum.group.add(q, datum.t);
  }
  return out;
}

Arrangement multiply_by_minus2_via_psi(const Arrangement& points, int n) {
  if (points.kind() != Kind::Points) throw Error(Errc::DomainError, "expected a point arrangement");
  Arrangement C1 = labeled_lambda(points.dualized(), n);
  Arrangement out(Kind::Points, points.field());
  for (std::size_t k = 0; k < C1.size(); ++k) out.push_back(C1.member(k), std::to_string(k));
  return out;
}

bool fiber_equivalence_check(const TorsionDatum& datum, const ProjPoint& p, const ProjPoint& t3) {
  if (datum.group.scalar_mul(3, t3) != datum.group.origin())
    throw Error(Errc::DomainError, "t3 must have order dividing 3");
  ProjPoint p2 = datum.group.add(p, t3);
  Arrangement A = gamma_map(datum, p);
  Arrangement B = gamma_map(datum, p2);
  return projectively_equivalent(A, B).has_value();
}

Arrangement realize_from_nodal(int n, const Scalar& t, const FieldSpec& field) {
  if (n < 5) throw Error(Errc::DomainError, "n >= 5 required");
  if (t.field() != field) throw Error(Errc::DomainError, "parameter field mismatch");
  if (t.pow(6ll * n).is_one())
    throw Error(Errc::InvalidProgression, "t^(6n) = 1: the torsion-progression hypothesis fails");
  Scalar zeta = primitive_nth_root(field, static_cast<std::uint64_t>(n));
  Arrangement C0(Kind::Lines, field);
  Scalar z = t;
  for (int k = 0; k < n; ++k) {
    C0.push_back(nodal_gamma(z).t, std::to_string(k));
    z *= zeta;
  }
  Arrangement C1 = labeled_lambda(C0, n);
  Arrangement out = C0;
  for (std::size_t k = 0; k < C1.size(); ++k) out.push_back(C1.member(k), C1.label(k));
  return out;
}

namespace {

std::vector<Triple> all_plane_points(const FieldSpec& f) {
  if (f.kind() != FieldKind::Prime) throw Error(Errc::DomainError, "plane sweep needs a prime field");
  const long p = static_cast<long>(f.p());
  std::vector<Triple> pts;
  pts.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(p) + static_cast<std::size_t>(p) + 1);
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  for (long b = 0; b < p; ++b)
    for (long c = 0; c < p; ++c) pts.push_back(Triple(one, Scalar(f, b), Scalar(f, c)));
  for (long c = 0; c < p; ++c) pts.push_back(Triple(zero, one, Scalar(f, c)));
  pts.push_back(Triple(zero, zero, one));
  return pts;
}

}  // namespace

FiberHistogram lambda_degree_experiment(ParamMap map, const FieldSpec& field, int samples, std::mt19937_64& rng) {
  FiberHistogram out;
  if (map == ParamMap::NodalInverseSquare) {
    // t -> t^-2 on the parameter line G_m
    const long p = static_cast<long>(field.p());
    std::map<std::uint64_t, int> fibers;
    for (long t = 1; t < p; ++t) {
      Scalar img = Scalar(field, t).pow(-2);
      fibers[img.residue()]++;
    }
    std::vector<std::uint64_t> targets;
    for (auto& [v, c] : fibers) targets.push_back(v);
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t i = 0; i < targets.size() && out.samples < samples; ++i, ++out.samples)
      out.histogram[fibers[targets[i]]]++;
    return out;
  }
  auto eval = [&](const Triple& w) -> std::optional<Triple> {
    try {
      ProjPoint img = (map == ParamMap::PentagonLambda0) ? lambda0_formula(ProjPoint{w}) : lambda23_formula(ProjPoint{w});
      return img.t;
    } catch (const Error& e) {
      if (e.code() == Errc::BasePoint || e.code() == Errc::Indeterminate) return std::nullopt;
      throw;
    }
  };
  std::map<Triple, std::vector<Triple>> fibers;
  auto domain = all_plane_points(field);
  for (const Triple& w : domain) {
    auto img = eval(w);
    if (!img) {
      out.skipped++;
      continue;
    }
    fibers[*img].push_back(w);
  }
  std::vector<const Triple*> targets;
  targets.reserve(fibers.size());
  for (auto& [t, pre] : fibers) targets.push_back(&t);
  std::shuffle(targets.begin(), targets.end(), rng);
  for (std::size_t i = 0; i < targets.size() && out.samples < samples; ++i, ++out.samples)
    out.histogram[static_cast<int>(fibers[*targets[i]].size())]++;
  return out;
}

ProgressionSeed find_progression_seed(int n, int r, const std::vector<std::uint64_t>& primes) {
  if (gcd_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)) != 1)
    throw Error(Errc::DomainError, "seed search assumes gcd(n, r) = 1");
  const long long nr = static_cast<long long>(n) * r;
  for (std::uint64_t q : primes) {
    FieldSpec f = FieldSpec::prime(q);
    std::optional<ProgressionSeed> found;
    scan_weierstrass(f, 1000000, [&](const WeierstrassScan& scan) {
      if (scan.group_order % nr != 0) return false;
      auto big = point_of_exact_order(scan, nr);
      if (!big) return false;
      CubicGroup g(scan.cubic, scan.points[0]);
      ProjPoint t = g.scalar_mul(r, *big);
      ProjPoint p = g.scalar_mul(n, *big);
      TorsionDatum datum{g, t, n};
      if (!valid_progression(datum, p)) return false;
      found = ProgressionSeed{datum, p, q};
      return true;
    });
    if (found) return *found;
  }
  throw Error(Errc::NotFound, "no curve with the requested orders over the given primes");
}

ThreeTorsionInstance find_full_3torsion_instance(int n, const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t q : primes) {
    if (q % 3 != 1) continue;  // full 3-torsion needs the cube roots of unity
    FieldSpec f = FieldSpec::prime(q);
    std::optional<ThreeTorsionInstance> found;
    scan_weierstrass(f, 1000000, [&](const WeierstrassScan& scan) {
      if (scan.group_order % (9 * n) != 0) return false;
      CubicGroup g(scan.cubic, scan.points[0]);
      std::vector<ProjPoint> e3;
      for (const auto& pt : scan.points) {
        if (g.scalar_mul(3, pt) == g.origin()) e3.push_back(pt);
        if (e3.size() > 9) break;
      }
      if (e3.size() != 9) return false;
      auto t = point_of_exact_order(scan, n);
      if (!t) return false;
      TorsionDatum datum{g, *t, n};
      for (const auto& pt : scan.points) {
        if (!valid_progression(datum, pt)) continue;
        bool ok = true;
        for (const auto& s : e3)
          if (!valid_progression(datum, g.add(pt, s))) { ok = false; break; }
        if (!ok) continue;
        found = ThreeTorsionInstance{datum, pt, e3, q};
        return true;
      }
      return false;
    });
    if (found) return *found;
  }
  throw Error(Errc::NotFound, "no curve with full 3-torsion and order-" + std::to_string(n) + " point found");
}

}  // namespace polylab
