#include "pentagon.hpp"

#include "family_constants.hpp"

namespace polylab {

namespace {

using constants::Mono;

Scalar eval_monos(const Mono* ms, std::size_t n, const Triple& w) {
  const FieldSpec& f = w.field();
  Scalar acc = Scalar::zero(f);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar term(f, ms[i].c);
    for (int e = 0; e < ms[i].ex; ++e) term *= w[0];
    for (int e = 0; e < ms[i].ey; ++e) term *= w[1];
    for (int e = 0; e < ms[i].ez; ++e) term *= w[2];
    acc += term;
  }
  return acc;
}

// vertex pair tables, 0-based member indices for labels 1..5
struct PairTable {
  int a0, a1, b0, b1;
};
constexpr PairTable L0[5] = {{2, 3, 1, 4}, {0, 2, 3, 4}, {0, 4, 1, 3}, {0, 1, 2, 4}, {0, 3, 1, 2}};
constexpr PairTable LP[5] = {{1, 2, 3, 4}, {0, 4, 2, 3}, {0, 1, 3, 4}, {0, 4, 1, 2}, {0, 1, 2, 3}};
constexpr PairTable LM[5] = {{1, 3, 2, 4}, {0, 3, 2, 4}, {0, 3, 1, 4}, {0, 2, 1, 4}, {0, 2, 1, 3}};

Arrangement apply_pairs(const Arrangement& C, const PairTable* table, const char* opname) {
  if (C.kind() != Kind::Lines || C.size() != 5) throw Error(Errc::DomainError, "pentagon operator needs 5 lines");
  // all ten vertices must be distinct
  std::set<Triple> vertices;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!vertices.insert(meet(C.line(static_cast<std::size_t>(i)), C.line(static_cast<std::size_t>(j))).t).second)
        throw Error(Errc::Degenerate, std::string(opname) + ": pentagon vertices are not distinct");
  try {
    Arrangement out(Kind::Lines, C.field());
    for (int j = 0; j < 5; ++j) {
      const PairTable& t = table[j];
      ProjPoint p1 = meet(C.line(static_cast<std::size_t>(t.a0)), C.line(static_cast<std::size_t>(t.a1)));
      ProjPoint p2 = meet(C.line(static_cast<std::size_t>(t.b0)), C.line(static_cast<std::size_t>(t.b1)));
      out.push_back(join(p1, p2).t, C.label(static_cast<std::size_t>(j)));
    }
    return out;
  } catch (const Error& e) {
    if (e.code() == Errc::DegenerateInput) throw Error(Errc::Degenerate, std::string(opname) + ": " + e.what());
    throw;
  }
}

}  // namespace

Arrangement pentagon_family(const ProjPoint& w) {
  const FieldSpec& f = w.t.field();
  Scalar z = Scalar::zero(f), o = Scalar::one(f);
  Arrangement C(Kind::Lines, f);
  std::array<Triple, 5> normals{Triple(o, z, z), Triple(z, o, z), Triple(z, z, o), Triple(o, o, o), w.t};
  try {
    for (int i = 0; i < 5; ++i) C.push_back(normals[static_cast<std::size_t>(i)], std::to_string(i + 1));
    std::set<Triple> vertices;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (!vertices.insert(meet(C.line(static_cast<std::size_t>(i)), C.line(static_cast<std::size_t>(j))).t).second)
          throw Error(Errc::Degenerate, "parameter on the pentagon degeneracy locus");
  } catch (const Error& e) {
    if (e.code() == Errc::DegenerateInput) throw Error(Errc::Degenerate, e.what());
    throw;
  }
  return C;
}

Arrangement lambda0(const Arrangement& C) { return apply_pairs(C, L0, "lambda0"); }
Arrangement lambda_plus(const Arrangement& C) { return apply_pairs(C, LP, "lambda_plus"); }
Arrangement lambda_minus(const Arrangement& C) { return apply_pairs(C, LM, "lambda_minus"); }

Arrangement pentagram(const Arrangement& C) {
  if (C.kind() != Kind::Lines || C.size() < 4) throw Error(Errc::DegenerateInput, "pentagram needs >= 4 lines");
  const int n = static_cast<int>(C.size());
  Arrangement out(Kind::Lines, C.field());
  for (int r = 0; r < n; ++r) {
    ProjPoint p1 = meet(C.line(static_cast<std::size_t>(r)), C.line(static_cast<std::size_t>((r + 2) % n)));
    ProjPoint p2 = meet(C.line(static_cast<std::size_t>((r + 1) % n)), C.line(static_cast<std::size_t>((r + 3) % n)));
    if (p1 == p2) throw Error(Errc::DegenerateInput, "pentagram meets coincide");
    out.push_back(join(p1, p2).t, C.label(static_cast<std::size_t>(r)));
  }
  return out;
}

ProjPoint lambda0_formula(const ProjPoint& w) {
  using namespace constants;
  Scalar X = eval_monos(LAMBDA0_X, std::size(LAMBDA0_X), w.t);
  Scalar Y = eval_monos(LAMBDA0_Y, std::size(LAMBDA0_Y), w.t);
  Scalar Z = eval_monos(LAMBDA0_Z, std::size(LAMBDA0_Z), w.t);
  if (X.is_zero() && Y.is_zero() && Z.is_zero()) throw Error(Errc::BasePoint, "base point of the degree-8 map");
  return make_point(X, Y, Z);
}

ProjPoint lambda0_geometric(const ProjPoint& w) {
  Arrangement C1 = lambda0(pentagon_family(w));
  ProjTransform T = frame_map(dualize(C1.line(0)), dualize(C1.line(1)), dualize(C1.line(2)), dualize(C1.line(3)));
  return T.apply(dualize(C1.line(4)));
}

std::array<Triple, 5> lambda0_normal_columns(const ProjPoint& w) {
  const FieldSpec& f = w.t.field();
  const Scalar &x = w.t[0], &y = w.t[1], &z = w.t[2];
  Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  return {Triple(x, x, z), Triple(y - x, zero, y - z), Triple(z, y, z), Triple(x, y, zero), Triple(zero, one, one)};
}

PlaneCubic pentagon_Ew(const ProjPoint& w) {
  const FieldSpec& f = w.t.field();
  if (w.t[2].is_zero()) throw Error(Errc::Degenerate, "E_w needs w = (a : b : 1)");
  Scalar a = w.t[0] / w.t[2], b = w.t[1] / w.t[2];
  Scalar one = Scalar::one(f);
  if (a.is_zero() || b.is_zero() || b == one) throw Error(Errc::Degenerate, "E_w parameter excluded");
  Scalar bb = b * b - b;  // b(b-1)
  Scalar z = Scalar::zero(f);
  std::array<Scalar, 10> co{
      z,                                       // x^3
      one,                                     // x^2 y
      -a,                                      // x^2 z
      -(a / b),                                // x y^2
      (a * a * b - a - b * b + b) / bb,        // x y z
      (a * b - a * a) / (b - one),             // x z^2
      z,                                       // y^3
      (a * b - a * a) / bb,                    // y^2 z
      (a * a - a * b) / bb,                    // y z^2
      z,                                       // z^3
  };
  return PlaneCubic(f, co);
}

std::vector<ProjPoint> pentagon_base_points(const FieldSpec& f) {
  Scalar z = Scalar::zero(f), o = Scalar::one(f), two(f, 2), three(f, 3), five(f, 5);
  Scalar s5 = sqrt_in_field(f, five);
  std::vector<ProjPoint> pts{
      make_point(z, o, z),  make_point(o, o, o), make_point(z, z, o),
      make_point(o, z, z),  make_point(o, o, z), make_point(o, z, o),
      make_point(s5 + three, s5 + o, two),
      make_point(three - s5, o - s5, two),
  };
  return pts;
}

}  // namespace polylab
