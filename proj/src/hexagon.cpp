#include "hexagon.hpp"

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

ProjPoint eval_map(const Mono* mx, std::size_t nx, const Mono* my, std::size_t ny, const Mono* mz, std::size_t nz,
                   const ProjPoint& p, Errc empty_code, const char* what) {
  Scalar X = eval_monos(mx, nx, p.t), Y = eval_monos(my, ny, p.t), Z = eval_monos(mz, nz, p.t);
  if (X.is_zero() && Y.is_zero() && Z.is_zero()) throw Error(empty_code, what);
  return make_point(X, Y, Z);
}

// S_k: the vertex pairs p_{i,j} with i + j = k mod 6, in the published order
constexpr int SK[6][3][2] = {
    {{1, 5}, {2, 4}, {-1, -1}},
    {{0, 1}, {2, 5}, {3, 4}},
    {{0, 2}, {3, 5}, {-1, -1}},
    {{0, 3}, {1, 2}, {4, 5}},
    {{0, 4}, {1, 3}, {-1, -1}},
    {{0, 5}, {1, 4}, {2, 3}},
};

}  // namespace

Arrangement hexagon_family(const ProjPoint& p) {
  const FieldSpec& f = p.t.field();
  const Scalar &x = p.t[0], &y = p.t[1], &z = p.t[2];
  Scalar zero = Scalar::zero(f), one = Scalar::one(f), two(f, 2);
  Scalar q = x * x - two * x * y + y * y + x * z;  // recurring quadric
  Scalar xz = x * z, yz = y * z;
  Scalar w = x * y - y * y + yz;
  try {
    std::array<Triple, 12> normals{
        Triple(one, zero, zero),
        Triple(zero, one, zero),
        Triple(zero, zero, one),
        Triple(one, one, one),
        Triple(xz, q, yz),
        Triple(xz, x * x - x * y + xz, w),
        Triple(xz, q, w),
        Triple(z, x - y + z, zero),
        Triple(x, zero, x - y + z),
        Triple(zero, one, one),
        Triple(yz, q, yz),
        Triple(x, x, y),
    };
    Arrangement out(Kind::Lines, f);
    for (int i = 0; i < 12; ++i) {
      std::string label = i < 6 ? std::to_string(i) : std::to_string(i - 6) + "'";
      out.push_back(normals[static_cast<std::size_t>(i)], label);
    }
    return out;
  } catch (const Error& e) {
    if (e.code() == Errc::DegenerateInput) throw Error(Errc::Degenerate, std::string("hexagon family: ") + e.what());
    throw;
  }
}

std::vector<int> hexagon_to_mn_relabel() {
  std::vector<int> perm(12);
  for (int i = 0; i < 6; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int k = 0; k < 6; ++k) perm[static_cast<std::size_t>(6 + k)] = 6 + ((6 - k) % 6);
  return perm;
}

Lambda23Result lambda23(const Arrangement& C0) {
  if (C0.kind() != Kind::Lines || C0.size() != 6) throw Error(Errc::DomainError, "lambda23 needs 6 labeled lines");
  // the fifteen vertices must be distinct
  std::map<Triple, int> seen;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!seen.emplace(meet(C0.line(static_cast<std::size_t>(i)), C0.line(static_cast<std::size_t>(j))).t, 0).second)
        throw Error(Errc::Degenerate, "hexagon vertices are not distinct");
  std::vector<std::vector<ProjLine>> per_slot(6);
  for (int k = 0; k < 6; ++k) {
    std::vector<ProjPoint> S;
    for (auto& pr : SK[k]) {
      if (pr[0] < 0) continue;
      S.push_back(meet(C0.line(static_cast<std::size_t>(pr[0])), C0.line(static_cast<std::size_t>(pr[1]))));
    }
    if (S.size() == 2) {
      per_slot[static_cast<std::size_t>(k)].push_back(join(S[0], S[1]));
    } else {
      ProjLine l01 = join(S[0], S[1]);
      if (incident(l01, S[2])) {
        per_slot[static_cast<std::size_t>(k)].push_back(l01);
      } else {
        per_slot[static_cast<std::size_t>(k)] = {l01, join(S[0], S[2]), join(S[1], S[2])};
      }
    }
  }
  std::size_t total = 0;
  for (auto& v : per_slot) total += v.size();
  Arrangement out(Kind::Lines, C0.field());
  if (total == 6) {
    for (int k = 0; k < 6; ++k) out.push_back(per_slot[static_cast<std::size_t>(k)][0].t, std::to_string(k) + "'");
    return {out, true};
  }
  for (int k = 0; k < 6; ++k) {
    int idx = 0;
    for (auto& l : per_slot[static_cast<std::size_t>(k)]) {
      out.push_back(l.t, std::to_string(k) + "'." + std::to_string(idx++));
    }
  }
  return {out, false};
}

ProjPoint lambda23_formula(const ProjPoint& p) {
  using namespace constants;
  return eval_map(LAMBDA23_X, std::size(LAMBDA23_X), LAMBDA23_Y, std::size(LAMBDA23_Y), LAMBDA23_Z,
                  std::size(LAMBDA23_Z), p, Errc::Indeterminate, "indeterminacy point of the degree-6 map");
}

ProjPoint mu_inverse(const Arrangement& C0) {
  if (C0.kind() != Kind::Lines || C0.size() != 6) throw Error(Errc::DomainError, "mu needs 6 lines");
  const FieldSpec& f = C0.field();
  Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  std::array<Triple, 4> canon{Triple(one, zero, zero), Triple(zero, one, zero), Triple(zero, zero, one),
                              Triple(one, one, one)};
  for (int i = 0; i < 4; ++i)
    if (C0.member(static_cast<std::size_t>(i)) != canon[static_cast<std::size_t>(i)])
      throw Error(Errc::DomainError, "mu needs a frame-normalized hexagon");
  const Triple& n5 = C0.member(4);
  const Triple& n6 = C0.member(5);
  if (n5[2].is_zero() || n6[0].is_zero()) throw Error(Errc::Degenerate, "mu chart coordinate vanishes");
  Scalar u = n5[0] / n5[2];
  Scalar v = n6[1] / n6[0];
  if (u == one) throw Error(Errc::Degenerate, "mu chart needs u != 1");
  return make_point(u * (v - one), v - one, u - one);
}

ProjPoint lambda23_geometric(const ProjPoint& p) {
  Arrangement fam = hexagon_family(p);
  Arrangement C0(Kind::Lines, fam.field());
  for (std::size_t i = 0; i < 6; ++i) C0.push_back(fam.member(i), fam.label(i));
  Lambda23Result r = lambda23(C0);
  if (!r.hexagonal) throw Error(Errc::OperatorFailure, "lambda23 image is not a hexagon");
  ProjTransform T = frame_map(dualize(r.lines.line(0)), dualize(r.lines.line(1)), dualize(r.lines.line(2)),
                              dualize(r.lines.line(3)));
  Arrangement framed(Kind::Lines, fam.field());
  for (std::size_t i = 0; i < 6; ++i) framed.push_back(T.apply(dualize(r.lines.line(i))).t, r.lines.label(i));
  return mu_inverse(framed);
}

ProjPoint s1p(const ProjPoint& p) {
  using namespace constants;
  return eval_map(S1P_X, std::size(S1P_X), S1P_Y, std::size(S1P_Y), S1P_Z, std::size(S1P_Z), p, Errc::Indeterminate,
                  "s1' indeterminate");
}

ProjPoint s2p(const ProjPoint& p) {
  using namespace constants;
  return eval_map(S2P_X, std::size(S2P_X), S2P_Y, std::size(S2P_Y), S2P_Z, std::size(S2P_Z), p, Errc::Indeterminate,
                  "s2' indeterminate");
}

ProjPoint s_pentagram(const ProjPoint& p) {
  using namespace constants;
  return eval_map(SPENT_X, std::size(SPENT_X), SPENT_Y, std::size(SPENT_Y), SPENT_Z, std::size(SPENT_Z), p,
                  Errc::Indeterminate, "s indeterminate");
}

}  // namespace polylab
