#include "projective.hpp"

namespace polylab {

Triple::Triple(const Scalar& x, const Scalar& y, const Scalar& z) : c_{x, y, z} {
  if (x.field() != y.field() || y.field() != z.field()) throw Error(Errc::DomainError, "mixed-field triple");
  for (auto& v : c_) {
    if (!v.is_zero()) {
      Scalar inv = v.inverse();
      for (auto& w : c_) w *= inv;
      return;
    }
  }
  throw Error(Errc::DegenerateInput, "zero coordinate triple");
}

bool Triple::operator<(const Triple& o) const {
  for (int i = 0; i < 3; ++i) {
    int c = c_[static_cast<std::size_t>(i)].cmp(o.c_[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Triple::to_string() const {
  return "(" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + ")";
}

Scalar incidence(const ProjLine& l, const ProjPoint& p) {
  return l.t[0] * p.t[0] + l.t[1] * p.t[1] + l.t[2] * p.t[2];
}

bool incident(const ProjLine& l, const ProjPoint& p) { return incidence(l, p).is_zero(); }

Scalar det3(const Triple& a, const Triple& b, const Triple& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

namespace {

std::array<Scalar, 3> cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Error(Errc::DegenerateInput, "join of equal points");
  auto c = cross(p.t, q.t);
  return make_line(c[0], c[1], c[2]);
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw Error(Errc::DegenerateInput, "meet of equal lines");
  auto c = cross(l.t, m.t);
  return make_point(c[0], c[1], c[2]);
}

ProjTransform::ProjTransform(const std::array<Scalar, 9>& m) : m_(m) {
  canonicalize();
  if (det().is_zero()) throw Error(Errc::DegenerateInput, "singular transform");
}

void ProjTransform::canonicalize() {
  for (auto& v : m_) {
    if (!v.is_zero()) {
      Scalar inv = v.inverse();
      for (auto& w : m_) w *= inv;
      return;
    }
  }
  throw Error(Errc::DegenerateInput, "zero transform");
}

Scalar ProjTransform::det() const {
  auto& m = m_;
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

ProjPoint ProjTransform::apply(const ProjPoint& p) const {
  std::array<Scalar, 3> r{Scalar::zero(field()), Scalar::zero(field()), Scalar::zero(field())};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[static_cast<std::size_t>(i)] += at(i, j) * p.t[j];
  return make_point(r[0], r[1], r[2]);
}

namespace {

std::array<Scalar, 9> adjugate9(const std::array<Scalar, 9>& m) {
  auto M = [&](int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; };
  std::array<Scalar, 9> a{M(0, 0), M(0, 0), M(0, 0), M(0, 0), M(0, 0), M(0, 0), M(0, 0), M(0, 0), M(0, 0)};
  auto cof = [&](int r, int c) {
    int r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    return M(r0, c0) * M(r1, c1) - M(r0, c1) * M(r1, c0);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[static_cast<std::size_t>(3 * i + j)] = cof(j, i);
  return a;
}

}  // namespace

ProjLine ProjTransform::apply(const ProjLine& l) const {
  // normal -> adj(M)^T n, so that image contains image points exactly
  auto adj = adjugate9(m_);
  std::array<Scalar, 3> r{Scalar::zero(field()), Scalar::zero(field()), Scalar::zero(field())};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[static_cast<std::size_t>(i)] += adj[static_cast<std::size_t>(3 * j + i)] * l.t[j];
  return make_line(r[0], r[1], r[2]);
}

ProjTransform ProjTransform::compose(const ProjTransform& inner) const {
  std::array<Scalar, 9> r{m_[0], m_[0], m_[0], m_[0], m_[0], m_[0], m_[0], m_[0], m_[0]};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar s = Scalar::zero(field());
      for (int k = 0; k < 3; ++k) s += at(i, k) * inner.at(k, j);
      r[static_cast<std::size_t>(3 * i + j)] = s;
    }
  return ProjTransform(r);
}

ProjTransform ProjTransform::inverse() const { return ProjTransform(adjugate9(m_)); }

ProjTransform ProjTransform::identity(const FieldSpec& f) {
  Scalar z = Scalar::zero(f), o = Scalar::one(f);
  return ProjTransform({o, z, z, z, o, z, z, z, o});
}

ProjTransform frame_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4) {
  const FieldSpec& f = p1.t.field();
  if (det3(p1.t, p2.t, p3.t).is_zero()) throw Error(Errc::DegenerateFrame, "p1,p2,p3 collinear");
  std::array<Scalar, 9> A{p1.t[0], p2.t[0], p3.t[0], p1.t[1], p2.t[1], p3.t[1], p1.t[2], p2.t[2], p3.t[2]};
  auto adj = adjugate9(A);
  // v = adj(A) * p4 (A^-1 p4 up to scale); zero entry means p4 on a side
  std::array<Scalar, 3> v{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[static_cast<std::size_t>(i)] += adj[static_cast<std::size_t>(3 * i + j)] * p4.t[j];
  if (v[0].is_zero() || v[1].is_zero() || v[2].is_zero())
    throw Error(Errc::DegenerateFrame, "p4 collinear with two of p1,p2,p3");
  std::array<Scalar, 9> B{v[0] * p1.t[0], v[1] * p2.t[0], v[2] * p3.t[0],
                          v[0] * p1.t[1], v[1] * p2.t[1], v[2] * p3.t[1],
                          v[0] * p1.t[2], v[1] * p2.t[2], v[2] * p3.t[2]};
  return ProjTransform(adjugate9(B));
}

std::optional<ProjTransform> equivalence_on_points(const std::vector<ProjPoint>& A, const std::vector<ProjPoint>& B) {
  if (A.size() != B.size() || A.size() < 4) throw Error(Errc::DomainError, "equivalence needs equal length >= 4");
  ProjTransform TA = frame_map(A[0], A[1], A[2], A[3]);
  ProjTransform TB = frame_map(B[0], B[1], B[2], B[3]);
  ProjTransform G = TB.inverse().compose(TA);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (G.apply(A[i]) != B[i]) return std::nullopt;
  }
  return G;
}

}  // namespace polylab
