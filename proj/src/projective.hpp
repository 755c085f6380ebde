#pragma once

#include <array>
#include <optional>
#include <vector>

#include "scalar.hpp"

namespace polylab {

/// Nonzero coordinate triple, canonicalized so the first nonzero entry is 1.
/// Equality after canonicalization is exact coordinate equality, which makes
/// points/lines hashable and sortable.
class Triple {
 public:
  Triple(const Scalar& x, const Scalar& y, const Scalar& z);
  const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const FieldSpec& field() const { return c_[0].field(); }

  bool operator==(const Triple& o) const { return c_ == o.c_; }
  bool operator!=(const Triple& o) const { return !(*this == o); }
  bool operator<(const Triple& o) const;
  std::string to_string() const;

 private:
  std::array<Scalar, 3> c_;
};

struct ProjPoint {
  Triple t;
  bool operator==(const ProjPoint& o) const { return t == o.t; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const { return t < o.t; }
};

struct ProjLine {
  Triple t;
  bool operator==(const ProjLine& o) const { return t == o.t; }
  bool operator!=(const ProjLine& o) const { return !(*this == o); }
  bool operator<(const ProjLine& o) const { return t < o.t; }
};

inline ProjPoint make_point(const Scalar& x, const Scalar& y, const Scalar& z) { return ProjPoint{Triple(x, y, z)}; }
inline ProjLine make_line(const Scalar& a, const Scalar& b, const Scalar& c) { return ProjLine{Triple(a, b, c)}; }

/// Duality carries the coordinate triple across unchanged; an involution.
inline ProjPoint dualize(const ProjLine& l) { return ProjPoint{l.t}; }
inline ProjLine dualize(const ProjPoint& p) { return ProjLine{p.t}; }

Scalar incidence(const ProjLine& l, const ProjPoint& p);
bool incident(const ProjLine& l, const ProjPoint& p);

Scalar det3(const Triple& a, const Triple& b, const Triple& c);

ProjLine join(const ProjPoint& p, const ProjPoint& q);   // DegenerateInput if p == q
ProjPoint meet(const ProjLine& l, const ProjLine& m);    // DegenerateInput if l == m

/// 3x3 matrix acting on points by x -> Mx; canonicalized up to scale, det != 0.
class ProjTransform {
 public:
  ProjTransform(const std::array<Scalar, 9>& m);
  const Scalar& at(int r, int c) const { return m_[static_cast<std::size_t>(3 * r + c)]; }
  const FieldSpec& field() const { return m_[0].field(); }

  ProjPoint apply(const ProjPoint& p) const;
  /// Image of a line under the point map: normals transform by adj(M)^T.
  ProjLine apply(const ProjLine& l) const;
  ProjTransform compose(const ProjTransform& inner) const;  // this after inner
  ProjTransform inverse() const;
  Scalar det() const;

  bool operator==(const ProjTransform& o) const { return m_ == o.m_; }
  static ProjTransform identity(const FieldSpec& f);

 private:
  std::array<Scalar, 9> m_;
  void canonicalize();
};

/// Transform sending p1..p4 to (1:0:0),(0:1:0),(0:0:1),(1:1:1).
/// DegenerateFrame when any three of the four are collinear.
ProjTransform frame_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4);

/// Label-by-label equivalence of point tuples whose first four members are in
/// general position. Exact and complete under that precondition.
std::optional<ProjTransform> equivalence_on_points(const std::vector<ProjPoint>& A, const std::vector<ProjPoint>& B);

}  // namespace polylab
