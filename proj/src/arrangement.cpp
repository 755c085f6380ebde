#include "arrangement.hpp"

#include <algorithm>

namespace polylab {

Arrangement::Arrangement(Kind kind, const FieldSpec& field, std::vector<Triple> members, std::vector<std::string> labels)
    : kind_(kind), field_(field), members_(std::move(members)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < members_.size(); ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != members_.size()) throw Error(Errc::DomainError, "labels/members length mismatch");
  std::set<Triple> seen(members_.begin(), members_.end());
  if (seen.size() != members_.size()) throw Error(Errc::DegenerateInput, "arrangement members must be pairwise distinct");
  for (const auto& m : members_)
    if (m.field() != field_) throw Error(Errc::DomainError, "member field mismatch");
}

ProjLine Arrangement::line(std::size_t i) const {
  if (kind_ != Kind::Lines) throw Error(Errc::DomainError, "not a line arrangement");
  return ProjLine{members_[i]};
}

ProjPoint Arrangement::point(std::size_t i) const {
  if (kind_ != Kind::Points) throw Error(Errc::DomainError, "not a point arrangement");
  return ProjPoint{members_[i]};
}

void Arrangement::push_back(const Triple& t, const std::string& label) {
  if (contains(t)) throw Error(Errc::DegenerateInput, "duplicate member " + t.to_string());
  members_.push_back(t);
  labels_.push_back(label);
}

bool Arrangement::contains(const Triple& t) const {
  return std::find(members_.begin(), members_.end(), t) != members_.end();
}

Arrangement Arrangement::dualized() const {
  Arrangement d(kind_ == Kind::Lines ? Kind::Points : Kind::Lines, field_, members_, labels_);
  return d;
}

Arrangement Arrangement::sorted_unlabeled() const {
  std::vector<Triple> m = members_;
  std::sort(m.begin(), m.end());
  return Arrangement(kind_, field_, std::move(m));
}

bool Arrangement::same_member_set(const Arrangement& o) const {
  if (kind_ != o.kind_ || field_ != o.field_ || size() != o.size()) return false;
  return sorted_unlabeled().members() == o.sorted_unlabeled().members();
}

std::string SingularityProfile::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto& [k, v] : t) {
    if (!first) s += ", ";
    first = false;
    s += "t" + std::to_string(k) + "=" + std::to_string(v);
  }
  return s + "}";
}

std::vector<std::pair<ProjPoint, int>> singular_points(const Arrangement& lines) {
  if (lines.kind() != Kind::Lines) throw Error(Errc::DomainError, "singular_points needs lines");
  std::map<Triple, std::set<std::size_t>> through;
  const std::size_t m = lines.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      ProjPoint p = meet(lines.line(i), lines.line(j));
      auto& s = through[p.t];
      s.insert(i);
      s.insert(j);
    }
  }
  std::vector<std::pair<ProjPoint, int>> out;
  out.reserve(through.size());
  for (auto& [t, s] : through) out.push_back({ProjPoint{t}, static_cast<int>(s.size())});
  return out;
}

Arrangement points_of_multiplicity(const Arrangement& lines, const std::set<int>& mset) {
  Arrangement out(Kind::Points, lines.field());
  for (auto& [p, mult] : singular_points(lines)) {
    if (mset.count(mult)) out.push_back(p.t, std::to_string(out.size()));
  }
  return out;
}

Arrangement rich_lines(const Arrangement& points, const std::set<int>& nset) {
  if (points.kind() != Kind::Points) throw Error(Errc::DomainError, "rich_lines needs points");
  const std::size_t m = points.size();
  std::set<Triple> candidates;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) candidates.insert(join(points.point(i), points.point(j)).t);
  Arrangement out(Kind::Lines, points.field());
  for (const Triple& lt : candidates) {
    ProjLine l{lt};
    int cnt = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (incident(l, points.point(i))) ++cnt;
    if (nset.count(cnt)) out.push_back(lt, std::to_string(out.size()));
  }
  return out;
}

Arrangement lambda_op(const Arrangement& lines, const std::set<int>& mset, const std::set<int>& nset) {
  return rich_lines(points_of_multiplicity(lines, mset), nset);
}

Arrangement psi_op(const Arrangement& points, const std::set<int>& mset, const std::set<int>& nset) {
  return points_of_multiplicity(rich_lines(points, mset), nset);
}

SingularityProfile stats(const Arrangement& lines) {
  SingularityProfile prof;
  long long pairs = 0;
  for (auto& [p, mult] : singular_points(lines)) {
    prof.t[mult]++;
    pairs += static_cast<long long>(mult) * (mult - 1) / 2;
  }
  const long long m = static_cast<long long>(lines.size());
  if (pairs != m * (m - 1) / 2) throw Error(Errc::DomainError, "pair-count invariant violated");
  return prof;
}

std::optional<ProjTransform> projectively_equivalent(const Arrangement& A, const Arrangement& B) {
  if (A.kind() != B.kind() || A.size() != B.size() || A.size() < 4)
    throw Error(Errc::DomainError, "equivalence needs same kind and length >= 4");
  if (A.field() != B.field()) throw Error(Errc::DomainError, "equivalence across fields");
  // lines are compared through their dual points; the normal-space transform N
  // corresponds to the plane transform adj(N^T)
  std::vector<ProjPoint> PA, PB;
  for (std::size_t i = 0; i < A.size(); ++i) {
    PA.push_back(ProjPoint{A.member(i)});
    PB.push_back(ProjPoint{B.member(i)});
  }
  auto N = equivalence_on_points(PA, PB);
  if (!N) return std::nullopt;
  if (A.kind() == Kind::Points) return N;
  std::array<Scalar, 9> nt{N->at(0, 0), N->at(1, 0), N->at(2, 0), N->at(0, 1), N->at(1, 1),
                           N->at(2, 1), N->at(0, 2), N->at(1, 2), N->at(2, 2)};
  ProjTransform Nt(nt);
  return Nt.inverse();  // adj(N^T) up to scale
}

}  // namespace polylab
