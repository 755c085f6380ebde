#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "projective.hpp"

namespace polylab {

enum class Kind { Lines, Points };

/// Ordered list of distinct lines or points with optional labels.
/// Operator outputs may be empty ("possibly empty" is a legal result).
class Arrangement {
 public:
  Arrangement(Kind kind, const FieldSpec& field) : kind_(kind), field_(field) {}
  Arrangement(Kind kind, const FieldSpec& field, std::vector<Triple> members, std::vector<std::string> labels = {});

  Kind kind() const { return kind_; }
  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return members_.size(); }
  const Triple& member(std::size_t i) const { return members_[i]; }
  const std::vector<Triple>& members() const { return members_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  ProjLine line(std::size_t i) const;
  ProjPoint point(std::size_t i) const;

  void push_back(const Triple& t, const std::string& label);
  bool contains(const Triple& t) const;

  Arrangement dualized() const;
  /// Members sorted by canonical coordinate order, labels dropped.
  Arrangement sorted_unlabeled() const;
  bool same_member_set(const Arrangement& o) const;

  bool operator==(const Arrangement& o) const {
    return kind_ == o.kind_ && field_ == o.field_ && members_ == o.members_;
  }

 private:
  Kind kind_;
  FieldSpec field_;
  std::vector<Triple> members_;
  std::vector<std::string> labels_;
};

/// Census of k-fold points: k -> t_k, k >= 2.
struct SingularityProfile {
  std::map<int, long long> t;
  bool operator==(const SingularityProfile& o) const { return t == o.t; }
  std::string to_string() const;
};

/// Every pairwise intersection once, with the exact number of lines through it.
std::vector<std::pair<ProjPoint, int>> singular_points(const Arrangement& lines);

/// P_m: unordered set of points whose multiplicity lies in mset.
Arrangement points_of_multiplicity(const Arrangement& lines, const std::set<int>& mset);

/// L_n: lines containing exactly n points of P for some n in nset.
Arrangement rich_lines(const Arrangement& points, const std::set<int>& nset);

/// Lambda_{m,n} = L_n . P_m on line arrangements.
Arrangement lambda_op(const Arrangement& lines, const std::set<int>& mset, const std::set<int>& nset);

/// Psi_{m,n} = P_n . L_m on point arrangements (computed natively; equals
/// dualize . lambda . dualize, which the tests check as an identity).
Arrangement psi_op(const Arrangement& points, const std::set<int>& mset, const std::set<int>& nset);

SingularityProfile stats(const Arrangement& lines);

/// gamma with gamma.A = B label-by-label, or nullopt. Exact decision; needs
/// the first four members of each side in general position.
std::optional<ProjTransform> projectively_equivalent(const Arrangement& A, const Arrangement& B);

}  // namespace polylab
