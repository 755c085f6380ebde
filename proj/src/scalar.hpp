#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace polylab {

enum class FieldKind : std::uint8_t { Rationals, Prime, PrimeSquare };

/// Exact coefficient field: Q, F_p (p prime > 3), or F_{p^2}.
///
/// F_{p^2} is represented as F_p[u]/(u^2 - d) for the smallest quadratic
/// non-residue d mod p; it exists for the characteristic-ell constructions
/// that need a point outside the prime field.
class FieldSpec {
 public:
  FieldSpec() : kind_(FieldKind::Rationals), p_(0), nonresidue_(0) {}

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec prime_square(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t nonresidue() const { return nonresidue_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_prime_field() const { return kind_ == FieldKind::Prime; }
  std::uint64_t characteristic() const { return kind_ == FieldKind::Rationals ? 0 : p_; }
  /// Order of the multiplicative group (0 for Q).
  std::uint64_t unit_group_order() const;

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldKind kind_;
  std::uint64_t p_;
  std::uint64_t nonresidue_;
};

/// Exact field element in canonical form: reduced fraction over Q,
/// residue 0..p-1 over F_p, pair a+b*u over F_{p^2}. No rounding anywhere.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), q_(0) {}
  explicit Scalar(const FieldSpec& f) : field_(f), q_(0), a_(0), b_(0) {}
  Scalar(const FieldSpec& f, long v);
  Scalar(const FieldSpec& f, const mpq_class& v);

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
  /// F_{p^2} element a + b*u.
  static Scalar ext(const FieldSpec& f, std::uint64_t a, std::uint64_t b);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order within one field; used for deterministic sorting only.
  int cmp(const Scalar& o) const;
  bool operator<(const Scalar& o) const { return cmp(o) < 0; }

  /// "n/d" (d omitted when 1) over Q; "a" or "a+b*u" over finite fields.
  std::string to_string() const;
  static Scalar parse(const FieldSpec& f, const std::string& s);

  const mpq_class& rational() const;
  std::uint64_t residue() const;       // F_p (or F_{p^2} constant part)
  std::uint64_t residue_ext() const { return b_; }

 private:
  void check_same(const Scalar& o) const;
  FieldSpec field_;
  mpq_class q_;
  std::uint64_t a_ = 0, b_ = 0;
};

/// Element of exact multiplicative order n; NoRoot if none exists.
Scalar primitive_nth_root(const FieldSpec& field, std::uint64_t n);

/// Square root in a finite field; NoRoot for non-residues.
Scalar sqrt_in_field(const FieldSpec& field, const Scalar& a);

}  // namespace polylab
