#include "scalar.hpp"

#include <algorithm>

#include "numutil.hpp"

namespace polylab {

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p <= 3 || !is_prime(p)) throw Error(Errc::DomainError, "field characteristic must be a prime > 3");
  FieldSpec f;
  f.kind_ = FieldKind::Prime;
  f.p_ = p;
  f.nonresidue_ = 0;
  return f;
}

FieldSpec FieldSpec::prime_square(std::uint64_t p) {
  FieldSpec f = prime(p);
  f.kind_ = FieldKind::PrimeSquare;
  for (std::uint64_t d = 2; d < p; ++d) {
    if (powmod(d, (p - 1) / 2, p) == p - 1) {
      f.nonresidue_ = d;
      break;
    }
  }
  return f;
}

std::uint64_t FieldSpec::unit_group_order() const {
  switch (kind_) {
    case FieldKind::Rationals: return 0;
    case FieldKind::Prime: return p_ - 1;
    case FieldKind::PrimeSquare: return p_ * p_ - 1;
  }
  return 0;
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "F" + std::to_string(p_);
    case FieldKind::PrimeSquare: return "F" + std::to_string(p_) + "^2";
  }
  return "?";
}

Scalar::Scalar(const FieldSpec& f, long v) : field_(f), q_(0) {
  if (f.is_rationals()) {
    q_ = v;
  } else {
    long long m = static_cast<long long>(f.p());
    long long r = v % m;
    if (r < 0) r += m;
    a_ = static_cast<std::uint64_t>(r);
    b_ = 0;
  }
}

Scalar::Scalar(const FieldSpec& f, const mpq_class& v) : field_(f), q_(0) {
  if (f.is_rationals()) {
    // copy num/den separately: this libgmp's mpq_set mishandles non-canonical
    // inputs (negative denominators), so canonicalize on an explicit copy
    mpz_set(mpq_numref(q_.get_mpq_t()), mpq_numref(v.get_mpq_t()));
    mpz_set(mpq_denref(q_.get_mpq_t()), mpq_denref(v.get_mpq_t()));
    if (mpz_sgn(mpq_denref(q_.get_mpq_t())) == 0) throw Error(Errc::DomainError, "zero denominator");
    q_.canonicalize();
  } else {
    // reduce num/den mod p
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class p(static_cast<unsigned long>(f.p()));
    mpz_class nm = num % p, dm = den % p;
    if (nm < 0) nm += p;
    if (dm < 0) dm += p;
    if (dm == 0) throw Error(Errc::DomainError, "denominator divisible by field characteristic");
    std::uint64_t n64 = nm.get_ui(), d64 = dm.get_ui();
    a_ = mulmod(n64, powmod(d64, f.p() - 2, f.p()), f.p());
    b_ = 0;
  }
}

Scalar Scalar::ext(const FieldSpec& f, std::uint64_t a, std::uint64_t b) {
  if (f.kind() != FieldKind::PrimeSquare) throw Error(Errc::DomainError, "ext element needs an F_p^2 field");
  Scalar s(f);
  s.a_ = a % f.p();
  s.b_ = b % f.p();
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : (a_ == 0 && b_ == 0);
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : (a_ == 1 && b_ == 0);
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw Error(Errc::DomainError, "mixed-field arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(field_);
  if (field_.is_rationals()) {
    r.q_ = q_ + o.q_;
  } else {
    std::uint64_t p = field_.p();
    r.a_ = (a_ + o.a_) % p;
    r.b_ = (b_ + o.b_) % p;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r(field_);
  if (field_.is_rationals()) {
    r.q_ = q_ - o.q_;
  } else {
    std::uint64_t p = field_.p();
    r.a_ = (a_ + p - o.a_) % p;
    r.b_ = (b_ + p - o.b_) % p;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(field_);
  if (field_.is_rationals()) {
    r.q_ = q_ * o.q_;
  } else {
    std::uint64_t p = field_.p();
    if (field_.kind() == FieldKind::Prime) {
      r.a_ = mulmod(a_, o.a_, p);
    } else {
      std::uint64_t d = field_.nonresidue();
      r.a_ = (mulmod(a_, o.a_, p) + mulmod(d, mulmod(b_, o.b_, p), p)) % p;
      r.b_ = (mulmod(a_, o.b_, p) + mulmod(b_, o.a_, p)) % p;
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DomainError, "inverse of zero");
  Scalar r(field_);
  if (field_.is_rationals()) {
    r.q_ = 1 / q_;
  } else {
    std::uint64_t p = field_.p();
    if (field_.kind() == FieldKind::Prime) {
      r.a_ = powmod(a_, p - 2, p);
    } else {
      // (a+bu)^-1 = (a-bu)/(a^2 - d b^2)
      std::uint64_t d = field_.nonresidue();
      std::uint64_t nrm = (mulmod(a_, a_, p) + p - mulmod(d, mulmod(b_, b_, p), p) % p) % p;
      std::uint64_t ninv = powmod(nrm, p - 2, p);
      r.a_ = mulmod(a_, ninv, p);
      r.b_ = mulmod((p - b_) % p, ninv, p);
    }
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rationals()) {
    r.q_ = -q_;
  } else {
    std::uint64_t p = field_.p();
    r.a_ = (p - a_) % p;
    r.b_ = (p - b_) % p;
  }
  return r;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this, r = Scalar::one(field_);
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rationals() ? q_ == o.q_ : (a_ == o.a_ && b_ == o.b_);
}

int Scalar::cmp(const Scalar& o) const {
  check_same(o);
  if (field_.is_rationals()) return ::cmp(q_, o.q_);
  if (a_ != o.a_) return a_ < o.a_ ? -1 : 1;
  if (b_ != o.b_) return b_ < o.b_ ? -1 : 1;
  return 0;
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }
  if (field_.kind() == FieldKind::Prime || b_ == 0) return std::to_string(a_);
  std::string s = std::to_string(a_) + "+" + std::to_string(b_) + "*u";
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& s) {
  try {
    if (f.is_rationals()) {
      mpq_class q(s);
      q.canonicalize();
      return Scalar(f, q);
    }
    auto plus = s.find('+');
    if (plus != std::string::npos || s.find('u') != std::string::npos) {
      if (f.kind() != FieldKind::PrimeSquare) throw Error(Errc::ParseError, "extension element in prime field: " + s);
      std::string ap = s.substr(0, plus);
      std::string bp = s.substr(plus + 1);
      auto star = bp.find("*u");
      if (star == std::string::npos) throw Error(Errc::ParseError, "bad F_p^2 scalar: " + s);
      bp = bp.substr(0, star);
      return Scalar::ext(f, std::stoull(ap), std::stoull(bp));
    }
    mpq_class q(s);
    q.canonicalize();
    return Scalar(f, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad scalar: " + s);
  }
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw Error(Errc::DomainError, "not a rational scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rationals()) throw Error(Errc::DomainError, "not a finite-field scalar");
  return a_;
}

Scalar primitive_nth_root(const FieldSpec& field, std::uint64_t n) {
  if (n == 0) throw Error(Errc::DomainError, "n must be positive");
  if (field.is_rationals()) {
    if (n == 1) return Scalar(field, 1);
    if (n == 2) return Scalar(field, -1);
    throw Error(Errc::NoRoot, "Q has no root of unity of order " + std::to_string(n));
  }
  std::uint64_t m = field.unit_group_order();
  if (m % n != 0) {
    throw Error(Errc::NoRoot, std::to_string(n) + " does not divide the unit group order " + std::to_string(m));
  }
  if (n == 1) return Scalar::one(field);
  auto nf = factorize(n);
  std::uint64_t p = field.p();
  auto exact_order_n = [&](const Scalar& z) {
    if (z.is_zero() || !z.pow(static_cast<long long>(n)).is_one()) return false;
    for (auto [q, e] : nf) {
      (void)e;
      if (z.pow(static_cast<long long>(n / q)).is_one()) return false;
    }
    return true;
  };
  if (field.kind() == FieldKind::Prime) {
    for (std::uint64_t g = 2; g < p; ++g) {
      Scalar z = Scalar(field, static_cast<long>(g)).pow(static_cast<long long>(m / n));
      if (exact_order_n(z)) return z;
    }
  } else {
    for (std::uint64_t b = 0; b < p; ++b) {
      for (std::uint64_t a = (b == 0 ? 2 : 0); a < p; ++a) {
        Scalar z = Scalar::ext(field, a, b).pow(static_cast<long long>(m / n));
        if (exact_order_n(z)) return z;
      }
    }
  }
  throw Error(Errc::NoRoot, "no generator found");  // unreachable for true primes
}

Scalar sqrt_in_field(const FieldSpec& field, const Scalar& a) {
  if (field.is_rationals()) throw Error(Errc::DomainError, "sqrt_in_field needs a finite field");
  if (a.field() != field) throw Error(Errc::DomainError, "field mismatch");
  if (a.is_zero()) return a;
  std::uint64_t p = field.p();
  if (field.kind() == FieldKind::Prime) {
    for (std::uint64_t s = 1; s <= p / 2; ++s) {
      if (mulmod(s, s, p) == a.residue()) return Scalar(field, static_cast<long>(s));
    }
    throw Error(Errc::NoRoot, a.to_string() + " is a quadratic non-residue mod " + std::to_string(p));
  }
  for (std::uint64_t sb = 0; sb < p; ++sb) {
    for (std::uint64_t sa = 0; sa < p; ++sa) {
      Scalar s = Scalar::ext(field, sa, sb);
      if (s * s == a) return s;
    }
  }
  throw Error(Errc::NoRoot, "no square root in F_p^2");  // unreachable: F_p^2 squares cover F_p
}

}  // namespace polylab
