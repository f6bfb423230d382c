#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fga/error.hpp"

namespace fga {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// The coefficient field: GF(p) for a prime p, or the rationals (p == 0).
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec gf(std::uint32_t p) {
    if (!is_prime(p))
      throw precondition_error("GF(p) requires a prime p, got " +
                               std::to_string(p));
    return FieldSpec{p};
  }
  static FieldSpec rationals() { return FieldSpec{0}; }

  bool prime_field() const { return characteristic != 0; }
  friend bool operator==(const FieldSpec &, const FieldSpec &) = default;
};

inline std::string to_string(const FieldSpec &f) {
  return f.prime_field() ? "gf:" + std::to_string(f.characteristic) : "q";
}

/// An exact field element: a residue mod p, or an arbitrary-precision
/// fraction in lowest terms (cpp_rational keeps it canonical).
class Scalar {
public:
  Scalar() : field_{0}, rat_(0) {}

  static Scalar zero(FieldSpec f) { return from_int(f, 0); }
  static Scalar one(FieldSpec f) { return from_int(f, 1); }

  static Scalar from_int(FieldSpec f, long long v) {
    Scalar s;
    s.field_ = f;
    if (f.prime_field()) {
      long long p = f.characteristic;
      s.res_ = static_cast<std::int64_t>(((v % p) + p) % p);
    } else {
      s.rat_ = v;
    }
    return s;
  }

  static Scalar from_rational(FieldSpec f, const Rational &r) {
    if (f.prime_field()) {
      BigInt p = f.characteristic;
      BigInt num = numerator(r) % p;
      BigInt den = denominator(r) % p;
      if (den == 0)
        throw precondition_error("denominator divisible by characteristic");
      Scalar n = from_int(f, static_cast<long long>(num));
      Scalar d = from_int(f, static_cast<long long>(den));
      return n * d.inv();
    }
    Scalar s;
    s.field_ = f;
    s.rat_ = r;
    return s;
  }

  const FieldSpec &field() const { return field_; }
  bool is_zero() const {
    return field_.prime_field() ? res_ == 0 : rat_ == 0;
  }
  bool is_one() const { return field_.prime_field() ? res_ == 1 : rat_ == 1; }

  /// Residue in [0, p); prime fields only.
  std::int64_t residue() const { return res_; }
  const Rational &rational() const { return rat_; }

  Scalar operator-() const {
    Scalar s = *this;
    if (field_.prime_field())
      s.res_ = res_ == 0 ? 0 : field_.characteristic - res_;
    else
      s.rat_ = -rat_;
    return s;
  }

  Scalar operator+(const Scalar &o) const {
    check(o);
    Scalar s = *this;
    if (field_.prime_field())
      s.res_ = (res_ + o.res_) % field_.characteristic;
    else
      s.rat_ = rat_ + o.rat_;
    return s;
  }

  Scalar operator-(const Scalar &o) const { return *this + (-o); }

  Scalar operator*(const Scalar &o) const {
    check(o);
    Scalar s = *this;
    if (field_.prime_field())
      s.res_ = static_cast<std::int64_t>(
          (static_cast<__int128>(res_) * o.res_) % field_.characteristic);
    else
      s.rat_ = rat_ * o.rat_;
    return s;
  }

  Scalar inv() const {
    if (is_zero())
      throw precondition_error("inverse of zero scalar");
    Scalar s = *this;
    if (field_.prime_field()) {
      // extended gcd
      std::int64_t p = field_.characteristic;
      std::int64_t a = res_, b = p, x0 = 1, x1 = 0;
      while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
      }
      s.res_ = ((x0 % p) + p) % p;
    } else {
      s.rat_ = 1 / rat_;
    }
    return s;
  }

  Scalar operator/(const Scalar &o) const { return *this * o.inv(); }

  bool operator==(const Scalar &o) const {
    return field_ == o.field_ &&
           (field_.prime_field() ? res_ == o.res_ : rat_ == o.rat_);
  }
  bool operator!=(const Scalar &o) const { return !(*this == o); }

private:
  void check(const Scalar &o) const {
    if (!(field_ == o.field_))
      throw mismatch_error("scalars from different fields");
  }

  FieldSpec field_;
  std::int64_t res_ = 0;
  Rational rat_;
};

inline std::string to_string(const Scalar &s) {
  if (s.field().prime_field())
    return std::to_string(s.residue());
  return s.rational().str();
}

} // namespace fga
