#ifndef LIEALG_FIELD_HPP
#define LIEALG_FIELD_HPP

#include <cstdint>
#include <string>

#include "liealg/bigint.hpp"
#include "liealg/errors.hpp"

namespace liealg {

/// Reduced fraction with positive denominator; 0 is 0/1.
struct Rational {
  BigInt num;
  BigInt den{1};

  Rational() = default;
  Rational(BigInt n, BigInt d);
  explicit Rational(std::int64_t n) : num(n) {}

  bool is_zero() const { return num.is_zero(); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  std::string to_string() const;
};

enum class FieldKind { Rationals, PrimeField };

/// The coefficient domain: Q, or GF(p) for an odd prime p.
/// Characteristic 2 is rejected up front; the whole theory here assumes it.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t p = 0;  // modulus, PrimeField only

  static FieldSpec rationals() { return {}; }
  static FieldSpec gf(std::int64_t p);

  bool is_finite() const { return kind == FieldKind::PrimeField; }
  std::string name() const;
  static FieldSpec parse(const std::string& text);  // "Q" or "GF(p)"

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

/// Exact field element in canonical form: reduced fraction over Q,
/// residue in [0,p) over GF(p).  Equal values compare equal bit-for-bit.
class Scalar {
public:
  Scalar() = default;  // zero over Q; reassigned on first use in practice
  Scalar(FieldSpec f, std::int64_t v);
  Scalar(FieldSpec f, const Rational& q);
  static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;  // throws DivisionByZeroError on zero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// GF(p) residue (PrimeField only).
  std::int64_t residue() const { return res_; }
  /// Rational value (Rationals only).
  const Rational& rational() const { return rat_; }

  std::string to_string() const;

private:
  FieldSpec field_;
  std::int64_t res_ = 0;  // PrimeField payload
  Rational rat_;          // Rationals payload

  void check_same(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatchError();
  }
};

/// Deterministic inverse mod p by extended Euclid; p prime, a != 0 mod p.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

bool is_odd_prime(std::int64_t p);

}  // namespace liealg

#endif
