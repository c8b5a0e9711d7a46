#include "liealg/field.hpp"

namespace liealg {

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw DivisionByZeroError();
  if (den.is_negative()) {
    num = -num;
    den = -den;
  }
  if (num.is_zero()) {
    den = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num, den);
  if (!g.is_one()) {
    num = num / g;
    den = den / g;
  }
}

std::string Rational::to_string() const {
  if (den.is_one()) return num.to_string();
  return num.to_string() + "/" + den.to_string();
}

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::gf(std::int64_t p) {
  if (!is_odd_prime(p))
    throw BadParameterError("modulus must be an odd prime >= 3, got " + std::to_string(p));
  FieldSpec f;
  f.kind = FieldKind::PrimeField;
  f.p = p;
  return f;
}

std::string FieldSpec::name() const {
  if (kind == FieldKind::Rationals) return "Q";
  return "GF(" + std::to_string(p) + ")";
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string digits = text.substr(3, text.size() - 4);
    for (char c : digits)
      if (c < '0' || c > '9')
        throw BadParameterError("bad field spelling: " + text);
    return gf(std::stoll(digits));
  }
  throw BadParameterError("bad field spelling: " + text + " (expected Q or GF(p))");
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw DivisionByZeroError();
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return t;
}

Scalar::Scalar(FieldSpec f, std::int64_t v) : field_(f) {
  if (field_.is_finite()) {
    res_ = v % field_.p;
    if (res_ < 0) res_ += field_.p;
  } else {
    rat_ = Rational(v);
  }
}

Scalar::Scalar(FieldSpec f, const Rational& q) : field_(f) {
  if (field_.is_finite()) {
    std::int64_t d = q.den.mod_int64(field_.p);
    if (d == 0) throw DivisionByZeroError();
    res_ = q.num.mod_int64(field_.p) * inverse_mod(d, field_.p) % field_.p;
  } else {
    rat_ = q;
  }
}

bool Scalar::is_zero() const {
  return field_.is_finite() ? res_ == 0 : rat_.is_zero();
}

bool Scalar::is_one() const {
  return field_.is_finite() ? res_ == 1 : (rat_.num.is_one() && rat_.den.is_one());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_finite())
    r.res_ = (res_ + o.res_) % field_.p;
  else
    r.rat_ = Rational(rat_.num * o.rat_.den + o.rat_.num * rat_.den, rat_.den * o.rat_.den);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_finite())
    r.res_ = res_ * o.res_ % field_.p;
  else
    r.rat_ = Rational(rat_.num * o.rat_.num, rat_.den * o.rat_.den);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_finite()) {
    if (r.res_ != 0) r.res_ = field_.p - r.res_;
  } else {
    r.rat_.num = -r.rat_.num;
  }
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZeroError();
  Scalar r;
  r.field_ = field_;
  if (field_.is_finite())
    r.res_ = inverse_mod(res_, field_.p);
  else
    r.rat_ = Rational(rat_.den, rat_.num);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_finite() ? a.res_ == b.res_ : a.rat_ == b.rat_;
}

std::string Scalar::to_string() const {
  return field_.is_finite() ? std::to_string(res_) : rat_.to_string();
}

}  // namespace liealg
