#ifndef LIEALG_BIGINT_HPP
#define LIEALG_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace liealg {

/// Signed arbitrary-precision integer, base 2^32 little-endian magnitude.
/// Invariant: no leading zero limbs; sign == 0 iff magnitude empty.
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t v);

  static BigInt from_string(const std::string& s);
  std::string to_string() const;

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;
  bool is_negative() const { return sign_ < 0; }

  /// Value fits in int64 (used by GF(p) reduction paths).
  bool fits_int64() const;
  std::int64_t to_int64() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt operator-() const;

  /// Truncated division: quotient rounds toward zero, remainder has
  /// the sign of the dividend. b must be nonzero.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  static BigInt gcd(BigInt a, BigInt b);  // always >= 0

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);

  /// Euclidean residue in [0, m) for m > 0.
  std::int64_t mod_int64(std::int64_t m) const;

private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void trim();
};

}  // namespace liealg

#endif
