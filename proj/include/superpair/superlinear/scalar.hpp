#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace superpair {

/// Raised on division by zero and on operations mixing two different prime fields.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact field element.
///
/// A scalar is either a rational number (modulus 0) or a residue modulo an odd
/// prime. Integer and rational literals are rational; when a rational meets a
/// residue it is reduced modulo that prime, so literals such as `Scalar(-1)` can
/// be mixed freely with elements of a prime field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);

  static Scalar rational(const mpq_class& value);
  /// `value` must be an integer; it is reduced into [0, modulus).
  static Scalar residue(const mpz_class& value, std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  /// The same element expressed in F_modulus (modulus 0 leaves it unchanged).
  Scalar in_modulus(std::uint64_t modulus) const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: reduced fraction with the sign on the numerator ("-3/4", "5"),
  /// or the least nonnegative residue for prime fields.
  std::string to_string() const;

 private:
  void reduce();
  static std::uint64_t common_modulus(const Scalar& a, const Scalar& b);

  mpq_class value_{0};
  std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Field descriptor: the rationals or F_p for an odd prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument for p = 2 or a non-prime p.
  static Field prime(std::uint64_t p);
  /// Parses "rational", "Q", "prime:7" or "F7".
  static Field parse(std::string_view text);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar operator()(long numerator, long denominator = 1) const;
  Scalar zero() const { return (*this)(0); }
  Scalar one() const { return (*this)(1); }

  /// Re-expresses a scalar in this field (rationals are reduced mod p).
  Scalar normalize(const Scalar& s) const;

  /// Parses "p/q", "-p/q" or an integer. Throws std::invalid_argument on
  /// malformed text or a zero denominator.
  Scalar parse_scalar(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

}  // namespace superpair
