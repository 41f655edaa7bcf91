#pragma once

// Exact field elements over Q and F_p, and dual numbers over them.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "uinv/errors.hpp"

namespace uinv {

enum class FieldKind { Rational, Prime };

/// The base field: Q, or F_p for a prime p >= 5.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;  // meaningful only for Prime

  static FieldSpec rational() { return {}; }
  /// Validates primality (deterministic for 64-bit moduli) and p >= 5.
  static FieldSpec prime(std::uint64_t p);

  bool is_prime() const { return kind == FieldKind::Prime; }
  std::string to_string() const;  // "Q" or "F_<p>"

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Default modulus for rank certificates (2^31 - 1).
inline constexpr std::uint64_t kCertificatePrime = 2147483647ULL;

bool is_prime_u64(std::uint64_t n);

/// An exact element of Q or F_p. Rationals are kept canonical (gcd-reduced,
/// positive denominator); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpz_class& value);
  static Scalar from_rational(const mpq_class& q);  // canonicalizes
  static Scalar from_residue(const FieldSpec& field, std::uint64_t r);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0L); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1L); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;  // Rational only
  std::uint64_t residue() const;      // Prime only

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Image of a p-integral rational in F_p. Throws DomainError when the
  /// denominator vanishes mod p.
  Scalar reduce_mod(const FieldSpec& prime_field) const;

  /// Textual form: "a" or "a/b" for rationals, the residue for F_p.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  FieldSpec field_{};
  std::variant<mpq_class, std::uint64_t> value_{mpq_class(0)};
};

/// Parses optional sign, decimal digits, optional "/digits".
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

/// a + b*eps with eps^2 = 0, over a Scalar field.
class DualScalar {
 public:
  DualScalar() = default;
  explicit DualScalar(Scalar std_part) : std_(std::move(std_part)), inf_(Scalar::zero(std_.field())) {}
  DualScalar(Scalar std_part, Scalar inf_part) : std_(std::move(std_part)), inf_(std::move(inf_part)) {}

  static DualScalar zero(const FieldSpec& f) { return DualScalar(Scalar::zero(f)); }
  static DualScalar one(const FieldSpec& f) { return DualScalar(Scalar::one(f)); }

  const Scalar& std_part() const { return std_; }
  const Scalar& inf_part() const { return inf_; }
  const FieldSpec& field() const { return std_.field(); }
  bool is_zero() const { return std_.is_zero() && inf_.is_zero(); }
  bool is_invertible() const { return !std_.is_zero(); }

  DualScalar operator-() const { return {-std_, -inf_}; }
  DualScalar& operator+=(const DualScalar& o);
  DualScalar& operator-=(const DualScalar& o);
  DualScalar& operator*=(const DualScalar& o);
  DualScalar& operator/=(const DualScalar& o);  // needs invertible divisor

  friend DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
  friend DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
  friend DualScalar operator*(DualScalar a, const DualScalar& b) { return a *= b; }
  friend DualScalar operator/(DualScalar a, const DualScalar& b) { return a /= b; }
  friend bool operator==(const DualScalar& a, const DualScalar& b) {
    return a.std_ == b.std_ && a.inf_ == b.inf_;
  }

 private:
  Scalar std_{};
  Scalar inf_{};
};

/// a + direction*eps.
inline DualScalar dual_lift(const Scalar& a, const Scalar& direction) { return {a, direction}; }

}  // namespace uinv
