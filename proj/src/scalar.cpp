#include "uinv/scalar.hpp"

#include <cctype>

namespace uinv {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
  mpz_class m(static_cast<unsigned long>(p));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  return r.get_ui();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 5) throw PreconditionError("prime field modulus must be >= 5, got " + std::to_string(p));
  if (!is_prime_u64(p)) throw PreconditionError("field modulus is not prime: " + std::to_string(p));
  return {FieldKind::Prime, p};
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::Rational ? "Q" : "F_" + std::to_string(p);
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field.is_prime()) {
    value_ = mpz_mod_u64(mpz_class(value), field.p);
  } else {
    value_ = mpq_class(value);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& value) : field_(field) {
  if (field.is_prime()) {
    value_ = mpz_mod_u64(value, field.p);
  } else {
    value_ = mpq_class(value);
  }
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s;
  mpq_class c(q);
  c.canonicalize();
  s.value_ = std::move(c);
  return s;
}

Scalar Scalar::from_residue(const FieldSpec& field, std::uint64_t r) {
  if (!field.is_prime()) throw PreconditionError("from_residue requires a prime field");
  Scalar s;
  s.field_ = field;
  s.value_ = r % field.p;
  return s;
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime()) throw DomainError("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime()) throw DomainError("residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw DomainError("mixed-field operands: " + field_.to_string() + " and " + o.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_prime()) {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = v == 0 ? 0 : field_.p - v;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = static_cast<std::uint64_t>((static_cast<u128>(v) + std::get<std::uint64_t>(o.value_)) % field_.p);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime()) {
    auto& v = std::get<std::uint64_t>(value_);
    std::uint64_t w = std::get<std::uint64_t>(o.value_);
    v = v >= w ? v - w : static_cast<std::uint64_t>(static_cast<u128>(v) + field_.p - w);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = mulmod(v, std::get<std::uint64_t>(o.value_), field_.p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar r(*this);
  if (field_.is_prime()) {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = powmod(v, field_.p - 2, field_.p);
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    mpq_inv(q.get_mpq_t(), q.get_mpq_t());
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  if (o.is_zero()) throw DomainError("division by zero");
  if (field_.is_prime()) return *this *= o.inverse();
  std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_prime()) return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

Scalar Scalar::reduce_mod(const FieldSpec& prime_field) const {
  if (!prime_field.is_prime()) throw PreconditionError("reduce_mod target must be a prime field");
  if (field_.is_prime()) {
    if (field_ == prime_field) return *this;
    throw DomainError("cannot reduce between distinct prime fields");
  }
  const auto& q = std::get<mpq_class>(value_);
  Scalar num(prime_field, q.get_num());
  Scalar den(prime_field, q.get_den());
  if (den.is_zero()) throw DomainError("denominator vanishes mod " + std::to_string(prime_field.p));
  return num / den;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  if (field.is_prime() && !is_prime_u64(field.p)) {
    throw PreconditionError("field modulus is not prime: " + std::to_string(field.p));
  }
  auto fail = [&] { return ParseError("malformed scalar: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  auto digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw fail();
    out.assign(text.substr(start, pos - start));
  };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string num_digits, den_digits = "1";
  digits(num_digits);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    digits(den_digits);
  }
  if (pos != text.size()) throw fail();

  mpz_class num(num_digits, 10), den(den_digits, 10);
  if (negative) num = -num;
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");

  if (field.is_prime()) {
    Scalar d(field, den);
    if (d.is_zero()) throw DomainError("denominator vanishes mod " + std::to_string(field.p));
    return Scalar(field, num) / d;
  }
  return Scalar::from_rational(mpq_class(num, den));
}

DualScalar& DualScalar::operator+=(const DualScalar& o) {
  std_ += o.std_;
  inf_ += o.inf_;
  return *this;
}

DualScalar& DualScalar::operator-=(const DualScalar& o) {
  std_ -= o.std_;
  inf_ -= o.inf_;
  return *this;
}

DualScalar& DualScalar::operator*=(const DualScalar& o) {
  inf_ = std_ * o.inf_ + inf_ * o.std_;
  std_ *= o.std_;
  return *this;
}

DualScalar& DualScalar::operator/=(const DualScalar& o) {
  if (!o.is_invertible()) throw DomainError("dual division by a non-invertible element");
  // (a + b e) / (c + d e) = a/c + (b c - a d)/c^2 e
  Scalar inv_c = o.std_.inverse();
  inf_ = (inf_ * o.std_ - std_ * o.inf_) * inv_c * inv_c;
  std_ *= inv_c;
  return *this;
}

}  // namespace uinv
