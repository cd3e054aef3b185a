#include "cherednik/field.hpp"

namespace cherednik {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_reduce(long long n, std::uint64_t p) {
  long long m = n % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p < 2^32 keeps the product in range
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DivisionByZeroError("inverse of 0 in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 32))
    throw Error("field characteristic too large: " + std::to_string(p));
  if (!is_prime_u64(p))
    throw Error("field characteristic must be prime, got " + std::to_string(p));
  return Field(Kind::prime, p);
}

std::string Field::name() const {
  return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& f, long long n) {
  if (f.kind() == Field::Kind::rationals) return Scalar(f, mpq_class(static_cast<long>(n)), 0);
  return Scalar(f, mpq_class(), mod_reduce(n, f.characteristic()));
}

Scalar Scalar::from_fraction(const Field& f, long long n, long long d) {
  if (d == 0) throw DivisionByZeroError("fraction with zero denominator");
  if (f.kind() == Field::Kind::rationals) {
    mpq_class q(static_cast<long>(n), static_cast<long>(d));
    q.canonicalize();
    return Scalar(f, std::move(q), 0);
  }
  std::uint64_t p = f.characteristic();
  return Scalar(f, mpq_class(), mod_mul(mod_reduce(n, p), mod_inv(mod_reduce(d, p), p), p));
}

Scalar Scalar::from_decimal_string(const Field& f, const std::string& digits) {
  mpz_class z(digits, 10);
  if (f.kind() == Field::Kind::rationals) return Scalar(f, mpq_class(z), 0);
  mpz_class m = z % static_cast<unsigned long>(f.characteristic());
  return Scalar(f, mpq_class(), m.get_ui());
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const {
  return field_.kind() == Field::Kind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == Field::Kind::rationals ? q_ == 1 : r_ == 1 % field_.characteristic();
}

Scalar Scalar::operator-() const {
  if (field_.kind() == Field::Kind::rationals) return Scalar(field_, -q_, 0);
  std::uint64_t p = field_.characteristic();
  return Scalar(field_, mpq_class(), r_ == 0 ? 0 : p - r_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.kind() == Field::Kind::rationals) return Scalar(field_, q_ + o.q_, 0);
  return Scalar(field_, mpq_class(), (r_ + o.r_) % field_.characteristic());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.kind() == Field::Kind::rationals) return Scalar(field_, q_ * o.q_, 0);
  return Scalar(field_, mpq_class(), mod_mul(r_, o.r_, field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of 0 in " + field_.name());
  if (field_.kind() == Field::Kind::rationals) return Scalar(field_, 1 / q_, 0);
  return Scalar(field_, mpq_class(), mod_inv(r_, field_.characteristic()));
}

Scalar Scalar::pow(std::uint64_t n) const {
  Scalar r = one(field_);
  Scalar base = *this;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.kind() == Field::Kind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (field_.kind() == Field::Kind::rationals) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace cherednik
