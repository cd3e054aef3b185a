#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cherednik {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatchError : Error {
  explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZeroError : Error {
  explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// Coefficient field, fixed per computation session: either Q or F_p with p
// prime.  Every Scalar carries its Field; operations on scalars from
// different fields throw FieldMismatchError rather than coercing.
class Field {
 public:
  enum class Kind : std::uint8_t { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  static Field prime(std::uint64_t p);  // validates primality, requires p < 2^32

  Kind kind() const { return kind_; }
  // 0 for Q, p for F_p.
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string name() const;  // "Q" or "F2", "F3", ...

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

class Scalar {
 public:
  Scalar() = delete;

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long n);
  // n/d as a field element; d must be invertible.
  static Scalar from_fraction(const Field& f, long long n, long long d);
  // Digits-only string (arbitrary length), used by the expression lexer.
  static Scalar from_decimal_string(const Field& f, const std::string& digits);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZeroError
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t n) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical form: reduced fraction with positive denominator over Q,
  // least non-negative residue over F_p.
  std::string to_string() const;

 private:
  Scalar(const Field& f, mpq_class q, std::uint64_t r)
      : field_(f), q_(std::move(q)), r_(r) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;      // value when field is Q
  std::uint64_t r_;  // residue in [0, p) when field is F_p
};

}  // namespace cherednik
