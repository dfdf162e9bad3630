#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace qgrass {

// Ground field: a prime field F_p (2 <= p < 2^31) or the rationals.
class Field {
 public:
  enum class Kind { Prime, Rational };

  static Field prime(std::uint32_t p);
  static Field rational() { return Field(Kind::Rational, 0); }
  // Parses "p=<prime>", "<prime>" or "rational".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  // p for prime fields, 0 for Q.
  std::uint32_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

// Element of a Field. Residues are stored reduced into [0, p); rationals are
// kept in canonical form by GMP.
class Scalar {
 public:
  Scalar() : field_(Field::prime(2)), value_(std::uint32_t{0}) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_rational(const Field& f, const mpq_class& q);
  static Scalar from_residue(const Field& f, std::uint32_t r);

  const Field& field() const { return field_; }
  bool is_zero() const;
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  // Throws InvalidArgument on zero.
  Scalar inverse() const;

  // "3" for residues, "a/b" or "a" for rationals.
  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Scalar(const Field& f, std::uint32_t r) : field_(f), value_(r) {}
  Scalar(const Field& f, mpq_class q) : field_(f), value_(std::move(q)) {}

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace qgrass
