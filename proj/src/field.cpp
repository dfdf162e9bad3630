#include "qgrass/field.hpp"

#include <charconv>
#include <limits>

#include "qgrass/error.hpp"

namespace qgrass {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime_number(p)) {
    throw InvalidArgument("field characteristic " + std::to_string(p) +
                          " is not a prime below 2^31");
  }
  return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "rational" || text == "Q" || text == "q") return rational();
  std::string digits = text;
  if (digits.rfind("p=", 0) == 0) digits = digits.substr(2);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty() ||
      value > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgument("cannot parse field '" + text + "' (expected p=<prime> or rational)");
  }
  return prime(static_cast<std::uint32_t>(value));
}

std::string Field::to_string() const {
  return is_prime() ? "p=" + std::to_string(p_) : "rational";
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
  if (f.is_prime()) {
    long long p = f.characteristic();
    long long r = v % p;
    if (r < 0) r += p;
    return Scalar(f, static_cast<std::uint32_t>(r));
  }
  mpz_class z;
  z = static_cast<long>(v);
  return Scalar(f, mpq_class(z));
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
  if (f.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(f, c);
  }
  mpz_class p = f.characteristic();
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw InvalidArgument("denominator vanishes in " + f.to_string());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  return Scalar(f, static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Scalar::from_residue(const Field& f, std::uint32_t r) {
  if (!f.is_prime() || r >= f.characteristic()) {
    throw InvalidArgument("residue out of range for " + f.to_string());
  }
  return Scalar(f, r);
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return residue() == 0;
  return rational() == 0;
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) {
    throw DimensionMismatch("scalars from different fields: " + a.field().to_string() +
                            " vs " + b.field().to_string());
  }
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(*this, o);
  if (field_.is_prime()) {
    std::uint64_t s = std::uint64_t{residue()} + o.residue();
    return Scalar(field_, static_cast<std::uint32_t>(s % field_.characteristic()));
  }
  return Scalar(field_, mpq_class(rational() + o.rational()));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(*this, o);
  if (field_.is_prime()) {
    std::uint64_t s = std::uint64_t{residue()} * o.residue();
    return Scalar(field_, static_cast<std::uint32_t>(s % field_.characteristic()));
  }
  return Scalar(field_, mpq_class(rational() * o.rational()));
}

Scalar Scalar::operator-() const {
  if (field_.is_prime()) {
    std::uint32_t r = residue();
    return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
  }
  return Scalar(field_, mpq_class(-rational()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  if (field_.is_prime()) {
    // Fermat: a^(p-2).
    std::uint64_t p = field_.characteristic();
    std::uint64_t base = residue(), result = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return Scalar(field_, static_cast<std::uint32_t>(result));
  }
  return Scalar(field_, mpq_class(1 / rational()));
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue());
  return rational().get_str();
}

}  // namespace qgrass
