#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace mrep {

class Scalar;

// The base field: Q or GF(p) with p < 2^63.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);  // throws ValidationError if p is not prime

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_mpq(const mpq_class& v) const;  // throws if p divides the denominator
  Scalar image(const Scalar& s) const;         // map a rational into this field

  std::string to_string() const;
  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// Exact field element. Rationals are kept canonical by GMP; residues live in [0, p).
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(const mpq_class& q) : v_(q) {}
  explicit Scalar(long v) : v_(mpq_class(v)) {}
  static Scalar residue(std::uint64_t r, std::uint64_t p) { return Scalar(r % p, p); }

  Field field() const;
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const;
  bool is_one() const;
  int sign() const;  // rationals only; residues report 0 or 1
  bool is_integer() const;
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }

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
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Scalar(std::uint64_t r, std::uint64_t p) : v_(r), p_(p) {}
  void check_same(const Scalar& o) const;
  std::variant<mpq_class, std::uint64_t> v_;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace mrep
