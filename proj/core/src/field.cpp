#include "mrep/field.hpp"

#include <ostream>

#include "mrep/errors.hpp"

namespace mrep {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero residue");
  return powmod(a, p - 2, p);
}

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
  // these bases are deterministic for all 64-bit n
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

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 63) || !is_prime_u64(p))
    throw ValidationError("field characteristic " + std::to_string(p) + " is not a word-size prime");
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  if (p_ == 0) return Scalar(v);
  return from_mpz(mpz_class(v));
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (p_ == 0) return Scalar(mpq_class(v));
  static_assert(sizeof(unsigned long) == 8);
  return Scalar::residue(mpz_fdiv_ui(v.get_mpz_t(), p_), p_);
}

Scalar Field::from_mpq(const mpq_class& v) const {
  if (p_ == 0) return Scalar(v);
  Scalar num = from_mpz(v.get_num());
  Scalar den = from_mpz(v.get_den());
  if (den.is_zero())
    throw ValidationError("denominator " + v.get_den().get_str() + " vanishes modulo " + std::to_string(p_));
  return num / den;
}

Scalar Field::image(const Scalar& s) const {
  if (s.modulus() == p_) return s;
  if (s.modulus() != 0) throw std::invalid_argument("cannot map between prime fields");
  return from_mpq(s.rational());
}

std::string Field::to_string() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

bool Scalar::is_zero() const { return p_ == 0 ? sgn(rational()) == 0 : residue() == 0; }
bool Scalar::is_one() const { return p_ == 0 ? rational() == 1 : residue() == 1; }
int Scalar::sign() const { return p_ == 0 ? sgn(rational()) : (residue() != 0); }
bool Scalar::is_integer() const { return p_ != 0 || rational().get_den() == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::operator-() const {
  if (p_ == 0) return Scalar(mpq_class(-rational()));
  return Scalar(residue() == 0 ? 0 : p_ - residue(), p_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    std::get<mpq_class>(v_) += o.rational();
  } else {
    std::uint64_t s = residue() + o.residue();
    if (s >= p_ || s < residue()) s -= p_;
    v_ = s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    std::get<mpq_class>(v_) -= o.rational();
  } else {
    std::uint64_t a = residue(), b = o.residue();
    v_ = a >= b ? a - b : a + (p_ - b);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    std::get<mpq_class>(v_) *= o.rational();
  else
    v_ = mulmod(residue(), o.residue(), p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (p_ == 0)
    std::get<mpq_class>(v_) /= o.rational();
  else
    v_ = mulmod(residue(), invmod(o.residue(), p_), p_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (p_ == 0) return Scalar(mpq_class(1) / rational());
  return Scalar(invmod(residue(), p_), p_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? rational() == o.rational() : residue() == o.residue();
}

std::string Scalar::to_string() const { return p_ == 0 ? rational().get_str() : std::to_string(residue()); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace mrep
