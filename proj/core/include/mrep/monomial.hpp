#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mrep {

inline constexpr std::size_t kMaxVars = 12;

// Exponent vector in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial from_vector(const std::vector<unsigned>& exps);
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return n_; }
  unsigned degree() const { return deg_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v);
  std::vector<unsigned> to_vector() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides

  bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint16_t deg_ = 0;
};

// Graded lexicographic order with X1 > X2 > ... .
bool grlex_less(const Monomial& a, const Monomial& b);
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of degree mu in n variables, largest first.
std::vector<Monomial> monomial_basis(std::size_t n, int mu);
std::size_t monomial_count(std::size_t n, int mu);

// Position lookup for a monomial basis.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> basis);
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t at(const Monomial& m) const;  // throws if absent
  const Monomial& operator[](std::size_t i) const { return basis_[i]; }

 private:
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pos_;
};

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace mrep
