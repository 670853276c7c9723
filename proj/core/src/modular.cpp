#include "mrep/modular.hpp"

#include <utility>

#include "mrep/field.hpp"

namespace mrep {

namespace {

struct MersenneMul {
  static constexpr std::uint64_t p = kMersenne61;
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const {
    unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(z) & p;
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t s = lo + hi;
    return s >= p ? s - p : s;
  }
};

struct GenericMul {
  std::uint64_t p;
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, p); }
};

template <class Mul>
std::vector<std::size_t> echelon(ModMatrix& m, bool reduced, Mul mul) {
  const std::uint64_t p = m.p;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::uint64_t*> row(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) row[i] = m.a.data() + i * m.cols;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && row[piv][c] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(row[piv], row[r]);
    std::uint64_t* pr = row[r];
    std::uint64_t inv = invmod(pr[c], p);
    for (std::size_t j = c; j < m.cols; ++j) pr[j] = mul(pr[j], inv);
    std::size_t first = reduced ? 0 : r + 1;
    for (std::size_t i = first; i < m.rows; ++i) {
      if (i == r) continue;
      std::uint64_t* pi = row[i];
      std::uint64_t f = pi[c];
      if (f == 0) continue;
      std::uint64_t nf = p - f;
      for (std::size_t j = c; j < m.cols; ++j) {
        if (pr[j] == 0) continue;
        std::uint64_t s = pi[j] + mul(nf, pr[j]);
        pi[j] = s >= p ? s - p : s;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  // materialize the row permutation
  std::vector<std::uint64_t> out(m.a.size());
  for (std::size_t i = 0; i < m.rows; ++i)
    std::copy(row[i], row[i] + m.cols, out.begin() + static_cast<std::ptrdiff_t>(i * m.cols));
  m.a.swap(out);
  return pivots;
}

}  // namespace

std::vector<std::size_t> mod_echelon(ModMatrix& m, bool reduced) {
  if (m.p == kMersenne61) return echelon(m, reduced, MersenneMul{});
  return echelon(m, reduced, GenericMul{m.p});
}

std::size_t mod_rank(ModMatrix m) {
  // eliminate along the shorter side
  if (m.rows > m.cols) {
    ModMatrix t{m.cols, m.rows, m.p, std::vector<std::uint64_t>(m.a.size())};
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) t.a[j * m.rows + i] = m.a[i * m.cols + j];
    return mod_echelon(t, false).size();
  }
  return mod_echelon(m, false).size();
}

}  // namespace mrep
