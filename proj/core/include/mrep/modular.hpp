#pragma once

#include <cstdint>
#include <vector>

namespace mrep {

inline constexpr std::uint64_t kMersenne61 = (1ULL << 61) - 1;

// Dense row-major matrix over GF(p).
struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::uint64_t p = kMersenne61;
  std::vector<std::uint64_t> a;
  std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Row echelon in place; returns pivot columns. With `reduced`, pivots are 1 and
// pivot columns are cleared above as well.
std::vector<std::size_t> mod_echelon(ModMatrix& m, bool reduced);
std::size_t mod_rank(ModMatrix m);

}  // namespace mrep
