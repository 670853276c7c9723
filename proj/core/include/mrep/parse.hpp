#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mrep/poly.hpp"

namespace mrep {

// Variable names and field a polynomial string is read against.
struct Ambient {
  std::vector<std::string> names;
  Field field;
};

Ambient x_ambient(std::size_t n, Field field);  // X1..Xn
Ambient t_ambient(std::size_t n, Field field);  // T0..T{n-1}

// Grammar: integers, rationals written a/b, declared names, + - * ^ and parentheses.
MultiPoly parse_poly(std::string_view text, const Ambient& ambient);
std::string print_poly(const MultiPoly& p, const std::vector<std::string>& names);

}  // namespace mrep
