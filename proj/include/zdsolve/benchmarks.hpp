#pragma once

#include <string>
#include <vector>

#include "zdsolve/polyring.hpp"

namespace zds::bench {

struct System {
  std::vector<std::string> vars;
  std::vector<ZPolynomial> polys;
};

// n variables x0..x{n-1}; degree 2^(n-1).
System katsura(size_t n);
// n variables x1..xn; degree 2^(n-2).
System eco(size_t n);

}  // namespace zds::bench
