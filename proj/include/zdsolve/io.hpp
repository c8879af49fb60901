#pragma once

// The .ms input format, the #msolve-like v1 report and real root boxes.

#include <cstdint>
#include <string>
#include <vector>

#include "zdsolve/fglm.hpp"
#include "zdsolve/multimod.hpp"
#include "zdsolve/polyring.hpp"
#include "zdsolve/usolve.hpp"

namespace zds::io {

struct InputSystem {
  std::vector<std::string> vars;
  uint32_t characteristic = 0;
  std::vector<ZPolynomial> polys;  // integer coefficients, canonical term order
};

bool operator==(const InputSystem& a, const InputSystem& b);

// Line 1: variables, line 2: characteristic, then comma separated generators.
// Lines starting with # are ignored. Throws Error(Parse) with the line number.
InputSystem parse_ms(const std::string& text);
std::string print_ms(const InputSystem& sys);
std::string format_polynomial(const ZPolynomial& f, const std::vector<std::string>& vars);

// One real solution: the isolating interval of the parametrizing variable and
// closed enclosures of x_1..x_n.
struct RootBox {
  usolve::DyadicInterval param;
  std::vector<usolve::DyadicInterval> coords;
};

// Boxes of the real roots of a lifted parametrization, ordered by the
// parametrizing variable. Every coordinate enclosure has width <= 2^-precision.
std::vector<RootBox> real_root_boxes(const multimod::LiftedParametrization& L, long precision);

// Integer multiple of a rational polynomial, primitive.
usolve::IntegerPolynomial clear_denominators(const std::vector<mpq_class>& f);

enum class Status { Finite, Infinite, Error };

struct SolutionReport {
  Status status = Status::Finite;
  std::vector<std::string> vars;
  std::string message;
  bool modular = false;
  fglm::RationalParametrization modular_result;
  multimod::LiftedParametrization lifted;
  bool real_roots_requested = false;
  std::vector<RootBox> roots;
  multimod::Diagnostics diag;
};

std::string write_solution(const SolutionReport& r);

}  // namespace zds::io
