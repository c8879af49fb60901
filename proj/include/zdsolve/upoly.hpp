#pragma once

// Dense univariate polynomials over Z/pZ, coefficient i of x^i, no trailing
// zeros; the zero polynomial is empty.

#include <vector>

#include "zdsolve/modarith.hpp"

namespace zds::up {

using UPoly = std::vector<Residue>;

inline long degree(const UPoly& f) { return static_cast<long>(f.size()) - 1; }
void trim(UPoly& f);
UPoly add(const UPoly& a, const UPoly& b, const Modulus& m);
UPoly sub(const UPoly& a, const UPoly& b, const Modulus& m);
UPoly neg(const UPoly& a, const Modulus& m);
UPoly scale(const UPoly& a, Residue c, const Modulus& m);
UPoly mul(const UPoly& a, const UPoly& b, const Modulus& m);
// a = q*b + r. Throws NotInvertible when b is zero.
void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r, const Modulus& m);
UPoly rem(const UPoly& a, const UPoly& b, const Modulus& m);
UPoly quo(const UPoly& a, const UPoly& b, const Modulus& m);
UPoly monic(const UPoly& a, const Modulus& m);
UPoly derivative(const UPoly& a, const Modulus& m);
// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b, const Modulus& m);
// a^-1 mod f. Throws NotInvertible if gcd(a, f) != 1.
UPoly inverse_mod(const UPoly& a, const UPoly& f, const Modulus& m);
Residue eval(const UPoly& f, Residue x, const Modulus& m);
// f quo x^k
UPoly shift_down(const UPoly& f, size_t k);

}  // namespace zds::up
