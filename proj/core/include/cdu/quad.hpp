#pragma once

#include "cdu/field.hpp"

namespace cdu {

// Monic Q(x) = x^(2^r+1) + a x^(2^r) + b x + c. The root count over F_{2^n}
// always lies in {0, 1, 2, 2^gcd(n,r)+1}; when three or more roots fall on
// the unit circle, the circle-root count is exactly 2^gcd(m, gcd(n,r))+1.
// Non-monic instances are normalized by the caller (divide through by the
// leading coefficient) before construction.
struct QuadPoly {
    unsigned r;  // >= 1
    Elem a;
    Elem b;
    Elem c;
};

Elem eval_quad(const Field& f, const QuadPoly& q, Elem x);

// Exhaustive scan; ascending order.
std::vector<Elem> roots_in_field(const Field& f, const QuadPoly& q);

// roots_in_field filtered to the unit circle; requires even n.
std::vector<Elem> roots_in_circle(const Field& f, const QuadPoly& q);

}  // namespace cdu
