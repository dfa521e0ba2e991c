#pragma once

#include "cdu/field.hpp"

namespace cdu {

// The unit circle of F_{2^n}, n = 2m, is the order-(2^m+1) subgroup
// mu = {x : x^(2^m+1) = 1}. Every nonzero x factors uniquely as x = alpha*u
// with alpha in F_{2^m}* and u on the circle (the polar representation).

struct PolarForm {
    Elem alpha;  // subfield part, in F_{2^m}*
    Elem u;      // circle part, u^(2^m+1) = 1
};

// An ordered pair of circle points distinct from 1 and from each other; the
// domain of the bijection phi below.
struct PairUV {
    Elem u;
    Elem v;
};

bool on_circle(const Field& f, Elem x);

// All circle members, ascending by integer value; size 2^m + 1.
std::vector<Elem> unit_circle(const Field& f);

// alpha = sqrt(x^(2^m+1)), u = x / alpha. Error on x = 0 or odd n.
PolarForm polar_decompose(const Field& f, Elem x);

// (u, v) -> u^2 (1 + v^2) / (u^2 + v^2); a bijection from the valid pairs
// onto F_{2^n} \ F_{2^m}.
Elem phi(const Field& f, const PairUV& p);

// Inverse of phi: u from the polar form of x, v from the polar form of x+1.
// Error when x lies in F_{2^m}.
PairUV phi_inv(const Field& f, Elem x);

}  // namespace cdu
