#include "cdu/quad.hpp"

#include "cdu/circle.hpp"

#include <stdexcept>

namespace cdu {

Elem eval_quad(const Field& f, const QuadPoly& q, Elem x) {
    const Elem xr = f.pow2k(x, q.r);  // x^(2^r)
    return f.mul(xr, x) ^ f.mul(q.a, xr) ^ f.mul(q.b, x) ^ q.c;
}

std::vector<Elem> roots_in_field(const Field& f, const QuadPoly& q) {
    if (q.r == 0) throw std::invalid_argument("r must be >= 1");
    std::vector<Elem> roots;
    for (Elem x = 0; x < f.order(); ++x) {
        if (eval_quad(f, q, x) == 0) roots.push_back(x);
    }
    return roots;
}

std::vector<Elem> roots_in_circle(const Field& f, const QuadPoly& q) {
    std::vector<Elem> roots;
    for (Elem x : roots_in_field(f, q)) {
        if (on_circle(f, x)) roots.push_back(x);
    }
    return roots;
}

}  // namespace cdu
