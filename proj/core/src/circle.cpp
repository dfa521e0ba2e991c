#include "cdu/circle.hpp"

#include <stdexcept>

namespace cdu {

bool on_circle(const Field& f, Elem x) {
    if (x == 0) return false;
    return f.pow(x, (std::int64_t{1} << f.m()) + 1) == 1;
}

std::vector<Elem> unit_circle(const Field& f) {
    std::vector<Elem> mu;
    mu.reserve((std::size_t{1} << f.m()) + 1);
    for (Elem x = 1; x < f.order(); ++x) {
        if (on_circle(f, x)) mu.push_back(x);
    }
    return mu;  // ascending scan order
}

PolarForm polar_decompose(const Field& f, Elem x) {
    if (x == 0) throw std::invalid_argument("polar form of zero");
    const long long e = (std::int64_t{1} << f.m()) + 1;
    // x^(2^m+1) = x * x^(2^m) lands in F_{2^m}; its square root stays there.
    const Elem alpha = f.sqrt(f.pow(x, e));
    return {alpha, f.div(x, alpha)};
}

static void check_pair(const Field& f, const PairUV& p) {
    if (!on_circle(f, p.u) || !on_circle(f, p.v)) {
        throw std::invalid_argument("pair members must lie on the unit circle");
    }
    if (p.u == 1 || p.v == 1 || p.u == p.v) {
        throw std::invalid_argument("pair members must be distinct and != 1");
    }
}

Elem phi(const Field& f, const PairUV& p) {
    check_pair(f, p);
    const Elem u2 = f.sqr(p.u);
    const Elem v2 = f.sqr(p.v);
    return f.div(f.mul(u2, v2 ^ 1), u2 ^ v2);
}

PairUV phi_inv(const Field& f, Elem x) {
    if (f.in_subfield(x, f.m())) {
        throw std::invalid_argument("element lies in the subfield F_{2^m}");
    }
    return {polar_decompose(f, x).u, polar_decompose(f, x ^ 1).u};
}

}  // namespace cdu
