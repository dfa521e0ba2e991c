#include "cdu/niho.hpp"

#include "cdu/cdiff.hpp"
#include "cdu/circle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cdu {

namespace {

void require_circle_c(const Field& f, Elem c) {
    if (c == 1 || !on_circle(f, c)) {
        throw std::invalid_argument("c must lie on the unit circle and differ from 1");
    }
}

// Direct check that x solves (x+1)^d + c x^d = b.
bool solves(const Field& f, const NihoParams& p, Elem c, Elem b, Elem x) {
    const auto d = static_cast<long long>(p.d);
    return (f.pow(x ^ 1, d) ^ f.mul(c, f.pow(x, d))) == b;
}

}  // namespace

const char* origin_name(SolutionOrigin o) {
    switch (o) {
        case SolutionOrigin::subfield: return "subfield";
        case SolutionOrigin::circle_proportional: return "circle-proportional";
        case SolutionOrigin::circle_generic: return "circle-generic";
    }
    return "?";
}

NihoParams make_params(unsigned m, unsigned k, bool experimental) {
    if (experimental ? m < 2 : (m < 3 || m % 2 == 0)) {
        throw std::invalid_argument(
            experimental ? "experimental parameters need m >= 2"
                         : "m must be odd and >= 3");
    }
    if (k == 0 || m > 30) throw std::invalid_argument("k must be >= 1 and m <= 30");
    const std::int64_t tm = (std::int64_t{1} << m) + 1;
    const std::int64_t a = ((std::int64_t{1} << k) + 1) % tm;
    const std::int64_t gk = std::gcd((std::int64_t{1} << k) + 1, tm);
    if (gk != 1) {
        throw std::invalid_argument("invalid (m, k): gcd(2^k+1, 2^m+1) = " +
                                    std::to_string(gk));
    }
    NihoParams p;
    p.m = m;
    p.k = k;
    p.g = std::gcd(k, m);
    p.n = 2 * m;
    p.s = static_cast<std::uint64_t>(mod_inverse(a, tm));
    const std::uint64_t group = (std::uint64_t{1} << p.n) - 1;
    p.d = (p.s * ((std::uint64_t{1} << m) - 1) + 1) % group;
    p.experimental = experimental;
    if (!experimental) {
        // For odd m the exponent always satisfies gcd(d, 2^n-1) = 2^g+1.
        const std::uint64_t expect = (std::uint64_t{1} << p.g) + 1;
        if (std::gcd(p.d, group) != expect) {
            throw std::logic_error("exponent gcd invariant violated");
        }
    }
    return p;
}

std::optional<Elem> subfield_solution(const Field& f, const NihoParams& p,
                                      Elem c, Elem b) {
    require_circle_c(f, c);
    if ((f.mul(c, f.conjugate(b) ^ 1) ^ b ^ 1) != 0) return std::nullopt;
    const Elem x = f.div(b ^ 1, c ^ 1);
    if (!f.in_subfield(x, p.m) || !solves(f, p, c, b, x)) {
        throw std::logic_error("subfield criterion produced a non-solution");
    }
    return x;
}

CircleTable make_circle_table(const Field& f, const NihoParams& p) {
    CircleTable ct;
    for (Elem x : unit_circle(f)) {
        if (x != 1) ct.nontrivial.push_back(x);
    }
    ct.frob_k.resize(ct.nontrivial.size());
    for (std::size_t i = 0; i < ct.nontrivial.size(); ++i) {
        ct.frob_k[i] = f.pow2k(ct.nontrivial[i], p.k);
    }
    return ct;
}

std::vector<std::pair<Elem, Elem>> circle_system_solutions(
    const Field& f, [[maybe_unused]] const NihoParams& p, Elem c, Elem b,
    const CircleTable& ct) {  // k enters through ct.frob_k
    require_circle_c(f, c);
    const Elem bc = f.conjugate(b);
    const auto& mu = ct.nontrivial;

    std::vector<std::pair<Elem, Elem>> out;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const Elem y = mu[i], yk = ct.frob_k[i];
        for (std::size_t j = 0; j < mu.size(); ++j) {
            if (i == j) continue;
            const Elem z = mu[j], zk = ct.frob_k[j];
            const Elem eq1 = f.mul(f.mul(c, z ^ bc), yk) ^ f.mul(b, z) ^ 1;
            if (eq1 != 0) continue;
            const Elem eq2 = f.mul(y ^ f.mul(c, bc), zk) ^ f.mul(b, y) ^ c;
            if (eq2 == 0) out.emplace_back(y, z);
        }
    }
    return out;  // lexicographic by scan order
}

std::vector<std::pair<Elem, Elem>> circle_system_solutions(const Field& f,
                                                           const NihoParams& p,
                                                           Elem c, Elem b) {
    return circle_system_solutions(f, p, c, b, make_circle_table(f, p));
}

std::vector<StructuralSolution> nonsubfield_solutions(
    const Field& f, const NihoParams& p, Elem c, Elem b, const CircleTable& ct) {
    require_circle_c(f, c);
    const long long e = (1LL << p.k) + 1;
    std::vector<StructuralSolution> out;

    bool have_proportional = false;
    Elem wy = 0, wz = 0;
    if (b != 0 && b != 1 && b != c && on_circle(f, b)) {
        const Elem x = f.div(f.pow(b, -e) ^ 1, f.pow(c, -e) ^ 1);
        wy = f.div(c, b);
        wz = f.inv(b);
        out.push_back({x, SolutionOrigin::circle_proportional, true, wy, wz});
        have_proportional = true;
    }

    for (const auto& [y, z] : circle_system_solutions(f, p, c, b, ct)) {
        const Elem denom = y ^ f.mul(c, z);
        if (denom == 0) {
            // The proportional branch owns y = cz pairs; anything else here
            // would contradict the case split.
            if (!have_proportional || y != wy || z != wz) {
                throw std::logic_error("unexpected proportional system pair");
            }
            continue;
        }
        const Elem x = f.div(f.mul(y, f.mul(b, z) ^ 1), denom);
        for (const auto& s : out) {
            if (s.x == x) throw std::logic_error("solution branch collision");
        }
        out.push_back({x, SolutionOrigin::circle_generic, true, y, z});
    }

    for (const auto& s : out) {
        if (f.in_subfield(s.x, p.m) || !solves(f, p, c, b, s.x)) {
            throw std::logic_error("structural solver produced a non-solution");
        }
    }
    return out;
}

std::vector<StructuralSolution> nonsubfield_solutions(const Field& f,
                                                      const NihoParams& p,
                                                      Elem c, Elem b) {
    return nonsubfield_solutions(f, p, c, b, make_circle_table(f, p));
}

std::pair<std::uint32_t, std::vector<StructuralSolution>> structural_count(
    const Field& f, const NihoParams& p, Elem c, Elem b, const CircleTable& ct) {
    std::vector<StructuralSolution> all;
    if (auto x = subfield_solution(f, p, c, b)) {
        all.push_back({*x, SolutionOrigin::subfield, false, 0, 0});
    }
    for (auto& s : nonsubfield_solutions(f, p, c, b, ct)) all.push_back(s);
    return {static_cast<std::uint32_t>(all.size()), std::move(all)};
}

std::pair<std::uint32_t, std::vector<StructuralSolution>> structural_count(
    const Field& f, const NihoParams& p, Elem c, Elem b) {
    return structural_count(f, p, c, b, make_circle_table(f, p));
}

QuadPoly offcircle_poly(const Field& f, const NihoParams& p, Elem c, Elem b) {
    require_circle_c(f, c);
    if (b == 0 || on_circle(f, b)) {
        throw std::invalid_argument("b must be nonzero and off the unit circle");
    }
    const Elem bc = f.conjugate(b);
    const Elem bck = f.pow2k(bc, p.k);  // conj(b)^(2^k)
    const Elem bk = f.pow2k(b, p.k);    // b^(2^k)
    const Elem ce = f.mul(f.pow2k(c, p.k), c);  // c^(2^k+1)
    const Elem A = f.mul(ce, bck) ^ b;
    if (A == 0) throw std::logic_error("vanishing leading coefficient");
    const Elem B = f.mul(ce, f.mul(bck, bc)) ^ 1;
    const Elem C = ce ^ f.mul(bk, b);
    const Elem D = f.mul(ce, bc) ^ bk;
    const Elem ia = f.inv(A);
    return {2 * p.k, f.mul(B, ia), f.mul(C, ia), f.mul(D, ia)};
}

bool v_member(const Field& f, const NihoParams& p, Elem c) {
    if (p.m % 2 == 0) {
        throw std::invalid_argument("V is defined for odd m only");
    }
    const long long exp = ((1LL << p.m) + 1) / ((1LL << p.g) + 1);
    return f.pow(c, exp) == 1;
}

std::uint32_t structural_uniformity(const Field& f, const NihoParams& p, Elem c) {
    if (p.experimental || p.m % 2 == 0) {
        throw std::invalid_argument("closed-form uniformity applies to odd m only");
    }
    require_circle_c(f, c);
    const CircleTable ct = make_circle_table(f, p);
    std::uint32_t best = 0;
    for (Elem b = 0; b < f.order(); ++b) {
        best = std::max(best, structural_count(f, p, c, b, ct).first);
    }
    const auto gcd_term = static_cast<std::uint32_t>((1u << p.g) + 1);
    return std::max(best, gcd_term);
}

ExperimentReport experiment_sweep(const Field& f, const NihoParams& p,
                                  const std::vector<Elem>& c_set) {
    ExperimentReport rep;
    rep.has_claim = p.m % 2 == 0;
    if (rep.has_claim) {
        rep.expected_set = {2, static_cast<std::uint32_t>(
                                   (1u << std::gcd(2 * p.k, p.m)) + 1)};
    }
    rep.all_in_expected = true;
    const PowerFunc F = make_power(f, p.d);
    for (Elem c : c_set) {
        const auto sp = spectrum(F, c);
        const bool in_circle = on_circle(f, c);
        rep.records.push_back({c, sp.uniformity, in_circle});
        if (rep.has_claim && in_circle && c != 1) {
            const auto& es = rep.expected_set;
            if (std::find(es.begin(), es.end(), sp.uniformity) == es.end()) {
                rep.all_in_expected = false;
            }
        }
    }
    return rep;
}

}  // namespace cdu
