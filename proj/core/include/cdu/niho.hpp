#pragma once

#include "cdu/field.hpp"
#include "cdu/quad.hpp"

#include <optional>
#include <utility>

namespace cdu {

// Parameters of the Niho-type exponent d = s(2^m-1)+1 over F_{2^n}, n = 2m,
// where s inverts 2^k+1 modulo 2^m+1. Validity needs gcd(2^k+1, 2^m+1) = 1,
// i.e. exactly one of k/g, m/g even (g = gcd(k, m)); for odd m that means
// k/g even. The closed-form c-differential uniformity for odd m and circle
// c != 1 is 2^g + 1.
struct NihoParams {
    unsigned m;
    unsigned k;
    unsigned g;        // gcd(k, m)
    unsigned n;        // 2m
    std::uint64_t s;
    std::uint64_t d;   // s(2^m-1)+1 reduced into [1, 2^n-1)
    bool experimental; // even m: constructed for experiments, closed-form
                       // claims and the structural solver's V-set do not apply
};

// Error when gcd(2^k+1, 2^m+1) != 1 (reported with the offending gcd), when
// m is even without experimental = true, or when m < 3 (m < 2 experimental).
NihoParams make_params(unsigned m, unsigned k, bool experimental = false);

enum class SolutionOrigin {
    subfield,             // x in F_{2^m}, from the closed-form criterion
    circle_proportional,  // circle pair with y = cz
    circle_generic        // circle pair with y != cz
};
const char* origin_name(SolutionOrigin o);

struct StructuralSolution {
    Elem x;
    SolutionOrigin origin;
    bool has_witness;  // false for subfield solutions
    Elem y, z;         // witness circle pair when present
};

// Everything below solves (x+1)^d + c x^d = b structurally (no sweep over x)
// for circle c != 1, and is cross-checked against brute force by the tests.

// Circle data shared across many (c, b) solves; enumerating the circle per
// call would dominate full b-sweeps.
struct CircleTable {
    std::vector<Elem> nontrivial;  // circle \ {1}, ascending
    std::vector<Elem> frob_k;      // nontrivial[i]^(2^k)
};
CircleTable make_circle_table(const Field& f, const NihoParams& p);

// The unique subfield solution x = (b+1)/(c+1), present iff
// c(conj(b)+1) + b + 1 = 0.
std::optional<Elem> subfield_solution(const Field& f, const NihoParams& p,
                                      Elem c, Elem b);

// All pairs (y, z) on (circle \ {1})^2, y != z, satisfying the paired system
//   c(z + conj(b)) y^(2^k) + b z + 1 = 0
//   (y + c conj(b)) z^(2^k) + b y + c = 0
// by exhaustive scan of the circle (the assumption-free oracle path).
// Lexicographic (y, z) order.
std::vector<std::pair<Elem, Elem>> circle_system_solutions(
    const Field& f, const NihoParams& p, Elem c, Elem b, const CircleTable& ct);
std::vector<std::pair<Elem, Elem>> circle_system_solutions(const Field& f,
                                                           const NihoParams& p,
                                                           Elem c, Elem b);

// Solutions outside F_{2^m}: the proportional branch contributes
// x = (b^-(2^k+1) + 1)/(c^-(2^k+1) + 1) exactly when b lies on the circle,
// b != 1, b != c (witness y = c/b, z = 1/b); each generic system pair adds
// x = y(bz+1)/(y+cz). Every solution is rechecked by direct evaluation;
// branch collisions indicate solver bugs and raise errors.
std::vector<StructuralSolution> nonsubfield_solutions(
    const Field& f, const NihoParams& p, Elem c, Elem b, const CircleTable& ct);
std::vector<StructuralSolution> nonsubfield_solutions(const Field& f,
                                                      const NihoParams& p,
                                                      Elem c, Elem b);

// Subfield + nonsubfield solutions and their count; equals the brute-force
// solution count of (x+1)^d + c x^d = b.
std::pair<std::uint32_t, std::vector<StructuralSolution>> structural_count(
    const Field& f, const NihoParams& p, Elem c, Elem b, const CircleTable& ct);
std::pair<std::uint32_t, std::vector<StructuralSolution>> structural_count(
    const Field& f, const NihoParams& p, Elem c, Elem b);

// For b off the circle and nonzero, the circle z-values of generic solutions
// are the circle roots of a monic QuadPoly with r = 2k, obtained by
// normalizing A z^(2^2k+1) + B z^(2^2k) + C z + D with
//   A = c^(2^k+1) conj(b)^(2^k) + b           (never 0 for valid inputs)
//   B = c^(2^k+1) conj(b)^(2^k+1) + 1
//   C = c^(2^k+1) + b^(2^k+1)
//   D = c^(2^k+1) conj(b) + b^(2^k)
QuadPoly offcircle_poly(const Field& f, const NihoParams& p, Elem c, Elem b);

// Membership in V = {x : x^((2^m+1)/(2^g+1)) = 1}, the condition governing
// solubility at b = 0. Defined for odd m only ((2^g+1) | (2^m+1) needs m/g odd).
bool v_member(const Field& f, const NihoParams& p, Elem c);

// max_b structural_count maxed with gcd(d, 2^n-1) = 2^g+1; the structural
// route to the uniformity, independent of the spectrum sweep. Odd m only.
std::uint32_t structural_uniformity(const Field& f, const NihoParams& p, Elem c);

struct ExperimentRecord {
    Elem c;
    std::uint32_t uniformity;
    bool in_circle;
};

struct ExperimentReport {
    std::vector<ExperimentRecord> records;
    bool has_claim;  // even m: circle values should lie in expected_set
    std::vector<std::uint32_t> expected_set;  // {2, 2^gcd(2k,m)+1} when claimed
    bool all_in_expected;  // vacuously true when no claim applies
};

// Brute-force uniformity for each requested c. Even m carries the membership
// claim above (checked over circle c != 1); odd m sweeps are observational.
ExperimentReport experiment_sweep(const Field& f, const NihoParams& p,
                                  const std::vector<Elem>& c_set);

}  // namespace cdu
