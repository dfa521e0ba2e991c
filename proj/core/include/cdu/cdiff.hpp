#pragma once

#include "cdu/field.hpp"

#include <cstdint>

namespace cdu {

// Power function F(x) = x^d with a precomputed value table. The c-derivative
// at a is x -> F(x+a) + c F(x) (characteristic 2: subtraction is addition);
// its uniformity is the maximum solution count of F(x+a) + c F(x) = b over
// admissible (a, b) — a = 0 is admissible unless c = 1.
struct PowerFunc {
    Field field;  // fields are small value types; keep a copy for lifetime safety
    std::uint64_t d;
    std::vector<Elem> table;  // table[x] = x^d
};

PowerFunc make_power(const Field& f, std::uint64_t d);

// #{x : T[x+a] + c T[x] = b} for an arbitrary lookup table T (size 2^n).
// Error on (c = 1, a = 0).
std::uint64_t c_derivative_count(const Field& f, const std::vector<Elem>& table,
                                 Elem a, Elem b, Elem c);

// Closed form for the a = 0 row (c != 1): 1 if b = 0; gcd(d, 2^n-1) if
// b/(1+c) is a nonzero d-th power; 0 otherwise.
std::uint64_t count_a0(const PowerFunc& F, Elem b, Elem c);

struct SpectrumReport {
    Elem c;
    std::vector<std::uint32_t> counts;  // counts[b] for the a = 1 derivative
    std::uint64_t a0_gcd;               // gcd(d, 2^n - 1)
    std::uint32_t uniformity;
    bool pcn;   // uniformity == 1
    bool apcn;  // uniformity == 2
};

// One pass over x, histogramming b = F(x+1) + c F(x). For a power function
// the a = 1 row covers all a != 0 (translation identity), so
// uniformity = max(max_b counts[b], a0_gcd) for c != 1 and the plain
// histogram max for c = 1.
SpectrumReport spectrum(const PowerFunc& F, Elem c);

// Definition-level uniformity of an arbitrary table by full (a, b) scan;
// the independent cross-check for spectrum().
std::uint32_t cdu_general(const Field& f, const std::vector<Elem>& table, Elem c);

}  // namespace cdu
