#pragma once

#include "cdu/field.hpp"

#include <string>
#include <vector>

namespace cdu {

// One checked instantiation (n, d, c) of a catalog row.
struct CatalogEntry {
    std::string row;   // owning row id
    unsigned n;
    std::uint64_t d;
    Elem c;
    std::uint32_t observed;    // brute-force uniformity
    std::uint32_t expect_lo;   // stated expectation; lo == hi unless a bound
    std::uint32_t expect_hi;
    bool asserted;  // counted in all_pass; false = outcome recorded only
    bool pass;      // observed within [expect_lo, expect_hi]
    std::string note;  // why an entry is informational; empty otherwise
};

// A family of power functions with a claimed uniformity under conditions on
// (n, c). The note records known defects in the claim as commonly stated;
// entries outside the sound scope are kept as records rather than assertions.
struct CatalogRow {
    std::string id;
    std::string description;
    std::string note;
};

struct CatalogReport {
    std::vector<CatalogRow> rows;
    std::vector<CatalogEntry> entries;
    bool all_pass;  // over asserted entries only
};

// Brute-force every admissible instantiation of the low-uniformity catalog
// with 3 <= n <= n_max (default polynomials). Deterministic order: rows as
// declared, entries by ascending (n, k or m, c).
CatalogReport verify_catalog(unsigned n_max = 8);

}  // namespace cdu
