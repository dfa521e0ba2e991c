#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cdu {

// A field element: n-bit vector, bit i = coefficient of alpha^i in the
// polynomial basis. Always kept reduced, i.e. strictly below 2^n.
using Elem = std::uint64_t;

// F_{2^n} in polynomial basis. Immutable after construction; every operation
// is a pure function of (field, inputs), so instances are freely shared
// across threads. Exhaustive sweeps elsewhere assume n small (<= ~20); the
// arithmetic itself works up to n = 62.
class Field {
public:
    // Picks the lexicographically smallest monic irreducible polynomial of
    // degree n, so results are reproducible with no configuration.
    explicit Field(unsigned n);
    // Caller-chosen reduction polynomial; rejected unless monic of degree
    // exactly n and irreducible.
    Field(unsigned n, Elem poly);

    unsigned n() const { return n_; }
    bool even_degree() const { return n_ % 2 == 0; }
    unsigned m() const;  // n/2; error when n is odd
    Elem reduction_poly() const { return poly_; }
    std::uint64_t order() const { return order_; }              // 2^n
    std::uint64_t group_order() const { return order_ - 1; }    // |F*|

    static Elem add(Elem x, Elem y) { return x ^ y; }

    // Shift-and-reduce product; inputs must be reduced.
    Elem mul(Elem x, Elem y) const {
        Elem acc = 0;
        while (y) {
            if (y & 1) acc ^= x;
            y >>= 1;
            x <<= 1;
            if (x >> n_ & 1) x ^= poly_;
        }
        return acc;
    }
    Elem sqr(Elem x) const { return mul(x, x); }

    // x^(2^k): k squarings (Frobenius iterate).
    Elem pow2k(Elem x, unsigned k) const {
        for (unsigned i = 0; i < k; ++i) x = mul(x, x);
        return x;
    }

    // Square-and-multiply. Nonzero bases reduce the exponent mod 2^n - 1, so
    // negative exponents mean inverse powers. 0^0 = 1 by convention; 0^e = 0
    // for e > 0; 0 with e < 0 is an error.
    Elem pow(Elem x, long long e) const;

    Elem inv(Elem x) const;                    // x^(2^n - 2); error on 0
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem conjugate(Elem x) const;              // x^(2^m); requires n even
    int trace(Elem x) const;                   // absolute trace, in {0, 1}
    Elem sqrt(Elem x) const { return pow2k(x, n_ - 1); }
    bool in_subfield(Elem x, unsigned sub_degree) const;  // x in F_{2^sub}
    bool is_dth_power(Elem x, std::uint64_t d) const;

private:
    unsigned n_;
    Elem poly_;
    std::uint64_t order_;
};

// Deterministic irreducibility test over F_2: x^(2^deg) = x mod poly and,
// for every prime q | deg, gcd(poly, x^(2^(deg/q)) + x) = 1.
bool is_irreducible(Elem poly, unsigned degree);

// Lexicographically smallest monic irreducible polynomial of degree n,
// found by ascending integer scan.
Elem default_poly(unsigned n);

// Multiplicative inverse of a modulo modulus (extended Euclid); result in
// [1, modulus). Error when gcd(a, modulus) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus);

// Wire encoding: lowercase hex with 0x prefix; parsing accepts the prefix in
// either case or none at all.
std::string to_hex(Elem x);
Elem parse_hex(const std::string& s);
// As parse_hex but range-checked against the field order.
Elem parse_elem(const std::string& s, const Field& f);

}  // namespace cdu
