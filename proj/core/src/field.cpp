#include "cdu/field.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace cdu {

namespace {

unsigned poly_degree(Elem p) {
    unsigned d = 0;
    while (p >> 1) { p >>= 1; ++d; }
    return d;
}

Elem poly_mod(Elem a, Elem f) {
    const unsigned df = poly_degree(f);
    while (a >> df) {
        a ^= f << (poly_degree(a) - df);
    }
    return a;
}

// Product of residues mod f (degree <= 62), same shift-reduce scheme as Field::mul.
Elem poly_mulmod(Elem x, Elem y, Elem f, unsigned df) {
    Elem acc = 0;
    while (y) {
        if (y & 1) acc ^= x;
        y >>= 1;
        x <<= 1;
        if (x >> df & 1) x ^= f;
    }
    return acc;
}

Elem poly_gcd(Elem a, Elem b) {
    while (b) {
        const Elem r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

std::vector<unsigned> prime_divisors(unsigned v) {
    std::vector<unsigned> ps;
    for (unsigned q = 2; q * q <= v; ++q) {
        if (v % q == 0) {
            ps.push_back(q);
            while (v % q == 0) v /= q;
        }
    }
    if (v > 1) ps.push_back(v);
    return ps;
}

}  // namespace

bool is_irreducible(Elem poly, unsigned degree) {
    if (degree == 0 || poly >> degree != 1) return false;
    // x itself needs reducing first: for degree 1 the monomial is not a residue.
    const Elem x0 = poly_mod(2, poly);
    auto x_pow_2k = [&](unsigned k) {
        Elem r = x0;
        for (unsigned i = 0; i < k; ++i) r = poly_mulmod(r, r, poly, degree);
        return r;
    };
    if (x_pow_2k(degree) != x0) return false;
    for (unsigned q : prime_divisors(degree)) {
        // h = 0 would make the gcd equal poly itself, failing the != 1 test.
        const Elem h = x_pow_2k(degree / q) ^ x0;
        if (poly_gcd(poly, h) != 1) return false;
    }
    return true;
}

Elem default_poly(unsigned n) {
    if (n == 0 || n > 62) throw std::invalid_argument("degree out of range");
    for (Elem p = Elem{1} << n; p < Elem{2} << n; ++p) {
        if (is_irreducible(p, n)) return p;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(unsigned n) : Field(n, default_poly(n)) {}

Field::Field(unsigned n, Elem poly) : n_(n), poly_(poly) {
    if (n == 0 || n > 62) throw std::invalid_argument("degree out of range");
    if (poly >> n != 1) {
        throw std::invalid_argument("reduction polynomial must be monic of degree " +
                                    std::to_string(n) + ", got " + to_hex(poly));
    }
    if (!is_irreducible(poly, n)) {
        throw std::invalid_argument("reduction polynomial " + to_hex(poly) +
                                    " is reducible");
    }
    order_ = std::uint64_t{1} << n;
}

unsigned Field::m() const {
    if (n_ % 2) throw std::invalid_argument("n is odd: no degree-m subfield split");
    return n_ / 2;
}

Elem Field::pow(Elem x, long long e) const {
    if (x == 0) {
        if (e < 0) throw std::invalid_argument("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const long long g = static_cast<long long>(group_order());
    long long r = e % g;
    if (r < 0) r += g;
    Elem acc = 1;
    Elem base = x;
    while (r) {
        if (r & 1) acc = mul(acc, base);
        base = mul(base, base);
        r >>= 1;
    }
    return acc;
}

Elem Field::inv(Elem x) const {
    if (x == 0) throw std::invalid_argument("inverse of zero");
    return pow(x, static_cast<long long>(group_order()) - 1);
}

Elem Field::conjugate(Elem x) const { return pow2k(x, m()); }

int Field::trace(Elem x) const {
    Elem acc = 0;
    Elem t = x;
    for (unsigned i = 0; i < n_; ++i) {
        acc ^= t;
        t = mul(t, t);
    }
    return static_cast<int>(acc & 1);
}

bool Field::in_subfield(Elem x, unsigned sub_degree) const {
    if (sub_degree == 0 || n_ % sub_degree != 0) {
        throw std::invalid_argument("subfield degree must divide n");
    }
    return pow2k(x, sub_degree) == x;
}

bool Field::is_dth_power(Elem x, std::uint64_t d) const {
    if (x == 0) return true;
    const std::uint64_t g = std::gcd(d, group_order());
    return pow(x, static_cast<long long>(group_order() / g)) == 1;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    a %= modulus;
    if (a < 0) a += modulus;
    std::int64_t r0 = modulus, r1 = a, t0 = 0, t1 = 1;
    while (r1) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1; r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1; t1 = tmp;
    }
    if (r0 != 1) {
        throw std::invalid_argument("not invertible: gcd = " + std::to_string(r0));
    }
    if (t0 < 0) t0 += modulus;
    return t0;
}

std::string to_hex(Elem x) {
    char buf[2 + 16 + 1];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(x));
    return buf;
}

Elem parse_hex(const std::string& s) {
    std::size_t i = 0;
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) i = 2;
    if (i >= s.size()) throw std::invalid_argument("empty hex value: '" + s + "'");
    Elem v = 0;
    for (; i < s.size(); ++i) {
        const char ch = s[i];
        int digit;
        if (ch >= '0' && ch <= '9') digit = ch - '0';
        else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
        else throw std::invalid_argument("bad hex value: '" + s + "'");
        if (v >> 60) throw std::invalid_argument("hex value too wide: '" + s + "'");
        v = v << 4 | static_cast<Elem>(digit);
    }
    return v;
}

Elem parse_elem(const std::string& s, const Field& f) {
    const Elem v = parse_hex(s);
    if (v >= f.order()) {
        throw std::invalid_argument("element " + s + " out of range for n=" +
                                    std::to_string(f.n()));
    }
    return v;
}

}  // namespace cdu
