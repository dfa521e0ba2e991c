#include "cdu/cdiff.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cdu {

PowerFunc make_power(const Field& f, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("exponent must be >= 1");
    PowerFunc F{f, d, {}};
    F.table.resize(f.order());
    for (Elem x = 1; x < f.order(); ++x) {
        F.table[x] = f.pow(x, static_cast<long long>(d));
    }
    return F;
}

std::uint64_t c_derivative_count(const Field& f, const std::vector<Elem>& table,
                                 Elem a, Elem b, Elem c) {
    if (c == 1 && a == 0) {
        throw std::invalid_argument("a = 0 is excluded for c = 1");
    }
    if (table.size() != f.order()) {
        throw std::invalid_argument("table size does not match field order");
    }
    std::uint64_t count = 0;
    for (Elem x = 0; x < f.order(); ++x) {
        if ((table[x ^ a] ^ f.mul(c, table[x])) == b) ++count;
    }
    return count;
}

std::uint64_t count_a0(const PowerFunc& F, Elem b, Elem c) {
    if (c == 1) throw std::invalid_argument("a = 0 is excluded for c = 1");
    if (b == 0) return 1;
    const Field& f = F.field;
    const Elem t = f.div(b, c ^ 1);  // b / (1 + c)
    if (t != 0 && f.is_dth_power(t, F.d)) return std::gcd(F.d, f.group_order());
    return 0;
}

SpectrumReport spectrum(const PowerFunc& F, Elem c) {
    const Field& f = F.field;
    SpectrumReport r;
    r.c = c;
    r.counts.assign(f.order(), 0);
    for (Elem x = 0; x < f.order(); ++x) {
        ++r.counts[F.table[x ^ 1] ^ f.mul(c, F.table[x])];
    }
    r.a0_gcd = std::gcd(F.d, f.group_order());
    std::uint64_t u = *std::max_element(r.counts.begin(), r.counts.end());
    if (c != 1) u = std::max(u, r.a0_gcd);
    r.uniformity = static_cast<std::uint32_t>(u);
    r.pcn = r.uniformity == 1;
    r.apcn = r.uniformity == 2;
    return r;
}

std::uint32_t cdu_general(const Field& f, const std::vector<Elem>& table, Elem c) {
    if (table.size() != f.order()) {
        throw std::invalid_argument("table size does not match field order");
    }
    std::vector<Elem> ct(f.order());
    for (Elem x = 0; x < f.order(); ++x) ct[x] = f.mul(c, table[x]);
    std::uint32_t best = 0;
    std::vector<std::uint32_t> counts(f.order());
    for (Elem a = (c == 1) ? 1 : 0; a < f.order(); ++a) {
        std::fill(counts.begin(), counts.end(), 0);
        for (Elem x = 0; x < f.order(); ++x) {
            ++counts[table[x ^ a] ^ ct[x]];
        }
        best = std::max(best, *std::max_element(counts.begin(), counts.end()));
    }
    return best;
}

}  // namespace cdu
