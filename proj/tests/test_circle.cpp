#include "cdu/circle.hpp"

#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

using namespace cdu;

TEST_CASE("unit circle membership and enumeration") {
    const Field f4(4);
    CHECK(unit_circle(f4) == std::vector<Elem>{0x1, 0x8, 0xa, 0xc, 0xf});
    const Field f6(6);
    CHECK(unit_circle(f6) ==
          std::vector<Elem>{0x1, 0x6, 0xb, 0x14, 0x1a, 0x1c, 0x1f, 0x3a, 0x3b});
    for (unsigned n : {2u, 4u, 6u, 8u, 10u}) {
        const Field f(n);
        const auto mu = unit_circle(f);
        CHECK(mu.size() == (Elem{1} << f.m()) + 1);
        CHECK(!on_circle(f, 0));
        for (Elem x = 0; x < f.order(); ++x) {
            const bool member = x != 0 && f.pow(x, static_cast<long long>(mu.size())) == 1;
            CHECK(on_circle(f, x) == member);
        }
        // The circle is a group: closed under products and inverses.
        for (Elem u : mu) {
            CHECK(on_circle(f, f.inv(u)));
            for (Elem v : mu) CHECK(on_circle(f, f.mul(u, v)));
        }
    }
    CHECK_THROWS_AS(unit_circle(Field(5)), std::invalid_argument);
}

TEST_CASE("polar decomposition is the unique subfield-times-circle factorization") {
    const Field f4(4);
    const auto p7 = polar_decompose(f4, 0x7);
    CHECK(p7.alpha == 0x7);
    CHECK(p7.u == 0x1);
    for (unsigned n : {4u, 6u, 8u}) {
        const Field f(n);
        for (Elem x = 1; x < f.order(); ++x) {
            const auto p = polar_decompose(f, x);
            CHECK(p.alpha != 0);
            CHECK(f.in_subfield(p.alpha, f.m()));
            CHECK(on_circle(f, p.u));
            CHECK(f.mul(p.alpha, p.u) == x);
        }
    }
    CHECK_THROWS_AS(polar_decompose(f4, 0), std::invalid_argument);
    CHECK_THROWS_AS(polar_decompose(Field(5), 0x2), std::invalid_argument);
}

TEST_CASE("phi maps distinct circle pairs bijectively outside the subfield") {
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        const Field f(n);
        const auto mu = unit_circle(f);
        std::set<Elem> images;
        std::size_t pairs = 0;
        for (Elem u : mu) {
            if (u == 1) continue;
            for (Elem v : mu) {
                if (v == 1 || v == u) continue;
                ++pairs;
                const Elem x = phi(f, {u, v});
                CHECK(!f.in_subfield(x, f.m()));
                images.insert(x);
                const auto back = phi_inv(f, x);
                CHECK(back.u == u);
                CHECK(back.v == v);
            }
        }
        const std::size_t expected = (mu.size() - 1) * (mu.size() - 2);
        CHECK(pairs == expected);
        CHECK(images.size() == expected);
        CHECK(expected == f.order() - (Elem{1} << f.m()));
    }
}

TEST_CASE("phi domain and phi_inv range are validated") {
    const Field f(6);
    CHECK_THROWS_AS(phi(f, {0x1, 0x6}), std::invalid_argument);   // u = 1
    CHECK_THROWS_AS(phi(f, {0x6, 0x6}), std::invalid_argument);   // equal pair
    CHECK_THROWS_AS(phi(f, {0x2, 0x6}), std::invalid_argument);   // off circle
    Elem sub = 2;  // first nontrivial element of the embedded F_8
    while (!f.in_subfield(sub, 3)) ++sub;
    CHECK_THROWS_AS(phi_inv(f, sub), std::invalid_argument);
    CHECK_THROWS_AS(phi_inv(f, 1), std::invalid_argument);
    CHECK_THROWS_AS(phi_inv(f, 0), std::invalid_argument);
}
