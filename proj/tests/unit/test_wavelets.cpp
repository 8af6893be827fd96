#include <cmath>
#include <vector>

#include "doctest.h"
#include "wamr/wavelets.hpp"

using namespace wamr;

namespace {

const WaveletSpec kFamilies[] = {{2, 0}, {2, 2}, {4, 0}, {4, 2}, {6, 0}, {6, 2}};

void check_filter(const Filter& f, int lo, const std::vector<real>& expect) {
    REQUIRE(f.lo == lo);
    REQUIRE(f.w.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(f.w[i] == expect[i]);
}

// Lagrange weights interpolating the midpoint from N coarse neighbors:
// the independent construction of the Deslauriers-Dubuc coefficients.
std::vector<real> midpoint_lagrange_weights(int n) {
    std::vector<real> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = 2.0 * (1 - n / 2 + i) - 1.0;
    std::vector<real> w(n);
    for (int i = 0; i < n; ++i) {
        real p = 1.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            p *= (0.0 - xs[j]) / (xs[i] - xs[j]);
        }
        w[i] = p;
    }
    return w;
}

}  // namespace

TEST_CASE("dual-lifting coefficients match the table and the Lagrange oracle") {
    check_filter({0, dual_lift_coefficients(2)}, 0, {-0.5, -0.5});
    check_filter({0, dual_lift_coefficients(4)}, 0, {1.0 / 16, -9.0 / 16, -9.0 / 16, 1.0 / 16});
    check_filter({0, dual_lift_coefficients(6)}, 0,
                 {-3.0 / 256, 25.0 / 256, -75.0 / 128, -75.0 / 128, 25.0 / 256, -3.0 / 256});

    for (int n : {2, 4, 6}) {
        auto st = dual_lift_coefficients(n);
        auto w = midpoint_lagrange_weights(n);
        for (int i = 0; i < n; ++i) CHECK(st[i] == doctest::Approx(-w[i]).epsilon(1e-15));
        // symmetric
        for (int i = 0; i < n; ++i) CHECK(st[i] == st[n - 1 - i]);
    }
    CHECK_THROWS_AS(dual_lift_coefficients(8), UnsupportedWavelet);
}

TEST_CASE("filter banks reproduce the published tables") {
    SUBCASE("2.0") {
        auto b = build_filter_bank({2, 0});
        check_filter(b.ha, 0, {1.0});
        check_filter(b.ga, -1, {-0.5, 1.0, -0.5});
        check_filter(b.js, 0, {1.0});
        check_filter(b.ks, -1, {0.5, 1.0, 0.5});
    }
    SUBCASE("4.0") {
        auto b = build_filter_bank({4, 0});
        check_filter(b.ha, 0, {1.0});
        check_filter(b.ga, -3, {1.0 / 16, 0, -9.0 / 16, 1, -9.0 / 16, 0, 1.0 / 16});
        check_filter(b.js, 0, {1.0});
        check_filter(b.ks, -3, {-1.0 / 16, 0, 9.0 / 16, 1, 9.0 / 16, 0, -1.0 / 16});
    }
    SUBCASE("6.0") {
        auto b = build_filter_bank({6, 0});
        check_filter(b.ga, -5, {-3.0 / 256, 0, 25.0 / 256, 0, -75.0 / 128, 1, -75.0 / 128, 0,
                                25.0 / 256, 0, -3.0 / 256});
        check_filter(b.ks, -5, {3.0 / 256, 0, -25.0 / 256, 0, 75.0 / 128, 1, 75.0 / 128, 0,
                                -25.0 / 256, 0, 3.0 / 256});
    }
    SUBCASE("2.2") {
        auto b = build_filter_bank({2, 2});
        check_filter(b.ha, -2, {-1.0 / 8, 1.0 / 4, 3.0 / 4, 1.0 / 4, -1.0 / 8});
        check_filter(b.ga, -1, {-0.5, 1.0, -0.5});
        check_filter(b.js, -1, {-1.0 / 4, 1.0, -1.0 / 4});
        check_filter(b.ks, -2, {-1.0 / 8, 1.0 / 2, 3.0 / 4, 1.0 / 2, -1.0 / 8});
    }
    SUBCASE("4.2") {
        auto b = build_filter_bank({4, 2});
        check_filter(b.ha, -4, {1.0 / 64, 0, -1.0 / 8, 1.0 / 4, 23.0 / 32, 1.0 / 4, -1.0 / 8, 0, 1.0 / 64});
        check_filter(b.js, -1, {-1.0 / 4, 1.0, -1.0 / 4});
        check_filter(b.ks, -4, {1.0 / 64, -1.0 / 16, -1.0 / 8, 9.0 / 16, 23.0 / 32, 9.0 / 16,
                                -1.0 / 8, -1.0 / 16, 1.0 / 64});
    }
    SUBCASE("6.2") {
        auto b = build_filter_bank({6, 2});
        check_filter(b.ha, -6, {-3.0 / 1024, 0, 11.0 / 512, 0, -125.0 / 1024, 1.0 / 4, 181.0 / 256,
                                1.0 / 4, -125.0 / 1024, 0, 11.0 / 512, 0, -3.0 / 1024});
        check_filter(b.ks, -6, {-3.0 / 1024, 3.0 / 256, 11.0 / 512, -25.0 / 256, -125.0 / 1024,
                                75.0 / 128, 181.0 / 256, 75.0 / 128, -125.0 / 1024, -25.0 / 256,
                                11.0 / 512, 3.0 / 256, -3.0 / 1024});
    }
    CHECK_THROWS_AS(build_filter_bank({3, 0}), UnsupportedWavelet);
    CHECK_THROWS_AS(build_filter_bank({4, 4}), UnsupportedWavelet);
}

TEST_CASE("filter bank invariants") {
    for (const auto& spec : kFamilies) {
        CAPTURE(spec.n);
        CAPTURE(spec.ntilde);
        auto b = build_filter_bank(spec);

        // Ga center tap is 1
        CHECK(b.ga.at(0) == 1.0);

        // DC gains: Ha sums to 1, Ga annihilates constants
        real sha = 0, sga = 0;
        for (real w : b.ha.w) sha += w;
        for (real w : b.ga.w) sga += w;
        CHECK(sha == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(sga) < 1e-15);

        // synthesis of (constant scalings, zero details) reproduces the constant
        real even_out = 0, odd_out = 0;
        for (int o = b.js.lo; o <= b.js.hi(); o += 1)
            if ((o & 1) == 0) even_out += b.js.at(o);
        for (int o = b.ks.lo; o <= b.ks.hi(); o += 1)
            if (o & 1) odd_out += b.ks.at(o);
        CHECK(even_out == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(odd_out == doctest::Approx(1.0).epsilon(1e-15));

        // S = -S̃/2 entrywise for lifted families, S empty otherwise
        if (spec.lifted()) {
            auto st = dual_lift_coefficients(spec.ntilde);
            REQUIRE(b.s.w.size() == st.size());
            for (size_t i = 0; i < st.size(); ++i) CHECK(b.s.w[i] == -0.5 * st[i]);
        } else {
            CHECK(b.s.w.empty());
        }

        // filter supports never exceed the halo width implied by the table
        const int ng = b.halo_width(0);
        for (const Filter* f : {&b.ha, &b.ga, &b.js, &b.ks}) CHECK(f->reach() <= ng);
    }
}

TEST_CASE("ghost requirement table") {
    auto r22 = ghost_requirements({2, 2});
    CHECK(r22.coarsen_front == 2);
    CHECK(r22.coarsen_back == 1);
    CHECK(r22.refine_front == 0);
    CHECK(r22.refine_back == 1);

    auto r40 = ghost_requirements({4, 0});
    CHECK(r40.refine_front == 1);
    CHECK(r40.refine_back == 2);
    CHECK(r40.update_front == 4);
    CHECK(r40.update_back == 5);

    auto r62 = ghost_requirements({6, 2});
    CHECK(r62.coarse_ext_front == 5);
    CHECK(r62.coarse_ext_back == 6);
    CHECK(r62.update_front == 10);
    CHECK(r62.update_back == 11);

    for (const auto& spec : kFamilies) {
        auto r = ghost_requirements(spec);
        // computing the coarse-extension details needs at least that reach
        CHECK(r.update_back >= r.coarse_ext_back);
        CHECK(r.update_front >= r.coarse_ext_front);
    }
}
