#include <doctest.h>

#include <cmath>
#include <random>

#include "heunpot/oracle.hpp"
#include "heunpot/potential.hpp"

using namespace heunpot;

TEST_CASE("clean V1 member: -3/(4(1+2r)^2) - 9 sqrt(1+2r) + 9r/2") {
    const HeunSixParams p{9, 22.5, 15.75, 1, 2, 1};
    const auto map = CoordinateMap::create(p);
    const auto fam = family_coefficients(p, map.tag());
    CHECK(fam.kind == FamilyKind::V1);
    CHECK(fam.coeff("c0") == doctest::Approx(0.0));
    CHECK(fam.coeff("c1") == doctest::Approx(0.0));
    CHECK(fam.coeff("c2") == doctest::Approx(0.0));
    CHECK(fam.coeff("c3") == doctest::Approx(-0.75));
    CHECK(fam.coeff("c4") == doctest::Approx(-9.0));
    CHECK(fam.coeff("c5") == doctest::Approx(4.5));
    CHECK(v_eff(p, map, 1e-13) == doctest::Approx(-39.0 / 4.0).epsilon(1e-9));
}

TEST_CASE("pure V3 member: -3/(16 r^2) + 9r/2") {
    const HeunSixParams p{0, 0, 0, 0, 0, 1};
    const auto map = CoordinateMap::create(p);
    const auto fam = family_coefficients(p, map.tag());
    CHECK(fam.kind == FamilyKind::V3);
    CHECK(fam.coeff("e0") == doctest::Approx(0.0));
    CHECK(fam.coeff("e3") == doctest::Approx(-3.0 / 16.0));
    CHECK(fam.coeff("e4") == doctest::Approx(4.5));
    CHECK(v_eff(p, map, 1.0) == doctest::Approx(-3.0 / 16.0 + 4.5));
}

TEST_CASE("V5 coefficient list") {
    const HeunSixParams p{0, 0, 0, 0, 1, 0};
    const auto fam = family_coefficients(p, CaseTag::LinearB0B2Zero);
    CHECK(fam.kind == FamilyKind::V5);
    CHECK(fam.coeff("u0") == doctest::Approx(0.0));
    CHECK(fam.coeff("u2") == doctest::Approx(-5.0 / 36.0));
    CHECK(fam.coeff("u4") == doctest::Approx(81.0 / 16.0));
}

TEST_CASE("V4 zeroing choice kills v0, v1, v3") {
    const double b0 = 0.7, b1 = 1.3;
    const double q = b0 / b1;
    const HeunSixParams p{6.75 * q * q * q * q, 18.0 * q * q * q, 13.5 * q * q, b0, b1, 0};
    const auto fam = family_coefficients(p, CaseTag::LinearB2Zero);
    CHECK(fam.coeff("v0") == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::fabs(fam.coeff("v1")) < 1e-12);
    CHECK(std::fabs(fam.coeff("v3")) < 1e-12);
    CHECK(fam.coeff("v5") == doctest::Approx(81.0 / (16.0 * b1 * b1)));
    // with b0 = 0 the zeroing degenerates to a_i = 0 and v4 = 0 as well
    const auto f0 = family_coefficients({0, 0, 0, 0, 1, 0}, CaseTag::LinearB0B2Zero);
    CHECK(f0.coeff("u1") == doctest::Approx(0.0));
}

TEST_CASE("family closed forms specialize the general expression") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.5, 2.5), pos(0.4, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        HeunSixParams p{u(rng), u(rng), u(rng), 0, 0, 0};
        const int which = trial % 4;
        if (which == 0) {  // V1
            p.b0 = pos(rng);
            p.b2 = pos(rng);
            p.b1 = 2.0 * std::sqrt(p.b0 * p.b2);
        } else if (which == 1) {  // V2 variant
            p.b0 = pos(rng);
            p.b2 = pos(rng);
            p.b1 = -2.0 * std::sqrt(p.b0 * p.b2);
        } else if (which == 2) {  // V3
            p.b2 = pos(rng);
        } else {  // V4 (or V5 when b0 = 0)
            p.b1 = pos(rng);
            if (trial % 8 == 3) p.b0 = pos(rng);
        }
        const auto map = CoordinateMap::create(p);
        const auto fam = family_coefficients(p, map.tag());
        REQUIRE(fam.kind != FamilyKind::General);
        for (double r : {0.3, 0.9, 1.7, 3.2}) {
            const double general = v_eff(p, map, r);
            CHECK(fam.eval(r) == doctest::Approx(general).epsilon(1e-10));
        }
    }
}

TEST_CASE("Bose route and explicit route agree: Eq-6 vs Eq-8 form") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        HeunSixParams p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        if (!p.valid()) continue;
        for (int i = 0; i < 20; ++i) {
            const double rho = u(rng);
            if (std::fabs(p.i1(rho)) < 0.05) continue;
            const double via_schwarzian = -p.i0(rho) / p.i1(rho) - 0.5 * schwarzian_via_i1(p, rho);
            const double direct = v_eff_at_rho(p, rho);
            CHECK(via_schwarzian == doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("Schwarzian through I1 matches the finite-difference definition") {
    // constant I1: S = 0
    CHECK(schwarzian_via_i1({0, 0, 0, 1, 0, 0}, 0.7) == doctest::Approx(0.0));

    // linear I1 at rho = 1: (5 b1^2)/(8 I1^3) = 5/8
    const HeunSixParams lin{0, 0, 0, 0, 1, 0};
    CHECK(schwarzian_via_i1(lin, 1.0) == doctest::Approx(5.0 / 8.0));
    const auto lmap = CoordinateMap::create(lin);
    const double r1 = lmap.forward(1.0);
    CHECK(fd_schwarzian(lmap, r1) == doctest::Approx(5.0 / 8.0).epsilon(1e-5));

    for (const HeunSixParams& p : {HeunSixParams{9, 22.5, 15.75, 1, 2, 1},
                                   HeunSixParams{0.5, 0, -1, 2, 1, 1},
                                   HeunSixParams{0, 0, 0, 0, 0, 1}}) {
        const auto map = CoordinateMap::create(p);
        for (double r : {0.8, 1.6, 2.9}) {
            const double rho = map.inverse(r);
            CHECK(std::fabs(fd_schwarzian(map, r) - schwarzian_via_i1(p, rho)) <= 1e-5);
        }
    }
}

TEST_CASE("singular point detection") {
    const HeunSixParams p{1, 1, 1, 0, 1, 0};  // I1 = rho
    CHECK_THROWS_AS((void)v_eff_at_rho(p, 0.0), Error);
    CHECK_THROWS_AS((void)schwarzian_via_i1(p, 0.0), Error);
}

TEST_CASE("critical points: Descartes sign analysis on the named families") {
    // V3 with a0 > 0, a1 > 0: no sign change, no extrema
    {
        const HeunSixParams p{1.5, 2.0, 0.3, 0, 0, 1};
        const auto fam = family_coefficients(p, CaseTag::DeltaZeroB0B1Zero);
        const auto rep = critical_points(fam);
        CHECK(rep.sign_changes == 0);
        CHECK(rep.points.empty());
    }
    // V5 with a2 < 0 and a0 > 0: cubic with no positive root
    {
        const HeunSixParams p{1.0, 0.5, -2.0, 0, 1, 0};
        const auto fam = family_coefficients(p, CaseTag::LinearB0B2Zero);
        const auto rep = critical_points(fam);
        CHECK(rep.sign_changes == 0);
        CHECK(rep.points.empty());
    }
    // V3 with a0 < 0: two sign changes, so two or zero positive roots
    {
        const HeunSixParams p{-2.0, 1.0, 0.0, 0, 0, 1};
        const auto fam = family_coefficients(p, CaseTag::DeltaZeroB0B1Zero);
        const auto rep = critical_points(fam);
        CHECK(rep.sign_changes == 2);
        CHECK((rep.points.size() == 2 || rep.points.empty()));
    }
}

TEST_CASE("critical points found numerically sit at flat slopes of v_eff") {
    const HeunSixParams p{-2.0, 1.0, 0.0, 0, 0, 1};  // V3 member with a dip
    const auto map = CoordinateMap::create(p);
    const auto fam = family_coefficients(p, map.tag());
    const auto rep = critical_points(fam);
    for (const auto& pt : rep.points) {
        if (pt.r <= 0.0) continue;
        const double h = 1e-6 * (1.0 + pt.r);
        const double slope = (fam.eval(pt.r + h) - fam.eval(pt.r - h)) / (2.0 * h);
        const double scale = std::fabs(fam.eval(pt.r)) + 1.0;
        CHECK(std::fabs(slope) <= 1e-3 * scale / h * 1e-6);
    }
}

TEST_CASE("Descartes soundness over random coefficient draws") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-3.0, 3.0), pos(0.3, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        HeunSixParams p{u(rng), u(rng), u(rng), 0, 0, 0};
        const int which = trial % 4;
        if (which == 0) {
            p.b0 = pos(rng);
            p.b2 = pos(rng);
            p.b1 = 2.0 * std::sqrt(p.b0 * p.b2);
        } else if (which == 1) {
            p.b2 = pos(rng);
        } else if (which == 2) {
            p.b1 = pos(rng);
            p.b0 = pos(rng);
        } else {
            p.b1 = pos(rng);
        }
        const auto tag = classify(p);
        const auto fam = family_coefficients(p, tag);
        if (fam.kind == FamilyKind::V2Variant || fam.kind == FamilyKind::General) continue;
        const auto rep = critical_points(fam);
        const int found = static_cast<int>(rep.points.size());
        bool in_set = false;
        for (int k : rep.possible_counts) in_set = in_set || k == found;
        CHECK(in_set);
    }
}

TEST_CASE("asymptotic growth of the named families") {
    // V1 and V3 grow linearly with slope c5 = e4; V4/V5 quadratically with v5/u4
    const HeunSixParams v1p{9, 22.5, 15.75, 1, 2, 1};
    const auto v1m = CoordinateMap::create(v1p);
    const double c5 = family_coefficients(v1p, v1m.tag()).coeff("c5");
    const double big = 1e4;
    CHECK(v_eff(v1p, v1m, big) / (c5 * big) == doctest::Approx(1.0).epsilon(0.01));

    const HeunSixParams v5p{0, 0, 0, 0, 1, 0};
    const auto v5m = CoordinateMap::create(v5p);
    const double u4 = family_coefficients(v5p, v5m.tag()).coeff("u4");
    CHECK(v_eff(v5p, v5m, 300.0) / (u4 * 300.0 * 300.0) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("unsupported families are rejected by the critical point analysis") {
    const HeunSixParams p{1.2, -0.7, 2.1, 1.3, -2.1633307652783934, 0.9};
    const auto fam = family_coefficients(p, classify(p));
    CHECK(fam.kind == FamilyKind::V2Variant);
    CHECK_THROWS_AS((void)critical_points(fam), Error);

    const auto gen = family_coefficients({1, 1, 1, 2, 1, 1}, classify({1, 1, 1, 2, 1, 1}));
    CHECK(gen.kind == FamilyKind::General);
    CHECK_THROWS_AS((void)gen.eval(1.0), Error);
}

TEST_CASE("V2 variant closed form matches the general expression") {
    const HeunSixParams p{1.2, -0.7, 2.1, 1.3, -2.1633307652783934, 0.9};
    const auto map = CoordinateMap::create(p);
    const auto fam = family_coefficients(p, map.tag());
    for (double r : {0.3, 1.0, 3.0})
        CHECK(fam.eval(r) == doctest::Approx(v_eff(p, map, r)).epsilon(1e-10));
}
