#include <doctest.h>

#include <cmath>
#include <random>

#include "heunpot/coordinate_map.hpp"
#include "heunpot/oracle.hpp"

using namespace heunpot;

namespace {

// Feasible representatives, one per case.
const HeunSixParams kRepresentatives[] = {
    {0.5, 0, -1, 2, 1, 1},                        // DeltaNeg (Delta = 1-8 < 0)
    {9, 22.5, 15.75, 1, 2, 1},                    // DeltaZero b1 > 0
    {1.2, -0.7, 2.1, 1.3, -2.1633307652783934, 0.9},  // DeltaZero b1 < 0 (b1 = -2 sqrt(b0 b2))
    {0, 0, 0, 0, 0, 1},                           // DeltaZero b0 = b1 = 0
    {1, 1, 1, 1, 3, 1},                           // DeltaPos b2 > 0 (Delta = 5)
    {1, 0, 0, 1, 0, -1},                          // DeltaPos b2 < 0 (Delta = 4)
    {0, 1, 0, 1, 1, 0},                           // Linear, b0 != 0
    {0, 0, 0, 0, 1, 0},                           // Linear, b0 = 0
    {0, 0, 1, 4, 0, 0},                           // Constant
};

std::vector<double> sample_r(const CoordinateMap& map, int n) {
    const Interval dom = map.r_domain();
    const double lo = std::isfinite(dom.lo) ? dom.lo : -10.0;
    const double hi = std::isfinite(dom.hi) ? dom.hi : (std::fmax(lo, 0.0) + 20.0);
    std::vector<double> rs;
    for (int i = 1; i <= n; ++i) {
        const double r = lo + (hi - lo) * i / (n + 1.0);
        if (dom.contains(r)) rs.push_back(r);
    }
    return rs;
}

}  // namespace

TEST_CASE("classification follows the sign pattern") {
    CHECK(classify({0, 0, 0, 1, 2, 1}) == CaseTag::DeltaZeroB1Pos);   // Delta = 0
    CHECK(classify({0, 0, 0, 0, 0, 1}) == CaseTag::DeltaZeroB0B1Zero);
    CHECK(classify({0, 0, 0, 1, 0, -1}) == CaseTag::DeltaPosB2Neg);   // Delta = 4 > 0
    CHECK(classify({0, 0, 0, 2, 1, 1}) == CaseTag::DeltaNegB2Pos);
    CHECK(classify({0, 0, 0, 1, 3, 1}) == CaseTag::DeltaPosB2Pos);
    CHECK(classify({0, 0, 0, 1, 1, 0}) == CaseTag::LinearB2Zero);
    CHECK(classify({0, 0, 0, 0, 1, 0}) == CaseTag::LinearB0B2Zero);
    CHECK(classify({0, 0, 0, 4, 0, 0}) == CaseTag::ConstantB1B2Zero);

    // snap tolerance: b1 = 2 sqrt(2) with b0 = 2, b2 = 1 is Delta = 0 despite rounding
    CHECK(classify({0, 0, 0, 2, 2.0 * std::sqrt(2.0), 1}) == CaseTag::DeltaZeroB1Pos);

    CHECK_THROWS_AS((void)classify({0, 0, 0, -1, 0, -1}), Error);  // Delta < 0, b2 < 0
    CHECK_THROWS_AS((void)classify({0, 0, 0, -1, 0, 0}), Error);   // constant, b0 < 0
    CHECK_THROWS_AS((void)classify({0, 0, 0, 0, 0, 0}), Error);    // invalid
}

TEST_CASE("forward map closed-form anchors") {
    // Delta = 0, b1 > 0: r = rho^2/2 + rho, so r(0) = 0
    auto m = CoordinateMap::create({0, 0, 0, 1, 2, 1});
    CHECK(m.forward(0.0) == doctest::Approx(0.0));
    CHECK(m.forward(1.0) == doctest::Approx(1.5));

    // b2 = 0, b0 = 0, b1 = 1: r(1) = 2/3
    auto lin = CoordinateMap::create({0, 0, 0, 0, 1, 0});
    CHECK(lin.forward(1.0) == doctest::Approx(2.0 / 3.0));

    // Delta = -4 (b0 = 1, b1 = 0, b2 = 1): anchor at the vertex rho = 0
    auto neg = CoordinateMap::create({0, 0, 0, 1, 0, 1});
    CHECK(neg.anchor_rho() == doctest::Approx(0.0));
    CHECK(neg.forward(0.0) == doctest::Approx(0.0));
}

TEST_CASE("inverse map closed forms") {
    auto m = CoordinateMap::create({0, 0, 0, 1, 2, 1});
    CHECK(m.inverse(1.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.inverse(1e-14) == doctest::Approx(1e-14).epsilon(1e-3));  // rho ~ r near 0

    auto pure = CoordinateMap::create({0, 0, 0, 0, 0, 1});
    CHECK(pure.inverse(2.0) == doctest::Approx(2.0));  // sqrt(2*2/1)

    auto lin = CoordinateMap::create({0, 0, 0, 0, 1, 0});
    CHECK(lin.inverse(2.0 / 3.0) == doctest::Approx(1.0));

    // b1 < 0 branch: rho(0+) -> 2 sqrt(b0/b2)
    auto m2 = CoordinateMap::create({0, 0, 0, 1, -2, 1});
    CHECK(m2.inverse(1e-12) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("round trip across every feasible case") {
    for (const auto& p : kRepresentatives) {
        const auto map = CoordinateMap::create(p);
        for (double r : sample_r(map, 100)) {
            const double rho = map.inverse(r);
            CHECK(map.rho_domain().contains(rho));
            CHECK(std::fabs(map.forward(rho) - r) <= 1e-10 * (1.0 + std::fabs(r)));
        }
    }
}

TEST_CASE("inverse map is strictly increasing") {
    for (const auto& p : kRepresentatives) {
        const auto map = CoordinateMap::create(p);
        double prev = -std::numeric_limits<double>::infinity();
        for (double r : sample_r(map, 60)) {
            const double rho = map.inverse(r);
            CHECK(rho > prev);
            prev = rho;
        }
    }
}

TEST_CASE("coordinate ODE consistency: drho/dr sqrt(I1) = 1") {
    for (const auto& p : kRepresentatives) {
        const auto map = CoordinateMap::create(p);
        for (double r : sample_r(map, 25)) {
            const double h = 1e-4 * (1.0 + std::fabs(r));
            if (!map.r_domain().contains(r - h) || !map.r_domain().contains(r + h)) continue;
            const double drho = (map.inverse(r + h) - map.inverse(r - h)) / (2.0 * h);
            const double rho = map.inverse(r);
            CHECK(std::fabs(drho * std::sqrt(p.i1(rho)) - 1.0) <= 1e-6);
        }
    }
}

TEST_CASE("forward map agrees with direct integration of the coordinate ODE") {
    // independent oracle: integrate drho/dr = 1/sqrt(I1) from an anchored point
    for (const HeunSixParams& p : {HeunSixParams{0.5, 0, -1, 2, 1, 1},
                                   HeunSixParams{1, 1, 1, 1, 3, 1},
                                   HeunSixParams{1, 0, 0, 1, 0, -1}}) {
        const auto map = CoordinateMap::create(p);
        const auto rs = sample_r(map, 12);
        const double r0 = rs.front();
        const double rho0 = map.inverse(r0);
        std::vector<double> targets(rs.begin() + 1, rs.end());
        auto traj = integrate_ode(
            [&p](double, const std::vector<double>& y, std::vector<double>& dy) {
                dy[0] = 1.0 / std::sqrt(p.i1(y[0]));
            },
            {rho0}, r0, targets, 1e-12);
        for (size_t i = 0; i < targets.size(); ++i)
            CHECK(map.inverse(targets[i]) == doctest::Approx(traj.y[i][0]).epsilon(1e-8));
    }
}

TEST_CASE("asymptotic approximant approaches the inverse map") {
    // pure quadratic I1: exact
    auto pure = CoordinateMap::create({0, 0, 0, 0, 0, 1});
    CHECK(pure.inverse_asymptotic(50.0) == doctest::Approx(10.0));
    CHECK(std::fabs(pure.inverse(50.0) - pure.inverse_asymptotic(50.0)) /
              pure.inverse(50.0) <
          0.05);

    // b2 = 0, b0 = 0: exact for all r
    auto lin = CoordinateMap::create({0, 0, 0, 0, 1, 0});
    CHECK(lin.inverse_asymptotic(7.0) == doctest::Approx(lin.inverse(7.0)).epsilon(1e-12));

    // general b2 > 0 and the finite-image b2 < 0 case: ratio -> 1 toward the far edge
    auto neg = CoordinateMap::create({1, 0, 0, 1, 0, -1});
    const double top = neg.r_domain().hi;
    const double r_probe = top * 0.995;
    CHECK(neg.inverse_asymptotic(r_probe) / neg.inverse(r_probe) ==
          doctest::Approx(1.0).epsilon(0.01));

    auto dn = CoordinateMap::create({0.5, 0, -1, 2, 1, 1});
    CHECK(dn.inverse_asymptotic(4000.0) / dn.inverse(4000.0) ==
          doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("randomized sign-pattern sweep: classify-construct is total") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> mag(0.2, 3.0);
    std::uniform_int_distribution<int> sign(0, 2);  // -, 0, +
    int feasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        HeunSixParams p{};
        auto draw = [&]() {
            const int s = sign(rng);
            return s == 0 ? -mag(rng) : s == 1 ? 0.0 : mag(rng);
        };
        p.b0 = draw();
        p.b1 = draw();
        p.b2 = draw();
        if (!p.valid()) continue;
        try {
            const auto map = CoordinateMap::create(p);
            ++feasible;
            // I1 > 0 on 1000 interior samples of the rho-domain
            const Interval d = map.rho_domain();
            const double lo = std::isfinite(d.lo) ? d.lo : -8.0;
            const double hi = std::isfinite(d.hi) ? d.hi : 8.0;
            for (int i = 1; i < 1000; ++i) {
                const double rho = lo + (hi - lo) * i / 1000.0;
                if (d.contains(rho)) CHECK(p.i1(rho) > 0.0);
            }
        } catch (const Error& e) {
            CHECK((e.code() == Errc::InfeasibleCase || e.code() == Errc::InvalidParams));
        }
    }
    CHECK(feasible > 100);
}

TEST_CASE("domain errors") {
    auto m = CoordinateMap::create({0, 0, 0, 0, 0, 1});  // r-domain (0, inf)
    CHECK_THROWS_AS((void)m.inverse(-1.0), Error);
    CHECK_THROWS_AS((void)m.forward(-0.5), Error);

    // Linear b1 < 0: feasible, but cannot cover the positive axis
    auto down = CoordinateMap::create({0, 0, 0, 1, -1, 0});
    CHECK_FALSE(down.covers_positive_axis());
    for (double r : sample_r(down, 30)) {
        const double rho = down.inverse(r);
        CHECK(std::fabs(down.forward(rho) - r) <= 1e-10 * (1.0 + std::fabs(r)));
    }
}
