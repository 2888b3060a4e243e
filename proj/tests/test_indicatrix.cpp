#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "oracle_utils.hpp"
#include "suitalab/domain.hpp"
#include "suitalab/errors.hpp"
#include "suitalab/indicatrix.hpp"

using namespace suitalab;
using testoracle::TestRng;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("indicatrix");

TEST_CASE("bounding radius examples") {
    // ball at 0: tau is the norm, so the sampled minimum is exactly 1
    CHECK(bounding_radius(MetricOracle::ball_at(CVec::zero(2))) == doctest::Approx(1.25));
    // siegel at p*: smallest directional value 1/2 along (0, 1)
    CHECK(bounding_radius(MetricOracle::siegel_at(CVec{0.0, -1.0}), 4096) ==
          doctest::Approx(2.5).epsilon(0.02));
    // ellipsoid with semi-axes (2, 1)
    CHECK(bounding_radius(MetricOracle::ellipsoid(Ellipsoid2C{4.0, 1.0},
                                                  MetricOracle::Provenance::exact),
                          4096) == doctest::Approx(2.5).epsilon(0.02));
    // vanishing metric: unbounded indicatrix
    MetricOracle degenerate = MetricOracle::custom(CVec::zero(2), MetricOracle::Kind::kobayashi,
                                                   MetricOracle::Provenance::exact,
                                                   [](const CVec&) { return 0.0; });
    CHECK_THROWS_AS(bounding_radius(degenerate), capability_error);
}

TEST_CASE("mc volume of the ball indicatrix") {
    VolumeEstimate est = mc_volume(MetricOracle::ball_at(CVec::zero(2)), 1000000, 42);
    double exact = kPi * kPi / 2.0;
    CHECK(std::abs(est.value - exact) < 3.0 * est.std_error);
    CHECK(est.value <= 0.5 * kPi * kPi * std::pow(est.bounding_radius, 4.0) + 1e-12);
    CHECK(est.samples == 1000000);
}

TEST_CASE("mc volume of the wu ellipsoid at (mu, p) = (0.25, 0.5)") {
    Ellipsoid2C wu = wu_outer_ellipsoid(0.25, 0.5);
    VolumeEstimate est = mc_volume(
        MetricOracle::ellipsoid(wu, MetricOracle::Provenance::outer_bound), 1000000, 7);
    double exact = 0.5 * kPi * kPi * 0.75 * 0.75 * (1.0 - std::pow(0.5, 0.5));
    CHECK(std::abs(est.value - exact) < 3.0 * est.std_error);
}

TEST_CASE("mc volume of the siegel indicatrix at p*") {
    VolumeEstimate est = mc_volume(MetricOracle::siegel_at(CVec{0.0, -1.0}), 1000000, 11);
    CHECK(std::abs(est.value - 4.0 * kPi * kPi) < 3.0 * est.std_error);
}

TEST_CASE("mc volume of random ellipsoids within three sigma") {
    TestRng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        double a = rng.uniform(0.1, 5.0);
        double b = rng.uniform(0.1, 5.0);
        VolumeEstimate est = mc_volume(
            MetricOracle::ellipsoid(Ellipsoid2C{a, b}, MetricOracle::Provenance::exact), 100000,
            1000 + trial);
        CHECK(std::abs(est.value - 0.5 * kPi * kPi * a * b) < 3.0 * est.std_error);
    }
}

TEST_CASE("determinism: identical seeds give bit-identical estimates") {
    MetricOracle oracle = MetricOracle::siegel_at(CVec{0.0, -1.0});
    VolumeEstimate a = mc_volume(oracle, 300000, 99);
    VolumeEstimate b = mc_volume(oracle, 300000, 99);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    VolumeEstimate c = mc_volume(oracle, 300000, 100);
    CHECK(a.value != c.value);
}

TEST_CASE("determinism across worker counts") {
    MetricOracle oracle = MetricOracle::ball_at(CVec{0.0, 0.5});
    VolumeEstimate multi = mc_volume(oracle, 400000, 5);
    setenv("SUITA_LAB_THREADS", "1", 1);
    VolumeEstimate serial = mc_volume(oracle, 400000, 5);
    unsetenv("SUITA_LAB_THREADS");
    CHECK(multi.value == serial.value);
    CHECK(multi.std_error == serial.std_error);
}

TEST_CASE("volume monotonicity under pointwise metric ordering") {
    MetricOracle big = MetricOracle::siegel_at(CVec{0.0, -1.0});
    MetricOracle small = MetricOracle::scaled(big, 0.9);  // smaller metric, larger indicatrix
    // sanity: ordering holds on samples
    TestRng rng(52);
    for (int i = 0; i < 100; ++i) {
        CVec v = rng.unit_vector(2);
        CHECK(big(v) >= small(v));
    }
    VolumeEstimate vb = mc_volume(big, 400000, 3);
    VolumeEstimate vs = mc_volume(small, 400000, 3);
    CHECK(vb.value <= vs.value + 3.0 * (vb.std_error + vs.std_error));
}

TEST_CASE("radial distance") {
    MetricOracle ball = MetricOracle::ball_at(CVec::zero(2));
    CHECK(radial_distance(ball, ball) == doctest::Approx(0.0));

    double eps = 0.125;
    MetricOracle inflated = MetricOracle::scaled(ball, 1.0 + eps);
    CHECK(radial_distance(ball, inflated) == doctest::Approx(eps / (1.0 + eps)).epsilon(1e-12));

    CVec p_star{0.0, -1.0};
    MetricOracle siegel = MetricOracle::siegel_at(p_star);
    MetricOracle pulled = pullback_metric(MetricOracle::ball_at(cayley(p_star)),
                                          HoloMap::cayley(2), p_star);
    CHECK(radial_distance(siegel, pulled) < 1e-10);
}

TEST_CASE("sandwich check") {
    Ellipsoid2C unit{1.0, 1.0};
    VolumeEstimate exact{};
    exact.value = unit.volume();
    exact.std_error = 0.0;
    exact.samples = 1;
    CHECK(sandwich_check(unit, exact, unit));

    // malformed: inner strictly bigger than outer
    Ellipsoid2C big{2.0, 2.0};
    VolumeEstimate loose = exact;
    loose.std_error = 100.0;
    CHECK_FALSE(sandwich_check(big, loose, unit));

    // synthetic interpolating oracle between the two bounds at mu=0.25, p=0.5
    double mu = 0.25, p = 0.5;
    MetricOracle outer = MetricOracle::ellipsoid(wu_outer_ellipsoid(mu, p),
                                                 MetricOracle::Provenance::outer_bound);
    MetricOracle inner = MetricOracle::ellipsoid(inscribed_ellipsoid(mu, p),
                                                 MetricOracle::Provenance::inner_bound);
    MetricOracle mid = MetricOracle::custom(
        CVec::zero(2), MetricOracle::Kind::kobayashi, MetricOracle::Provenance::exact,
        [outer, inner](const CVec& v) { return std::sqrt(outer(v) * inner(v)); });
    VolumeEstimate est = mc_volume(mid, 400000, 17);
    CHECK(sandwich_check(inscribed_ellipsoid(mu, p), est, wu_outer_ellipsoid(mu, p)));
}

TEST_CASE("indicatrix boundaries carry negligible sample mass") {
    std::vector<MetricOracle> oracles = {
        MetricOracle::ball_at(CVec{0.0, 0.5}),
        MetricOracle::siegel_at(CVec{0.0, -1.0}),
        MetricOracle::gauge(DomainSpec::egg(0.25)),
    };
    TestRng rng(53);
    for (const auto& oracle : oracles) {
        int near_count = 0;
        const int N = 100000;
        double R = bounding_radius(oracle);
        for (int i = 0; i < N; ++i) {
            CVec v = rng.unit_vector(2);
            double r = R * std::pow(rng.uniform(), 0.25);
            double t = oracle(cdouble{r, 0.0} * v);
            if (std::abs(t - 1.0) < 1e-6) ++near_count;
        }
        CHECK(static_cast<double>(near_count) / N < 1e-3);
    }
}

TEST_CASE("volume estimate json round trip") {
    VolumeEstimate e{};
    e.value = 1.5;
    e.std_error = 0.01;
    e.samples = 1000;
    e.seed = 77;
    e.bounding_radius = 2.0;
    VolumeEstimate back = VolumeEstimate::from_json(e.to_json());
    CHECK(back.value == e.value);
    CHECK(back.std_error == e.std_error);
    CHECK(back.samples == e.samples);
    CHECK(back.seed == e.seed);
    CHECK(back.bounding_radius == e.bounding_radius);
}

TEST_CASE("rejects nonpositive sample counts") {
    CHECK_THROWS_AS(mc_volume(MetricOracle::ball_at(CVec::zero(2)), 0, 1),
                    std::invalid_argument);
}

TEST_SUITE_END();
