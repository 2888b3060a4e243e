#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_utils.hpp"
#include "suitalab/errors.hpp"
#include "suitalab/suita.hpp"

using namespace suitalab;
using testoracle::TestRng;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("suita");

TEST_CASE("F = 1 on the ball, exactly") {
    SuitaResult r = suita_invariant(DomainSpec::ball(2), CVec::zero(2), MetricTag::kobayashi,
                                    Method::exact());
    CHECK(r.F == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.F_error == 0.0);
    // anywhere, by invariance of the closed forms
    for (double p : {0.3, 0.6, 0.9}) {
        SuitaResult rp = suita_invariant(DomainSpec::ball(2), CVec{0.0, p},
                                         MetricTag::kobayashi, Method::exact());
        CHECK(rp.F == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("F = 1 at the egg origin") {
    for (double mu : {0.2, 0.25, 0.4, 1.0, 2.0}) {
        SuitaResult r = suita_invariant(DomainSpec::egg(mu), CVec::zero(2),
                                        MetricTag::kobayashi, Method::exact());
        CHECK(r.F == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(r.kernel == doctest::Approx(1.0 / DomainSpec::egg(mu).volume()).epsilon(1e-13));
    }
}

TEST_CASE("F = 1 at the siegel anchor point") {
    SuitaResult r = suita_invariant(DomainSpec::siegel(2), CVec{0.0, -1.0},
                                    MetricTag::kobayashi, Method::exact());
    CHECK(r.kernel == doctest::Approx(1.0 / (4.0 * kPi * kPi)).epsilon(1e-13));
    CHECK(*r.exact_volume == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-12));
    CHECK(r.F == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("monte carlo paths agree with the exact values") {
    SuitaResult ball = suita_invariant(DomainSpec::ball(2), CVec::zero(2), MetricTag::kobayashi,
                                       Method::mc(400000, 2));
    CHECK(std::abs(ball.F - 1.0) < 3.0 * ball.F_error);
    SuitaResult egg = suita_invariant(DomainSpec::egg(0.25), CVec::zero(2), MetricTag::kobayashi,
                                      Method::mc(400000, 3));
    CHECK(std::abs(egg.F - 1.0) < 3.0 * egg.F_error);
    SuitaResult siegel = suita_invariant(DomainSpec::siegel(2), CVec{0.0, -1.0},
                                         MetricTag::caratheodory, Method::mc(400000, 4));
    CHECK(std::abs(siegel.F - 1.0) < 3.0 * siegel.F_error);
}

TEST_CASE("biholomorphic invariance: siegel at p* against ball at 0") {
    SuitaResult siegel = suita_invariant(DomainSpec::siegel(2), CVec{0.0, -1.0},
                                         MetricTag::kobayashi, Method::mc(400000, 5));
    SuitaResult ball = suita_invariant(DomainSpec::ball(2), CVec::zero(2), MetricTag::kobayashi,
                                       Method::exact());
    CHECK(std::abs(siegel.F - ball.F) < 3.0 * siegel.F_error);
}

TEST_CASE("capability errors carry the supported combinations") {
    CHECK_THROWS_AS(suita_invariant(DomainSpec::egg(0.25), CVec{0.0, 0.5},
                                    MetricTag::kobayashi, Method::exact()),
                    capability_error);
    CHECK_THROWS_AS(suita_invariant(DomainSpec::egg(0.25), CVec{0.3, 0.2},
                                    MetricTag::kobayashi, Method::exact()),
                    capability_error);
    CHECK_THROWS_AS(suita_invariant(DomainSpec::ball(2), CVec{0.0, 2.0}, MetricTag::kobayashi,
                                    Method::exact()),
                    std::domain_error);
}

TEST_CASE("egg bounds: factorization identities") {
    // upper = kernel x wu volume, lower = kernel x inscribed volume, exactly
    for (double mu : {0.1, 0.25, 0.4, 0.49}) {
        for (double p : {0.05, 0.3, 0.5, 0.7, 0.95}) {
            BoundPair b = egg_f_bounds(mu, p);
            double k = kernel_egg_axis(mu, p);
            CHECK(b.upper ==
                  doctest::Approx(k * wu_outer_ellipsoid(mu, p).volume()).epsilon(1e-12));
            CHECK(b.lower ==
                  doctest::Approx(k * inscribed_ellipsoid(mu, p).volume()).epsilon(1e-12));
        }
    }
}

TEST_CASE("egg bounds: ordering on the grid") {
    for (double mu : {0.1, 0.2, 0.3, 0.4, 0.49}) {
        for (double p = 0.05; p <= 0.951; p += 0.05) {
            BoundPair b = egg_f_bounds(mu, p);
            CHECK(b.lower <= b.upper + 1e-14);
        }
    }
}

TEST_CASE("egg bounds: behaviour at the segment ends") {
    for (double mu : {0.1, 0.2, 0.3, 0.4, 0.49}) {
        // p -> 0 limit of the upper bound is (1 + mu)/(2 mu), exact at p = 0
        BoundPair b0 = egg_f_bounds(mu, 0.0);
        CHECK(b0.upper == doctest::Approx((1.0 + mu) / (2.0 * mu)).epsilon(1e-12));
        CHECK(b0.lower == 0.0);
        // near p = 1 both bounds approach 1
        BoundPair b1 = egg_f_bounds(mu, 0.999);
        CHECK(std::abs(b1.upper - 1.0) < 0.05);
        CHECK(std::abs(b1.lower - 1.0) < 0.05);
    }
    CHECK_THROWS_AS(egg_f_bounds(0.6, 0.5), capability_error);
}

TEST_CASE("bound consistency for an interpolating oracle") {
    const double mu = 0.25, p = 0.5;
    MetricOracle outer = MetricOracle::ellipsoid(wu_outer_ellipsoid(mu, p),
                                                 MetricOracle::Provenance::outer_bound);
    MetricOracle inner = MetricOracle::ellipsoid(inscribed_ellipsoid(mu, p),
                                                 MetricOracle::Provenance::inner_bound);
    MetricOracle mid = MetricOracle::custom(
        CVec::zero(2), MetricOracle::Kind::kobayashi, MetricOracle::Provenance::exact,
        [outer, inner](const CVec& v) { return std::sqrt(outer(v) * inner(v)); });
    VolumeEstimate est = mc_volume(mid, 400000, 6);
    SuitaResult synthetic;
    synthetic.kernel = kernel_egg_axis(mu, p);
    synthetic.mc_estimate = est;
    synthetic.F = synthetic.kernel * est.value;
    synthetic.F_error = synthetic.kernel * est.std_error;
    ConsistencyReport rep = bound_consistency(mu, p, synthetic);
    CHECK(rep.passed());
}

TEST_CASE("convex range check") {
    SuitaResult ball = suita_invariant(DomainSpec::ball(2), CVec{0.0, 0.4},
                                       MetricTag::kobayashi, Method::exact());
    ConvexBoundReport rb = convex_bound_check(DomainSpec::ball(2), CVec{0.0, 0.4}, ball);
    CHECK(rb.applicable);
    CHECK(rb.C == 4.0);
    CHECK(rb.upper == 16.0);
    CHECK(rb.passed);

    SuitaResult egg1 = suita_invariant(DomainSpec::egg(1.0), CVec::zero(2),
                                       MetricTag::kobayashi, Method::exact());
    CHECK(convex_bound_check(DomainSpec::egg(1.0), CVec::zero(2), egg1).passed);

    SuitaResult egg_nc = suita_invariant(DomainSpec::egg(0.3), CVec::zero(2),
                                         MetricTag::kobayashi, Method::exact());
    CHECK(egg_nc.F == doctest::Approx(1.0).epsilon(1e-13));
    ConvexBoundReport rnc = convex_bound_check(DomainSpec::egg(0.3), CVec::zero(2), egg_nc);
    CHECK_FALSE(rnc.applicable);
}

TEST_CASE("boundary limit scan") {
    // ball: F identically one along the normal approach
    std::vector<CVec> pts;
    for (int j = 1; j <= 10; ++j) pts.push_back(CVec{0.0, 1.0 - std::pow(2.0, -j)});
    auto rows = boundary_limit_scan(DomainSpec::ball(2), CVec{0.0, 1.0}, pts,
                                    MetricTag::kobayashi, Method::exact());
    for (const auto& row : rows) {
        REQUIRE(row.F.has_value());
        CHECK(*row.F == doctest::Approx(1.0).epsilon(1e-11));
    }

    // egg: brackets shrink onto 1 along the same approach
    std::vector<CVec> epts;
    for (int j = 1; j <= 10; ++j) epts.push_back(CVec{0.0, 1.0 - std::pow(2.0, -j)});
    auto erows = boundary_limit_scan(DomainSpec::egg(0.25), CVec{0.0, 1.0}, epts,
                                     MetricTag::kobayashi, Method::exact());
    double prev_width = 1e9;
    for (std::size_t i = 0; i < erows.size(); ++i) {
        REQUIRE(erows[i].F_lower.has_value());
        REQUIRE(erows[i].F_upper.has_value());
        double width = *erows[i].F_upper - *erows[i].F_lower;
        CHECK(width >= -1e-14);
        if (i >= 4) {  // monotone shrinking once the approach is close
            CHECK(width <= prev_width + 1e-12);
            prev_width = width;
        }
    }
    CHECK(std::abs(*erows.back().F_upper - 1.0) < 0.01);
    CHECK(std::abs(*erows.back().F_lower - 1.0) < 0.01);

    // the origin row carries the exact value 1
    auto orow = boundary_limit_scan(DomainSpec::egg(0.25), CVec{0.0, 1.0}, {CVec::zero(2)},
                                    MetricTag::kobayashi, Method::exact());
    CHECK(*orow.front().F == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("segment scan rows") {
    auto rows = segment_scan(0.25, {0.0, 0.3, 0.6, 0.9});
    REQUIRE(rows.size() == 4);
    CHECK_FALSE(rows[0].vol_lower.has_value());  // p = 0: inscribed bound degenerates
    CHECK(rows[0].F_upper == doctest::Approx(2.5).epsilon(1e-12));  // (1+mu)/(2mu)
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].vol_lower.has_value());
        CHECK(*rows[i].vol_lower <= rows[i].vol_upper + 1e-14);
        CHECK(*rows[i].F_lower <= rows[i].F_upper + 1e-14);
    }
}

TEST_CASE("orbit report") {
    std::vector<double> ps;
    for (double p = 0.05; p <= 0.991; p += 0.005) ps.push_back(p);
    OrbitReport rep = orbit_value_note(0.25, ps);
    CHECK(rep.supported);
    CHECK(rep.contains_one);
    CHECK(rep.upper_at_origin_limit == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(rep.sup_lower > 0.0);
    // certified_above_one reports exactly what the brackets prove
    CHECK(rep.certified_above_one == (rep.sup_lower > 1.0 + 1e-9));
    CHECK_FALSE(rep.summary.empty());

    OrbitReport convex = orbit_value_note(0.7, ps);
    CHECK_FALSE(convex.supported);
}

TEST_CASE("exact paths reproduce bit-identically") {
    auto run = [] {
        return suita_invariant(DomainSpec::ball(2), CVec{0.0, 0.5}, MetricTag::kobayashi,
                               Method::exact());
    };
    SuitaResult a = run(), b = run();
    CHECK(a.F == b.F);
    CHECK(a.kernel == b.kernel);
    CHECK(*a.exact_volume == *b.exact_volume);
}

TEST_SUITE_END();
