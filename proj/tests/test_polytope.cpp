#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include <gtlax/polytope.hpp>

using namespace gtlax;

namespace {

const OrbitSpec u3 = make_spec({2.0, 0.0, -2.0});
const OrbitSpec u4 = make_spec({3.0, 1.0, -1.0, -3.0});
const OrbitSpec gr24 = make_spec({1.0, 1.0, -1.0, -1.0});

double pattern_distance(const GTPattern& a, const GTPattern& b) {
    double d = 0.0;
    for (int k = 1; k <= a.spec.n; ++k)
        for (int j = 1; j <= k; ++j) d = std::max(d, std::abs(a.entry(j, k) - b.entry(j, k)));
    return d;
}

} // namespace

TEST_CASE("dimension_check cross-validates the free entry count") {
    CHECK(dimension_check(make_polytope(u3)) == 3);
    CHECK(dimension_check(make_polytope(u4)) == 6);
    CHECK(dimension_check(make_polytope(gr24)) == 4);
}

TEST_CASE("membership classifies interior, boundary and outside points") {
    const PolytopeSpec ps = make_polytope(u3);
    // coordinates: (a12, a22, a11)
    CHECK(membership(ps, ActionVector{{1.0, -1.0, 0.0}}, 1e-9).region == Region::interior);

    const auto boundary = membership(ps, ActionVector{{2.0, -1.0, 0.0}}, 1e-9);
    CHECK(boundary.region == Region::boundary);
    CHECK(boundary.saturated.size() == 1);
    CHECK(ps.constraints[boundary.saturated[0]].label == "a(1,2) <= a(1,3)");

    const auto outside = membership(ps, ActionVector{{1.0, -1.0, 5.0}}, 1e-9);
    CHECK(outside.region == Region::outside);
    CHECK(!outside.violated.empty());

    CHECK_THROWS_AS(membership(ps, ActionVector{{1.0}}, 1e-9), std::invalid_argument);
}

TEST_CASE("sample_interior always produces strictly interior points") {
    Rng rng(41);
    for (const auto& spec : {u3, u4, gr24}) {
        const PolytopeSpec ps = make_polytope(spec);
        for (int trial = 0; trial < 200; ++trial) {
            const ActionVector a = sample_interior(ps, rng);
            CHECK(membership(ps, a, 1e-12).region == Region::interior);
        }
    }
}

TEST_CASE("sample_interior on Gr(2,4) keeps the middle entry inside (-1, 1)") {
    Rng rng(43);
    const PolytopeSpec ps = make_polytope(gr24);
    for (int trial = 0; trial < 200; ++trial) {
        const ActionVector a = sample_interior(ps, rng);
        CHECK(a.values[0] > -1.0); // a(2,3) comes first in coordinate order
        CHECK(a.values[0] < 1.0);
    }
}

TEST_CASE("sample_interior is deterministic under a fixed seed") {
    const PolytopeSpec ps = make_polytope(u3);
    Rng r1(47), r2(47);
    const ActionVector a = sample_interior(ps, r1);
    const ActionVector b = sample_interior(ps, r2);
    CHECK(a.values == b.values);
}

TEST_CASE("vertices of the u(3) polytope match the brute-force list") {
    const PolytopeSpec ps = make_polytope(u3);
    const auto vs = vertices(ps);
    REQUIRE(vs.size() == 7);
    const std::vector<std::vector<double>> expected = {
        {2, 0, 2}, {2, 0, 0}, {2, -2, 2}, {2, -2, -2}, {0, 0, 0}, {0, -2, 0}, {0, -2, -2}};
    for (const auto& e : expected) {
        const bool found = std::any_of(vs.begin(), vs.end(), [&](const ActionVector& v) {
            double d = 0.0;
            for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(v.values[i] - e[i]));
            return d <= 1e-9;
        });
        CHECK(found);
    }
    for (const auto& v : vs)
        CHECK(membership(ps, v, 1e-9).region == Region::boundary);
}

TEST_CASE("every vertex entry equals one of its parents") {
    for (const auto& spec : {u3, gr24}) {
        const PolytopeSpec ps = make_polytope(spec);
        for (const auto& v : vertices(ps)) {
            const GTPattern p = pattern_from_action(spec, v);
            for (int k = 1; k <= spec.n - 1; ++k)
                for (int j = 1; j <= k; ++j) {
                    if (entry_frozen(spec, j, k)) continue;
                    const double e = p.entry(j, k);
                    const bool up = std::abs(e - p.entry(j, k + 1)) <= 1e-9;
                    const bool dn = std::abs(e - p.entry(j + 1, k + 1)) <= 1e-9;
                    CHECK((up || dn));
                }
        }
    }
}

TEST_CASE("vertices guards dimension and handles the point orbit") {
    const OrbitSpec point = make_spec({1.0, 1.0});
    const auto vs = vertices(make_polytope(point));
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].values.empty());

    const OrbitSpec u5 = make_spec({4.0, 2.0, 0.0, -2.0, -4.0}); // dim 10
    CHECK_THROWS_AS(vertices(make_polytope(u5)), DimensionTooLarge);
}

TEST_CASE("reconstruct reproduces the worked bordered example") {
    const PolytopeSpec ps = make_polytope(u3);
    // pattern rows (0), (1,-1), (2,0,-2) -> action (a12, a22, a11) = (1, -1, 0)
    const ActionVector a{{1.0, -1.0, 0.0}};
    const OrbitPoint z = reconstruct(ps, a);

    // level-2 leading block must be exactly [[0, 1], [1, 0]]
    const HermitianMatrix b2 = moment_block(z, 2);
    CHECK(b2(0, 0) == cdouble(0.0, 0.0));
    CHECK(b2(0, 1) == cdouble(1.0, 0.0));
    CHECK(b2(1, 1) == cdouble(0.0, 0.0));

    // the corner entry is sum(row3) - sum(row2) = 0
    CHECK(z.Z(2, 2) == cdouble(0.0, 0.0));

    const GTPattern p = gt_pattern(z);
    CHECK(p.entry(1, 1) == Catch::Approx(0.0).margin(1e-10));
    CHECK(p.entry(1, 2) == Catch::Approx(1.0).margin(1e-10));
    CHECK(p.entry(2, 2) == Catch::Approx(-1.0).margin(1e-10));
    CHECK(pattern_distance(p, pattern_from_action(u3, a)) <= 1e-10);
}

TEST_CASE("reconstruct maps the diagonal pattern to the diagonal matrix") {
    for (const auto& spec : {u3, u4}) {
        const PolytopeSpec ps = make_polytope(spec);
        const GTPattern diag = gt_pattern(diagonal_point(spec));
        const OrbitPoint z = reconstruct(ps, action_of(diag));
        CHECK(max_abs_diff(z.Z.matrix(), HermitianMatrix::diagonal(spec.lambda).matrix()) <= 1e-12);
    }
}

TEST_CASE("reconstruct rejects infeasible patterns") {
    const PolytopeSpec ps = make_polytope(u3);
    CHECK_THROWS_AS(reconstruct(ps, ActionVector{{1.0, -1.0, 5.0}}), InfeasiblePattern);
}

TEST_CASE("sample-reconstruct roundtrip holds across specs") {
    Rng rng(53);
    for (const auto& spec : {u3, u4, gr24}) {
        const PolytopeSpec ps = make_polytope(spec);
        for (int trial = 0; trial < 50; ++trial) {
            const ActionVector a = sample_interior(ps, rng);
            const OrbitPoint z = reconstruct(ps, a);
            const ActionVector b = action_map(z);
            REQUIRE(a.values.size() == b.values.size());
            for (std::size_t i = 0; i < a.values.size(); ++i)
                CHECK(a.values[i] == Catch::Approx(b.values[i]).margin(1e-7));
            // row spectra are preserved at every intermediate level
            const GTPattern p = pattern_from_action(spec, a);
            for (int k = 1; k <= spec.n; ++k) {
                const auto mu = eigenvalues(moment_block(z, k));
                for (int j = 1; j <= k; ++j)
                    CHECK(mu[j - 1] == Catch::Approx(p.entry(j, k)).margin(1e-7));
            }
        }
    }
}

TEST_CASE("reconstructed boundary points are not regular") {
    const PolytopeSpec ps = make_polytope(u3);
    // facet point: a12 = lambda_1 saturated, others interior
    const ActionVector facet{{2.0, -1.0, 0.5}};
    REQUIRE(membership(ps, facet, 1e-9).region == Region::boundary);
    const OrbitPoint z = reconstruct(ps, facet);
    CHECK(!is_regular(z, 1e-9));
}
