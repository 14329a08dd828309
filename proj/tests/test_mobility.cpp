#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "aerosim/errors.hpp"
#include "aerosim/mobility.hpp"
#include "aerosim/rng.hpp"

using namespace aerosim;
using mobility::MobilityTrace;
using mobility::parse_mobility_trace;

TEST_CASE("parses one node with two waypoints") {
    const auto trace = parse_mobility_trace("0 0 0 10 100 100 0 10");
    REQUIRE(trace.node_count() == 1);
    const auto& wps = trace.waypoints(0);
    REQUIRE(wps.size() == 2);
    CHECK(wps[0].t == 0.0);
    CHECK(wps[0].pos == Position{0.0, 0.0, 10.0});
    CHECK(wps[1].t == 100.0);
    CHECK(wps[1].pos == Position{100.0, 0.0, 10.0});
}

TEST_CASE("empty file gives zero nodes") {
    CHECK(parse_mobility_trace("").node_count() == 0);
}

TEST_CASE("comment and blank lines are skipped") {
    const auto trace = parse_mobility_trace("# header\n\n0 1 2 3\n  # indented comment\n0 4 5 6\n");
    CHECK(trace.node_count() == 2);
    CHECK(trace.waypoints(1)[0].pos == Position{4.0, 5.0, 6.0});
}

TEST_CASE("format errors carry the line number") {
    SUBCASE("non-increasing timestamps") {
        CHECK_THROWS_WITH_AS(parse_mobility_trace("0 0 0 10 0 5 5 10", "f"),
                             doctest::Contains("f:1"), FormatError);
    }
    SUBCASE("group count not a multiple of four") {
        CHECK_THROWS_AS(parse_mobility_trace("0 0 0 10 1 2 3"), FormatError);
    }
    SUBCASE("2D-looking line rejected rather than zero-filled") {
        CHECK_THROWS_AS(parse_mobility_trace("0 0 0 10 1 1"), FormatError);
    }
    SUBCASE("non-numeric token") {
        CHECK_THROWS_WITH_AS(parse_mobility_trace("0 0 0 10\n0 x 0 10", "f"),
                             doctest::Contains("f:2"), FormatError);
    }
    SUBCASE("negative altitude") {
        CHECK_THROWS_AS(parse_mobility_trace("0 0 0 -1"), FormatError);
    }
}

TEST_CASE("position interpolates linearly and clamps outside the span") {
    const auto trace = parse_mobility_trace("0 0 0 10 100 100 0 10");
    CHECK(trace.position_at(0, 50.0) == Position{50.0, 0.0, 10.0});
    CHECK(trace.position_at(0, 0.0) == Position{0.0, 0.0, 10.0});   // exact waypoint
    CHECK(trace.position_at(0, 120.0) == Position{100.0, 0.0, 10.0}); // clamp after last
    CHECK(trace.position_at(0, -5.0) == Position{0.0, 0.0, 10.0});  // clamp before first
}

TEST_CASE("node index out of range throws") {
    const auto trace = parse_mobility_trace("0 0 0 10 1 1 1 10");
    CHECK_THROWS_AS(trace.position_at(1, 0.0), std::out_of_range);
}

TEST_CASE("interpolation properties on random traces") {
    RngStream rng(99, "mobility-prop");
    for (int rep = 0; rep < 50; ++rep) {
        // random monotone trace
        std::vector<mobility::Waypoint> wps;
        double t = rng.uniform(0.0, 10.0);
        const int count = 2 + static_cast<int>(rng.uniform01() * 8);
        for (int i = 0; i < count; ++i) {
            wps.push_back({t, Position{rng.uniform(-500, 500), rng.uniform(-500, 500),
                                       rng.uniform(0, 12)}});
            t += rng.uniform(0.1, 100.0);
        }
        MobilityTrace trace({wps});

        // exact at every waypoint
        for (const auto& w : wps)
            REQUIRE(trace.position_at(0, w.t) == w.pos);

        // interpolated coordinates stay between the bracketing endpoints
        for (std::size_t i = 0; i + 1 < wps.size(); ++i) {
            const double u = rng.uniform01();
            const double tm = wps[i].t + u * (wps[i + 1].t - wps[i].t);
            const Position p = trace.position_at(0, tm);
            auto between = [](double v, double a, double b) {
                return v >= std::min(a, b) - 1e-9 && v <= std::max(a, b) + 1e-9;
            };
            REQUIRE(between(p.x, wps[i].pos.x, wps[i + 1].pos.x));
            REQUIRE(between(p.y, wps[i].pos.y, wps[i + 1].pos.y));
            REQUIRE(between(p.z, wps[i].pos.z, wps[i + 1].pos.z));
        }

        // continuity: small dt moves the position by O(dt)
        const double tm = wps.front().t + 0.5 * (wps.back().t - wps.front().t);
        const Position a = trace.position_at(0, tm);
        const Position b = trace.position_at(0, tm + 1e-7);
        REQUIRE(distance_km(a, b) < 1e-3);
    }
}

TEST_CASE("write/parse round trip preserves the trace") {
    const auto trace = parse_mobility_trace("0 0 0 10 100 100 0 10\n5.5 -3 2 9.25 60 7 7 11\n");
    std::ostringstream out;
    mobility::write_mobility_trace(trace, out);
    const auto back = parse_mobility_trace(out.str());
    REQUIRE(back.node_count() == trace.node_count());
    for (std::size_t n = 0; n < trace.node_count(); ++n) {
        const auto& a = trace.waypoints(n);
        const auto& b = back.waypoints(n);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].t == doctest::Approx(b[i].t).epsilon(1e-9));
            CHECK(a[i].pos.x == doctest::Approx(b[i].pos.x).epsilon(1e-9));
        }
    }
}
