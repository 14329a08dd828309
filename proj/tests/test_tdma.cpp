#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "aerosim/rng.hpp"
#include "aerosim/tdma.hpp"

using namespace aerosim;
using namespace aerosim::tdma;

namespace {

std::vector<std::optional<NodeId>> slots(TdmaScheduler& s, std::uint64_t frame) {
    return s.compute_schedule(frame).assignments;
}

traffic::Packet packet(NodeId src, std::uint64_t seq) {
    return traffic::Packet{src, 99, 100, 0.0, seq};
}

constexpr NodeId A = 0, B = 1, C = 2;

} // namespace

TEST_CASE("registration keeps order and rejects duplicates") {
    TdmaScheduler s(10);
    s.register_node(A);
    s.register_node(B);
    s.register_node(C);
    CHECK_THROWS_AS(s.register_node(A), std::logic_error);

    // registry order shows through the round-robin order
    for (NodeId n : {A, B, C}) s.report_buffer({n, 1});
    const auto sch = slots(s, 0);
    CHECK(sch[0] == A);
    CHECK(sch[1] == B);
    CHECK(sch[2] == C);
}

TEST_CASE("buffer reports: latest wins, unregistered rejected") {
    TdmaScheduler s(10);
    s.register_node(A);
    s.report_buffer({A, 3});
    s.report_buffer({A, 1});
    CHECK(s.total_demand() == 1);
    const auto sch = slots(s, 0);
    CHECK(sch[0] == A); // one slot only: the stored value is 1, not 3
    CHECK(!sch[1].has_value());

    CHECK_THROWS_AS(s.report_buffer({B, 1}), std::logic_error);
}

TEST_CASE("a zero report removes a node from the next schedule") {
    TdmaScheduler s(4);
    s.register_node(A);
    s.register_node(B);
    s.report_buffer({A, 2});
    s.report_buffer({B, 2});
    s.report_buffer({A, 0});
    for (const auto& slot : slots(s, 0))
        CHECK(slot != A);
}

TEST_CASE("hand-derived schedule: saturated three nodes, ten slots") {
    TdmaScheduler s(10);
    for (NodeId n : {A, B, C}) s.register_node(n);
    for (NodeId n : {A, B, C}) s.report_buffer({n, 4});

    const auto sch = slots(s, 0);
    const std::vector<std::optional<NodeId>> expect{A, B, C, A, B, C, A, B, C, A};
    CHECK(sch == expect);

    // the round-robin pointer persists: the next frame starts at B
    for (NodeId n : {A, B, C}) s.report_buffer({n, 4});
    CHECK(slots(s, 1)[0] == B);
}

TEST_CASE("hand-derived schedule: demand-capped allocation") {
    TdmaScheduler s(10);
    for (NodeId n : {A, B, C}) s.register_node(n);
    s.report_buffer({A, 1});
    s.report_buffer({B, 1});

    const auto sch = slots(s, 0);
    CHECK(sch[0] == A);
    CHECK(sch[1] == B);
    for (int i = 2; i < 10; ++i) CHECK(!sch[i].has_value());
}

TEST_CASE("hand-derived schedule: no reports means all slots empty") {
    TdmaScheduler s(10);
    for (NodeId n : {A, B, C}) s.register_node(n);
    for (const auto& slot : slots(s, 0))
        CHECK(!slot.has_value());
    // zero registrations too
    TdmaScheduler empty(10);
    for (const auto& slot : slots(empty, 0))
        CHECK(!slot.has_value());
}

TEST_CASE("mac sends FIFO over its assigned slots and idles stale slots") {
    TdmaScheduler s(4);
    TdmaMac mac(A, s);

    SUBCASE("two packets, two slots") {
        mac.enqueue(packet(A, 1));
        mac.enqueue(packet(A, 2));
        const auto sch = s.compute_schedule(0);
        const auto txs = mac.on_schedule(sch);
        REQUIRE(txs.size() == 2);
        CHECK(txs[0].first < txs[1].first);      // earlier slot first
        CHECK(txs[0].second.sequence == 1);      // FIFO order
        CHECK(txs[1].second.sequence == 2);
        CHECK(mac.queued() == 0);
    }
    SUBCASE("stale report: one packet, two assigned slots") {
        mac.enqueue(packet(A, 1));
        auto sch = s.compute_schedule(0);
        sch.assignments[2] = A; // pretend the report said 2
        const auto txs = mac.on_schedule(sch);
        REQUIRE(txs.size() == 1);
        CHECK(txs[0].second.sequence == 1);
    }
    SUBCASE("handing out a packet updates the buffer report") {
        mac.enqueue(packet(A, 1));
        CHECK(s.total_demand() == 1);
        mac.on_schedule(s.compute_schedule(0));
        CHECK(s.total_demand() == 0);
    }
}

TEST_CASE("randomized schedule properties") {
    RngStream rng(2024, "tdma-prop");
    for (int rep = 0; rep < 50; ++rep) {
        const int slots_per_frame = 1 + static_cast<int>(rng.uniform01() * 16);
        const int node_count = 1 + static_cast<int>(rng.uniform01() * 12);
        TdmaScheduler s(slots_per_frame);
        for (NodeId n = 0; n < static_cast<NodeId>(node_count); ++n) s.register_node(n);

        for (int frame = 0; frame < 25; ++frame) {
            std::map<NodeId, std::uint64_t> demand;
            for (NodeId n = 0; n < static_cast<NodeId>(node_count); ++n) {
                demand[n] = static_cast<std::uint64_t>(rng.uniform01() * 5);
                s.report_buffer({n, demand[n]});
            }
            const auto sch = s.compute_schedule(static_cast<std::uint64_t>(frame));

            std::map<NodeId, int> granted;
            std::uint64_t total_demand = 0;
            for (const auto& [n, d] : demand) total_demand += d;
            int filled = 0;
            for (const auto& slot : sch.assignments) {
                if (!slot) continue;
                ++filled;
                ++granted[*slot];
            }
            // demand cap
            for (const auto& [n, g] : granted)
                REQUIRE(static_cast<std::uint64_t>(g) <= demand[n]);
            // work conservation: either the frame is full or all demand served
            REQUIRE((filled == slots_per_frame ||
                     static_cast<std::uint64_t>(filled) == total_demand));
        }
    }
}

TEST_CASE("saturated fairness: per-frame grants differ by at most one") {
    RngStream rng(77, "tdma-fair");
    for (int rep = 0; rep < 20; ++rep) {
        const int slots_per_frame = 2 + static_cast<int>(rng.uniform01() * 15);
        const int node_count = 2 + static_cast<int>(rng.uniform01() * 10);
        TdmaScheduler s(slots_per_frame);
        for (NodeId n = 0; n < static_cast<NodeId>(node_count); ++n) s.register_node(n);

        for (int frame = 0; frame < 30; ++frame) {
            for (NodeId n = 0; n < static_cast<NodeId>(node_count); ++n)
                s.report_buffer({n, static_cast<std::uint64_t>(slots_per_frame)});
            const auto sch = s.compute_schedule(static_cast<std::uint64_t>(frame));
            std::map<NodeId, int> granted;
            for (NodeId n = 0; n < static_cast<NodeId>(node_count); ++n) granted[n] = 0;
            for (const auto& slot : sch.assignments) {
                REQUIRE(slot.has_value()); // saturated: no empty slot
                ++granted[*slot];
            }
            int lo = slots_per_frame + 1, hi = -1;
            for (const auto& [n, g] : granted) {
                lo = std::min(lo, g);
                hi = std::max(hi, g);
            }
            REQUIRE(hi - lo <= 1);
        }
    }
}
