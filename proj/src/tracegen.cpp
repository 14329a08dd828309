#include "aerosim/tracegen.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "aerosim/errors.hpp"

namespace aerosim::tracegen {

std::vector<CrossingEvent> detect_crossings(const mobility::MobilityTrace& trace,
                                            std::size_t node, const OcaSpec& oca) {
    const auto& wps = trace.waypoints(node);
    const double r2 = oca.range_km * oca.range_km;

    auto dist2 = [&](const Position& p) {
        const double dx = p.x - oca.center.x;
        const double dy = p.y - oca.center.y;
        const double dz = p.z - oca.center.z;
        return dx * dx + dy * dy + dz * dz;
    };

    std::vector<CrossingEvent> events;
    bool inside = dist2(wps.front().pos) <= r2;

    for (std::size_t i = 0; i + 1 < wps.size(); ++i) {
        const Position& p0 = wps[i].pos;
        const Position& p1 = wps[i + 1].pos;
        const double t0 = wps[i].t;
        const double t1 = wps[i + 1].t;

        // |p0 + s*(p1-p0) - c|^2 = r^2, quadratic in s over [0,1]
        const double vx = p1.x - p0.x, vy = p1.y - p0.y, vz = p1.z - p0.z;
        const double wx = p0.x - oca.center.x, wy = p0.y - oca.center.y,
                     wz = p0.z - oca.center.z;
        const double a = vx * vx + vy * vy + vz * vz;
        const double b = 2.0 * (vx * wx + vy * wy + vz * wz);
        const double c = wx * wx + wy * wy + wz * wz - r2;
        if (a == 0.0) continue; // stationary segment

        const double disc = b * b - 4.0 * a * c;
        if (disc <= 0.0) continue; // no intersection, or a tangential touch

        const double sq = std::sqrt(disc);
        // roots in ascending order; between them the path is inside the sphere
        const double s1 = (-b - sq) / (2.0 * a);
        const double s2 = (-b + sq) / (2.0 * a);
        for (double s : {s1, s2}) {
            if (s <= 0.0 || s > 1.0) continue;
            const bool now_inside = (s == s1);
            if (now_inside == inside) continue;
            inside = now_inside;
            events.push_back(CrossingEvent{t0 + s * (t1 - t0),
                                           now_inside ? CrossingKind::Entry : CrossingKind::Exit});
        }
    }
    return events;
}

void write_message_trace(const std::vector<CrossingEvent>& events, std::ostream& out) {
    char buf[48];
    for (const auto& ev : events) {
        std::snprintf(buf, sizeof buf, "%.9g\n", ev.t);
        out << buf;
    }
}

mobility::MobilityTrace generate_synthetic_flights(const SyntheticFlightParams& params,
                                                   const OcaSpec& oca, double sim_end_s,
                                                   RngStream& rng) {
    if (params.count < 0)
        throw ConfigError("synthetic flights: count must be >= 0");
    if (params.speed_kmps <= 0.0)
        throw ConfigError("synthetic flights: speed must be positive");

    const double dz = params.altitude_km - oca.center.z;
    if (std::abs(dz) >= oca.range_km)
        throw ConfigError("synthetic flights: cruise altitude misses the OCA sphere entirely");
    // horizontal radius of the sphere slice at cruise altitude
    const double slice_r = std::sqrt(oca.range_km * oca.range_km - dz * dz);

    const double end_r = oca.range_km + params.clearance_km; // endpoint distance from center
    if (params.corridor_half_km < end_r)
        throw ConfigError("synthetic flights: corridor (half-extent " +
                          std::to_string(params.corridor_half_km) +
                          " km) cannot contain the OCA plus clearance (" +
                          std::to_string(end_r) + " km)");

    const double max_offset = 0.9 * slice_r; // keeps every chord well clear of tangency
    const double max_half_len = std::sqrt(end_r * end_r - max_offset * max_offset);
    const double max_duration = 2.0 * max_half_len / params.speed_kmps;
    if (max_duration >= sim_end_s)
        throw ConfigError("synthetic flights: simulation time too short for a full crossing");

    std::vector<std::vector<mobility::Waypoint>> nodes;
    nodes.reserve(static_cast<std::size_t>(params.count));
    for (int i = 0; i < params.count; ++i) {
        const double heading = rng.uniform(0.0, 2.0 * M_PI);
        const double offset = rng.uniform(-max_offset, max_offset);
        const double dx = std::cos(heading), dy = std::sin(heading);
        const double half_len = std::sqrt(end_r * end_r - offset * offset);
        const double duration = 2.0 * half_len / params.speed_kmps;
        const double t_start = rng.uniform(0.0, sim_end_s - duration);

        // chord: center + offset along the normal, +/- half_len along the heading
        const double cx = oca.center.x - offset * dy;
        const double cy = oca.center.y + offset * dx;
        const Position p0{cx - half_len * dx, cy - half_len * dy, params.altitude_km};
        const Position p1{cx + half_len * dx, cy + half_len * dy, params.altitude_km};
        nodes.push_back({mobility::Waypoint{t_start, p0},
                         mobility::Waypoint{t_start + duration, p1}});
    }
    return mobility::MobilityTrace(std::move(nodes));
}

} // namespace aerosim::tracegen
