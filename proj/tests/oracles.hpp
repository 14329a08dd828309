// Test-only independent oracles. These deliberately avoid the library's
// analytic code paths so they can check them.
#ifndef AEROSIM_TESTS_ORACLES_HPP
#define AEROSIM_TESTS_ORACLES_HPP

#include <cmath>
#include <vector>

#include "aerosim/mobility.hpp"
#include "aerosim/tracegen.hpp"

namespace aerosim::testing {

/// Fixed-step sphere-crossing detector: samples the interpolated path every
/// `step` seconds and records the times where the inside/outside state flips.
/// Positive kind = entry, negative = exit.
struct SampledCrossing {
    double t;
    bool entry;
};

inline std::vector<SampledCrossing> sample_crossings(const mobility::MobilityTrace& trace,
                                                     std::size_t node,
                                                     const tracegen::OcaSpec& oca,
                                                     double step = 1e-3) {
    const auto& wps = trace.waypoints(node);
    const double t0 = wps.front().t;
    const double t1 = wps.back().t;

    auto inside = [&](double t) {
        return distance_km(trace.position_at(node, t), oca.center) <= oca.range_km;
    };

    std::vector<SampledCrossing> out;
    bool state = inside(t0);
    const long steps = static_cast<long>(std::ceil((t1 - t0) / step));
    for (long k = 1; k <= steps; ++k) {
        const double t = std::min(t0 + k * step, t1);
        const bool s = inside(t);
        if (s != state) {
            out.push_back(SampledCrossing{t, s});
            state = s;
        }
    }
    return out;
}

} // namespace aerosim::testing

#endif
