#ifndef AEROSIM_TRACEGEN_HPP
#define AEROSIM_TRACEGEN_HPP

#include <iosfwd>
#include <vector>

#include "aerosim/geometry.hpp"
#include "aerosim/mobility.hpp"
#include "aerosim/rng.hpp"

namespace aerosim::tracegen {

/// Oceanic control area: a sphere around the ground station. Membership is
/// 3D distance <= range.
struct OcaSpec {
    Position center{0.0, 0.0, 0.0001};
    double range_km = 370.4;
};

enum class CrossingKind { Entry, Exit };

struct CrossingEvent {
    double t;
    CrossingKind kind;
};

/// Boundary crossings of a node's piecewise-linear path with the OCA sphere,
/// solved analytically per segment. Tangential touches emit no events.
std::vector<CrossingEvent> detect_crossings(const mobility::MobilityTrace& trace,
                                            std::size_t node, const OcaSpec& oca);

/// One timestamp per line, Entry and Exit alike, in the message-trace format.
void write_message_trace(const std::vector<CrossingEvent>& events, std::ostream& out);

struct SyntheticFlightParams {
    int count = 0;
    double speed_kmps = 0.25;       // ~900 km/h
    double altitude_km = 10.0;
    double clearance_km = 100.0;    // endpoints at least this far outside the OCA
    double corridor_half_km = 600.0; // square half-extent the flights must fit in
};

/// Straight-line constant-altitude flights whose chords all pass through the
/// OCA, endpoints placed clearance_km outside it, start times staggered so
/// every flight completes within sim_end.
mobility::MobilityTrace generate_synthetic_flights(const SyntheticFlightParams& params,
                                                   const OcaSpec& oca, double sim_end_s,
                                                   RngStream& rng);

} // namespace aerosim::tracegen

#endif
