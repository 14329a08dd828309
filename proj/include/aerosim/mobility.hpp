#ifndef AEROSIM_MOBILITY_HPP
#define AEROSIM_MOBILITY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "aerosim/geometry.hpp"

namespace aerosim::mobility {

struct Waypoint {
    double t = 0.0; // seconds
    Position pos;
};

/// Per-node ordered waypoint lists. Node index = line index in the trace file
/// (comment and blank lines skipped). Immutable after parsing.
class MobilityTrace {
public:
    MobilityTrace() = default;
    explicit MobilityTrace(std::vector<std::vector<Waypoint>> nodes);

    std::size_t node_count() const { return nodes_.size(); }
    const std::vector<Waypoint>& waypoints(std::size_t node) const;

    /// Linear interpolation between the bracketing waypoints; clamps to the
    /// first waypoint before its time and to the last after its time.
    Position position_at(std::size_t node, double t) const;

private:
    std::vector<std::vector<Waypoint>> nodes_;
};

/// Parses a waypoint trace: one node per line, whitespace-separated
/// "t x y z" quadruples, '#' comment lines ignored. Times must be strictly
/// increasing per line. `source` names the input in error messages.
MobilityTrace parse_mobility_trace(std::istream& in, const std::string& source = "<mobility>");
MobilityTrace parse_mobility_trace(const std::string& text, const std::string& source = "<mobility>");

/// Loads and parses a trace file; ConfigError if the file cannot be opened.
MobilityTrace load_mobility_trace(const std::string& path);

/// Writes the trace in the same format parse_mobility_trace reads.
void write_mobility_trace(const MobilityTrace& trace, std::ostream& out);

} // namespace aerosim::mobility

#endif
