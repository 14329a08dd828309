#ifndef AEROSIM_TRAFFIC_HPP
#define AEROSIM_TRAFFIC_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace aerosim::traffic {

using NodeId = std::uint32_t;

/// Strictly increasing message generation timestamps, seconds.
struct MessageTrace {
    std::vector<double> timestamps;
};

struct AppConfig {
    NodeId destination = 0;
    std::uint32_t payload_bytes = 100;
    MessageTrace trace;
};

struct Packet {
    NodeId source = 0;
    NodeId destination = 0;
    std::uint32_t size_bytes = 0;
    double created_at = 0.0;
    std::uint64_t sequence = 0; // per-source counter
};

/// One decimal-seconds timestamp per line, '#' comments allowed. Strictly
/// increasing and non-negative enforced. There are no start/stop/interval
/// parameters; the trace alone decides when messages are generated.
MessageTrace parse_message_trace(std::istream& in, const std::string& source = "<message-trace>");
MessageTrace parse_message_trace(const std::string& text, const std::string& source = "<message-trace>");
MessageTrace load_message_trace(const std::string& path);

/// Packets this app generates up to and including sim_end, one per trace
/// timestamp, sequence numbers starting at first_sequence.
std::vector<Packet> packets_for(const AppConfig& app, NodeId source, double sim_end,
                                std::uint64_t first_sequence = 0);

} // namespace aerosim::traffic

#endif
