#include "aerosim/traffic.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "aerosim/errors.hpp"

namespace aerosim::traffic {

MessageTrace parse_message_trace(std::istream& in, const std::string& source) {
    MessageTrace trace;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream ls(line);
        double t = 0.0;
        std::string rest;
        if (!(ls >> t) || (ls >> rest) || !std::isfinite(t))
            throw FormatError(source, lineno, "expected a single timestamp, got '" + line + "'");
        if (t < 0.0)
            throw FormatError(source, lineno, "negative timestamp");
        if (!trace.timestamps.empty() && !(t > trace.timestamps.back()))
            throw FormatError(source, lineno, "timestamps not strictly increasing");
        trace.timestamps.push_back(t);
    }
    return trace;
}

MessageTrace parse_message_trace(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse_message_trace(in, source);
}

MessageTrace load_message_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open message trace file: " + path);
    return parse_message_trace(in, path);
}

std::vector<Packet> packets_for(const AppConfig& app, NodeId source, double sim_end,
                                std::uint64_t first_sequence) {
    std::vector<Packet> packets;
    std::uint64_t seq = first_sequence;
    for (double t : app.trace.timestamps) {
        if (t > sim_end) break; // timestamps exactly at sim_end are included
        packets.push_back(Packet{source, app.destination, app.payload_bytes, t, seq++});
    }
    return packets;
}

} // namespace aerosim::traffic
