#include "aerosim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aerosim/errors.hpp"

namespace aerosim::mobility {

MobilityTrace::MobilityTrace(std::vector<std::vector<Waypoint>> nodes)
    : nodes_(std::move(nodes)) {
    for (const auto& wps : nodes_) {
        if (wps.empty())
            throw FormatError("mobility trace node with no waypoints");
        for (std::size_t i = 1; i < wps.size(); ++i)
            if (!(wps[i].t > wps[i - 1].t))
                throw FormatError("mobility trace waypoint times not strictly increasing");
    }
}

const std::vector<Waypoint>& MobilityTrace::waypoints(std::size_t node) const {
    if (node >= nodes_.size())
        throw std::out_of_range("mobility: node index " + std::to_string(node) +
                                " out of range (node count " + std::to_string(nodes_.size()) + ")");
    return nodes_[node];
}

Position MobilityTrace::position_at(std::size_t node, double t) const {
    const auto& wps = waypoints(node);
    if (t <= wps.front().t) return wps.front().pos;
    if (t >= wps.back().t) return wps.back().pos;
    // first waypoint with time > t; the bracket is [it-1, it]
    auto it = std::upper_bound(wps.begin(), wps.end(), t,
                               [](double v, const Waypoint& w) { return v < w.t; });
    const Waypoint& a = *(it - 1);
    const Waypoint& b = *it;
    if (t == a.t) return a.pos;
    const double u = (t - a.t) / (b.t - a.t);
    return Position{a.pos.x + u * (b.pos.x - a.pos.x),
                    a.pos.y + u * (b.pos.y - a.pos.y),
                    a.pos.z + u * (b.pos.z - a.pos.z)};
}

MobilityTrace parse_mobility_trace(std::istream& in, const std::string& source) {
    std::vector<std::vector<Waypoint>> nodes;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream ls(line);
        std::vector<double> values;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw FormatError(source, lineno, "non-numeric token '" + tok + "'");
            }
            if (used != tok.size() || !std::isfinite(v))
                throw FormatError(source, lineno, "non-numeric token '" + tok + "'");
            values.push_back(v);
        }
        if (values.empty() || values.size() % 4 != 0)
            throw FormatError(source, lineno,
                              "expected whitespace-separated 't x y z' quadruples, got " +
                                  std::to_string(values.size()) + " values");

        std::vector<Waypoint> wps;
        wps.reserve(values.size() / 4);
        for (std::size_t i = 0; i < values.size(); i += 4) {
            Waypoint w{values[i], Position{values[i + 1], values[i + 2], values[i + 3]}};
            if (w.t < 0.0)
                throw FormatError(source, lineno, "negative waypoint time");
            if (w.pos.z < 0.0)
                throw FormatError(source, lineno, "negative altitude");
            if (!wps.empty() && !(w.t > wps.back().t))
                throw FormatError(source, lineno, "waypoint times not strictly increasing");
            wps.push_back(w);
        }
        nodes.push_back(std::move(wps));
    }
    return MobilityTrace(std::move(nodes));
}

MobilityTrace parse_mobility_trace(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse_mobility_trace(in, source);
}

MobilityTrace load_mobility_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open mobility trace file: " + path);
    return parse_mobility_trace(in, path);
}

void write_mobility_trace(const MobilityTrace& trace, std::ostream& out) {
    char buf[64];
    for (std::size_t n = 0; n < trace.node_count(); ++n) {
        const auto& wps = trace.waypoints(n);
        for (std::size_t i = 0; i < wps.size(); ++i) {
            if (i) out << ' ';
            std::snprintf(buf, sizeof buf, "%.12g %.12g %.12g %.12g",
                          wps[i].t, wps[i].pos.x, wps[i].pos.y, wps[i].pos.z);
            out << buf;
        }
        out << '\n';
    }
}

} // namespace aerosim::mobility
