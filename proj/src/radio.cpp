#include "aerosim/radio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "aerosim/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aerosim::radio {

SnrPerTable parse_snr_table(std::istream& in, const std::string& source) {
    std::vector<SnrPerRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream ls(line);
        SnrPerRow row{};
        char c1 = 0, c2 = 0;
        if (!(ls >> row.snr_db >> c1 >> row.per >> c2 >> row.ber) || c1 != ',' || c2 != ',')
            throw FormatError(source, lineno, "expected 'snr_db,per,ber', got '" + line + "'");
        std::string rest;
        if (ls >> rest)
            throw FormatError(source, lineno, "trailing content '" + rest + "'");
        if (!std::isfinite(row.snr_db))
            throw FormatError(source, lineno, "non-finite SNR");
        if (row.per < 0.0 || row.per > 1.0)
            throw FormatError(source, lineno, "PER out of [0,1]");
        if (row.ber < 0.0 || row.ber > 1.0)
            throw FormatError(source, lineno, "BER out of [0,1]");
        rows.push_back(row);
    }
    if (rows.empty())
        throw FormatError(source, lineno, "SNR table has no rows");

    std::sort(rows.begin(), rows.end(),
              [](const SnrPerRow& a, const SnrPerRow& b) { return a.snr_db < b.snr_db; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].snr_db == rows[i - 1].snr_db)
            throw FormatError(source, 0,
                              "duplicate SNR value " + std::to_string(rows[i].snr_db));
    return SnrPerTable{std::move(rows)};
}

SnrPerTable parse_snr_table(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse_snr_table(in, source);
}

SnrPerTable load_snr_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open SNR table file: " + path);
    return parse_snr_table(in, path);
}

SnrPerTable default_snr_table() {
    SnrPerTable table;
    table.rows.reserve(41);
    for (int i = 0; i <= 40; ++i) {
        const double snr = -2.0 + 0.5 * i;
        // linear from (-2, 1) down to (8, 0.1), then from (8, 0.1) down to (18, 0)
        const double per = snr <= 8.0 ? 1.0 - 0.09 * (snr + 2.0) : 0.1 - 0.01 * (snr - 8.0);
        table.rows.push_back(SnrPerRow{snr, per, per * 1e-3});
    }
    return table;
}

const SnrPerRow& lookup(const SnrPerTable& table, double snr_db) {
    if (table.rows.empty())
        throw std::logic_error("lookup: empty SNR table");
    const auto& rows = table.rows;
    auto it = std::lower_bound(rows.begin(), rows.end(), snr_db,
                               [](const SnrPerRow& r, double v) { return r.snr_db < v; });
    if (it == rows.begin()) return *it;
    if (it == rows.end()) return rows.back();
    const auto& lo = *(it - 1);
    const auto& hi = *it;
    // ties go to the lower-SNR row
    return (snr_db - lo.snr_db) <= (hi.snr_db - snr_db) ? lo : hi;
}

Outcome attempt_reception(const RadioConfig& config, const Position& tx, const Position& rx,
                          RngStream& rng) {
    if (distance_km(tx, rx) > config.range_km)
        return Outcome::OutOfRange;
    const auto snr = linkbudget::link_snr_db(config.link, tx, rx);
    if (!snr)
        return Outcome::OutOfRange;
    const double per = lookup(config.table, *snr).per;
    return rng.uniform01() >= per ? Outcome::Delivered : Outcome::LostChannel;
}

namespace {

ValidationPoint validate_one(const RadioConfig& config, double d_km, int packets,
                             std::uint64_t seed, int index) {
    const Position rx{0.0, 0.0, 30.0};
    const Position tx{d_km, 0.0, 30.0};

    double expected = 1.0;
    if (d_km <= config.range_km) {
        if (const auto snr = linkbudget::link_snr_db(config.link, tx, rx))
            expected = lookup(config.table, *snr).per;
    }

    RngStream rng(seed, "radio/d" + std::to_string(index));
    long lost = 0;
    for (int i = 0; i < packets; ++i)
        if (attempt_reception(config, tx, rx, rng) != Outcome::Delivered) ++lost;

    return ValidationPoint{d_km, expected, static_cast<double>(lost) / packets};
}

} // namespace

std::vector<ValidationPoint> validate_radio(const RadioConfig& config,
                                            std::span<const double> distances_km,
                                            int packets_per_distance, std::uint64_t seed,
                                            bool parallel) {
    if (packets_per_distance < 1)
        throw std::invalid_argument("validate_radio: packets_per_distance must be >= 1");
    std::vector<ValidationPoint> points(distances_km.size());
    const int count = static_cast<int>(distances_km.size());
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < count; ++i)
            points[i] = validate_one(config, distances_km[i], packets_per_distance, seed, i);
    } else {
        for (int i = 0; i < count; ++i)
            points[i] = validate_one(config, distances_km[i], packets_per_distance, seed, i);
    }
    return points;
}

void write_validation_csv(const std::vector<ValidationPoint>& points, std::ostream& out) {
    out << "distance_km,expected_per,observed_per\n";
    char buf[96];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%.6g,%.6f,%.6f\n", p.distance_km, p.expected_per,
                      p.observed_per);
        out << buf;
    }
}

} // namespace aerosim::radio
