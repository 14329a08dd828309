#ifndef AEROSIM_RADIO_HPP
#define AEROSIM_RADIO_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "aerosim/geometry.hpp"
#include "aerosim/linkbudget.hpp"
#include "aerosim/rng.hpp"

namespace aerosim::radio {

struct SnrPerRow {
    double snr_db;
    double per; // packet error rate, [0,1]
    double ber; // bit error rate, [0,1]; parsed and validated, not used for reception
};

/// Rows strictly ascending by SNR, at least one row.
struct SnrPerTable {
    std::vector<SnrPerRow> rows;
};

/// CSV, one "snr_db,per,ber" row per line, '#' comments allowed. Rows are
/// sorted after parsing; duplicate SNR values are rejected.
SnrPerTable parse_snr_table(std::istream& in, const std::string& source = "<snr-table>");
SnrPerTable parse_snr_table(const std::string& text, const std::string& source = "<snr-table>");
SnrPerTable load_snr_table(const std::string& path);

/// The shipped fixture: 41 rows, -2 dB (PER 1) to 18 dB (PER 0) in 0.5 dB
/// steps, piecewise linear through the (8 dB, PER 0.1) anchor.
SnrPerTable default_snr_table();

/// Row whose SNR is nearest the query; no interpolation. Equidistant ties
/// resolve to the lower-SNR (pessimistic) row.
const SnrPerRow& lookup(const SnrPerTable& table, double snr_db);

struct RadioConfig {
    double range_km = 400.0; // unit-disk communication range
    SnrPerTable table;
    linkbudget::LinkBudgetParams link;
};

enum class Outcome {
    Delivered,
    LostChannel,
    OutOfRange, // beyond unit-disk range or radio horizon
};

/// One transmission attempt: range/horizon gate, then a Bernoulli draw
/// against the PER of the nearest table row at the link SNR.
Outcome attempt_reception(const RadioConfig& config, const Position& tx, const Position& rx,
                          RngStream& rng);

struct ValidationPoint {
    double distance_km;
    double expected_per; // table lookup at the link SNR (1.0 if unreachable)
    double observed_per; // lost fraction over packets_per_distance attempts
};

/// Monte Carlo validation: receiver at (0,0,30) km, transmitter at (d,0,30)
/// km for each distance, packets_per_distance attempts each. Each distance
/// draws from its own derived stream, so results do not depend on evaluation
/// order or thread count.
std::vector<ValidationPoint> validate_radio(const RadioConfig& config,
                                            std::span<const double> distances_km,
                                            int packets_per_distance, std::uint64_t seed,
                                            bool parallel = true);

void write_validation_csv(const std::vector<ValidationPoint>& points, std::ostream& out);

} // namespace aerosim::radio

#endif
