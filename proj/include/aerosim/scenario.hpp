#ifndef AEROSIM_SCENARIO_HPP
#define AEROSIM_SCENARIO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aerosim/config.hpp"
#include "aerosim/radio.hpp"
#include "aerosim/tdma.hpp"
#include "aerosim/tracegen.hpp"
#include "aerosim/traffic.hpp"

namespace aerosim::scenario {

/// Where aircraft mobility and message traces come from.
struct FileSource {
    std::string mobility_path;
    std::string manifest_path; // node index -> message trace path
};

struct ScenarioConfig {
    std::vector<int> user_counts{100, 200, 300, 400, 500};
    tdma::TdmaConfig tdma;
    double radio_range_km = 400.0;
    radio::SnrPerTable snr_table;
    linkbudget::LinkBudgetParams link;
    tracegen::OcaSpec oca;
    tracegen::SyntheticFlightParams synthetic; // used when `files` is empty
    std::optional<FileSource> files;
    std::uint32_t payload_bytes = 100;
    double sim_end_s = 10000.0;
    int runs = 10;
    std::uint64_t base_seed = 1;
};

/// Reads the simulate/gen-traces key set out of a config document.
ScenarioConfig read_scenario_config(const config::ConfigDocument& doc);

enum class Disposition { Delivered, LostChannel, OutOfRange, StillQueued };

struct PacketRecord {
    traffic::NodeId source;
    double created_at;
    double slot_time = -1.0;     // < 0: never transmitted
    double delivered_at = -1.0;  // < 0: not delivered
    Disposition disposition = Disposition::StillQueued;
};

struct RunResult {
    int user_count = 0;
    int run_index = 0;
    std::uint64_t seed = 0;
    std::uint64_t sent = 0;
    std::uint64_t received = 0;
    std::uint64_t lost_channel = 0;
    std::uint64_t out_of_range = 0;
    std::uint64_t still_queued = 0;
    std::vector<PacketRecord> packets;

    friend bool operator==(const RunResult&, const RunResult&);
};

/// One run: n aircraft crossing the OCA, ground station at its center,
/// entry/exit messages over the oracle TDMA and the trace-based radio.
/// Run r uses seed base_seed + r. Single-threaded and bit-reproducible.
RunResult run_single(const ScenarioConfig& config, int user_count, int run_index);

/// The full (user_count x run) sweep. Runs share only read-only inputs, so
/// the parallel path and the serial reference produce identical results.
std::vector<RunResult> run_sweep(const ScenarioConfig& config, bool parallel = true);

struct Aggregate {
    int user_count = 0;
    int runs = 0;
    double sent_mean = 0.0;
    double received_mean = 0.0;
    double received_std = 0.0; // sample std, n-1 denominator
    double ci95 = 0.0;         // normal-approximation half-width
    bool degenerate = false;   // single run: no spread estimate
};

std::vector<Aggregate> aggregate(const std::vector<RunResult>& results);

/// "run,n,seed,sent,received,lost_channel,out_of_range,still_queued" rows.
void write_run_csv(const std::vector<RunResult>& results, std::ostream& out);

/// "n,sent_mean,received_mean,received_std,ci95" rows.
void write_aggregate_csv(const std::vector<Aggregate>& aggregates, std::ostream& out);

/// Optional per-packet log.
void write_packet_csv(const std::vector<RunResult>& results, std::ostream& out);

} // namespace aerosim::scenario

#endif
