#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "aerosim/config.hpp"
#include "aerosim/errors.hpp"
#include "aerosim/linkbudget.hpp"
#include "aerosim/radio.hpp"
#include "aerosim/scenario.hpp"
#include "aerosim/tracegen.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

namespace fs = std::filesystem;
using namespace aerosim;

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("AEROSIM_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

// Data files are written to a temporary name and renamed into place, so a
// crash never leaves a half-written CSV behind.
void write_file(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

int cmd_simulate(const std::string& config_path, std::optional<int> runs,
                 std::optional<std::uint64_t> seed, const std::string& out_dir, bool serial,
                 bool packet_log) {
    const auto doc = config::ConfigDocument::load(config_path);
    scenario::ScenarioConfig cfg = scenario::read_scenario_config(doc);
    doc.reject_unknown();
    if (runs) cfg.runs = *runs;
    if (seed) cfg.base_seed = *seed;
    if (cfg.runs < 1)
        throw ConfigError("--runs must be >= 1");

    fs::create_directories(out_dir);
    const auto results = scenario::run_sweep(cfg, !serial);

    std::ostringstream runs_csv;
    scenario::write_run_csv(results, runs_csv);
    write_file(fs::path(out_dir) / "runs.csv", runs_csv.str());

    std::ostringstream agg_csv;
    scenario::write_aggregate_csv(scenario::aggregate(results), agg_csv);
    write_file(fs::path(out_dir) / "aggregate.csv", agg_csv.str());

    if (packet_log) {
        std::ostringstream pkt_csv;
        scenario::write_packet_csv(results, pkt_csv);
        write_file(fs::path(out_dir) / "packets.csv", pkt_csv.str());
    }

    std::cout << "simulate: " << results.size() << " run(s) -> " << out_dir << "\n";
    return 0;
}

int cmd_validate_radio(const std::string& config_path, const std::string& out_dir, bool serial) {
    const auto doc = config::ConfigDocument::load(config_path);

    radio::RadioConfig radio_cfg;
    const std::string table = doc.get_string("radio.snr_table", "builtin");
    radio_cfg.table = table == "builtin" ? radio::default_snr_table()
                                         : radio::load_snr_table(doc.get_path("radio.snr_table"));
    radio_cfg.range_km = doc.get_double("radio.range_km", 1500.0);
    radio_cfg.link.frequency_mhz = doc.get_double("link.f_mhz", 968.0);
    radio_cfg.link.noise_figure_db = doc.get_double("link.noise_figure_db", 6.0);
    radio_cfg.link.noise_density_dbm_hz = doc.get_double("link.n0_dbm_hz", -174.0);
    radio_cfg.link.bandwidth_hz = doc.get_double("link.bandwidth_hz", 500e3);
    const std::string ptx = doc.get_string("link.p_tx_dbm", "auto");
    radio_cfg.link.tx_power_dbm = ptx == "auto"
                                      ? linkbudget::calibrated_tx_power_dbm(radio_cfg.link)
                                      : std::stod(ptx);

    const auto distances = doc.get_double_list("validate.distances_km");
    const int packets = static_cast<int>(doc.get_int("validate.packets_per_distance", 10000));
    const std::uint64_t seed = doc.get_u64("validate.seed", 1);
    doc.reject_unknown();

    const auto points = radio::validate_radio(radio_cfg, distances, packets, seed, !serial);

    fs::create_directories(out_dir);
    std::ostringstream csv;
    radio::write_validation_csv(points, csv);
    write_file(fs::path(out_dir) / "validate_radio.csv", csv.str());

    std::cout << "validate-radio: " << points.size() << " distance(s) -> " << out_dir << "\n";
    return 0;
}

int cmd_gen_traces(const std::string& config_path, const std::string& out_dir) {
    const auto doc = config::ConfigDocument::load(config_path);
    scenario::ScenarioConfig cfg = scenario::read_scenario_config(doc);
    doc.reject_unknown();
    if (cfg.files)
        throw ConfigError("gen-traces needs mobility.source=synthetic");
    if (cfg.user_counts.size() != 1)
        throw ConfigError("gen-traces needs a single value in scenario.user_counts");

    tracegen::SyntheticFlightParams params = cfg.synthetic;
    params.count = cfg.user_counts.front();
    RngStream rng(cfg.base_seed, "tracegen");
    const auto mob = tracegen::generate_synthetic_flights(params, cfg.oca, cfg.sim_end_s, rng);

    fs::create_directories(out_dir);
    std::ostringstream mob_out;
    mobility::write_mobility_trace(mob, mob_out);
    write_file(fs::path(out_dir) / "mobility.trace", mob_out.str());

    std::ostringstream manifest;
    for (std::size_t i = 0; i < mob.node_count(); ++i) {
        const auto events = tracegen::detect_crossings(mob, i, cfg.oca);
        char name[32];
        std::snprintf(name, sizeof name, "msg_%04zu.csv", i);
        std::ostringstream trace_out;
        tracegen::write_message_trace(events, trace_out);
        write_file(fs::path(out_dir) / name, trace_out.str());
        manifest << i << ' ' << (fs::path(out_dir) / name).string() << '\n';
    }
    write_file(fs::path(out_dir) / "manifest.txt", manifest.str());

    std::cout << "gen-traces: " << mob.node_count() << " aircraft -> " << out_dir << "\n";
    return 0;
}

int cmd_linkbudget(double d_km, double f_mhz, double h_tx_km, double h_rx_km,
                   const std::string& params_path) {
    linkbudget::LinkBudgetParams params;
    if (!params_path.empty()) {
        const auto doc = config::ConfigDocument::load(params_path);
        params.frequency_mhz = doc.get_double("link.f_mhz", 968.0);
        params.noise_figure_db = doc.get_double("link.noise_figure_db", 6.0);
        params.noise_density_dbm_hz = doc.get_double("link.n0_dbm_hz", -174.0);
        params.bandwidth_hz = doc.get_double("link.bandwidth_hz", 500e3);
        params.tx_gain_dbi = doc.get_double("link.tx_gain_dbi", 0.0);
        params.tx_loss_db = doc.get_double("link.tx_loss_db", 0.0);
        params.rx_gain_dbi = doc.get_double("link.rx_gain_dbi", 0.0);
        params.rx_loss_db = doc.get_double("link.rx_loss_db", 0.0);
        const std::string ptx = doc.get_string("link.p_tx_dbm", "auto");
        params.tx_power_dbm =
            ptx == "auto" ? linkbudget::calibrated_tx_power_dbm(params) : std::stod(ptx);
        doc.reject_unknown();
    } else {
        params = linkbudget::default_params();
    }
    params.frequency_mhz = f_mhz;

    const double horizon = linkbudget::radio_horizon_km(h_tx_km, h_rx_km);
    const auto loss = linkbudget::fspl_db(d_km, f_mhz, h_tx_km, h_rx_km);
    const auto p_rx = linkbudget::received_power_dbm(params, loss);

    std::cout << "horizon_km,fspl_db,p_rx_dbm,snr_db\n";
    char buf[128];
    if (loss) {
        std::snprintf(buf, sizeof buf, "%.4f,%.4f,%.4f,%.4f\n", horizon, *loss, *p_rx,
                      linkbudget::snr_db(params, *p_rx));
    } else {
        std::snprintf(buf, sizeof buf, "%.4f,inf,none,none\n", horizon);
    }
    std::cout << buf;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trace-driven aeronautical ad-hoc network simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", params_path;
    std::optional<int> runs;
    std::optional<std::uint64_t> seed;
    bool serial = false, packet_log = false;
    double d_km = 0, f_mhz = 968, h_tx_km = 0, h_rx_km = 0;

    auto* simulate = app.add_subcommand("simulate", "Run the OCA crossing scenario sweep");
    simulate->add_option("--config", config_path, "Scenario config file")->required();
    simulate->add_option("--runs", runs, "Override sim.runs");
    simulate->add_option("--seed", seed, "Override sim.base_seed");
    simulate->add_option("--out", out_dir, "Output directory");
    simulate->add_flag("--serial", serial, "Disable the parallel sweep");
    simulate->add_flag("--packet-log", packet_log, "Also write per-packet CSV");

    auto* validate = app.add_subcommand("validate-radio", "Monte Carlo PER-vs-distance validation");
    validate->add_option("--config", config_path, "Validation config file")->required();
    validate->add_option("--out", out_dir, "Output directory");
    validate->add_flag("--serial", serial, "Disable the parallel sweep");

    auto* gen = app.add_subcommand("gen-traces", "Write synthetic mobility + message traces");
    gen->add_option("--config", config_path, "Scenario config file")->required();
    gen->add_option("--out", out_dir, "Output directory");

    auto* budget = app.add_subcommand("linkbudget", "Print the link-budget chain as CSV");
    budget->add_option("--d", d_km, "Distance, km")->required();
    budget->add_option("--f", f_mhz, "Frequency, MHz")->required();
    budget->add_option("--htx", h_tx_km, "Transmitter height, km")->required();
    budget->add_option("--hrx", h_rx_km, "Receiver height, km")->required();
    budget->add_option("--params", params_path, "Link parameter config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    apply_thread_cap();
    try {
        if (simulate->parsed())
            return cmd_simulate(config_path, runs, seed, out_dir, serial, packet_log);
        if (validate->parsed())
            return cmd_validate_radio(config_path, out_dir, serial);
        if (gen->parsed())
            return cmd_gen_traces(config_path, out_dir);
        if (budget->parsed())
            return cmd_linkbudget(d_km, f_mhz, h_tx_km, h_rx_km, params_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
