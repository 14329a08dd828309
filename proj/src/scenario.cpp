#include "aerosim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <tuple>

#include "aerosim/engine.hpp"
#include "aerosim/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aerosim::scenario {

bool operator==(const RunResult& a, const RunResult& b) {
    auto key = [](const RunResult& r) {
        return std::tie(r.user_count, r.run_index, r.seed, r.sent, r.received, r.lost_channel,
                        r.out_of_range, r.still_queued);
    };
    if (key(a) != key(b) || a.packets.size() != b.packets.size()) return false;
    for (std::size_t i = 0; i < a.packets.size(); ++i) {
        const auto& p = a.packets[i];
        const auto& q = b.packets[i];
        if (p.source != q.source || p.created_at != q.created_at || p.slot_time != q.slot_time ||
            p.delivered_at != q.delivered_at || p.disposition != q.disposition)
            return false;
    }
    return true;
}

ScenarioConfig read_scenario_config(const config::ConfigDocument& doc) {
    ScenarioConfig cfg;

    if (doc.has("scenario.user_counts"))
        cfg.user_counts = doc.get_int_list("scenario.user_counts");
    for (int n : cfg.user_counts)
        if (n < 0) throw ConfigError("scenario.user_counts: negative user count");

    cfg.tdma.slot_duration_s = doc.get_double("tdma.slot_duration_s", 0.01);
    if (cfg.tdma.slot_duration_s <= 0.0)
        throw ConfigError("tdma.slot_duration_s must be positive");
    cfg.tdma.slots_per_frame = static_cast<int>(doc.get_int("tdma.slots_per_frame", 10));
    if (cfg.tdma.slots_per_frame < 1)
        throw ConfigError("tdma.slots_per_frame must be >= 1");
    cfg.tdma.retransmission_attempts =
        static_cast<int>(doc.get_int("tdma.retransmission_attempts", 0));
    if (cfg.tdma.retransmission_attempts != 0)
        throw ConfigError("tdma.retransmission_attempts: only 0 is supported");

    cfg.radio_range_km = doc.get_double("radio.range_km", 400.0);
    if (cfg.radio_range_km <= 0.0)
        throw ConfigError("radio.range_km must be positive");
    const std::string table = doc.get_string("radio.snr_table", "builtin");
    cfg.snr_table = table == "builtin" ? radio::default_snr_table()
                                       : radio::load_snr_table(doc.get_path("radio.snr_table"));

    cfg.link.frequency_mhz = doc.get_double("link.f_mhz", 968.0);
    cfg.link.noise_figure_db = doc.get_double("link.noise_figure_db", 6.0);
    cfg.link.noise_density_dbm_hz = doc.get_double("link.n0_dbm_hz", -174.0);
    cfg.link.bandwidth_hz = doc.get_double("link.bandwidth_hz", 500e3);
    cfg.link.tx_gain_dbi = doc.get_double("link.tx_gain_dbi", 0.0);
    cfg.link.tx_loss_db = doc.get_double("link.tx_loss_db", 0.0);
    cfg.link.rx_gain_dbi = doc.get_double("link.rx_gain_dbi", 0.0);
    cfg.link.rx_loss_db = doc.get_double("link.rx_loss_db", 0.0);
    if (cfg.link.frequency_mhz <= 0.0 || cfg.link.bandwidth_hz <= 0.0)
        throw ConfigError("link frequency and bandwidth must be positive");
    const std::string ptx = doc.get_string("link.p_tx_dbm", "auto");
    cfg.link.tx_power_dbm =
        ptx == "auto" ? linkbudget::calibrated_tx_power_dbm(cfg.link) : std::stod(ptx);

    cfg.oca.center = Position{doc.get_double("oca.center_x_km", 0.0),
                              doc.get_double("oca.center_y_km", 0.0),
                              doc.get_double("oca.center_z_km", 0.0001)};
    cfg.oca.range_km = doc.get_double("oca.range_km", 370.4);
    if (cfg.oca.range_km <= 0.0)
        throw ConfigError("oca.range_km must be positive");

    const std::string source = doc.get_string("mobility.source", "synthetic");
    if (source == "synthetic") {
        cfg.synthetic.speed_kmps = doc.get_double("synthetic.speed_kmps", 0.25);
        cfg.synthetic.altitude_km = doc.get_double("synthetic.altitude_km", 10.0);
        cfg.synthetic.clearance_km = doc.get_double("synthetic.clearance_km", 100.0);
        cfg.synthetic.corridor_half_km = doc.get_double("synthetic.corridor_half_km", 600.0);
    } else if (source == "file") {
        FileSource files;
        files.mobility_path = doc.get_path("mobility.file");
        files.manifest_path = doc.get_path("traffic.manifest");
        cfg.files = files;
    } else {
        throw ConfigError("mobility.source must be 'synthetic' or 'file'");
    }

    cfg.payload_bytes = static_cast<std::uint32_t>(doc.get_int("traffic.payload_bytes", 100));
    if (cfg.payload_bytes < 1)
        throw ConfigError("traffic.payload_bytes must be >= 1");

    cfg.sim_end_s = doc.get_double("sim.end_s", 10000.0);
    if (cfg.sim_end_s <= 0.0)
        throw ConfigError("sim.end_s must be positive");
    cfg.runs = static_cast<int>(doc.get_int("sim.runs", 10));
    if (cfg.runs < 1)
        throw ConfigError("sim.runs must be >= 1");
    cfg.base_seed = doc.get_u64("sim.base_seed", 1);

    return cfg;
}

namespace {

struct ManifestEntry {
    std::size_t node;
    std::string path;
};

std::vector<ManifestEntry> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open traffic manifest: " + path);
    std::vector<ManifestEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        ManifestEntry e;
        if (!(ls >> e.node >> e.path))
            throw FormatError(path, lineno, "expected '<node index> <trace path>'");
        entries.push_back(std::move(e));
    }
    return entries;
}

} // namespace

RunResult run_single(const ScenarioConfig& config, int user_count, int run_index) {
    const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(run_index);

    RunResult result;
    result.user_count = user_count;
    result.run_index = run_index;
    result.seed = seed;

    // --- inputs: mobility and per-aircraft message traces ---
    mobility::MobilityTrace mob;
    std::vector<traffic::MessageTrace> traces(static_cast<std::size_t>(user_count));
    if (config.files) {
        mob = mobility::load_mobility_trace(config.files->mobility_path);
        if (mob.node_count() < static_cast<std::size_t>(user_count))
            throw ConfigError("mobility file has " + std::to_string(mob.node_count()) +
                              " nodes, scenario needs " + std::to_string(user_count));
        for (const auto& e : read_manifest(config.files->manifest_path)) {
            if (e.node >= static_cast<std::size_t>(user_count)) continue;
            traces[e.node] = traffic::load_message_trace(e.path);
        }
    } else {
        tracegen::SyntheticFlightParams params = config.synthetic;
        params.count = user_count;
        RngStream gen_rng(seed, "tracegen");
        mob = tracegen::generate_synthetic_flights(params, config.oca, config.sim_end_s, gen_rng);
        for (int i = 0; i < user_count; ++i)
            for (const auto& ev : tracegen::detect_crossings(mob, static_cast<std::size_t>(i),
                                                             config.oca))
                traces[static_cast<std::size_t>(i)].timestamps.push_back(ev.t);
    }

    // --- wiring ---
    const auto n = static_cast<traffic::NodeId>(user_count);
    const traffic::NodeId ground_station = n; // aircraft are 0..n-1
    const Position gs_pos = config.oca.center;

    radio::RadioConfig radio_cfg{config.radio_range_km, config.snr_table, config.link};

    Simulation sim(config.sim_end_s);
    RngStream radio_rng(seed, "radio");

    tdma::TdmaScheduler scheduler(config.tdma.slots_per_frame);
    std::vector<std::unique_ptr<tdma::TdmaMac>> macs;
    macs.reserve(static_cast<std::size_t>(user_count));
    for (traffic::NodeId i = 0; i < n; ++i)
        macs.push_back(std::make_unique<tdma::TdmaMac>(i, scheduler));
    scheduler.register_node(ground_station); // GS never reports demand

    // Record indices travel alongside the MAC FIFO: per node, packets leave
    // the queue in enqueue order, so a plain deque of indices stays in sync.
    std::vector<std::deque<std::size_t>> pending(static_cast<std::size_t>(user_count));

    for (traffic::NodeId i = 0; i < n; ++i) {
        traffic::AppConfig app;
        app.destination = ground_station;
        app.payload_bytes = config.payload_bytes;
        app.trace = traces[i];
        for (const auto& pkt : traffic::packets_for(app, i, config.sim_end_s)) {
            sim.schedule(pkt.created_at, EventKind::MessageDue, [&, i, pkt]() {
                pending[i].push_back(result.packets.size());
                result.packets.push_back(PacketRecord{i, sim.now()});
                ++result.sent;
                macs[i]->enqueue(pkt);
            });
        }
    }

    // frame loop
    const double frame_dur = config.tdma.frame_duration_s();
    std::uint64_t frame_index = 0;
    std::function<void()> on_frame = [&]() {
        const double frame_start = sim.now();
        if (scheduler.total_demand() > 0) {
            const tdma::TdmaSchedule schedule = scheduler.compute_schedule(frame_index);
            for (auto& mac : macs) {
                for (auto& [slot, pkt] : mac->on_schedule(schedule)) {
                    const std::size_t rec_idx = pending[pkt.source].front();
                    pending[pkt.source].pop_front();
                    const double slot_time = frame_start + slot * config.tdma.slot_duration_s;
                    sim.schedule(slot_time, EventKind::SlotStart, [&, rec_idx, pkt]() {
                        PacketRecord& rec = result.packets[rec_idx];
                        rec.slot_time = sim.now();
                        const Position tx = mob.position_at(pkt.source, sim.now());
                        const radio::Outcome out =
                            radio::attempt_reception(radio_cfg, tx, gs_pos, radio_rng);
                        switch (out) {
                        case radio::Outcome::OutOfRange:
                            rec.disposition = Disposition::OutOfRange;
                            ++result.out_of_range;
                            break;
                        case radio::Outcome::LostChannel:
                            // no retransmission: the packet is gone
                            rec.disposition = Disposition::LostChannel;
                            ++result.lost_channel;
                            break;
                        case radio::Outcome::Delivered: {
                            const double arrival =
                                sim.now() + distance_km(tx, gs_pos) / kSpeedOfLightKmPerS;
                            // reception completing after sim end does not count
                            if (arrival <= sim.end()) {
                                sim.schedule(arrival, EventKind::ReceptionComplete, [&, rec_idx]() {
                                    PacketRecord& done = result.packets[rec_idx];
                                    done.disposition = Disposition::Delivered;
                                    done.delivered_at = sim.now();
                                    ++result.received;
                                });
                            }
                            break;
                        }
                        }
                    });
                }
            }
        }
        ++frame_index;
        const double next = frame_index * frame_dur;
        if (next <= sim.end())
            sim.schedule(next, EventKind::FrameStart, on_frame);
    };
    sim.schedule(0.0, EventKind::FrameStart, on_frame);

    sim.run();

    for (const auto& rec : result.packets)
        if (rec.disposition == Disposition::StillQueued) ++result.still_queued;
    return result;
}

std::vector<RunResult> run_sweep(const ScenarioConfig& config, bool parallel) {
    struct Job {
        int user_count;
        int run_index;
    };
    std::vector<Job> jobs;
    for (int n : config.user_counts)
        for (int r = 0; r < config.runs; ++r)
            jobs.push_back(Job{n, r});

    std::vector<RunResult> results(jobs.size());
    const int count = static_cast<int>(jobs.size());
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < count; ++i)
            results[i] = run_single(config, jobs[i].user_count, jobs[i].run_index);
    } else {
        for (int i = 0; i < count; ++i)
            results[i] = run_single(config, jobs[i].user_count, jobs[i].run_index);
    }
    return results;
}

std::vector<Aggregate> aggregate(const std::vector<RunResult>& results) {
    std::vector<int> counts;
    for (const auto& r : results)
        if (std::find(counts.begin(), counts.end(), r.user_count) == counts.end())
            counts.push_back(r.user_count);
    std::sort(counts.begin(), counts.end());

    std::vector<Aggregate> aggs;
    for (int n : counts) {
        Aggregate a;
        a.user_count = n;
        double sent_sum = 0.0, recv_sum = 0.0;
        for (const auto& r : results) {
            if (r.user_count != n) continue;
            ++a.runs;
            sent_sum += static_cast<double>(r.sent);
            recv_sum += static_cast<double>(r.received);
        }
        a.sent_mean = sent_sum / a.runs;
        a.received_mean = recv_sum / a.runs;
        if (a.runs < 2) {
            a.degenerate = true;
        } else {
            double ss = 0.0;
            for (const auto& r : results) {
                if (r.user_count != n) continue;
                const double d = static_cast<double>(r.received) - a.received_mean;
                ss += d * d;
            }
            a.received_std = std::sqrt(ss / (a.runs - 1));
            a.ci95 = 1.96 * a.received_std / std::sqrt(static_cast<double>(a.runs));
        }
        aggs.push_back(a);
    }
    return aggs;
}

void write_run_csv(const std::vector<RunResult>& results, std::ostream& out) {
    out << "run,n,seed,sent,received,lost_channel,out_of_range,still_queued\n";
    for (const auto& r : results)
        out << r.run_index << ',' << r.user_count << ',' << r.seed << ',' << r.sent << ','
            << r.received << ',' << r.lost_channel << ',' << r.out_of_range << ','
            << r.still_queued << '\n';
}

void write_aggregate_csv(const std::vector<Aggregate>& aggregates, std::ostream& out) {
    out << "n,sent_mean,received_mean,received_std,ci95\n";
    char buf[128];
    for (const auto& a : aggregates) {
        if (a.degenerate) {
            std::snprintf(buf, sizeof buf, "%d,%.6g,%.6g,0,na\n", a.user_count, a.sent_mean,
                          a.received_mean);
        } else {
            std::snprintf(buf, sizeof buf, "%d,%.6g,%.6g,%.6g,%.6g\n", a.user_count, a.sent_mean,
                          a.received_mean, a.received_std, a.ci95);
        }
        out << buf;
    }
}

void write_packet_csv(const std::vector<RunResult>& results, std::ostream& out) {
    static const char* names[] = {"delivered", "lost_channel", "out_of_range", "still_queued"};
    out << "run,n,source,created_at,slot_time,delivered_at,disposition\n";
    char buf[160];
    for (const auto& r : results) {
        for (const auto& p : r.packets) {
            std::snprintf(buf, sizeof buf, "%d,%d,%u,%.9g,%.9g,%.9g,%s\n", r.run_index,
                          r.user_count, p.source, p.created_at, p.slot_time, p.delivered_at,
                          names[static_cast<int>(p.disposition)]);
            out << buf;
        }
    }
}

} // namespace aerosim::scenario
