// Times the serial reference against the OpenMP sweep for the two
// embarrassingly parallel stages: the (user_count x run) scenario sweep and
// the Monte Carlo radio validation. Also checks that both paths agree.

#include <chrono>
#include <cstdio>
#include <vector>

#include "aerosim/radio.hpp"
#include "aerosim/scenario.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace aerosim;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both paths run serially\n");
#endif

    scenario::ScenarioConfig cfg;
    cfg.user_counts = {100, 200, 300};
    cfg.runs = 6;
    cfg.snr_table = radio::default_snr_table();
    cfg.link = linkbudget::default_params();

    auto t0 = Clock::now();
    const auto serial = scenario::run_sweep(cfg, false);
    const double t_serial = seconds_since(t0);

    t0 = Clock::now();
    const auto parallel = scenario::run_sweep(cfg, true);
    const double t_parallel = seconds_since(t0);

    const bool sweep_match = serial == parallel;
    std::printf("scenario sweep  (%zu runs): serial %.3fs, parallel %.3fs, speedup %.2fx, %s\n",
                serial.size(), t_serial, t_parallel, t_serial / t_parallel,
                sweep_match ? "results identical" : "RESULTS DIFFER");

    radio::RadioConfig radio_cfg{1500.0, radio::default_snr_table(), linkbudget::default_params()};
    std::vector<double> distances;
    for (double d = 80.0; d <= 1400.0; d += 20.0) distances.push_back(d);
    const int packets = 20000;

    t0 = Clock::now();
    const auto v_serial = radio::validate_radio(radio_cfg, distances, packets, 1, false);
    const double v_t_serial = seconds_since(t0);

    t0 = Clock::now();
    const auto v_parallel = radio::validate_radio(radio_cfg, distances, packets, 1, true);
    const double v_t_parallel = seconds_since(t0);

    bool radio_match = v_serial.size() == v_parallel.size();
    for (std::size_t i = 0; radio_match && i < v_serial.size(); ++i)
        radio_match = v_serial[i].observed_per == v_parallel[i].observed_per;
    std::printf("radio validation (%zu points): serial %.3fs, parallel %.3fs, speedup %.2fx, %s\n",
                v_serial.size(), v_t_serial, v_t_parallel, v_t_serial / v_t_parallel,
                radio_match ? "results identical" : "RESULTS DIFFER");

    return sweep_match && radio_match ? 0 : 1;
}
