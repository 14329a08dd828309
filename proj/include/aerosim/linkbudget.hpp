#ifndef AEROSIM_LINKBUDGET_HPP
#define AEROSIM_LINKBUDGET_HPP

#include <optional>

#include "aerosim/geometry.hpp"

namespace aerosim::linkbudget {

/// RF constants of the link-budget chain. dB/dBm/dBi throughout, f in MHz,
/// bandwidth in Hz.
struct LinkBudgetParams {
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 0.0;
    double tx_loss_db = 0.0;
    double rx_gain_dbi = 0.0;
    double rx_loss_db = 0.0;
    double frequency_mhz = 968.0;
    double noise_figure_db = 6.0;
    double noise_density_dbm_hz = -174.0;
    double bandwidth_hz = 500e3;
};

/// Path loss in dB; nullopt means infinite (beyond the radio horizon).
using PathLoss = std::optional<double>;

/// Farthest line-of-sight propagation distance for antenna heights in km.
double radio_horizon_km(double h_tx_km, double h_rx_km);

/// Free-space path loss for distance d (km) at frequency f (MHz); infinite
/// at or beyond the radio horizon of the given heights.
PathLoss fspl_db(double d_km, double f_mhz, double h_tx_km, double h_rx_km);

/// Thermal noise floor F_N + N0 + 10 log10(B), dBm.
double noise_floor_dbm(const LinkBudgetParams& p);

/// Received power for a given path loss; nullopt propagates.
std::optional<double> received_power_dbm(const LinkBudgetParams& p, PathLoss loss);

/// SNR of a received power against the configured noise floor.
double snr_db(const LinkBudgetParams& p, double p_rx_dbm);

/// Full chain for two positions: 3D slant distance, heights from z
/// coordinates. nullopt beyond the horizon; coincident positions are an error.
std::optional<double> link_snr_db(const LinkBudgetParams& p, const Position& tx, const Position& rx);

/// Calibration anchor: a transmitter at (370.4, 0, 0.0001) km heard by a
/// receiver at (0, 0, 30) km must come in at exactly this SNR.
inline constexpr Position kCalibrationTx{370.4, 0.0, 0.0001};
inline constexpr Position kCalibrationRx{0.0, 0.0, 30.0};
inline constexpr double kCalibrationSnrDb = 8.0;

/// Transmit power that makes link_snr_db hit the calibration anchor for the
/// given gains/losses/noise parameters (tx_power_dbm of `base` is ignored).
double calibrated_tx_power_dbm(const LinkBudgetParams& base);

/// Shipped defaults: 968 MHz, F_N 6 dB, N0 -174 dBm/Hz, B 500 kHz, unity
/// gains and losses, tx power calibrated to the anchor above.
LinkBudgetParams default_params();

} // namespace aerosim::linkbudget

#endif
