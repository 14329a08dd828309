#include "aerosim/linkbudget.hpp"

#include <cmath>
#include <stdexcept>

namespace aerosim::linkbudget {

namespace {
// FSPL constant for d in km and f in MHz, used verbatim.
constexpr double kFsplConstDb = 32.4478;
} // namespace

double radio_horizon_km(double h_tx_km, double h_rx_km) {
    if (h_tx_km < 0.0 || h_rx_km < 0.0)
        throw std::invalid_argument("radio_horizon_km: negative antenna height");
    return 130.4 * (std::sqrt(h_tx_km) + std::sqrt(h_rx_km));
}

PathLoss fspl_db(double d_km, double f_mhz, double h_tx_km, double h_rx_km) {
    if (d_km <= 0.0)
        throw std::invalid_argument("fspl_db: distance must be positive");
    if (f_mhz <= 0.0)
        throw std::invalid_argument("fspl_db: frequency must be positive");
    if (d_km >= radio_horizon_km(h_tx_km, h_rx_km))
        return std::nullopt;
    return 20.0 * std::log10(d_km) + 20.0 * std::log10(f_mhz) + kFsplConstDb;
}

double noise_floor_dbm(const LinkBudgetParams& p) {
    return p.noise_figure_db + p.noise_density_dbm_hz + 10.0 * std::log10(p.bandwidth_hz);
}

std::optional<double> received_power_dbm(const LinkBudgetParams& p, PathLoss loss) {
    if (!loss)
        return std::nullopt;
    return p.tx_power_dbm + p.tx_gain_dbi - p.tx_loss_db + p.rx_gain_dbi - p.rx_loss_db - *loss;
}

double snr_db(const LinkBudgetParams& p, double p_rx_dbm) {
    return p_rx_dbm - noise_floor_dbm(p);
}

std::optional<double> link_snr_db(const LinkBudgetParams& p, const Position& tx, const Position& rx) {
    const double d = distance_km(tx, rx);
    if (d == 0.0)
        throw std::invalid_argument("link_snr_db: coincident positions");
    const PathLoss loss = fspl_db(d, p.frequency_mhz, tx.z, rx.z);
    const auto p_rx = received_power_dbm(p, loss);
    if (!p_rx)
        return std::nullopt;
    return snr_db(p, *p_rx);
}

double calibrated_tx_power_dbm(const LinkBudgetParams& base) {
    const double d = distance_km(kCalibrationTx, kCalibrationRx);
    const PathLoss loss = fspl_db(d, base.frequency_mhz, kCalibrationTx.z, kCalibrationRx.z);
    if (!loss)
        throw std::invalid_argument("calibrated_tx_power_dbm: anchor geometry beyond horizon");
    // SNR = P_tx + gains - losses - L_p - noise floor, solved for P_tx.
    return kCalibrationSnrDb + noise_floor_dbm(base) + *loss -
           base.tx_gain_dbi + base.tx_loss_db - base.rx_gain_dbi + base.rx_loss_db;
}

LinkBudgetParams default_params() {
    LinkBudgetParams p;
    p.tx_power_dbm = calibrated_tx_power_dbm(p);
    return p;
}

} // namespace aerosim::linkbudget
