#pragma once

#include <filesystem>
#include <functional>

#include "ambiarray/render.hpp"

namespace ambiarray {

// Zero-phase fourth order Butterworth lowpass (forward-backward filtering
// with odd edge extension).
std::vector<double> butterworth_lowpass_zero_phase(const std::vector<double>& x,
                                                   double cutoff_hz, double sample_rate);

// Interaural time difference via the peak of the interaural cross correlation
//   IACC(tau) = sum_t left(t + tau) * right(t)
// after lowpass filtering both ears (cutoff <= 0 disables the filter).
// Positive values mean the right ear leads. Resolution is one sample; ties
// resolve to the smallest lag.
double itd_seconds(const std::vector<double>& left, const std::vector<double>& right,
                   double sample_rate, double max_lag_s = 1e-3, double lowpass_hz = 3000.0);

// Rounded-exponential auditory filter bank, centers uniform on the ERB-number
// scale. weight() is the power-domain response used for band energies.
struct ErbBank {
    std::vector<double> centers_hz;

    static double erb_number(double f_hz);
    static double erb_number_to_hz(double e);
    static double bandwidth_hz(double fc_hz);  // 24.7 * (1 + 4.37 fc/1000)
    static ErbBank standard();                 // 42 bands spanning 20 Hz to 8 kHz

    int band_count() const { return static_cast<int>(centers_hz.size()); }
    double weight(int band, double f_hz) const;
};

// Interaural level difference: per-band energies E = sum_f W(f) |X(f)|^2 on
// the rfft bins, band ILD = 10 log10(El / Er), averaged over bands.
double ild_db(const BinauralSpectra& spectra, const ErbBank& bank = ErbBank::standard(),
              std::vector<double>* per_band = nullptr);

// Horizontal-plane sweep comparing a binaural synthesis chain to a reference.
using BinauralSynth = std::function<BinauralSpectra(const Direction&)>;

struct LateralizationRow {
    double azimuth_deg;
    double itd_s, itd_ref_s, itd_err_s;
    double ild_db, ild_ref_db, ild_err_db;
};

struct LateralizationReport {
    double rotation_phi = 0.0, rotation_theta = 0.0;  // radians, set by the caller
    std::vector<LateralizationRow> rows;
};

LateralizationReport lateralization_sweep(const BinauralSynth& method,
                                          const BinauralSynth& reference,
                                          int azimuth_count = 360);

void write_lateralization_csv(const std::filesystem::path& path, const LateralizationReport& r,
                              const std::string& method);
void write_lateralization_json(const std::filesystem::path& path, const LateralizationReport& r,
                               const std::string& method);

}  // namespace ambiarray
