#include "ambiarray/lateral.hpp"

#include <cmath>

#include "ambiarray/io.hpp"

namespace ambiarray {

namespace {

struct Biquad {
    double b0, b1, b2, a1, a2;

    void apply(std::vector<double>& x) const {
        double w1 = 0.0, w2 = 0.0;  // direct form II
        for (double& v : x) {
            const double w0 = v - a1 * w1 - a2 * w2;
            v = b0 * w0 + b1 * w1 + b2 * w2;
            w2 = w1;
            w1 = w0;
        }
    }
};

Biquad lowpass_section(double cutoff_hz, double fs, double q) {
    const double k = std::tan(kPi * cutoff_hz / fs);
    const double norm = 1.0 / (1.0 + k / q + k * k);
    return {k * k * norm, 2.0 * k * k * norm, k * k * norm, 2.0 * (k * k - 1.0) * norm,
            (1.0 - k / q + k * k) * norm};
}

}  // namespace

std::vector<double> butterworth_lowpass_zero_phase(const std::vector<double>& x,
                                                   double cutoff_hz, double sample_rate) {
    if (x.empty()) throw DomainError("cannot filter an empty signal");
    if (!(cutoff_hz > 0.0) || cutoff_hz >= sample_rate / 2.0)
        throw DomainError("cutoff must lie in (0, nyquist)");
    // fourth order Butterworth as two cascaded biquads
    const Biquad s1 = lowpass_section(cutoff_hz, sample_rate, 1.0 / (2.0 * std::cos(kPi / 8)));
    const Biquad s2 = lowpass_section(cutoff_hz, sample_rate, 1.0 / (2.0 * std::cos(3 * kPi / 8)));

    const size_t pad = std::min(x.size() - 1, size_t(24));
    std::vector<double> ext;
    ext.reserve(x.size() + 2 * pad);
    for (size_t i = 0; i < pad; ++i) ext.push_back(2.0 * x.front() - x[pad - i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (size_t i = 0; i < pad; ++i) ext.push_back(2.0 * x.back() - x[x.size() - 2 - i]);

    s1.apply(ext);
    s2.apply(ext);
    std::reverse(ext.begin(), ext.end());
    s1.apply(ext);
    s2.apply(ext);
    std::reverse(ext.begin(), ext.end());
    return {ext.begin() + pad, ext.begin() + pad + x.size()};
}

double itd_seconds(const std::vector<double>& left, const std::vector<double>& right,
                   double sample_rate, double max_lag_s, double lowpass_hz) {
    if (left.size() != right.size() || left.empty())
        throw DimensionError("itd needs equal-length nonempty ear signals");
    if (!(sample_rate > 0.0)) throw DomainError("sample rate must be positive");
    std::vector<double> l = left, r = right;
    if (lowpass_hz > 0.0) {
        l = butterworth_lowpass_zero_phase(l, lowpass_hz, sample_rate);
        r = butterworth_lowpass_zero_phase(r, lowpass_hz, sample_rate);
    }
    const long t_count = long(l.size());
    const long max_lag = std::min(t_count - 1, std::lround(max_lag_s * sample_rate));
    double best = -std::numeric_limits<double>::infinity();
    long best_lag = 0;
    for (long lag = -max_lag; lag <= max_lag; ++lag) {
        const long t0 = std::max(0L, -lag);
        const long t1 = std::min(t_count, t_count - lag);
        double acc = 0.0;
        for (long t = t0; t < t1; ++t) acc += l[t + lag] * r[t];
        if (acc > best || (acc == best && std::labs(lag) < std::labs(best_lag))) {
            best = acc;
            best_lag = lag;
        }
    }
    return double(best_lag) / sample_rate;
}

double ErbBank::erb_number(double f_hz) { return 21.4 * std::log10(1.0 + 0.00437 * f_hz); }

double ErbBank::erb_number_to_hz(double e) {
    return (std::pow(10.0, e / 21.4) - 1.0) / 0.00437;
}

double ErbBank::bandwidth_hz(double fc_hz) { return 24.7 * (1.0 + 4.37 * fc_hz / 1000.0); }

ErbBank ErbBank::standard() {
    ErbBank bank;
    const int bands = 42;
    const double e_lo = erb_number(20.0), e_hi = erb_number(8000.0);
    for (int i = 0; i < bands; ++i)
        bank.centers_hz.push_back(erb_number_to_hz(e_lo + (e_hi - e_lo) * i / (bands - 1.0)));
    return bank;
}

double ErbBank::weight(int band, double f_hz) const {
    if (band < 0 || band >= band_count()) throw DomainError("band index out of range");
    const double fc = centers_hz[band];
    const double g = std::abs(f_hz - fc) / fc;
    const double p = 4.0 * fc / bandwidth_hz(fc);
    return (1.0 + p * g) * std::exp(-p * g);
}

double ild_db(const BinauralSpectra& spectra, const ErbBank& bank, std::vector<double>* per_band) {
    spectra.validate();
    if (per_band) per_band->clear();
    double sum = 0.0;
    for (int b = 0; b < bank.band_count(); ++b) {
        double el = 0.0, er = 0.0;
        for (int j = 0; j < spectra.freqs.bin_count(); ++j) {
            const double w = bank.weight(b, spectra.freqs.bin_hz(j));
            el += w * std::norm(spectra.left[j]);
            er += w * std::norm(spectra.right[j]);
        }
        const double v = 10.0 * std::log10(std::max(el, 1e-300) / std::max(er, 1e-300));
        if (per_band) per_band->push_back(v);
        sum += v;
    }
    return sum / bank.band_count();
}

LateralizationReport lateralization_sweep(const BinauralSynth& method,
                                          const BinauralSynth& reference, int azimuth_count) {
    if (azimuth_count < 1) throw DomainError("need at least one azimuth");
    LateralizationReport rep;
    rep.rows.reserve(azimuth_count);
    for (int i = 0; i < azimuth_count; ++i) {
        const double az_deg = 360.0 * i / azimuth_count;
        const Direction dir = Direction::from_degrees(90.0, az_deg);
        const BinauralSpectra ps = method(dir);
        const BinauralSpectra rs = reference(dir);
        if (!(ps.freqs == rs.freqs))
            throw DimensionError("method and reference frequency grids differ");
        const StereoBuffer pt = to_time(ps);
        const StereoBuffer rt = to_time(rs);
        LateralizationRow row;
        row.azimuth_deg = az_deg;
        row.itd_s = itd_seconds(pt.left, pt.right, pt.sample_rate);
        row.itd_ref_s = itd_seconds(rt.left, rt.right, rt.sample_rate);
        row.itd_err_s = std::abs(row.itd_s - row.itd_ref_s);
        row.ild_db = ild_db(ps);
        row.ild_ref_db = ild_db(rs);
        row.ild_err_db = std::abs(row.ild_db - row.ild_ref_db);
        rep.rows.push_back(row);
    }
    return rep;
}

void write_lateralization_csv(const std::filesystem::path& path, const LateralizationReport& r,
                              const std::string& method) {
    CsvWriter csv(path, "lateralization/1",
                  {"method", "rotation_phi_deg", "rotation_theta_deg", "azimuth_deg", "itd_us",
                   "itd_ref_us", "itd_err_us", "ild_db", "ild_ref_db", "ild_err_db"});
    for (const auto& row : r.rows) {
        csv.row_mixed({method, CsvWriter::format(rad2deg(r.rotation_phi)),
                       CsvWriter::format(rad2deg(r.rotation_theta)),
                       CsvWriter::format(row.azimuth_deg), CsvWriter::format(row.itd_s * 1e6),
                       CsvWriter::format(row.itd_ref_s * 1e6),
                       CsvWriter::format(row.itd_err_s * 1e6), CsvWriter::format(row.ild_db),
                       CsvWriter::format(row.ild_ref_db), CsvWriter::format(row.ild_err_db)});
    }
}

void write_lateralization_json(const std::filesystem::path& path, const LateralizationReport& r,
                               const std::string& method) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = "lateralization_report";
    j["method"] = method;
    j["rotation_phi_deg"] = rad2deg(r.rotation_phi);
    j["rotation_theta_deg"] = rad2deg(r.rotation_theta);
    j["rows"] = json::array();
    for (const auto& row : r.rows) {
        j["rows"].push_back({{"azimuth_deg", row.azimuth_deg},
                             {"itd_us", row.itd_s * 1e6},
                             {"itd_ref_us", row.itd_ref_s * 1e6},
                             {"itd_err_us", row.itd_err_s * 1e6},
                             {"ild_db", row.ild_db},
                             {"ild_ref_db", row.ild_ref_db},
                             {"ild_err_db", row.ild_err_db}});
    }
    write_json_file(path, j);
}

}  // namespace ambiarray
