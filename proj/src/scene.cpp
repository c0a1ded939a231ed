#include "ambiarray/scene.hpp"

#include <algorithm>
#include <cmath>

#include "ambiarray/io.hpp"

namespace ambiarray {

void PlaneWaveScene::validate() const {
    if (!(sample_rate > 0.0)) throw DomainError("scene sample rate must be positive");
    if (waves.empty()) throw DomainError("scene has no waves");
    for (const auto& w : waves)
        if (w.delay_s < 0.0 || !std::isfinite(w.delay_s) || !std::isfinite(w.gain))
            throw DomainError("wave gains and delays must be finite, delays nonnegative");
}

void RoomSpec::validate() const {
    for (int i = 0; i < 3; ++i) {
        if (!(dims[i] > 0.0)) throw DomainError("room dimensions must be positive");
        if (source[i] <= 0.0 || source[i] >= dims[i])
            throw DomainError("source must lie strictly inside the room");
        if (receiver[i] <= 0.0 || receiver[i] >= dims[i])
            throw DomainError("receiver must lie strictly inside the room");
    }
    if (!(rt60 > 0.0)) throw DomainError("rt60 must be positive");
    if (max_image_order < 0) throw DomainError("image order must be >= 0");
    if ((source - receiver).norm() < 1e-6)
        throw DomainError("source and receiver coincide");
}

double sabine_absorption(const RoomSpec& room) {
    room.validate();
    const double volume = room.dims.prod();
    const double surface = 2.0 * (room.dims[0] * room.dims[1] + room.dims[0] * room.dims[2] +
                                  room.dims[1] * room.dims[2]);
    const double alpha = 0.161 * volume / (surface * room.rt60);
    // Short rt60 can push the Sabine inversion past total absorption; clamp so
    // the anechoic limit (reflection gains -> 0, direct path kept) is reached
    // smoothly instead of failing.
    return std::min(alpha, 1.0);
}

PlaneWaveScene image_source_scene(const RoomSpec& room, double sample_rate, double sound_speed) {
    room.validate();
    if (!(sound_speed > 0.0)) throw DomainError("sound speed must be positive");
    const double beta = std::sqrt(1.0 - sabine_absorption(room));
    const int k = room.max_image_order;

    PlaneWaveScene scene;
    scene.sample_rate = sample_rate;
    scene.waves.reserve(size_t(2 * k + 1) * (2 * k + 1) * (2 * k + 1));
    auto image_coord = [](int n, double length, double src) {
        return n * length + (n % 2 == 0 ? src : length - src);
    };
    for (int nx = -k; nx <= k; ++nx) {
        for (int ny = -k; ny <= k; ++ny) {
            for (int nz = -k; nz <= k; ++nz) {
                const Vector3d img(image_coord(nx, room.dims[0], room.source[0]),
                                   image_coord(ny, room.dims[1], room.source[1]),
                                   image_coord(nz, room.dims[2], room.source[2]));
                const Vector3d path = img - room.receiver;
                const double dist = path.norm();
                const int reflections = std::abs(nx) + std::abs(ny) + std::abs(nz);
                PlaneWave w;
                w.direction = Direction::from_unit(path);
                w.gain = std::pow(beta, reflections) / dist;
                w.delay_s = dist / sound_speed;
                scene.waves.push_back(w);
            }
        }
    }
    std::sort(scene.waves.begin(), scene.waves.end(), [](const PlaneWave& a, const PlaneWave& b) {
        return std::tie(a.delay_s, a.direction.theta, a.direction.phi) <
               std::tie(b.delay_s, b.direction.theta, b.direction.phi);
    });
    return scene;
}

RoomSpec demo_room_spec() { return RoomSpec{}; }

PlaneWaveScene scene_preset(const std::string& name, double sample_rate) {
    RoomSpec room = demo_room_spec();
    if (name == "demo_room") return image_source_scene(room, sample_rate);
    if (name == "demo_room_anechoic") {
        room.max_image_order = 0;
        return image_source_scene(room, sample_rate);
    }
    throw ConfigError("unknown scene preset '" + name +
                      "' (have demo_room, demo_room_anechoic)");
}

void write_scene_json(const std::filesystem::path& path, const PlaneWaveScene& scene) {
    scene.validate();
    json j;
    j["schema_version"] = 1;
    j["kind"] = "plane_wave_scene";
    j["sample_rate"] = scene.sample_rate;
    j["waves"] = json::array();
    for (const auto& w : scene.waves) {
        j["waves"].push_back({{"theta_deg", rad2deg(w.direction.theta)},
                              {"phi_deg", rad2deg(w.direction.phi)},
                              {"gain", w.gain},
                              {"delay_s", w.delay_s}});
    }
    write_json_file(path, j);
}

PlaneWaveScene read_scene_json(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    try {
        PlaneWaveScene scene;
        scene.sample_rate = j.at("sample_rate").get<double>();
        for (const auto& w : j.at("waves")) {
            PlaneWave pw;
            pw.direction = Direction::from_degrees(w.at("theta_deg").get<double>(),
                                                   w.at("phi_deg").get<double>());
            pw.gain = w.at("gain").get<double>();
            pw.delay_s = w.at("delay_s").get<double>();
            scene.waves.push_back(pw);
        }
        scene.validate();
        return scene;
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

SceneOnGrid project_scene(const PlaneWaveScene& scene, const DirectionGrid& grid,
                          const FrequencyGrid& freqs, const VectorXcd& source_spectrum) {
    scene.validate();
    grid.validate();
    freqs.validate();
    if (source_spectrum.size() != freqs.bin_count())
        throw DimensionError("source spectrum length does not match frequency grid");

    std::vector<Vector3d> units(grid.size());
    for (int q = 0; q < grid.size(); ++q) units[q] = grid.directions[q].unit();

    SceneOnGrid out;
    out.grid_size = grid.size();
    out.amplitudes = MatrixXcd::Zero(grid.size(), freqs.bin_count());
    for (const auto& w : scene.waves) {
        const Vector3d u = w.direction.unit();
        int best = 0;
        double best_dot = -2.0;
        for (int q = 0; q < grid.size(); ++q) {
            const double d = u.dot(units[q]);
            if (d > best_dot) {
                best_dot = d;
                best = q;
            }
        }
        out.max_snap_angle =
            std::max(out.max_snap_angle, std::acos(std::clamp(best_dot, -1.0, 1.0)));
        for (int j = 0; j < freqs.bin_count(); ++j) {
            const double phase = -2.0 * kPi * freqs.bin_hz(j) * w.delay_s;
            out.amplitudes(best, j) += w.gain * std::polar(1.0, phase) * source_spectrum[j];
        }
    }
    return out;
}

namespace {

uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double to_unit_open(uint64_t u) {  // (0, 1)
    return (double(u >> 11) + 0.5) / 9007199254740992.0;
}

}  // namespace

void noise_gauss_pair(uint64_t seed, uint64_t counter, double& g1, double& g2) {
    const uint64_t a = splitmix64(seed ^ splitmix64(counter));
    const uint64_t b = splitmix64(a ^ 0x7f4a7c15ull);
    const double r = std::sqrt(-2.0 * std::log(to_unit_open(a)));
    const double phi = 2.0 * kPi * to_unit_open(b);
    g1 = r * std::cos(phi);
    g2 = r * std::sin(phi);
}

MicSpectra mic_spectra(const SceneOnGrid& scene, const std::vector<SteeringMatrix>& steering,
                       const FrequencyGrid& freqs, const NoiseModel& noise) {
    freqs.validate();
    if (static_cast<int>(steering.size()) != freqs.bin_count())
        throw DimensionError("steering set size does not match frequency grid");
    if (scene.amplitudes.cols() != freqs.bin_count())
        throw DimensionError("scene bin count does not match frequency grid");
    if (noise.variance < 0.0) throw DomainError("noise variance must be >= 0");

    const int nmic = static_cast<int>(steering.front().entries.rows());
    MicSpectra out;
    out.freqs = freqs;
    out.bins.resize(nmic, freqs.bin_count());
    for (int j = 0; j < freqs.bin_count(); ++j) {
        const MatrixXcd& v = steering[j].entries;
        if (v.cols() != scene.grid_size)
            throw DimensionError("steering direction count does not match scene grid");
        out.bins.col(j) = v * scene.amplitudes.col(j);
    }
    if (noise.variance > 0.0) {
        const double sigma = std::sqrt(noise.variance);
        const int last = freqs.bin_count() - 1;
        for (int j = 0; j < freqs.bin_count(); ++j) {
            for (int i = 0; i < nmic; ++i) {
                double g1, g2;
                noise_gauss_pair(noise.seed, uint64_t(j) * 0x10000ull + uint64_t(i), g1, g2);
                if (j == 0 || j == last)  // keep the time-domain signal real
                    out.bins(i, j) += sigma * g1;
                else
                    out.bins(i, j) += sigma * cdouble(g1, g2) / std::sqrt(2.0);
            }
        }
    }
    return out;
}

BinauralSpectra reference_binaural(const SceneOnGrid& scene, const HrtfSet& hrtf) {
    hrtf.validate();
    if (scene.grid_size != hrtf.grid.size())
        throw DimensionError("scene grid does not match hrtf grid");
    if (scene.amplitudes.cols() != hrtf.freqs.bin_count())
        throw DimensionError("scene bin count does not match hrtf frequency grid");
    BinauralSpectra out;
    out.freqs = hrtf.freqs;
    out.left.resize(hrtf.freqs.bin_count());
    out.right.resize(hrtf.freqs.bin_count());
    for (int j = 0; j < hrtf.freqs.bin_count(); ++j) {
        out.left[j] = hrtf.left.col(j).transpose() * scene.amplitudes.col(j);
        out.right[j] = hrtf.right.col(j).transpose() * scene.amplitudes.col(j);
    }
    return out;
}

}  // namespace ambiarray
