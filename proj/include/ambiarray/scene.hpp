#pragma once

#include <filesystem>

#include "ambiarray/encoder.hpp"
#include "ambiarray/grids.hpp"
#include "ambiarray/render.hpp"

namespace ambiarray {

// Far-field plane wave: arrival direction, broadband gain, arrival time.
struct PlaneWave {
    Direction direction;
    double gain = 1.0;
    double delay_s = 0.0;
};

struct PlaneWaveScene {
    double sample_rate = 48000.0;
    std::vector<PlaneWave> waves;

    void validate() const;
};

// Shoebox room with one corner at the origin and axis-aligned walls.
struct RoomSpec {
    Vector3d dims{8.0, 6.0, 4.0};
    Vector3d source{4.0, 3.0, 1.7};
    Vector3d receiver{2.6, 4.4, 1.7};
    double rt60 = 0.4;
    // Mirror images per axis; wave count is (2K+1)^3. The default reaches path
    // lengths past the -60 dB point of a 400 ms decay even along a 4 m axis
    // (343 m/s * 0.4 s / 4 m ~= 35 half-room crossings -> order 30 with the
    // direct path measured from the receiver).
    int max_image_order = 30;

    void validate() const;
};

// Uniform Sabine absorption for the requested reverberation time.
double sabine_absorption(const RoomSpec& room);

// Mirror-image expansion of the room into a plane wave list, sorted by
// arrival time. Gains are beta^(reflection count) / distance.
PlaneWaveScene image_source_scene(const RoomSpec& room, double sample_rate = 48000.0,
                                  double sound_speed = kSoundSpeed);

// Scene presets for the demo configs: "demo_room" (full image expansion) and
// "demo_room_anechoic" (direct sound only).
RoomSpec demo_room_spec();
PlaneWaveScene scene_preset(const std::string& name, double sample_rate = 48000.0);

void write_scene_json(const std::filesystem::path& path, const PlaneWaveScene& scene);
PlaneWaveScene read_scene_json(const std::filesystem::path& path);

// Plane wave amplitudes collapsed onto the nearest grid directions:
// s_q(k) = sum of gain * exp(-i 2 pi f delay) * spectrum(k) over the waves
// snapped to grid point q.
struct SceneOnGrid {
    int grid_size = 0;
    MatrixXcd amplitudes;          // grid_size x bin_count
    double max_snap_angle = 0.0;   // radians, worst direction quantization
};

SceneOnGrid project_scene(const PlaneWaveScene& scene, const DirectionGrid& grid,
                          const FrequencyGrid& freqs, const VectorXcd& source_spectrum);

// Additive complex sensor noise, deterministic in (seed, bin, mic). variance
// is E|n|^2 per bin; the DC and Nyquist bins get real noise of that variance.
struct NoiseModel {
    double variance = 0.0;
    uint64_t seed = 0;
};

// The standard normal pair behind NoiseModel, keyed by (seed, counter).
// Exposed for time-domain noise synthesis and for distribution tests.
void noise_gauss_pair(uint64_t seed, uint64_t counter, double& g1, double& g2);

MicSpectra mic_spectra(const SceneOnGrid& scene, const std::vector<SteeringMatrix>& steering,
                       const FrequencyGrid& freqs, const NoiseModel& noise = {});

// Reference ear spectra p = sum_q h_q s_q using an HRTF sampled on the same grid.
BinauralSpectra reference_binaural(const SceneOnGrid& scene, const HrtfSet& hrtf);

}  // namespace ambiarray
