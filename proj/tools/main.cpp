// Command line frontend: array analysis, filter/HRTF design, binaural
// rendering, objective evaluation and scene generation. Every command reads
// one JSON config (overridable per flag), writes its outputs plus a manifest
// with content hashes into --out-dir, and is deterministic given the config.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ambiarray/encoder.hpp"
#include "ambiarray/fft.hpp"
#include "ambiarray/geometry.hpp"
#include "ambiarray/grids.hpp"
#include "ambiarray/hrtf.hpp"
#include "ambiarray/io.hpp"
#include "ambiarray/lateral.hpp"
#include "ambiarray/metrics.hpp"
#include "ambiarray/render.hpp"
#include "ambiarray/scene.hpp"
#include "ambiarray/sh.hpp"
#include "ambiarray/steering.hpp"
#include "ambiarray/wav.hpp"

namespace fs = std::filesystem;
using namespace ambiarray;

namespace {

struct JobConfig {
    std::string geometry = "wearable";
    std::string hrtf = "analytic_sphere";
    std::string scene = "demo_room_anechoic";
    std::string room = "demo_room";
    std::string grid = "lebedev2702";
    std::string out_dir = "out";
    std::string artifacts_dir;  // defaults to out_dir
    std::string source_wav;
    std::vector<std::string> pipelines{"asm_magls", "asm_aamagls"};
    int order = 1;
    int hoa_order = 30;
    int null_order = 2;
    int mag_order = 1;
    double snr_ratio = 1000.0;
    double fade_min_hz = 800.0;
    double fade_max_hz = 1300.0;
    std::vector<double> rotations_deg{0.0, 30.0, 60.0};
    double sample_rate = 48000.0;
    int nfft = 1024;
    double svd_rel_tol = 1e-3;
    uint64_t seed = 1234;
    double noise_variance = 0.0;
    int azimuth_count = 360;
    int max_iterations = 50;
    double head_radius_m = 0.0875;
    bool weighted_design = false;       // quadrature weights in the filter design fit
    std::string aa_low_band = "aa_ls";  // other option: "ls" (plain SH projection)

    FrequencyGrid freqs() const { return FrequencyGrid{sample_rate, nfft}; }
    CrossfadeSpec fade() const { return CrossfadeSpec{fade_min_hz, fade_max_hz}; }
    IterOptions iters() const { return IterOptions{max_iterations, IterOptions{}.rel_tol}; }
    fs::path artifacts() const { return artifacts_dir.empty() ? out_dir : artifacts_dir; }
};

json config_json(const JobConfig& c) {
    json j;
    j["schema_version"] = 1;
    j["geometry"] = c.geometry;
    j["hrtf"] = c.hrtf;
    j["scene"] = c.scene;
    j["room"] = c.room;
    j["grid"] = c.grid;
    j["out_dir"] = c.out_dir;
    j["artifacts_dir"] = c.artifacts_dir;
    j["source_wav"] = c.source_wav;
    j["pipelines"] = c.pipelines;
    j["order"] = c.order;
    j["hoa_order"] = c.hoa_order;
    j["null_order"] = c.null_order;
    j["mag_order"] = c.mag_order;
    j["snr_ratio"] = c.snr_ratio;
    j["fade_min_hz"] = c.fade_min_hz;
    j["fade_max_hz"] = c.fade_max_hz;
    j["rotations_deg"] = c.rotations_deg;
    j["sample_rate"] = c.sample_rate;
    j["nfft"] = c.nfft;
    j["svd_rel_tol"] = c.svd_rel_tol;
    j["seed"] = c.seed;
    j["noise_variance"] = c.noise_variance;
    j["azimuth_count"] = c.azimuth_count;
    j["max_iterations"] = c.max_iterations;
    j["head_radius_m"] = c.head_radius_m;
    j["weighted_design"] = c.weighted_design;
    j["aa_low_band"] = c.aa_low_band;
    return j;
}

JobConfig config_from_file(const fs::path& path) {
    const json j = read_json_file(path);
    const json reference = config_json(JobConfig{});
    for (const auto& item : j.items())
        if (!reference.contains(item.key()))
            throw ConfigError(path.string() + ": unknown config key '" + item.key() + "'");
    JobConfig c;
    try {
        if (j.at("schema_version").get<int>() != 1)
            throw ConfigError(path.string() + ": unsupported config schema version");
        auto get = [&](const char* key, auto& field) {
            if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
        };
        get("geometry", c.geometry);
        get("hrtf", c.hrtf);
        get("scene", c.scene);
        get("room", c.room);
        get("grid", c.grid);
        get("out_dir", c.out_dir);
        get("artifacts_dir", c.artifacts_dir);
        get("source_wav", c.source_wav);
        get("pipelines", c.pipelines);
        get("order", c.order);
        get("hoa_order", c.hoa_order);
        get("null_order", c.null_order);
        get("mag_order", c.mag_order);
        get("snr_ratio", c.snr_ratio);
        get("fade_min_hz", c.fade_min_hz);
        get("fade_max_hz", c.fade_max_hz);
        get("rotations_deg", c.rotations_deg);
        get("sample_rate", c.sample_rate);
        get("nfft", c.nfft);
        get("svd_rel_tol", c.svd_rel_tol);
        get("seed", c.seed);
        get("noise_variance", c.noise_variance);
        get("azimuth_count", c.azimuth_count);
        get("max_iterations", c.max_iterations);
        get("head_radius_m", c.head_radius_m);
        get("weighted_design", c.weighted_design);
        get("aa_low_band", c.aa_low_band);
    } catch (const json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return c;
}

const std::set<std::string>& known_pipelines() {
    static const std::set<std::string> p{"hoa_hrtf", "foa_hrtf", "foa_magls", "asm_magls",
                                         "asm_aamagls"};
    return p;
}

bool is_array_pipeline(const std::string& p) { return p.rfind("asm_", 0) == 0; }

void check_pipelines(const std::vector<std::string>& pipelines) {
    if (pipelines.empty()) throw ConfigError("pipeline list is empty");
    for (const auto& p : pipelines)
        if (!known_pipelines().count(p))
            throw ConfigError("unknown pipeline '" + p +
                              "' (have hoa_hrtf, foa_hrtf, foa_magls, asm_magls, asm_aamagls)");
}

// Run manifest: echoes the effective config, hashes inputs and artifacts.
class Manifest {
public:
    Manifest(const fs::path& dir, const std::string& command, const JobConfig& cfg) : dir_(dir) {
        doc_["schema_version"] = 1;
        doc_["kind"] = "run_manifest";
        doc_["command"] = command;
        doc_["config"] = config_json(cfg);
        doc_["inputs"] = json::array();
        doc_["artifacts"] = json::array();
        doc_["notes"] = json::object();
    }

    void add_input(const std::string& role, const fs::path& path) {
        json e;
        e["role"] = role;
        e["path"] = path.generic_string();
        if (fs::is_regular_file(path)) {
            e["bytes"] = static_cast<uint64_t>(fs::file_size(path));
            e["fnv1a64"] = fnv1a64_hex(path);
        }
        doc_["inputs"].push_back(std::move(e));
    }

    void add_preset_input(const std::string& role, const std::string& name) {
        doc_["inputs"].push_back({{"role", role}, {"preset", name}});
    }

    void add_artifact(const std::string& rel, json extra = json::object()) {
        const fs::path p = dir_ / rel;
        json e;
        e["path"] = rel;
        e["bytes"] = static_cast<uint64_t>(fs::file_size(p));
        e["fnv1a64"] = fnv1a64_hex(p);
        for (auto& item : extra.items()) e[item.key()] = item.value();
        doc_["artifacts"].push_back(std::move(e));
    }

    json& notes() { return doc_["notes"]; }

    void write() const { write_json_file(dir_ / "manifest.json", doc_); }

private:
    fs::path dir_;
    json doc_;
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

DirectionGrid resolve_grid(const std::string& spec) {
    if (ends_with(spec, ".csv")) return read_grid_csv(spec);
    if (spec.rfind("lebedev", 0) == 0) {
        const std::string num = spec.substr(7);
        try {
            return lebedev_grid(std::stoi(num));
        } catch (const std::invalid_argument&) {
            throw ConfigError("bad grid spec '" + spec + "'");
        }
    }
    if (spec.rfind("fibonacci:", 0) == 0) {
        try {
            return fibonacci_grid(std::stoi(spec.substr(10)));
        } catch (const std::invalid_argument&) {
            throw ConfigError("bad grid spec '" + spec + "'");
        }
    }
    throw ConfigError("unknown grid '" + spec +
                      "' (use lebedev<N>, fibonacci:<N> or a grid csv path)");
}

ArrayGeometry resolve_geometry(const std::string& spec, Manifest* m) {
    if (ends_with(spec, ".json")) {
        if (m) m->add_input("geometry", spec);
        return read_geometry_json(spec);
    }
    if (m) m->add_preset_input("geometry", spec);
    return geometry_preset(spec);
}

PlaneWaveScene resolve_scene(const std::string& spec, double sample_rate, Manifest* m) {
    if (ends_with(spec, ".json")) {
        if (m) m->add_input("scene", spec);
        PlaneWaveScene s = read_scene_json(spec);
        if (s.sample_rate != sample_rate)
            throw ConfigError("scene sample rate " + std::to_string(s.sample_rate) +
                              " does not match configured " + std::to_string(sample_rate));
        return s;
    }
    if (m) m->add_preset_input("scene", spec);
    return scene_preset(spec, sample_rate);
}

RoomSpec room_from_json(const fs::path& path) {
    const json j = read_json_file(path);
    try {
        RoomSpec r;
        auto vec3 = [&](const char* key, Vector3d& out) {
            const auto& a = j.at(key);
            if (!a.is_array() || a.size() != 3) throw ConfigError(std::string(key) + " must be [x, y, z]");
            for (int i = 0; i < 3; ++i) out[i] = a[i].get<double>();
        };
        vec3("dims_m", r.dims);
        vec3("source_m", r.source);
        vec3("receiver_m", r.receiver);
        r.rt60 = j.at("rt60_s").get<double>();
        if (j.contains("max_image_order")) r.max_image_order = j.at("max_image_order").get<int>();
        r.validate();
        return r;
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

RoomSpec resolve_room(const std::string& spec, Manifest* m) {
    if (ends_with(spec, ".json")) {
        if (m) m->add_input("room", spec);
        return room_from_json(spec);
    }
    if (m) m->add_preset_input("room", spec);
    if (spec == "demo_room") return demo_room_spec();
    if (spec == "demo_room_anechoic") {
        RoomSpec r = demo_room_spec();
        r.max_image_order = 0;
        return r;
    }
    throw ConfigError("unknown room '" + spec + "' (have demo_room, demo_room_anechoic)");
}

HrtfSource resolve_hrtf(const JobConfig& cfg, const FrequencyGrid& freqs, Manifest* m) {
    if (cfg.hrtf == "analytic_sphere") {
        if (m) m->add_preset_input("hrtf", cfg.hrtf);
        return analytic_sphere_hrtf(freqs, cfg.head_radius_m);
    }
    if (!fs::is_directory(cfg.hrtf))
        throw ConfigError("hrtf '" + cfg.hrtf +
                          "' is neither the analytic_sphere preset nor a set directory");
    if (m) {
        for (const char* f : {"manifest.json", "grid.csv", "left.f64", "right.f64"})
            m->add_input("hrtf", fs::path(cfg.hrtf) / f);
    }
    HrtfSet set = read_hrtf_set(cfg.hrtf);
    if (!(set.freqs == freqs))
        throw ConfigError("hrtf set sampling (fs " + std::to_string(set.freqs.sample_rate) +
                          ", nfft " + std::to_string(set.freqs.nfft) +
                          ") does not match the configured frequency grid");
    return sh_interp_hrtf(set, cfg.hoa_order);
}

std::string deg_tag(double deg) { return CsvWriter::format(deg); }

void require_artifact(const fs::path& p) {
    if (!fs::exists(p))
        throw IoError("missing design artifact " + p.string() + " (run 'ambiarray design' first)");
}

// ---------------------------------------------------------------------------
// analyze-array

int run_analyze(const JobConfig& cfg) {
    fs::create_directories(cfg.out_dir);
    Manifest manifest(cfg.out_dir, "analyze-array", cfg);
    const ArrayGeometry geom = resolve_geometry(cfg.geometry, &manifest);
    const DirectionGrid grid = resolve_grid(cfg.grid);
    const FrequencyGrid freqs = cfg.freqs();
    const auto steering = steering_set(geom, grid, freqs);

    const NullspaceReport nr = nullspace_report(steering, grid, cfg.null_order, cfg.svd_rel_tol);
    write_nullspace_csv(fs::path(cfg.out_dir) / "nullspace.csv", nr);
    write_nullspace_json(fs::path(cfg.out_dir) / "nullspace.json", nr);
    manifest.add_artifact("nullspace.csv", {{"order", cfg.null_order}});
    manifest.add_artifact("nullspace.json", {{"order", cfg.null_order}});

    const EncodingFilter filter =
        asm_filter(steering, grid, cfg.mag_order, cfg.snr_ratio, freqs, cfg.weighted_design);
    const MagnitudeReport mr = magnitude_report(filter, steering, grid);
    write_magnitude_csv(fs::path(cfg.out_dir) / "magnitude.csv", mr);
    write_magnitude_json(fs::path(cfg.out_dir) / "magnitude.json", mr);
    manifest.add_artifact("magnitude.csv", {{"order", cfg.mag_order}, {"snr_ratio", cfg.snr_ratio}});
    manifest.add_artifact("magnitude.json", {{"order", cfg.mag_order}, {"snr_ratio", cfg.snr_ratio}});

    manifest.write();
    std::cout << "analyze-array: " << geom.mic_count() << " mics, grid " << cfg.grid << ", "
              << freqs.bin_count() << " bins\n";
    std::cout << "  nullspace report (order " << cfg.null_order << ") -> " << cfg.out_dir
              << "/nullspace.csv\n";
    std::cout << "  magnitude report (order " << cfg.mag_order << ") -> " << cfg.out_dir
              << "/magnitude.csv\n";
    return 0;
}

// ---------------------------------------------------------------------------
// design

int run_design(const JobConfig& cfg) {
    check_pipelines(cfg.pipelines);
    if (cfg.aa_low_band != "aa_ls" && cfg.aa_low_band != "ls")
        throw ConfigError("aa_low_band must be 'aa_ls' or 'ls', got '" + cfg.aa_low_band + "'");
    fs::create_directories(cfg.out_dir);
    Manifest manifest(cfg.out_dir, "design", cfg);
    const ArrayGeometry geom = resolve_geometry(cfg.geometry, &manifest);
    const DirectionGrid grid = resolve_grid(cfg.grid);
    const FrequencyGrid freqs = cfg.freqs();
    const CrossfadeSpec fade = cfg.fade();
    fade.validate(freqs.nyquist());
    const auto steering = steering_set(geom, grid, freqs);
    const fs::path out(cfg.out_dir);

    write_geometry_json(out / "geometry.json", geom);
    manifest.add_artifact("geometry.json");
    write_grid_csv(out / "grid.csv", grid);
    manifest.add_artifact("grid.csv", {{"directions", grid.size()}});

    EncodingFilter filter =
        asm_filter(steering, grid, cfg.order, cfg.snr_ratio, freqs, cfg.weighted_design);
    write_filter(out / "encoding_filter.bin", filter);
    manifest.add_artifact("encoding_filter.bin",
                          {{"order", cfg.order}, {"snr_ratio", cfg.snr_ratio}});

    const HrtfSource source = resolve_hrtf(cfg, freqs, &manifest);
    const HrtfSet set = sample_hrtf(source, grid);

    auto save = [&](const std::string& name, const HrtfSh& h, json extra = json::object()) {
        write_hrtf_sh(out / name, h);
        extra["order"] = h.order;
        extra["variant"] = h.variant;
        extra["nonconverged_left"] = h.nonconverged_left;
        extra["nonconverged_right"] = h.nonconverged_right;
        manifest.add_artifact(name, extra);
    };

    const HrtfSh ls = ls_encode(set, cfg.order);
    save("hrtf_ls.bin", ls);

    const HrtfSh magls_raw = magls_encode(set, cfg.order, fade, cfg.iters());
    save("hrtf_magls_raw.bin", magls_raw);
    save("hrtf_magls.bin", crossfade(ls, magls_raw, fade),
         {{"fade_min_hz", fade.f_min}, {"fade_max_hz", fade.f_max}});

    const HrtfSh aa_ls = aa_ls_encode(set, filter, steering, cfg.snr_ratio);
    save("hrtf_aa_ls.bin", aa_ls);
    const HrtfSh aa_raw = aa_magls_encode(set, filter, steering, fade, cfg.snr_ratio, cfg.iters());
    save("hrtf_aa_magls_raw.bin", aa_raw);
    const HrtfSh& aa_low = cfg.aa_low_band == "ls" ? ls : aa_ls;
    save("hrtf_aa_magls.bin", crossfade(aa_low, aa_raw, fade),
         {{"fade_min_hz", fade.f_min},
          {"fade_max_hz", fade.f_max},
          {"low_band", cfg.aa_low_band}});

    if (std::find(cfg.pipelines.begin(), cfg.pipelines.end(), "hoa_hrtf") != cfg.pipelines.end())
        save("hrtf_hoa.bin", ls_encode(set, cfg.hoa_order));

    manifest.notes()["crossfade"] = {{"f_min_hz", fade.f_min}, {"f_max_hz", fade.f_max}};
    manifest.notes()["hrtf_name"] = set.name;
    manifest.write();

    std::cout << "design: order " << cfg.order << " filter (" << geom.mic_count() << " mics, "
              << freqs.bin_count() << " bins), hrtf '" << set.name << "' on " << grid.size()
              << " directions -> " << cfg.out_dir << "\n";
    const size_t bad = magls_raw.nonconverged_left.size() + magls_raw.nonconverged_right.size() +
                       aa_raw.nonconverged_left.size() + aa_raw.nonconverged_right.size();
    std::cout << "  magnitude solver bins not converged: " << bad << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// render

struct PipelineHrtf {
    std::string file;
    bool through_array;
};

PipelineHrtf pipeline_hrtf(const std::string& pipeline) {
    if (pipeline == "hoa_hrtf") return {"hrtf_hoa.bin", false};
    if (pipeline == "foa_hrtf") return {"hrtf_ls.bin", false};
    if (pipeline == "foa_magls") return {"hrtf_magls.bin", false};
    if (pipeline == "asm_magls") return {"hrtf_magls.bin", true};
    if (pipeline == "asm_aamagls") return {"hrtf_aa_magls.bin", true};
    throw ConfigError("unknown pipeline '" + pipeline + "'");
}

std::vector<double> fft_convolve(const std::vector<double>& a, const std::vector<double>& b) {
    const size_t out_len = a.size() + b.size() - 1;
    size_t m = 1;
    while (m < out_len) m <<= 1;
    std::vector<cdouble> fa(m), fb(m);
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    fft_inplace(fa, false);
    fft_inplace(fb, false);
    for (size_t i = 0; i < m; ++i) fa[i] *= fb[i];
    fft_inplace(fa, true);
    std::vector<double> out(out_len);
    for (size_t i = 0; i < out_len; ++i) out[i] = fa[i].real();
    return out;
}

// Scene decomposed into unique directions plus per-wave integer delays, so
// arrivals beyond the filter length do not wrap around the nfft window.
struct SceneParts {
    std::vector<Direction> dirs;
    struct Part {
        int dir;             // index into dirs
        long offset;         // whole samples
        double residual_s;   // fractional remainder, carried as per-bin phase
        double gain;
    };
    std::vector<Part> parts;
    long max_offset = 0;
};

SceneParts split_scene(const PlaneWaveScene& scene) {
    scene.validate();
    SceneParts out;
    std::map<std::pair<double, double>, int> index;
    for (const auto& w : scene.waves) {
        auto [it, fresh] = index.try_emplace({w.direction.theta, w.direction.phi},
                                             static_cast<int>(out.dirs.size()));
        if (fresh) out.dirs.push_back(w.direction);
        const long off = static_cast<long>(std::floor(w.delay_s * scene.sample_rate));
        out.parts.push_back({it->second, off, w.delay_s - double(off) / scene.sample_rate, w.gain});
        out.max_offset = std::max(out.max_offset, off);
    }
    return out;
}

// Accumulates per-wave impulse responses of one stimulus into a long buffer.
struct StimulusAccum {
    std::vector<double> left, right;
    double imag_residue = 0.0;

    explicit StimulusAccum(size_t len) : left(len, 0.0), right(len, 0.0) {}

    void add(const SceneParts::Part& part, const BinauralSpectra& transfer) {
        const FrequencyGrid& freqs = transfer.freqs;
        BinauralSpectra scaled = transfer;
        for (int j = 0; j < freqs.bin_count(); ++j) {
            const cdouble amp =
                part.gain * std::polar(1.0, -2.0 * kPi * freqs.bin_hz(j) * part.residual_s);
            scaled.left[j] *= amp;
            scaled.right[j] *= amp;
        }
        const StereoBuffer ir = to_time(scaled, false);
        imag_residue = std::max(imag_residue, ir.imag_residue);
        for (size_t i = 0; i < ir.left.size(); ++i) {
            left[part.offset + i] += ir.left[i];
            right[part.offset + i] += ir.right[i];
        }
    }
};

int run_render(const JobConfig& cfg) {
    check_pipelines(cfg.pipelines);
    fs::create_directories(cfg.out_dir);
    Manifest manifest(cfg.out_dir, "render", cfg);
    const fs::path art = cfg.artifacts();
    const FrequencyGrid freqs = cfg.freqs();
    const PlaneWaveScene scene = resolve_scene(cfg.scene, cfg.sample_rate, &manifest);
    const SceneParts parts = split_scene(scene);
    const HrtfSource reference = resolve_hrtf(cfg, freqs, &manifest);

    const bool any_array = std::any_of(cfg.pipelines.begin(), cfg.pipelines.end(),
                                       [](const std::string& p) { return is_array_pipeline(p); });

    // design artifacts
    EncodingFilter filter;
    ArrayGeometry geom;
    if (any_array) {
        require_artifact(art / "encoding_filter.bin");
        manifest.add_input("encoding_filter", art / "encoding_filter.bin");
        filter = read_filter(art / "encoding_filter.bin");
        if (!(filter.freqs == freqs))
            throw ConfigError("encoding filter was designed for a different frequency grid");
        if (fs::exists(art / "geometry.json")) {
            manifest.add_input("geometry", art / "geometry.json");
            geom = read_geometry_json(art / "geometry.json");
        } else {
            geom = resolve_geometry(cfg.geometry, &manifest);
        }
        if (geom.mic_count() != filter.mic_count())
            throw DimensionError("geometry mic count does not match the encoding filter");
    }

    std::map<std::string, HrtfSh> hrtf_by_file;
    for (const auto& p : cfg.pipelines) {
        const PipelineHrtf ph = pipeline_hrtf(p);
        if (hrtf_by_file.count(ph.file)) continue;
        require_artifact(art / ph.file);
        manifest.add_input("hrtf_sh", art / ph.file);
        HrtfSh h = read_hrtf_sh(art / ph.file);
        if (!(h.freqs == freqs))
            throw ConfigError(ph.file + " was designed for a different frequency grid");
        hrtf_by_file.emplace(ph.file, std::move(h));
    }

    // per unique direction: mic responses (for array pipelines) and the
    // reference ear spectra
    const int ndir = static_cast<int>(parts.dirs.size());
    std::vector<MatrixXcd> mic_cols;
    if (any_array) {
        mic_cols.resize(ndir);
        for (int d = 0; d < ndir; ++d) {
            MatrixXcd m(filter.mic_count(), freqs.bin_count());
            for (int j = 0; j < freqs.bin_count(); ++j)
                m.col(j) = steering_vector(geom, parts.dirs[d], freqs.bin_hz(j));
            mic_cols[d] = std::move(m);
        }
    }

    const size_t total_len = size_t(parts.max_offset) + size_t(freqs.nfft);
    struct Stimulus {
        std::string name;
        json info;
        StimulusAccum accum;
    };
    std::vector<Stimulus> stimuli;

    {  // reference: the sampled HRTF applied directly to each arrival
        Stimulus s{"render_reference.wav", {{"pipeline", "reference"}}, StimulusAccum(total_len)};
        std::vector<BinauralSpectra> by_dir(ndir);
        for (int d = 0; d < ndir; ++d) {
            auto [l, r] = reference.at(parts.dirs[d]);
            by_dir[d] = BinauralSpectra{freqs, std::move(l), std::move(r)};
        }
        for (const auto& part : parts.parts) s.accum.add(part, by_dir[part.dir]);
        stimuli.push_back(std::move(s));
    }

    for (const auto& pipeline : cfg.pipelines) {
        const PipelineHrtf ph = pipeline_hrtf(pipeline);
        const HrtfSh& h = hrtf_by_file.at(ph.file);
        for (double rot : cfg.rotations_deg) {
            const HrtfSh hr = rotate(h, deg2rad(rot), 0.0);
            std::vector<BinauralSpectra> by_dir(ndir);
            for (int d = 0; d < ndir; ++d) {
                if (ph.through_array) {
                    MicSpectra mics{freqs, mic_cols[d]};
                    by_dir[d] = render(hr, encode(filter, mics));
                } else {
                    const VectorXcd ones = VectorXcd::Ones(freqs.bin_count());
                    by_dir[d] =
                        render(hr, ideal_plane_wave_signal(parts.dirs[d], h.order, freqs, ones));
                }
            }
            Stimulus s{"render_" + pipeline + "_rot" + deg_tag(rot) + ".wav",
                       {{"pipeline", pipeline}, {"rotation_deg", rot}},
                       StimulusAccum(total_len)};
            for (const auto& part : parts.parts) s.accum.add(part, by_dir[part.dir]);
            stimuli.push_back(std::move(s));
        }
    }

    // optional mono excitation, convolved with each accumulated response
    std::vector<double> source;
    if (!cfg.source_wav.empty()) {
        manifest.add_input("source", cfg.source_wav);
        const WavData wav = read_wav(cfg.source_wav);
        if (wav.sample_rate != cfg.sample_rate)
            throw ConfigError("source wav sample rate does not match the configured rate");
        if (wav.channels.empty() || wav.channels.front().empty())
            throw IoError("source wav has no samples");
        source = wav.channels.front();
    }

    double peak = 0.0, residue = 0.0;
    std::vector<WavData> outputs(stimuli.size());
    for (size_t i = 0; i < stimuli.size(); ++i) {
        auto& acc = stimuli[i].accum;
        residue = std::max(residue, acc.imag_residue);
        WavData& w = outputs[i];
        w.sample_rate = cfg.sample_rate;
        if (source.empty()) {
            w.channels = {std::move(acc.left), std::move(acc.right)};
        } else {
            w.channels = {fft_convolve(source, acc.left), fft_convolve(source, acc.right)};
        }
        for (const auto& ch : w.channels)
            for (double v : ch) peak = std::max(peak, std::abs(v));
    }
    const double gain = peak > 0.0 ? 0.999 / peak : 1.0;
    for (size_t i = 0; i < stimuli.size(); ++i) {
        for (auto& ch : outputs[i].channels)
            for (double& v : ch) v *= gain;
        write_wav(fs::path(cfg.out_dir) / stimuli[i].name, outputs[i], WavFormat::float32);
        manifest.add_artifact(stimuli[i].name, stimuli[i].info);
    }
    manifest.notes()["normalization_gain"] = gain;
    manifest.notes()["peak_before_normalization"] = peak;
    manifest.notes()["imag_residue"] = residue;
    manifest.notes()["waves"] = scene.waves.size();
    manifest.write();

    std::cout << "render: " << scene.waves.size() << " arrivals, " << stimuli.size()
              << " stimuli of " << outputs.front().frame_count() << " samples -> " << cfg.out_dir
              << "\n";
    std::cout << "  batch gain " << gain << " (peak " << peak << ")\n";
    return 0;
}

// ---------------------------------------------------------------------------
// evaluate

int run_evaluate(const JobConfig& cfg) {
    check_pipelines(cfg.pipelines);
    fs::create_directories(cfg.out_dir);
    Manifest manifest(cfg.out_dir, "evaluate", cfg);
    const fs::path art = cfg.artifacts();
    const FrequencyGrid freqs = cfg.freqs();
    const CrossfadeSpec fade = cfg.fade();
    fade.validate(freqs.nyquist());
    const HrtfSource reference = resolve_hrtf(cfg, freqs, &manifest);

    require_artifact(art / "grid.csv");
    manifest.add_input("grid", art / "grid.csv");
    const DirectionGrid grid = read_grid_csv(art / "grid.csv");

    const bool any_array = std::any_of(cfg.pipelines.begin(), cfg.pipelines.end(),
                                       [](const std::string& p) { return is_array_pipeline(p); });
    EncodingFilter filter;
    ArrayGeometry geom;
    std::vector<SteeringMatrix> steering;
    if (any_array) {
        require_artifact(art / "encoding_filter.bin");
        manifest.add_input("encoding_filter", art / "encoding_filter.bin");
        filter = read_filter(art / "encoding_filter.bin");
        if (!(filter.freqs == freqs))
            throw ConfigError("encoding filter was designed for a different frequency grid");
        if (fs::exists(art / "geometry.json")) {
            manifest.add_input("geometry", art / "geometry.json");
            geom = read_geometry_json(art / "geometry.json");
        } else {
            geom = resolve_geometry(cfg.geometry, &manifest);
        }
        if (geom.mic_count() != filter.mic_count())
            throw DimensionError("geometry mic count does not match the encoding filter");
        steering = steering_set(geom, grid, freqs);
    }

    std::map<int, std::shared_ptr<MatrixXcd>> sh_by_order;  // ideal reproduction operators
    auto ideal_op = [&](int order) {
        auto it = sh_by_order.find(order);
        if (it == sh_by_order.end())
            it = sh_by_order.emplace(order, std::make_shared<MatrixXcd>(sh_matrix(grid, order)))
                     .first;
        return it->second;
    };

    for (const auto& pipeline : cfg.pipelines) {
        const PipelineHrtf ph = pipeline_hrtf(pipeline);
        require_artifact(art / ph.file);
        manifest.add_input("hrtf_sh", art / ph.file);
        const HrtfSh h = read_hrtf_sh(art / ph.file);
        if (!(h.freqs == freqs))
            throw ConfigError(ph.file + " was designed for a different frequency grid");

        for (double rot : cfg.rotations_deg) {
            BinauralErrorReport rep;
            if (ph.through_array) {
                rep = binaural_error_report(h, filter, steering, grid, reference, fade,
                                            deg2rad(rot), 0.0);
            } else {
                auto y = ideal_op(h.order);
                auto op = [y](int) -> const MatrixXcd& { return *y; };
                rep = binaural_error_report(h, op, grid, reference, fade, deg2rad(rot), 0.0);
            }
            const std::string base = "binaural_error_" + pipeline + "_rot" + deg_tag(rot);
            write_binaural_error_csv(fs::path(cfg.out_dir) / (base + ".csv"), rep, pipeline);
            write_binaural_error_json(fs::path(cfg.out_dir) / (base + ".json"), rep, pipeline);
            manifest.add_artifact(base + ".csv", {{"pipeline", pipeline}, {"rotation_deg", rot}});
            manifest.add_artifact(base + ".json", {{"pipeline", pipeline}, {"rotation_deg", rot}});
        }

        // horizontal-plane cue sweep at rotation 0
        BinauralSynth method;
        if (ph.through_array) {
            method = [&, h](const Direction& dir) {
                MatrixXcd cols(filter.mic_count(), freqs.bin_count());
                for (int j = 0; j < freqs.bin_count(); ++j)
                    cols.col(j) = steering_vector(geom, dir, freqs.bin_hz(j));
                return render(h, encode(filter, MicSpectra{freqs, std::move(cols)}));
            };
        } else {
            method = [&, h](const Direction& dir) {
                const VectorXcd ones = VectorXcd::Ones(freqs.bin_count());
                return render(h, ideal_plane_wave_signal(dir, h.order, freqs, ones));
            };
        }
        BinauralSynth ref_synth = [&](const Direction& dir) {
            auto [l, r] = reference.at(dir);
            return BinauralSpectra{freqs, std::move(l), std::move(r)};
        };
        const LateralizationReport lat = lateralization_sweep(method, ref_synth, cfg.azimuth_count);
        const std::string base = "lateralization_" + pipeline;
        write_lateralization_csv(fs::path(cfg.out_dir) / (base + ".csv"), lat, pipeline);
        write_lateralization_json(fs::path(cfg.out_dir) / (base + ".json"), lat, pipeline);
        manifest.add_artifact(base + ".csv", {{"pipeline", pipeline}});
        manifest.add_artifact(base + ".json", {{"pipeline", pipeline}});
        std::cout << "evaluate: " << pipeline << " done (" << cfg.rotations_deg.size()
                  << " rotations, " << cfg.azimuth_count << " azimuths)\n";
    }

    manifest.write();
    return 0;
}

// ---------------------------------------------------------------------------
// scene-gen

int run_scene_gen(const JobConfig& cfg) {
    fs::create_directories(cfg.out_dir);
    Manifest manifest(cfg.out_dir, "scene-gen", cfg);
    const RoomSpec room = resolve_room(cfg.room, &manifest);
    const PlaneWaveScene scene = image_source_scene(room, cfg.sample_rate);
    write_scene_json(fs::path(cfg.out_dir) / "scene.json", scene);
    manifest.add_artifact("scene.json", {{"waves", scene.waves.size()}});

    const PlaneWave& direct = scene.waves.front();  // sorted by arrival time
    manifest.notes()["absorption"] = sabine_absorption(room);
    manifest.notes()["direct"] = {{"theta_deg", rad2deg(direct.direction.theta)},
                                  {"phi_deg", rad2deg(direct.direction.phi)},
                                  {"delay_s", direct.delay_s},
                                  {"gain", direct.gain}};

    if (!cfg.source_wav.empty()) {
        manifest.add_input("source", cfg.source_wav);
        const WavData src = read_wav(cfg.source_wav);
        if (src.sample_rate != cfg.sample_rate)
            throw ConfigError("source wav sample rate does not match the configured rate");
        if (src.channels.empty() || src.channels.front().empty())
            throw IoError("source wav has no samples");
        const std::vector<double>& mono = src.channels.front();

        const ArrayGeometry geom = resolve_geometry(cfg.geometry, &manifest);
        const FrequencyGrid freqs = cfg.freqs();
        const SceneParts parts = split_scene(scene);
        const int nmic = geom.mic_count();

        // long mic impulse responses from the per-arrival steering vectors
        const size_t ir_len = size_t(parts.max_offset) + size_t(freqs.nfft);
        std::vector<std::vector<double>> mic_ir(nmic, std::vector<double>(ir_len, 0.0));
        for (int d = 0; d < static_cast<int>(parts.dirs.size()); ++d) {
            MatrixXcd cols(nmic, freqs.bin_count());
            for (int j = 0; j < freqs.bin_count(); ++j)
                cols.col(j) = steering_vector(geom, parts.dirs[d], freqs.bin_hz(j));
            for (const auto& part : parts.parts) {
                if (part.dir != d) continue;
                for (int i = 0; i < nmic; ++i) {
                    std::vector<cdouble> half(freqs.bin_count());
                    for (int j = 0; j < freqs.bin_count(); ++j)
                        half[j] = cols(i, j) * part.gain *
                                  std::polar(1.0, -2.0 * kPi * freqs.bin_hz(j) * part.residual_s);
                    const std::vector<double> ir = irfft(half, freqs.nfft);
                    for (size_t t = 0; t < ir.size(); ++t) mic_ir[i][part.offset + t] += ir[t];
                }
            }
        }

        WavData out;
        out.sample_rate = cfg.sample_rate;
        out.channels.resize(nmic);
        const double noise_std =
            cfg.noise_variance > 0.0 ? std::sqrt(cfg.noise_variance / freqs.nfft) : 0.0;
        double peak = 0.0;
        for (int i = 0; i < nmic; ++i) {
            out.channels[i] = fft_convolve(mono, mic_ir[i]);
            if (noise_std > 0.0) {
                for (size_t t = 0; t < out.channels[i].size(); ++t) {
                    double g1, g2;
                    noise_gauss_pair(cfg.seed, (uint64_t(i) << 48) | uint64_t(t), g1, g2);
                    out.channels[i][t] += noise_std * g1;
                }
            }
            for (double v : out.channels[i]) peak = std::max(peak, std::abs(v));
        }
        write_wav(fs::path(cfg.out_dir) / "mic_signals.wav", out, WavFormat::float32);
        manifest.add_artifact("mic_signals.wav",
                              {{"channels", nmic}, {"peak", peak}, {"noise_std", noise_std}});
    }

    manifest.write();
    std::cout << "scene-gen: " << scene.waves.size() << " plane waves (rt60 " << room.rt60
              << " s), direct arrival az " << rad2deg(direct.direction.phi) << " deg, el "
              << 90.0 - rad2deg(direct.direction.theta) << " deg -> " << cfg.out_dir
              << "/scene.json\n";
    return 0;
}

// ---------------------------------------------------------------------------

int dispatch(const std::string& command, const JobConfig& cfg) {
    try {
        if (command == "analyze-array") return run_analyze(cfg);
        if (command == "design") return run_design(cfg);
        if (command == "render") return run_render(cfg);
        if (command == "evaluate") return run_evaluate(cfg);
        if (command == "scene-gen") return run_scene_gen(cfg);
        throw ConfigError("unknown command " + command);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const DimensionError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    JobConfig cfg;

    // the config file seeds the defaults; flags override individual fields
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc)
            path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0)
            path = arg.substr(9);
        if (!path.empty()) {
            try {
                cfg = config_from_file(path);
            } catch (const Error& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 2;
            }
            break;
        }
    }
    if (const char* v = std::getenv("AMBIARRAY_OUT_DIR")) cfg.out_dir = v;
    if (const char* v = std::getenv("AMBIARRAY_THREADS"))
        Eigen::setNbThreads(std::max(1, std::atoi(v)));

    CLI::App app{"array-aware Ambisonics encoding and binaural rendering toolkit"};
    app.set_version_flag("--version", "ambiarray 0.1.0");
    app.require_subcommand(1);

    std::string config_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON job config (parsed before other flags)");
        sub->add_option("--geometry", cfg.geometry,
                        "array preset (wearable, wearable_wide, sphere32) or geometry json");
        sub->add_option("--hrtf", cfg.hrtf, "analytic_sphere or an hrtf set directory");
        sub->add_option("--scene", cfg.scene,
                        "scene preset (demo_room, demo_room_anechoic) or scene json");
        sub->add_option("--room", cfg.room, "room preset or room json (scene-gen)");
        sub->add_option("--grid", cfg.grid, "design grid: lebedev<N>, fibonacci:<N> or csv");
        sub->add_option("--out-dir", cfg.out_dir, "output directory");
        sub->add_option("--artifacts-dir", cfg.artifacts_dir,
                        "where design artifacts live (default: out-dir)");
        sub->add_option("--source", cfg.source_wav, "mono excitation wav");
        sub->add_option("--pipelines", cfg.pipelines, "rendering pipelines")->delimiter(',');
        sub->add_option("--order", cfg.order, "Ambisonics encoding order");
        sub->add_option("--hoa-order", cfg.hoa_order, "reference/high order");
        sub->add_option("--null-order", cfg.null_order, "max order in the null-space report");
        sub->add_option("--mag-order", cfg.mag_order, "order in the magnitude report");
        sub->add_option("--snr-ratio", cfg.snr_ratio, "signal to noise variance ratio");
        sub->add_option("--fade-min", cfg.fade_min_hz, "magnitude crossfade start, Hz");
        sub->add_option("--fade-max", cfg.fade_max_hz, "magnitude crossfade end, Hz");
        sub->add_option("--rotations", cfg.rotations_deg, "head yaw angles, degrees")
            ->delimiter(',');
        sub->add_option("--fs", cfg.sample_rate, "sample rate, Hz");
        sub->add_option("--nfft", cfg.nfft, "transform length");
        sub->add_option("--svd-rel-tol", cfg.svd_rel_tol, "row-space rank tolerance");
        sub->add_option("--seed", cfg.seed, "noise seed");
        sub->add_option("--noise-variance", cfg.noise_variance, "per-bin sensor noise variance");
        sub->add_option("--azimuths", cfg.azimuth_count, "sweep resolution");
        sub->add_option("--max-iterations", cfg.max_iterations, "magnitude solver cap");
        sub->add_option("--head-radius", cfg.head_radius_m, "analytic hrtf head radius, m");
        sub->add_flag("--weighted-design", cfg.weighted_design,
                      "use grid quadrature weights in the encoding filter fit");
        sub->add_option("--aa-low-band", cfg.aa_low_band,
                        "low band of the array-aware crossfade: aa_ls or ls");
    };

    add_common(app.add_subcommand("analyze-array",
                                  "null-space and magnitude reports for an array geometry"));
    add_common(app.add_subcommand("design", "encoding filter and SH-domain HRTF variants"));
    add_common(app.add_subcommand("render", "binaural stimuli for a scene"));
    add_common(app.add_subcommand("evaluate", "binaural error and lateralization reports"));
    add_common(app.add_subcommand("scene-gen", "image-source scene (and mic signals)"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    return dispatch(app.get_subcommands().front()->get_name(), cfg);
}
