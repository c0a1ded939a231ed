#include "ambiarray/geometry.hpp"

#include <algorithm>

#include "ambiarray/grids.hpp"
#include "ambiarray/io.hpp"

namespace ambiarray {

double ArrayGeometry::max_mic_radius() const {
    double r = 0.0;
    for (const auto& m : mics) r = std::max(r, m.r);
    return r;
}

void ArrayGeometry::validate() const {
    if (mics.empty()) throw DomainError("array has no microphones");
    for (const auto& m : mics) {
        if (!(m.r > 0.0)) throw DomainError("mic radius must be positive");
        if (mount == Mount::rigid_sphere && m.r < sphere_radius - 1e-12)
            throw DomainError("mic lies inside the rigid sphere");
    }
    if (mount == Mount::rigid_sphere && !(sphere_radius > 0.0))
        throw DomainError("rigid sphere radius must be positive");
}

namespace {

ArrayGeometry wearable(const char* name, double outer_deg, double inner_deg) {
    ArrayGeometry g;
    g.name = name;
    g.sphere_radius = 0.1;
    g.mount = Mount::rigid_sphere;
    const double r = 0.1;
    g.mics = {
        {deg2rad(90.0), deg2rad(-outer_deg), r},
        {deg2rad(72.0), deg2rad(-inner_deg), r},
        {deg2rad(108.0), deg2rad(0.0), r},
        {deg2rad(72.0), deg2rad(inner_deg), r},
        {deg2rad(90.0), deg2rad(outer_deg), r},
    };
    return g;
}

}  // namespace

ArrayGeometry default_wearable_geometry() { return wearable("wearable", 70.0, 35.0); }

ArrayGeometry wide_wearable_geometry() { return wearable("wearable_wide", 80.0, 40.0); }

ArrayGeometry sphere_array_geometry(int mic_count, double radius) {
    if (mic_count < 1) throw DomainError("need at least one mic");
    if (!(radius > 0.0)) throw DomainError("radius must be positive");
    ArrayGeometry g;
    g.name = "sphere" + std::to_string(mic_count);
    g.sphere_radius = radius;
    g.mount = Mount::rigid_sphere;
    DirectionGrid grid = fibonacci_grid(mic_count);
    for (const auto& d : grid.directions) g.mics.push_back({d.theta, d.phi, radius});
    return g;
}

ArrayGeometry geometry_preset(const std::string& name) {
    if (name == "wearable") return default_wearable_geometry();
    if (name == "wearable_wide") return wide_wearable_geometry();
    if (name == "sphere32") return sphere_array_geometry(32, 0.042);
    throw ConfigError("unknown geometry preset '" + name +
                      "' (have wearable, wearable_wide, sphere32)");
}

void write_geometry_json(const std::filesystem::path& path, const ArrayGeometry& g) {
    g.validate();
    json j;
    j["schema_version"] = 1;
    j["name"] = g.name;
    j["sphere_radius_m"] = g.sphere_radius;
    j["mount"] = g.mount == Mount::rigid_sphere ? "rigid_sphere" : "free_field";
    j["mics"] = json::array();
    for (const auto& m : g.mics) {
        j["mics"].push_back(
            {{"theta_deg", rad2deg(m.theta)}, {"phi_deg", rad2deg(m.phi)}, {"r_m", m.r}});
    }
    write_json_file(path, j);
}

ArrayGeometry read_geometry_json(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    try {
        ArrayGeometry g;
        g.name = j.value("name", path.stem().string());
        g.sphere_radius = j.at("sphere_radius_m").get<double>();
        const std::string mount = j.at("mount").get<std::string>();
        if (mount == "rigid_sphere")
            g.mount = Mount::rigid_sphere;
        else if (mount == "free_field")
            g.mount = Mount::free_field;
        else
            throw IoError(path.string() + ": unknown mount '" + mount + "'");
        for (const auto& m : j.at("mics")) {
            Direction d = Direction::from_degrees(m.at("theta_deg").get<double>(),
                                                  m.at("phi_deg").get<double>());
            g.mics.push_back({d.theta, d.phi, m.at("r_m").get<double>()});
        }
        g.validate();
        return g;
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

}  // namespace ambiarray
