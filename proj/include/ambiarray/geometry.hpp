#pragma once

#include <filesystem>

#include "ambiarray/types.hpp"

namespace ambiarray {

enum class Mount { rigid_sphere, free_field };

struct MicPosition {
    double theta = kPi / 2;  // colatitude, radians
    double phi = 0.0;        // azimuth, radians
    double r = 0.1;          // distance from array center, meters

    Direction direction() const { return Direction::normalized(theta, phi); }
    Vector3d position() const { return r * direction().unit(); }
};

struct ArrayGeometry {
    std::string name = "array";
    double sphere_radius = 0.1;  // meters; scattering body radius for rigid_sphere
    Mount mount = Mount::rigid_sphere;
    std::vector<MicPosition> mics;

    int mic_count() const { return static_cast<int>(mics.size()); }
    double max_mic_radius() const;
    void validate() const;
};

// Five-mic rigid-sphere layout around the head: azimuths -70/-35/0/35/70 deg
// at elevations 0/+18/-18/+18/0 deg, all at 0.1 m.
ArrayGeometry default_wearable_geometry();

// Variant with the outer pairs widened to -80/-40/40/80 deg azimuth.
ArrayGeometry wide_wearable_geometry();

// Near-uniform spiral layout on a rigid sphere.
ArrayGeometry sphere_array_geometry(int mic_count, double radius);

// Preset lookup by name ("wearable", "wearable_wide", "sphere32"), used by
// config files; throws ConfigError for unknown names.
ArrayGeometry geometry_preset(const std::string& name);

// JSON exchange format with angles in degrees:
// {"schema_version":1,"sphere_radius_m":0.1,"mount":"rigid_sphere",
//  "mics":[{"theta_deg":90,"phi_deg":-70,"r_m":0.1}, ...]}
void write_geometry_json(const std::filesystem::path& path, const ArrayGeometry& g);
ArrayGeometry read_geometry_json(const std::filesystem::path& path);

}  // namespace ambiarray
