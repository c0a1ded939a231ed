#pragma once

#include <filesystem>

#include "ambiarray/types.hpp"

namespace ambiarray {

namespace detail {
struct LebedevPoint {
    double theta, phi, weight;
};
extern const LebedevPoint kLebedev6[6];
extern const LebedevPoint kLebedev26[26];
extern const LebedevPoint kLebedev194[194];
extern const LebedevPoint kLebedev2702[2702];
}  // namespace detail

// Sizes lebedev_grid accepts.
const std::vector<int>& lebedev_sizes();

// Lebedev quadrature rule with the given point count (6, 26, 194 or 2702).
// Throws ConfigError for unsupported sizes.
DirectionGrid lebedev_grid(int point_count);

// Near-uniform spiral grid with equal weights 4*pi/count. Not a quadrature
// rule; used for mic layouts and dense sampling.
DirectionGrid fibonacci_grid(int count);

// CSV exchange format: header "theta,phi,weight", angles in radians,
// weights in steradians.
void write_grid_csv(const std::filesystem::path& path, const DirectionGrid& grid);
DirectionGrid read_grid_csv(const std::filesystem::path& path);

}  // namespace ambiarray
