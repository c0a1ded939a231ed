#pragma once

#include "ambiarray/geometry.hpp"
#include "ambiarray/types.hpp"

namespace ambiarray {

// Steering entries v(i, q): the complex response of microphone i to a unit
// plane wave arriving from direction q, with the exp(+i k r_q . r) incident
// wave convention. Rigid-sphere mounts use the scattering series collapsed by
// the Legendre addition theorem; free field is the exact exponential.
struct SteeringMatrix {
    double freq = 0.0;
    MatrixXcd entries;  // mic_count x direction_count
};

// Series truncation used when none is given: ceil(k*r_max) + 10, capped at 60.
int default_truncation_order(double k_times_rmax);

SteeringMatrix steering_matrix(const ArrayGeometry& geom, const DirectionGrid& grid,
                               double freq_hz, double sound_speed = kSoundSpeed,
                               int truncation_order = -1);

// Single direction column.
VectorXcd steering_vector(const ArrayGeometry& geom, const Direction& dir, double freq_hz,
                          double sound_speed = kSoundSpeed, int truncation_order = -1);

// One SteeringMatrix per bin of the frequency grid.
std::vector<SteeringMatrix> steering_set(const ArrayGeometry& geom, const DirectionGrid& grid,
                                         const FrequencyGrid& freqs,
                                         double sound_speed = kSoundSpeed);

}  // namespace ambiarray
