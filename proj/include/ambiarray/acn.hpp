#pragma once

#include <utility>

#include "ambiarray/errors.hpp"

namespace ambiarray {

// Channel count of a full spherical harmonic expansion up to `order`.
inline int sh_channel_count(int order) {
    if (order < 0) throw DomainError("order must be >= 0");
    return (order + 1) * (order + 1);
}

// ACN channel index for degree n and order m: n*n + n + m.
inline int acn_index(int n, int m) {
    if (n < 0) throw DomainError("degree must be >= 0");
    if (m < -n || m > n) throw DomainError("order |m| must not exceed degree n");
    return n * n + n + m;
}

// Inverse of acn_index.
inline std::pair<int, int> acn_to_degree_order(int acn) {
    if (acn < 0) throw DomainError("ACN index must be >= 0");
    int n = 0;
    while ((n + 1) * (n + 1) <= acn) ++n;
    return {n, acn - n * n - n};
}

}  // namespace ambiarray
