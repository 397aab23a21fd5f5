#pragma once
// Seeded samplers shared by tests, the verify suites and the CLI.

#include <cmath>
#include <cstdint>
#include <random>

#include "hqg/qstate.hpp"

namespace hqg {

using Rng = std::mt19937_64;

// Haar-uniform on SU(2), i.e. uniform on the unit 3-sphere
inline SU2Gate random_su2(Rng& rng) {
    std::normal_distribution<double> n;
    double v[4];
    double s = 0;
    do {
        s = 0;
        for (double& c : v) {
            c = n(rng);
            s += c * c;
        }
    } while (s < 1e-12);
    s = std::sqrt(s);
    return {cplx{v[0] / s, v[1] / s}, cplx{v[2] / s, v[3] / s}};
}

inline double random_unit_interval(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace hqg
