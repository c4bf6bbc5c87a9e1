#pragma once

// Shared helpers for the unit and acceptance suites.

#include <cmath>
#include <random>

#include "k2p2/discrete_operator.hpp"
#include "k2p2/space.hpp"

namespace k2p2::testing {

// Truncated discrete convolution (D2 * f)(h beta); f takes the lattice
// index and evaluates the function at h * index.
template <class F>
double convolve_d2(const k2p2::DiscreteOperatorParams<double>& dop,
                   const k2p2::SpaceParams<double>& params, F&& f, int beta,
                   int trunc = 400) {
    double sum = 0.0;
    for (int g = -trunc; g <= trunc; ++g)
        sum += k2p2::discrete_operator_value(g, dop) * f(beta - g);
    (void)params;
    return sum;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace k2p2::testing
