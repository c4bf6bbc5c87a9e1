#pragma once

// Parameters of the interpolation space K2(P2) and its kernel G2.
//
// K2(P2) is the space of functions on [0,1] with absolutely continuous
// first derivative and second derivative in L2, seminormed by
// ||phi'' + omega^2 phi||_{L2(0,1)}; sin(omega x) and cos(omega x) span the
// null space. Interpolation nodes are equally spaced, x_beta = beta/N.
//
// The kernel
//
//   G2(x) = sgn(x) / (4 omega^3) * [sin(omega x) - omega x cos(omega x)]
//
// is the even fundamental solution of d^4/dx^4 + 2 omega^2 d^2/dx^2 + omega^4
// used throughout: it builds the coefficient system, the error-functional
// norm, and (restricted to the lattice) the discrete operator identity.

#include <cmath>
#include <string>
#include <type_traits>

#include "k2p2/errors.hpp"

namespace k2p2 {

// |omega| below this is rejected as zero.
inline constexpr double kOmegaZeroTol = 1e-12;

// |cos(omega)| below this is rejected; d2+ and the boundary system divide
// by cos(omega).
inline constexpr double kCosOmegaSingularTol = 1e-8;

template <class Real = double>
struct SpaceParams {
    static_assert(std::is_floating_point_v<Real>);

    Real omega;       // frequency of the zero-seminorm trig pair
    int n_intervals;  // N >= 1
    Real h;           // mesh width 1/N

    // Node abscissa beta/N, exact at both endpoints. Any integer is
    // accepted: the lattice extends beyond [0,1] for the discrete
    // convolutions.
    Real node(int beta) const {
        return static_cast<Real>(beta) / static_cast<Real>(n_intervals);
    }
};

template <class Real = double>
SpaceParams<Real> make_space_params(Real omega, int n_intervals,
                                    Real singular_tol = Real(kCosOmegaSingularTol)) {
    if (n_intervals < 1)
        throw BadNError("n_intervals must be >= 1, got " + std::to_string(n_intervals));
    if (!std::isfinite(omega) || std::abs(omega) < Real(kOmegaZeroTol))
        throw OmegaZeroError("omega must be finite and nonzero");
    if (std::abs(std::cos(omega)) < singular_tol)
        throw OmegaSingularError("|cos(omega)| = " + std::to_string(std::abs(std::cos(omega))) +
                                 " is below the singular tolerance");
    return SpaceParams<Real>{omega, n_intervals, Real(1) / static_cast<Real>(n_intervals)};
}

// G2(x); even in x, G2(0) = 0.
template <class Real>
Real green_kernel(Real x, const SpaceParams<Real>& params) {
    const Real w = params.omega;
    const Real sgn = x > Real(0) ? Real(1) : (x < Real(0) ? Real(-1) : Real(0));
    return sgn / (Real(4) * w * w * w) * (std::sin(w * x) - w * x * std::cos(w * x));
}

}  // namespace k2p2
