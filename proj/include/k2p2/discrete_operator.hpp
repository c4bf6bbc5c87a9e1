#pragma once

// Discrete analogue D2 of the operator d^4/dx^4 + 2 omega^2 d^2/dx^2 + omega^4
// on the lattice h*beta. D2 inverts G2 under discrete convolution,
//
//   sum_gamma D2(h gamma) G2(h(beta - gamma)) = delta(h beta),
//
// and annihilates the lattice samples of sin(omega x), cos(omega x),
// (omega x) sin(omega x) and (omega x) cos(omega x). With t = omega h,
//
//   D2(h beta) = p * { big_a * lambda^(|beta|-1)   |beta| >= 2
//                      1 + big_a                   |beta| =  1
//                      big_c + big_a / lambda      beta  =  0 }
//
//   p     = 2 omega^3 / (sin t - t cos t)
//   big_c = (2t cos 2t - sin 2t) / (sin t - t cos t)
//   big_a = 4 t^2 sin^4(t) lambda^2 / ((lambda^2 - 1)(sin t - t cos t)^2)
//
// lambda is the root with |lambda| < 1 of the reciprocal-pair quadratic
//
//   lambda^2 - (2t - sin 2t)/(t cos t - sin t) * lambda + 1 = 0,
//
// computed as the inverse of the large root to avoid cancellation, then
// matched against the closed form with radical sqrt(t^2 - sin^2 t) (either
// radical sign, which depends on the sign of sin t). Failure of any of
// these checks at working precision reports NumericallyDegenerateError.

#include <cmath>

#include "k2p2/errors.hpp"
#include "k2p2/space.hpp"

namespace k2p2 {

// Margin for the |lambda| < 1 acceptance check.
inline constexpr double kLambdaUnitMargin = 1e-8;

template <class Real = double>
struct DiscreteOperatorParams {
    Real p;       // overall scale
    Real big_c;   // center weight
    Real big_a;   // tail amplitude
    Real lambda;  // geometric tail ratio, |lambda| < 1
};

namespace detail {

// x^n, n >= 0, by binary exponentiation; well defined for negative x.
template <class Real>
Real ipow(Real x, int n) {
    Real r(1);
    while (n > 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

}  // namespace detail

template <class Real>
DiscreteOperatorParams<Real> discrete_operator_params(const SpaceParams<Real>& params) {
    const Real t = params.omega * params.h;
    const Real sin_t = std::sin(t);
    const Real cos_t = std::cos(t);
    const Real denom = sin_t - t * cos_t;  // ~ t^3/3 near 0; vanishes only where tan t = t
    if (denom == Real(0) || !std::isfinite(denom))
        throw NumericallyDegenerateError("sin(omega h) - omega h cos(omega h) vanishes");

    // Reciprocal root pair: sum s, product 1. The small root is 1/(large root).
    const Real s = (Real(2) * t - std::sin(Real(2) * t)) / (t * cos_t - sin_t);
    const Real disc = s * s - Real(4);
    if (!(disc >= Real(0)))
        throw NumericallyDegenerateError("lambda roots are not real at working precision");
    const Real large_root = (s + std::copysign(std::sqrt(disc), s)) / Real(2);
    const Real lambda = Real(1) / large_root;
    if (!(std::abs(lambda) < Real(1) - Real(kLambdaUnitMargin)))
        throw NumericallyDegenerateError("|lambda| < 1 fails at working precision");

    // Closed form with radical sqrt(t^2 - sin^2 t); the selected root must
    // match one of the two radical signs.
    const Real rad = std::sqrt(std::max(Real(0), t * t - sin_t * sin_t));
    const Real closed_a = (Real(2) * t - std::sin(Real(2) * t) - Real(2) * sin_t * rad) /
                          (Real(2) * (t * cos_t - sin_t));
    const Real closed_b = (Real(2) * t - std::sin(Real(2) * t) + Real(2) * sin_t * rad) /
                          (Real(2) * (t * cos_t - sin_t));
    const Real mismatch = std::min(std::abs(lambda - closed_a), std::abs(lambda - closed_b));
    if (!(mismatch <= Real(1e-6)))
        throw NumericallyDegenerateError("selected lambda disagrees with its closed form");

    DiscreteOperatorParams<Real> dop;
    dop.lambda = lambda;
    dop.p = Real(2) * params.omega * params.omega * params.omega / denom;
    dop.big_c = (Real(2) * t * std::cos(Real(2) * t) - std::sin(Real(2) * t)) / denom;
    dop.big_a = Real(4) * t * t * sin_t * sin_t * sin_t * sin_t * lambda * lambda /
                ((lambda * lambda - Real(1)) * denom * denom);
    if (!std::isfinite(dop.p) || !std::isfinite(dop.big_c) || !std::isfinite(dop.big_a))
        throw NumericallyDegenerateError("discrete operator constants are not finite");
    return dop;
}

// D2(h beta); even in beta.
template <class Real>
Real discrete_operator_value(int beta, const DiscreteOperatorParams<Real>& dop) {
    const int b = beta < 0 ? -beta : beta;
    if (b == 0) return dop.p * (dop.big_c + dop.big_a / dop.lambda);
    if (b == 1) return dop.p * (Real(1) + dop.big_a);
    return dop.p * dop.big_a * detail::ipow(dop.lambda, b - 1);
}

// Max over |beta| <= half_width of |(D2 * G2)(h beta) - delta(h beta)|.
// The inner sum stops once the per-term tail bound
// p |big_a| |lambda|^(T-1) * max|G2| over the reachable window drops
// below 1e-14; |G2(x)| <= (1 + omega|x|) / (4 omega^3).
template <class Real>
Real verify_discrete_identity(const DiscreteOperatorParams<Real>& dop,
                              const SpaceParams<Real>& params, int half_width) {
    if (half_width < 2) throw Error("half_width must be >= 2");
    const Real w = std::abs(params.omega);
    const Real pa = std::abs(dop.p * dop.big_a);
    const Real abs_lambda = std::abs(dop.lambda);
    const auto g2_bound = [&](Real radius) {
        return (Real(1) + w * radius) / (Real(4) * w * w * w);
    };
    int trunc = 2;
    while (pa * detail::ipow(abs_lambda, trunc - 1) *
                   g2_bound(params.h * Real(trunc + half_width)) >=
               Real(1e-14) &&
           trunc < 100000)
        ++trunc;

    Real worst(0);
    for (int beta = -half_width; beta <= half_width; ++beta) {
        Real sum(0);
        for (int gamma = -trunc; gamma <= trunc; ++gamma)
            sum += discrete_operator_value(gamma, dop) *
                   green_kernel(params.node(beta - gamma), params);
        const Real target = beta == 0 ? Real(1) : Real(0);
        worst = std::max(worst, std::abs(sum - target));
    }
    return worst;
}

}  // namespace k2p2
