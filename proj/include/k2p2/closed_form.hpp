#pragma once

// Closed-form optimal interpolation coefficients.
//
// For fixed z in [0,1] the optimal coefficients arise as the discrete
// convolution C_beta(z) = (D2 * u2)(h beta), where u2 extends
// G2(z - h beta) beyond the lattice points of [0,1] by trig-plus-linear
// tails:
//
//   u2(h beta) = d1- sin(w h beta) + d2- cos(w h beta)
//                  + (h beta)/(4 w^2) cos(w(h beta - z)),   beta <= 0,
//   u2(h beta) = G2(z - h beta),                            0 <= beta <= N,
//   u2(h beta) = d1+ sin(w h beta) + d2+ cos(w h beta)
//                  - (h beta)/(4 w^2) cos(w(h beta - z)),   beta >= N.
//
// Matching at beta = 0 gives d2- = G2(z); matching at beta = N eliminates
// d2+ through cos(omega). The remaining unknowns d1-, d1+ solve the 2x2
// system given by (D2 * u2)(h beta) = 0 at beta = -1 and beta = N + 1,
// whose entries assemble from the constants K1..K8 below. All infinite
// tails collapse through the geometric identities
//
//   sum_{k>=1} lam^k e^{ikt} = lam e^{it} / (1 - lam e^{it}),
//   sum_{k>=1} k lam^k e^{ikt} = lam e^{it} / (1 - lam e^{it})^2.
//
// With the boundary solved, every coefficient assembles in O(1) from the
// two-sweep prefix sums of lam^|beta-gamma| G2(z - h gamma), so the full
// vector costs O(N) after O(N) setup:
//
//   C_beta(z) = p [ u2(h(beta-1)) + big_c u2(h beta) + u2(h(beta+1))
//                   + big_a/lam (F(beta) + lam^beta M1 + lam^(N-beta) N1) ],
//
// where F(beta) = sum_{gamma=0..N} lam^|beta-gamma| G2(z - h gamma) and
// M1, N1 are the lambda-weighted tail aggregates of u2.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "k2p2/discrete_operator.hpp"
#include "k2p2/errors.hpp"
#include "k2p2/space.hpp"

namespace k2p2 {

template <class Real = double>
struct BoundarySolution {
    Real d1_minus;  // solved from the 2x2 boundary system
    Real d1_plus;
    Real d2_minus;  // = G2(z)
    Real d2_plus;   // eliminated through cos(omega)
    Real m1;        // sum_{k>=1} lam^k u2(-h k)
    Real n1;        // sum_{k>=1} lam^k u2(h(N+k))
    std::array<Real, 8> k;  // K1..K8, k[0] = K1
};

template <class Real = double>
struct CoefficientVector {
    Real z;
    std::vector<Real> coeffs;  // C_0(z)..C_N(z)
};

namespace detail {

template <class Real>
void require_unit_interval(Real z) {
    if (!(z >= Real(0) && z <= Real(1)))
        throw Error("evaluation point z must lie in [0,1]");
}

// Re[ e^{i phase} * lam e^{i theta} / (1 - lam e^{i theta}) ]
//   = sum_{k>=1} lam^k cos(k theta + phase).
template <class Real>
Real geometric_cos(Real lam, Real theta, Real phase) {
    const std::complex<Real> e(std::cos(theta), std::sin(theta));
    const std::complex<Real> core = lam * e / (Real(1) - lam * e);
    return std::real(std::complex<Real>(std::cos(phase), std::sin(phase)) * core);
}

// Re[ e^{i phase} * lam e^{i theta} / (1 - lam e^{i theta})^2 ]
//   = sum_{k>=1} k lam^k cos(k theta + phase).
template <class Real>
Real geometric_weighted_cos(Real lam, Real theta, Real phase) {
    const std::complex<Real> e(std::cos(theta), std::sin(theta));
    const std::complex<Real> one_minus = Real(1) - lam * e;
    const std::complex<Real> core = lam * e / (one_minus * one_minus);
    return std::real(std::complex<Real>(std::cos(phase), std::sin(phase)) * core);
}

// Boundary-tail branches of u2, evaluable at any beta for the continuity
// checks at beta = 0 and beta = N.
template <class Real>
Real u2_left_tail(int beta, Real z, const BoundarySolution<Real>& bs,
                  const SpaceParams<Real>& params) {
    const Real w = params.omega;
    const Real x = params.node(beta);
    return bs.d1_minus * std::sin(w * x) + bs.d2_minus * std::cos(w * x) +
           x / (Real(4) * w * w) * std::cos(w * (x - z));
}

template <class Real>
Real u2_right_tail(int beta, Real z, const BoundarySolution<Real>& bs,
                   const SpaceParams<Real>& params) {
    const Real w = params.omega;
    const Real x = params.node(beta);
    return bs.d1_plus * std::sin(w * x) + bs.d2_plus * std::cos(w * x) -
           x / (Real(4) * w * w) * std::cos(w * (x - z));
}

// Assembled 2x2 boundary system a11 d1- + a12 d1+ = s1,
// a21 d1- + a22 d1+ = s2; exposed so tests can verify residuals.
template <class Real>
struct BoundaryMatrix {
    Real a11, a12, a21, a22, s1, s2;
};

}  // namespace detail

// The eight constants of the boundary system at evaluation point z, with
// q = lambda^2 - 2 lambda cos(omega h) + 1:
//
//   K1 = lam (cos(w(1+h)) - lam cos w) / q
//   K2 = lam (lam^2 cos(w(h-z)) - 2 lam cos(w z) + cos(w(h+z))) / q^2
//   K3 = sum_{g>=1} lam^g (N+g) cos(w(h(N+g) - z))        (closed form)
//   K4 = sum_{g=0..N} lam^g G2(z - h g)
//   K5 = lam (cos(w h) - lam) / q
//   K6 = cos w + big_c cos(w h(N+1)) + cos(w h(N+2)) + big_a K1 / lam^2
//   K7 = sum_{g=0..N} lam^-g G2(z - h g)
//   K8 = lam (sin(w(1+h)) - lam sin w) / q
template <class Real>
std::array<Real, 8> k_constants(Real z, const SpaceParams<Real>& params,
                                const DiscreteOperatorParams<Real>& dop) {
    detail::require_unit_interval(z);
    const Real w = params.omega;
    const Real h = params.h;
    const Real t = w * h;
    const Real lam = dop.lambda;
    const int n = params.n_intervals;
    const Real q = lam * lam - Real(2) * lam * std::cos(t) + Real(1);

    std::array<Real, 8> k{};
    k[0] = lam * (std::cos(w * (Real(1) + h)) - lam * std::cos(w)) / q;
    k[1] = lam *
           (lam * lam * std::cos(w * (h - z)) - Real(2) * lam * std::cos(w * z) +
            std::cos(w * (h + z))) /
           (q * q);
    k[2] = Real(n) * detail::geometric_cos(lam, t, w - w * z) +
           detail::geometric_weighted_cos(lam, t, w - w * z);
    Real k4(0), k7(0), lam_pos(1), lam_neg(1);
    for (int g = 0; g <= n; ++g) {
        const Real g2 = green_kernel(z - params.node(g), params);
        k4 += lam_pos * g2;
        k7 += lam_neg * g2;
        lam_pos *= lam;
        lam_neg /= lam;
    }
    k[3] = k4;
    k[4] = lam * (std::cos(t) - lam) / q;
    k[5] = std::cos(w) + dop.big_c * std::cos(t * Real(n + 1)) + std::cos(t * Real(n + 2)) +
           dop.big_a * k[0] / (lam * lam);
    k[6] = k7;
    k[7] = lam * (std::sin(w * (Real(1) + h)) - lam * std::sin(w)) / q;
    return k;
}

namespace detail {

template <class Real>
BoundaryMatrix<Real> boundary_matrix(Real z, const SpaceParams<Real>& params,
                                     const DiscreteOperatorParams<Real>& dop,
                                     const std::array<Real, 8>& k) {
    const Real w = params.omega;
    const Real h = params.h;
    const Real t = w * h;
    const Real lam = dop.lambda;
    const Real big_a = dop.big_a;
    const Real big_c = dop.big_c;
    const int n = params.n_intervals;
    const Real q = lam * lam - Real(2) * lam * std::cos(t) + Real(1);
    const Real cw = std::cos(w);
    const Real lam_n = ipow(lam, n);
    const Real g2_z = green_kernel(z, params);
    const Real g2_z1 = green_kernel(z - Real(1), params);
    const Real inv4w2 = Real(1) / (Real(4) * w * w);

    // lam^N K7 accumulated in scaled form; K7 alone grows like lam^-N.
    Real lam_n_k7(0);
    {
        Real f(1);
        for (int g = n; g >= 0; --g) {
            lam_n_k7 += f * green_kernel(z - params.node(g), params);
            f *= lam;
        }
    }

    BoundaryMatrix<Real> bm;
    bm.a11 = -std::sin(Real(2) * t) - big_c * std::sin(t) - big_a * std::sin(t) / (lam * q);
    bm.a12 = big_a * lam_n * lam * std::sin(t) / (cw * q);
    bm.a21 = -big_a * lam_n * lam * std::sin(t) / q;
    bm.a22 = (big_c * std::sin(t) + std::sin(Real(2) * t) + big_a * std::sin(t) / (lam * q)) / cw;
    bm.s1 = inv4w2 * (big_c * h * std::cos(w * (h + z)) +
                      Real(2) * h * std::cos(w * (Real(2) * h + z)) -
                      big_a * lam_n * std::cos(w * (Real(1) - z)) / cw * k[0] +
                      big_a * h / (lam * lam) * k[1] + big_a * h * lam_n * k[2]) -
            big_a * k[3] - big_a * lam_n * g2_z1 / cw * k[0] -
            g2_z * (big_c * std::cos(t) + Real(1) + std::cos(Real(2) * t) +
                    big_a / (lam * lam) * k[4]);
    bm.s2 = inv4w2 * (big_a * lam_n * h * k[1] + std::cos(w * (Real(1) - z)) +
                      big_c * h * Real(n + 1) * std::cos(w * (h * Real(n + 1) - z)) +
                      h * Real(n + 2) * std::cos(w * (h * Real(n + 2) - z)) +
                      big_a * h * k[2] / (lam * lam) -
                      std::cos(w * (Real(1) - z)) * k[5] / cw) -
            big_a * lam_n_k7 - g2_z * big_a * lam_n * k[4] - g2_z1 * k[5] / cw;
    return bm;
}

}  // namespace detail

// Solves the boundary system by Cramer's rule, then fills in d2-, d2+ and
// the tail aggregates M1, N1.
template <class Real>
BoundarySolution<Real> boundary_solution(Real z, const SpaceParams<Real>& params,
                                         const DiscreteOperatorParams<Real>& dop) {
    detail::require_unit_interval(z);
    const Real w = params.omega;
    const Real h = params.h;
    const Real t = w * h;
    const Real lam = dop.lambda;
    const Real q = lam * lam - Real(2) * lam * std::cos(t) + Real(1);
    const Real inv4w2 = Real(1) / (Real(4) * w * w);

    BoundarySolution<Real> bs;
    bs.k = k_constants(z, params, dop);
    const auto bm = detail::boundary_matrix(z, params, dop, bs.k);

    const Real det = bm.a11 * bm.a22 - bm.a21 * bm.a12;
    const Real det_scale =
        std::max(std::abs(bm.a11 * bm.a22), std::abs(bm.a21 * bm.a12));
    if (!(std::abs(det) > Real(1e-14) * det_scale))
        throw SingularBoundarySystemError("2x2 boundary system is singular");

    bs.d1_minus = (bm.s1 * bm.a22 - bm.s2 * bm.a12) / det;
    bs.d1_plus = (bm.s2 * bm.a11 - bm.s1 * bm.a21) / det;
    bs.d2_minus = green_kernel(z, params);
    bs.d2_plus = (green_kernel(z - Real(1), params) +
                  std::cos(w * (Real(1) - z)) * inv4w2 - bs.d1_plus * std::sin(w)) /
                 std::cos(w);
    bs.m1 = -bs.d1_minus * lam * std::sin(t) / q + bs.d2_minus * bs.k[4] -
            h * inv4w2 * bs.k[1];
    bs.n1 = bs.d1_plus * bs.k[7] + bs.d2_plus * bs.k[0] - h * inv4w2 * bs.k[2];
    return bs;
}

// u2 on the whole lattice. The tail and interior definitions coincide at
// beta = 0 and beta = N.
template <class Real>
Real u2_extension(int beta, Real z, const BoundarySolution<Real>& bs,
                  const SpaceParams<Real>& params) {
    if (beta < 0) return detail::u2_left_tail(beta, z, bs, params);
    if (beta > params.n_intervals) return detail::u2_right_tail(beta, z, bs, params);
    return green_kernel(z - params.node(beta), params);
}

// Full closed-form coefficient vector C_0(z)..C_N(z).
template <class Real>
CoefficientVector<Real> optimal_coefficients(Real z, const SpaceParams<Real>& params) {
    detail::require_unit_interval(z);
    const auto dop = discrete_operator_params(params);
    const auto bs = boundary_solution(z, params, dop);
    const int n = params.n_intervals;
    const Real lam = dop.lambda;

    std::vector<Real> g(n + 1);
    for (int b = 0; b <= n; ++b) g[b] = green_kernel(z - params.node(b), params);

    // F(beta) = sum_gamma lam^|beta-gamma| g_gamma in two sweeps.
    std::vector<Real> left(n + 1), right(n + 1), lam_pow(n + 1);
    left[0] = g[0];
    lam_pow[0] = Real(1);
    for (int b = 1; b <= n; ++b) {
        left[b] = lam * left[b - 1] + g[b];
        lam_pow[b] = lam * lam_pow[b - 1];
    }
    right[n] = g[n];
    for (int b = n - 1; b >= 0; --b) right[b] = lam * right[b + 1] + g[b];

    CoefficientVector<Real> out{z, std::vector<Real>(n + 1)};
    for (int b = 0; b <= n; ++b) {
        const Real f = left[b] + right[b] - g[b];
        const Real tail = f + lam_pow[b] * bs.m1 + lam_pow[n - b] * bs.n1;
        const Real local = u2_extension(b - 1, z, bs, params) +
                           dop.big_c * u2_extension(b, z, bs, params) +
                           u2_extension(b + 1, z, bs, params);
        out.coeffs[b] = dop.p * (local + dop.big_a / lam * tail);
    }
    return out;
}

}  // namespace k2p2
