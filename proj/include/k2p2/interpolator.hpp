#pragma once

// Applying a coefficient vector to sampled data, the error-functional
// norm, and the convergence sweep over a uniform z grid.
//
// P_phi(z) = sum_beta C_beta(z) phi(x_beta); the squared norm of the
// error functional at coefficients satisfying the trig-exactness
// constraints is
//
//   ||l||^2 = sum_b sum_g C_b C_g G2(x_b - x_g) - 2 sum_b C_b G2(z - x_b),
//
// nonnegative up to roundoff, and zero exactly at the nodes.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "k2p2/closed_form.hpp"
#include "k2p2/errors.hpp"
#include "k2p2/space.hpp"

namespace k2p2 {

template <class Real = double>
struct SampleSet {
    SpaceParams<Real> params;
    std::vector<Real> values;  // phi(beta/N), beta = 0..N
};

template <class Real>
SampleSet<Real> make_sample_set(const SpaceParams<Real>& params, std::vector<Real> values) {
    if (static_cast<int>(values.size()) != params.n_intervals + 1)
        throw LengthMismatchError("expected " + std::to_string(params.n_intervals + 1) +
                                  " samples, got " + std::to_string(values.size()));
    for (const Real& v : values)
        if (!std::isfinite(v)) throw Error("sample values must be finite");
    return SampleSet<Real>{params, std::move(values)};
}

template <class Real, class F>
SampleSet<Real> sample_function(const SpaceParams<Real>& params, F&& phi) {
    std::vector<Real> values(params.n_intervals + 1);
    for (int b = 0; b <= params.n_intervals; ++b) values[b] = phi(params.node(b));
    return make_sample_set(params, std::move(values));
}

// P_phi at the point the coefficients were built for.
template <class Real>
Real interpolate(const SampleSet<Real>& samples, const CoefficientVector<Real>& coeffs) {
    if (samples.values.size() != coeffs.coeffs.size())
        throw LengthMismatchError("coefficient and sample lengths differ");
    Real acc(0);
    for (std::size_t b = 0; b < samples.values.size(); ++b)
        acc += coeffs.coeffs[b] * samples.values[b];
    return acc;
}

// ||l||^2 at the given coefficients; meaningful when they satisfy the
// trig-exactness constraints.
template <class Real>
Real error_norm_squared(const CoefficientVector<Real>& coeffs, const SpaceParams<Real>& params) {
    const int n = params.n_intervals;
    if (static_cast<int>(coeffs.coeffs.size()) != n + 1)
        throw LengthMismatchError("coefficient length does not match N+1");
    Real quad(0);
    for (int b = 0; b <= n; ++b) {
        // off-diagonal pairs counted twice through symmetry of G2
        for (int g = b + 1; g <= n; ++g)
            quad += Real(2) * coeffs.coeffs[b] * coeffs.coeffs[g] *
                    green_kernel(params.node(b) - params.node(g), params);
    }
    Real single(0);
    for (int b = 0; b <= n; ++b)
        single += coeffs.coeffs[b] * green_kernel(coeffs.z - params.node(b), params);
    return quad - Real(2) * single;  // diagonal G2(0) terms vanish
}

template <class Real = double>
struct ErrorReport {
    std::vector<Real> z_grid;
    std::vector<Real> abs_errors;  // |phi(z) - P_phi(z)|
    std::vector<Real> norm_sq;     // ||l||^2 per z
    Real max_abs_error;
};

// One report per parameter set: samples phi at the nodes, builds the
// closed-form coefficients per grid point, records |phi(z) - P_phi(z)|
// and ||l||^2. The grid is uniform on [0,1] including both endpoints, so
// node points (and the Kronecker-delta property) are exercised whenever
// the grid hits them.
template <class Real, class F>
std::vector<ErrorReport<Real>> convergence_report(F&& phi,
                                                  const std::vector<SpaceParams<Real>>& params_list,
                                                  int grid_size) {
    if (grid_size < 2) throw Error("grid_size must be >= 2");
    std::vector<ErrorReport<Real>> reports;
    reports.reserve(params_list.size());
    for (const auto& params : params_list) {
        const auto samples = sample_function(params, phi);
        ErrorReport<Real> report;
        report.z_grid.reserve(grid_size);
        report.abs_errors.reserve(grid_size);
        report.norm_sq.reserve(grid_size);
        report.max_abs_error = Real(0);
        for (int i = 0; i < grid_size; ++i) {
            const Real z = static_cast<Real>(i) / static_cast<Real>(grid_size - 1);
            const auto coeffs = optimal_coefficients(z, params);
            const Real err = std::abs(phi(z) - interpolate(samples, coeffs));
            report.z_grid.push_back(z);
            report.abs_errors.push_back(err);
            report.norm_sq.push_back(error_norm_squared(coeffs, params));
            report.max_abs_error = std::max(report.max_abs_error, err);
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace k2p2
