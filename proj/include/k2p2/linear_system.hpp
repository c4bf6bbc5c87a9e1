#pragma once

// Ground-truth dense route to the optimal coefficients: the bordered
// symmetric (N+3) x (N+3) system
//
//   sum_g C_g(z) G2(x_b - x_g) + d1 sin(w x_b) + d2 cos(w x_b) = G2(z - x_b),
//   sum_g C_g(z) sin(w x_g) = sin(w z),
//   sum_g C_g(z) cos(w x_g) = cos(w z),
//
// solved by Gaussian elimination with partial pivoting. O(N^3), intended
// as the desk-scale reference (N up to a few hundred) that the closed-form
// coefficients are validated against.

#include <cmath>
#include <cstddef>
#include <vector>

#include "k2p2/closed_form.hpp"
#include "k2p2/errors.hpp"
#include "k2p2/space.hpp"

namespace k2p2 {

// Pivot threshold, relative to the largest entry of the assembled matrix.
inline constexpr double kPivotTol = 1e-13;

template <class Real = double>
struct DeterminingSystem {
    int n_intervals;
    Real z;
    std::vector<Real> matrix;  // row-major, side() x side()
    std::vector<Real> rhs;

    int side() const { return n_intervals + 3; }
    Real& at(int row, int col) { return matrix[std::size_t(row) * side() + col]; }
    const Real& at(int row, int col) const { return matrix[std::size_t(row) * side() + col]; }
};

template <class Real>
DeterminingSystem<Real> assemble_system(Real z, const SpaceParams<Real>& params) {
    detail::require_unit_interval(z);
    const int n = params.n_intervals;
    const int side = n + 3;
    DeterminingSystem<Real> sys{n, z, std::vector<Real>(std::size_t(side) * side, Real(0)),
                                std::vector<Real>(side, Real(0))};
    // G2 block, filled symmetrically (G2 is even).
    for (int b = 0; b <= n; ++b)
        for (int g = b; g <= n; ++g) {
            const Real v = green_kernel(params.node(b) - params.node(g), params);
            sys.at(b, g) = v;
            sys.at(g, b) = v;
        }
    for (int b = 0; b <= n; ++b) {
        const Real sb = std::sin(params.omega * params.node(b));
        const Real cb = std::cos(params.omega * params.node(b));
        sys.at(b, n + 1) = sb;
        sys.at(b, n + 2) = cb;
        sys.at(n + 1, b) = sb;
        sys.at(n + 2, b) = cb;
        sys.rhs[b] = green_kernel(z - params.node(b), params);
    }
    sys.rhs[n + 1] = std::sin(params.omega * z);
    sys.rhs[n + 2] = std::cos(params.omega * z);
    return sys;
}

template <class Real = double>
struct OracleSolution {
    CoefficientVector<Real> coefficients;
    Real d1;
    Real d2;
};

// Elimination with partial pivoting on a working copy of the system.
template <class Real>
OracleSolution<Real> solve_dense(DeterminingSystem<Real> sys) {
    const int side = sys.side();
    Real max_entry(0);
    for (const Real& v : sys.matrix) max_entry = std::max(max_entry, std::abs(v));
    const Real pivot_floor = Real(kPivotTol) * max_entry;

    for (int col = 0; col < side; ++col) {
        int pivot_row = col;
        for (int r = col + 1; r < side; ++r)
            if (std::abs(sys.at(r, col)) > std::abs(sys.at(pivot_row, col))) pivot_row = r;
        if (!(std::abs(sys.at(pivot_row, col)) > pivot_floor))
            throw SingularSystemError("pivot below singularity threshold in column " +
                                      std::to_string(col));
        if (pivot_row != col) {
            for (int c = col; c < side; ++c) std::swap(sys.at(col, c), sys.at(pivot_row, c));
            std::swap(sys.rhs[col], sys.rhs[pivot_row]);
        }
        const Real pivot = sys.at(col, col);
        for (int r = col + 1; r < side; ++r) {
            const Real factor = sys.at(r, col) / pivot;
            if (factor == Real(0)) continue;
            sys.at(r, col) = Real(0);
            for (int c = col + 1; c < side; ++c) sys.at(r, c) -= factor * sys.at(col, c);
            sys.rhs[r] -= factor * sys.rhs[col];
        }
    }

    std::vector<Real> sol(side);
    for (int r = side - 1; r >= 0; --r) {
        Real acc = sys.rhs[r];
        for (int c = r + 1; c < side; ++c) acc -= sys.at(r, c) * sol[c];
        sol[r] = acc / sys.at(r, r);
    }

    OracleSolution<Real> out;
    out.coefficients.z = sys.z;
    out.coefficients.coeffs.assign(sol.begin(), sol.begin() + sys.n_intervals + 1);
    out.d1 = sol[sys.n_intervals + 1];
    out.d2 = sol[sys.n_intervals + 2];
    return out;
}

template <class Real>
CoefficientVector<Real> oracle_coefficients(Real z, const SpaceParams<Real>& params) {
    return solve_dense(assemble_system(z, params)).coefficients;
}

}  // namespace k2p2
