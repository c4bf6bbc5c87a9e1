#pragma once

// Umbrella header: optimal interpolation in the space K2(P2) on equally
// spaced nodes, via closed-form coefficients and the dense reference
// solve, plus the error-functional norm and convergence reporting.

#include "k2p2/closed_form.hpp"
#include "k2p2/discrete_operator.hpp"
#include "k2p2/errors.hpp"
#include "k2p2/interpolator.hpp"
#include "k2p2/io.hpp"
#include "k2p2/linear_system.hpp"
#include "k2p2/space.hpp"
