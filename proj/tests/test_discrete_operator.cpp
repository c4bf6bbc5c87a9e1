#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "k2p2/discrete_operator.hpp"
#include "k2p2/space.hpp"
#include "test_helpers.hpp"

using Catch::Approx;
using k2p2::testing::convolve_d2;

TEST_CASE("discrete operator constants for omega=1, N=5", "[discrete]") {
    const auto params = k2p2::make_space_params(1.0, 5);
    const auto dop = k2p2::discrete_operator_params(params);
    CHECK(std::abs(dop.lambda) < 1.0);
    CHECK(dop.lambda == Approx(-0.269190251807).epsilon(1e-10));
    CHECK(dop.p == Approx(753.008).epsilon(1e-5));
    CHECK(dop.big_c == Approx(-7.9043).epsilon(1e-4));
    CHECK(dop.big_a == Approx(-2.76039).epsilon(1e-4));
}

TEST_CASE("lambda branch selection stays inside the unit disc", "[discrete]") {
    for (int n : {1, 2, 5, 10, 100}) {
        const auto dop = k2p2::discrete_operator_params(k2p2::make_space_params(1.0, n));
        CHECK(std::abs(dop.lambda) < 1.0);
        CHECK(dop.lambda != 0.0);
    }
    // omega h > pi flips the sign convention of the printed radical; the
    // small root must still be picked
    const auto dop = k2p2::discrete_operator_params(k2p2::make_space_params(3.5, 1));
    CHECK(std::abs(dop.lambda) < 1.0);
    CHECK(dop.lambda == Approx(-0.6662351599441452).epsilon(1e-12));
}

TEST_CASE("small-mesh constants agree with extended precision", "[discrete]") {
    // omega h = 0.01 is the smallest supported mesh; the closed forms are
    // evaluated in long double as the cancellation oracle.
    const auto dop = k2p2::discrete_operator_params(k2p2::make_space_params(1.0, 100));
    const auto dop_ld = k2p2::discrete_operator_params(k2p2::make_space_params(1.0L, 100));
    CHECK(dop.lambda == Approx(double(dop_ld.lambda)).epsilon(1e-9));
    CHECK(dop.p == Approx(double(dop_ld.p)).epsilon(1e-9));
    CHECK(dop.big_c == Approx(double(dop_ld.big_c)).epsilon(1e-9));
    CHECK(dop.big_a == Approx(double(dop_ld.big_a)).epsilon(1e-9));
    // analytic mesh->0 limit of lambda is sqrt(3) - 2
    CHECK(dop.lambda == Approx(std::sqrt(3.0) - 2.0).margin(1e-4));
}

TEST_CASE("degenerate mesh is rejected", "[discrete]") {
    // omega h -> pi drives lambda to -1
    const auto params = k2p2::make_space_params(3.1415926535, 1);
    CHECK_THROWS_AS(k2p2::discrete_operator_params(params), k2p2::NumericallyDegenerateError);
}

TEST_CASE("discrete_operator_value branches and symmetry", "[discrete]") {
    const auto params = k2p2::make_space_params(1.0, 5);
    const auto dop = k2p2::discrete_operator_params(params);
    CHECK(k2p2::discrete_operator_value(-7, dop) == k2p2::discrete_operator_value(7, dop));
    CHECK(k2p2::discrete_operator_value(0, dop) ==
          Approx(dop.p * (dop.big_c + dop.big_a / dop.lambda)).epsilon(1e-15));
    CHECK(k2p2::discrete_operator_value(1, dop) == Approx(dop.p * (1.0 + dop.big_a)));
    // geometric tail: ratio of consecutive values is lambda
    for (int b = 2; b < 8; ++b)
        CHECK(k2p2::discrete_operator_value(b + 1, dop) /
                  k2p2::discrete_operator_value(b, dop) ==
              Approx(dop.lambda).epsilon(1e-13));
}

TEST_CASE("convolution identity D2 * G2 = delta", "[discrete]") {
    {
        const auto params = k2p2::make_space_params(1.0, 5);
        const auto dop = k2p2::discrete_operator_params(params);
        CHECK(k2p2::verify_discrete_identity(dop, params, 20) <= 1e-6);
    }
    {
        const auto params = k2p2::make_space_params(1.0, 10);
        const auto dop = k2p2::discrete_operator_params(params);
        CHECK(k2p2::verify_discrete_identity(dop, params, 50) <= 1e-6);
    }
}

TEST_CASE("convolution with G2 is even in beta", "[discrete]") {
    const auto params = k2p2::make_space_params(1.0, 5);
    const auto dop = k2p2::discrete_operator_params(params);
    const auto g2 = [&](int b) { return k2p2::green_kernel(params.node(b), params); };
    for (int beta : {1, 3, 9}) {
        const double plus = convolve_d2(dop, params, g2, beta);
        const double minus = convolve_d2(dop, params, g2, -beta);
        CHECK(plus == Approx(minus).margin(1e-12));
    }
}

TEST_CASE("D2 annihilates the four lattice trig functions", "[discrete]") {
    for (int n : {5, 10}) {
        const auto params = k2p2::make_space_params(1.0, n);
        const auto dop = k2p2::discrete_operator_params(params);
        const double t = params.omega * params.h;
        const auto fsin = [&](int b) { return std::sin(t * b); };
        const auto fcos = [&](int b) { return std::cos(t * b); };
        const auto fxsin = [&](int b) { return (t * b) * std::sin(t * b); };
        const auto fxcos = [&](int b) { return (t * b) * std::cos(t * b); };
        for (int beta : {0, 1, 2, 3}) {
            CHECK(std::abs(convolve_d2(dop, params, fsin, beta)) <= 1e-6);
            CHECK(std::abs(convolve_d2(dop, params, fcos, beta)) <= 1e-6);
            CHECK(std::abs(convolve_d2(dop, params, fxsin, beta)) <= 1e-6);
            CHECK(std::abs(convolve_d2(dop, params, fxcos, beta)) <= 1e-6);
        }
    }
}

TEST_CASE("plain lattice sum of D2 against sin vanishes by symmetry", "[discrete]") {
    const auto params = k2p2::make_space_params(1.0, 5);
    const auto dop = k2p2::discrete_operator_params(params);
    double sum = 0.0;
    for (int b = -50; b <= 50; ++b)
        sum += k2p2::discrete_operator_value(b, dop) * std::sin(params.omega * params.node(b));
    CHECK(std::abs(sum) <= 1e-9 * std::abs(dop.p));
}

TEST_CASE("verify_discrete_identity rejects a too-small window", "[discrete]") {
    const auto params = k2p2::make_space_params(1.0, 5);
    const auto dop = k2p2::discrete_operator_params(params);
    CHECK_THROWS_AS(k2p2::verify_discrete_identity(dop, params, 1), k2p2::Error);
}
