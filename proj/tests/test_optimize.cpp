#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "optimize.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace ergo;

TEST_CASE("hermitian_exponential_unitary at zero parameters is the identity") {
    const Matrix u = opt::hermitian_exponential_unitary(std::vector<double>(9, 0.0), 3);
    CHECK((u - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("hermitian_exponential_unitary reproduces exp(i pi sigma_x / 2)") {
    // G = (pi/2) sigma_x: diagonal zeros, upper-triangle (re, im) = (pi/2, 0)
    const std::vector<double> params{0.0, 0.0, std::acos(-1.0) / 2.0, 0.0};
    const Matrix u = opt::hermitian_exponential_unitary(params, 2);
    // exp(i (pi/2) sigma_x) = i sigma_x
    CHECK(std::abs(u(0, 0)) < 1e-10);
    CHECK(std::abs(u(0, 1) - Complex(0.0, 1.0)) < 1e-10);
    CHECK(std::abs(u(1, 0) - Complex(0.0, 1.0)) < 1e-10);
    CHECK((u * u.adjoint() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("hermitian_exponential_unitary is unitary for random parameters") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> params(16);
        for (double& p : params) p = uni(rng);
        const Matrix u = opt::hermitian_exponential_unitary(params, 4);
        CHECK((u * u.adjoint() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("hermitian_exponential_unitary rejects wrong parameter counts") {
    CHECK_THROWS_AS(opt::hermitian_exponential_unitary(std::vector<double>(3, 0.0), 2), ConfigError);
}

TEST_CASE("hermitian_exponential_unitary can fit Haar-random U(2) targets") {
    std::mt19937_64 rng(31);
    opt::OptimizerConfig cfg;
    cfg.restarts = 6;
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix target = testutil::random_unitary(2, rng);
        auto objective = [&](const std::vector<double>& p) {
            const Matrix u = opt::hermitian_exponential_unitary(p, 2);
            // phase-insensitive infidelity
            return 1.0 - std::norm((target.adjoint() * u).trace()) / 4.0;
        };
        const auto res = opt::minimize(objective, 4, cfg);
        CHECK(res.best_value < 1e-6);
    }
}

TEST_CASE("minimize recovers the minimum of a convex bowl") {
    const std::vector<double> x0{0.7, -1.3, 2.1};
    auto objective = [&](const std::vector<double>& x) {
        double s = 0.0;
        for (size_t i = 0; i < x.size(); ++i) s += (x[i] - x0[i]) * (x[i] - x0[i]);
        return s;
    };
    const auto res = opt::minimize(objective, 3, opt::OptimizerConfig{});
    REQUIRE(res.converged);
    for (size_t i = 0; i < 3; ++i) CHECK(res.best_params[i] == doctest::Approx(x0[i]).epsilon(1e-5));
    CHECK(res.best_value < 1e-10);
}

TEST_CASE("minimize escapes local wells of a Rastrigin-like objective") {
    // global minimum at x = 1.7 inside [-pi, pi]; many local wells
    auto objective = [](const std::vector<double>& x) {
        const double t = x[0] - 1.7;
        return t * t + 1.5 * (1.0 - std::cos(4.0 * t));
    };
    const auto res = opt::minimize(objective, 1, opt::OptimizerConfig{});
    CHECK(res.best_params[0] == doctest::Approx(1.7).epsilon(1e-4));
    CHECK(res.best_value < 1e-7);
}

TEST_CASE("minimize is deterministic given the seed") {
    auto objective = [](const std::vector<double>& x) {
        return std::sin(3.0 * x[0]) + 0.1 * x[0] * x[0] + std::cos(2.0 * x[1]);
    };
    opt::OptimizerConfig cfg;
    cfg.seed = 42;
    const auto a = opt::minimize(objective, 2, cfg);
    const auto b = opt::minimize(objective, 2, cfg);
    CHECK(a.best_value == b.best_value);
    CHECK(a.best_params == b.best_params);
}

TEST_CASE("minimize aborts restarts on non-finite objectives") {
    auto objective = [](const std::vector<double>&) { return std::nan(""); };
    CHECK_THROWS(opt::minimize(objective, 2, opt::OptimizerConfig{}));
}

TEST_CASE("minimize_sinusoidal solves separable sinusoidal objectives exactly") {
    auto objective = [](const std::vector<double>& x) {
        return std::cos(x[0] - 0.4) + std::sin(x[1] + 1.1) + 2.0;
    };
    const auto res = opt::minimize_sinusoidal(objective, 2, opt::OptimizerConfig{});
    CHECK(res.best_value == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("minimize_sinusoidal warm starts are honored") {
    // objective with a narrow global well a generic search may miss quickly
    auto objective = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double v : x) s += 1.0 - std::cos(v - 2.9);
        return s;
    };
    opt::OptimizerConfig cfg;
    cfg.restarts = 1;
    const std::vector<std::vector<double>> warm{{2.9, 2.9, 2.9}};
    const auto res = opt::minimize_sinusoidal(objective, 3, cfg, warm);
    CHECK(res.best_value < 1e-10);
}
