#pragma once

#include "types.hpp"

#include <functional>

namespace ergo::opt {

struct OptimizerConfig {
    int restarts = 8;
    int max_iterations = 5000;
    double tolerance = 1e-9;       // objective-improvement threshold
    std::uint64_t seed = 0;
    double initial_step = 0.5;
    int stall_window = 50;         // iterations without improvement before a restart converges
};

struct OptResult {
    std::vector<double> best_params;
    double best_value = 0.0;
    int iterations_used = 0;
    bool converged = false;
};

using Objective = std::function<double(const std::vector<double>&)>;

// exp(iG) with G Hermitian assembled from d^2 real parameters:
// d diagonal entries followed by (re, im) pairs for the upper triangle.
Matrix hermitian_exponential_unitary(const std::vector<double>& params, int d);

// Derivative-free Nelder-Mead style direct search with seeded random restarts.
// Deterministic given (seed, config, objective). Restart initial points are
// uniform over [-pi, pi] per parameter; restart 0 starts at the origin.
OptResult minimize(const Objective& objective, int n_params, const OptimizerConfig& config);

// Coordinate-descent minimizer for objectives that are sinusoidal in each
// parameter (rotation-angle circuits): per coordinate the exact minimum of
// a + b cos(t) + c sin(t) is taken from three evaluations. Falls back to the
// same restart/convergence bookkeeping as `minimize`. Each warm start is an
// additional start point on top of the seeded restarts.
OptResult minimize_sinusoidal(const Objective& objective, int n_params, const OptimizerConfig& config,
                              const std::vector<std::vector<double>>& warm_starts = {});

}  // namespace ergo::opt
