#include "optimize.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace ergo::opt {

Matrix hermitian_exponential_unitary(const std::vector<double>& params, int d) {
    if (static_cast<int>(params.size()) != d * d)
        throw ConfigError("hermitian_exponential_unitary: need d^2 = " + std::to_string(d * d) +
                          " parameters, got " + std::to_string(params.size()));
    Matrix g = Matrix::Zero(d, d);
    size_t idx = 0;
    for (int i = 0; i < d; ++i) g(i, i) = params[idx++];
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const double re = params[idx++];
            const double im = params[idx++];
            g(i, j) = Complex(re, im);
            g(j, i) = Complex(re, -im);
        }
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    Vector phases(d);
    for (int i = 0; i < d; ++i) phases(i) = std::exp(Complex(0, es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

struct RestartOutcome {
    std::vector<double> params;
    double value = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
    bool aborted = false;
};

// Nelder-Mead with adaptive contraction on one start point.
RestartOutcome nelder_mead(const Objective& f, std::vector<double> x0, double step,
                           const OptimizerConfig& cfg) {
    const int n = static_cast<int>(x0.size());
    RestartOutcome out;

    std::vector<std::vector<double>> simplex(static_cast<size_t>(n) + 1, x0);
    std::vector<double> fv(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) simplex[static_cast<size_t>(i) + 1][static_cast<size_t>(i)] += step;
    for (size_t i = 0; i < simplex.size(); ++i) {
        fv[i] = f(simplex[i]);
        if (!std::isfinite(fv[i])) {
            out.aborted = true;
            return out;
        }
    }

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    std::vector<size_t> order(simplex.size());
    double best_seen = *std::min_element(fv.begin(), fv.end());
    int stall = 0;

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        out.iterations = iter + 1;
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });

        if (best_seen - fv[order[0]] < cfg.tolerance) {
            if (++stall >= cfg.stall_window) {
                out.converged = true;
                break;
            }
        } else {
            stall = 0;
        }
        best_seen = std::min(best_seen, fv[order[0]]);

        const size_t worst = order.back();
        std::vector<double> centroid(static_cast<size_t>(n), 0.0);
        for (size_t i = 0; i + 1 < order.size(); ++i)
            for (int k = 0; k < n; ++k) centroid[static_cast<size_t>(k)] += simplex[order[i]][static_cast<size_t>(k)];
        for (double& c : centroid) c /= n;

        auto blend = [&](double coef) {
            std::vector<double> p(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k)
                p[static_cast<size_t>(k)] = centroid[static_cast<size_t>(k)] +
                                            coef * (centroid[static_cast<size_t>(k)] - simplex[worst][static_cast<size_t>(k)]);
            return p;
        };

        auto refl = blend(alpha);
        double fr = f(refl);
        if (!std::isfinite(fr)) {
            out.aborted = true;
            return out;
        }

        if (fr < fv[order[0]]) {
            auto exp_p = blend(gamma);
            double fe = f(exp_p);
            if (std::isfinite(fe) && fe < fr) {
                simplex[worst] = std::move(exp_p);
                fv[worst] = fe;
            } else {
                simplex[worst] = std::move(refl);
                fv[worst] = fr;
            }
        } else if (fr < fv[order[order.size() - 2]]) {
            simplex[worst] = std::move(refl);
            fv[worst] = fr;
        } else {
            auto con = blend(-rho);
            double fc = f(con);
            if (std::isfinite(fc) && fc < fv[worst]) {
                simplex[worst] = std::move(con);
                fv[worst] = fc;
            } else {
                // shrink toward the best vertex
                const auto& best = simplex[order[0]];
                for (size_t i = 0; i < simplex.size(); ++i) {
                    if (i == order[0]) continue;
                    for (int k = 0; k < n; ++k)
                        simplex[i][static_cast<size_t>(k)] =
                            best[static_cast<size_t>(k)] +
                            sigma * (simplex[i][static_cast<size_t>(k)] - best[static_cast<size_t>(k)]);
                    fv[i] = f(simplex[i]);
                    if (!std::isfinite(fv[i])) {
                        out.aborted = true;
                        return out;
                    }
                }
            }
        }
    }

    size_t bi = 0;
    for (size_t i = 1; i < fv.size(); ++i)
        if (fv[i] < fv[bi]) bi = i;
    out.params = simplex[bi];
    out.value = fv[bi];
    return out;
}

}  // namespace

OptResult minimize(const Objective& objective, int n_params, const OptimizerConfig& config) {
    if (config.restarts < 1 || config.tolerance <= 0)
        throw ConfigError("minimize: restarts must be >= 1 and tolerance > 0");
    if (n_params <= 0) throw ConfigError("minimize: n_params must be positive");

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);

    OptResult result;
    result.best_value = std::numeric_limits<double>::infinity();
    int aborted = 0;

    for (int r = 0; r < config.restarts; ++r) {
        std::vector<double> x0(static_cast<size_t>(n_params), 0.0);
        if (r > 0)
            for (double& x : x0) x = uni(rng);
        RestartOutcome o = nelder_mead(objective, std::move(x0), config.initial_step, config);
        if (o.aborted) {
            ++aborted;
            continue;
        }
        result.iterations_used += o.iterations;
        result.converged = result.converged || o.converged;
        if (o.value < result.best_value) {
            result.best_value = o.value;
            result.best_params = std::move(o.params);
        }
    }
    if (aborted == config.restarts)
        throw NumericError("minimize: objective non-finite on every restart");
    if (!result.converged && result.best_params.empty())
        throw NumericError("minimize: no restart produced a usable result");
    return result;
}

OptResult minimize_sinusoidal(const Objective& objective, int n_params, const OptimizerConfig& config,
                              const std::vector<std::vector<double>>& warm_starts) {
    if (config.restarts < 1 || config.tolerance <= 0)
        throw ConfigError("minimize_sinusoidal: restarts must be >= 1 and tolerance > 0");
    for (const auto& w : warm_starts)
        if (static_cast<int>(w.size()) != n_params)
            throw ConfigError("minimize_sinusoidal: warm start length mismatch");

    constexpr double half_pi = std::numbers::pi / 2.0;
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);

    OptResult result;
    result.best_value = std::numeric_limits<double>::infinity();

    const int n_warm = static_cast<int>(warm_starts.size());
    const int total_starts = config.restarts + n_warm;
    for (int r = 0; r < total_starts; ++r) {
        std::vector<double> theta(static_cast<size_t>(n_params), 0.0);
        if (r < n_warm) {
            theta = warm_starts[static_cast<size_t>(r)];
        } else if (r != n_warm) {  // restart 0 stays at the origin
            for (double& t : theta) t = uni(rng);
        }
        double energy = objective(theta);
        if (!std::isfinite(energy)) continue;

        bool converged = false;
        int sweeps = 0;
        const int max_sweeps = std::max(1, config.max_iterations / std::max(1, 3 * n_params));
        for (; sweeps < max_sweeps; ++sweeps) {
            const double before = energy;
            for (int i = 0; i < n_params; ++i) {
                const double t0 = theta[static_cast<size_t>(i)];
                theta[static_cast<size_t>(i)] = t0 + half_pi;
                const double ep = objective(theta);
                theta[static_cast<size_t>(i)] = t0 - half_pi;
                const double em = objective(theta);
                // E(t) = a + b cos(t - t0) + c sin(t - t0); minimize exactly.
                const double phi = std::atan2(2.0 * energy - ep - em, ep - em);
                theta[static_cast<size_t>(i)] = t0 - half_pi - phi;
                energy = objective(theta);
            }
            if (before - energy < config.tolerance) {
                converged = true;
                break;
            }
        }
        result.iterations_used += sweeps;
        result.converged = result.converged || converged;
        if (energy < result.best_value) {
            result.best_value = energy;
            result.best_params = theta;
        }
    }
    if (result.best_params.empty() && n_params > 0)
        throw NumericError("minimize_sinusoidal: objective non-finite on every start");
    return result;
}

}  // namespace ergo::opt
