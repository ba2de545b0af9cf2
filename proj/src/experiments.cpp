#include "experiments.hpp"

#include "dicke_analytics.hpp"
#include "freefermion.hpp"
#include "gme.hpp"
#include "hilbert.hpp"
#include "models.hpp"
#include "parallel.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace ergo::exp {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> grid(double start, double stop, double step) {
    if (step <= 0) throw ConfigError("grid: step must be positive");
    std::vector<double> g;
    for (int i = 0;; ++i) {
        const double v = start + i * step;
        if (v > stop + 1e-12) break;
        g.push_back(v);
    }
    if (g.empty()) throw ConfigError("grid: empty range");
    return g;
}

}  // namespace

Table run_tc_dressed(const TcDressedConfig& cfg) {
    if (cfg.spins < 1 || cfg.n_ph < 0) throw ConfigError("tc-dressed: need spins >= 1, nph >= 0");
    const int n_i = cfg.spins + cfg.n_ph + 1;

    Table t;
    t.columns = {"i", "volume"};
    t.header = {{"experiment", "tc-dressed"},
                {"spins", std::to_string(cfg.spins)},
                {"nph", std::to_string(cfg.n_ph)},
                {"omega_c", fmt(cfg.omega_c)},
                {"omega_a", fmt(cfg.omega_a)},
                {"subspace_mode", cfg.subspace_mode ? "1" : "0"},
                {"rows", std::to_string(n_i)}};
    t.rows.assign(static_cast<size_t>(n_i), {});

    par::parallel_for(n_i, cfg.threads, [&](int i) {
        dicke::DressedParams p{cfg.spins, cfg.n_ph, i, cfg.omega_c, cfg.omega_a};
        const auto report = dicke::dressed_volume(p, cfg.subspace_mode);
        t.rows[static_cast<size_t>(i)] = {static_cast<double>(i), report.volume};
    });
    return t;
}

namespace {

// Quenched ground-state volume of the three-level Dicke model over all
// bipartitions, grouped by exchange-symmetry class (k atoms vs the rest,
// weight C(N, k); the permutation-symmetric ground state makes every subset
// of size k equivalent).
double dicke3_volume(const models::HamiltonianSpec& spec, const PureState& gs) {
    const int n_atoms = spec.dims.count() - 1;
    const double wc = spec.parameters.at("omega_c");
    const double wa = spec.parameters.at("omega_a");
    const int n_max = spec.dims.dim(0) - 1;

    auto atoms_spectrum = [&](int k) {
        std::vector<std::pair<double, std::uint64_t>> pairs;
        for (int j = 0; j <= k; ++j) {
            // j excited atoms (two excited levels each): C(k, j) 2^j states
            const std::uint64_t base = dicke::binomial_saturating(k, j);
            const std::uint64_t mult = j < 62 ? base << j : std::numeric_limits<std::uint64_t>::max();
            pairs.emplace_back(wa * j, mult < base ? std::numeric_limits<std::uint64_t>::max() : mult);
        }
        return LocalSpectrum::from_pairs(std::move(pairs));
    };
    auto cavity_atoms_spectrum = [&](int k) {
        std::vector<std::pair<double, std::uint64_t>> pairs;
        for (int m = 0; m <= n_max; ++m)
            for (int j = 0; j <= k; ++j) {
                const std::uint64_t base = dicke::binomial_saturating(k, j);
                const std::uint64_t mult = j < 62 ? base << j : std::numeric_limits<std::uint64_t>::max();
                pairs.emplace_back(wc * m + wa * j,
                                   mult < base ? std::numeric_limits<std::uint64_t>::max() : mult);
            }
        return LocalSpectrum::from_pairs(std::move(pairs));
    };

    std::vector<double> gaps;
    std::vector<std::uint64_t> mults;
    for (const auto& wcut : enumerate_bipartitions(n_atoms + 1, CutMode::symmetry_classes)) {
        const int k = wcut.cut.size_a();
        const double gap = quenched_gap(gs, wcut.cut, atoms_spectrum(k), cavity_atoms_spectrum(n_atoms - k));
        gaps.push_back(gap);
        mults.push_back(wcut.multiplicity);
    }
    return ergotropic_volume(gaps, mults);
}

}  // namespace

Table run_dicke3_phase(const Dicke3Config& cfg) {
    if (cfg.atoms < 1 || cfg.n_max < 1 || cfg.grid_points < 2)
        throw ConfigError("dicke3-phase: need atoms >= 1, n_max >= 1, grid_points >= 2");

    std::vector<double> gs(static_cast<size_t>(cfg.grid_points));
    const double step = (cfg.g_max - cfg.g_min) / (cfg.grid_points - 1);
    for (int i = 0; i < cfg.grid_points; ++i) gs[static_cast<size_t>(i)] = cfg.g_min + i * step;

    Table t;
    t.columns = {"g1", "g2", "volume"};
    t.header = {{"experiment", "dicke3-phase"},
                {"atoms", std::to_string(cfg.atoms)},
                {"n_max", std::to_string(cfg.n_max)},
                {"omega_c", fmt(cfg.omega_c)},
                {"omega_a", fmt(cfg.omega_a)},
                {"g_min", fmt(cfg.g_min)},
                {"g_max", fmt(cfg.g_max)},
                {"grid_points", std::to_string(cfg.grid_points)},
                {"cut_classes", "atom-subset vs cavity+rest, weight C(N,k)"},
                {"rows", std::to_string(cfg.grid_points * cfg.grid_points)}};
    const int cells = cfg.grid_points * cfg.grid_points;
    t.rows.assign(static_cast<size_t>(cells), {});

    par::parallel_for(cells, cfg.threads, [&](int cell) {
        const double g1 = gs[static_cast<size_t>(cell / cfg.grid_points)];
        const double g2 = gs[static_cast<size_t>(cell % cfg.grid_points)];
        const auto spec = models::build_dicke3(cfg.atoms, cfg.n_max, cfg.omega_c, cfg.omega_a, g1, g2);
        const auto ground = models::ground_state(spec, 1e-10, cfg.dense_threshold);
        t.rows[static_cast<size_t>(cell)] = {g1, g2, dicke3_volume(spec, ground.state)};
    });
    return t;
}

namespace {

// All-bipartition quenched volume of a qubit register with local levels
// {0, 2} per site (ED reference for small chains).
double qubit_all_cut_volume(const PureState& state) {
    const int n = state.dims().count();
    std::vector<double> gaps;
    for (const auto& wcut : enumerate_bipartitions(n, CutMode::all)) {
        const RealVector lam2 = hilbert::schmidt_squared(state, wcut.cut);
        std::vector<double> nz;
        for (Eigen::Index i = 0; i < lam2.size(); ++i)
            if (lam2(i) > 1e-15) nz.push_back(lam2(i));
        RealVector pops = Eigen::Map<RealVector>(nz.data(), static_cast<Eigen::Index>(nz.size()));
        gaps.push_back(ff::block_gap(pops, wcut.cut.size_a(), n));
    }
    return ergotropic_volume(gaps, std::vector<std::uint64_t>(gaps.size(), 1));
}

}  // namespace

Table run_tfim_ground(const TfimGroundConfig& cfg) {
    if (cfg.spins < 4 || cfg.spins % 2 != 0) throw ConfigError("tfim-ground: spins must be even, >= 4");
    if (cfg.with_numeric && cfg.spins > 14)
        throw ConfigError("tfim-ground: numeric ED column limited to spins <= 14");
    const auto gv = grid(cfg.g_start, cfg.g_stop, cfg.g_step);

    Table t;
    t.columns = {"g", "volume_analytic"};
    if (cfg.with_numeric) t.columns.push_back("volume_numeric");
    t.header = {{"experiment", "tfim-ground"},
                {"spins", std::to_string(cfg.spins)},
                {"g_start", fmt(cfg.g_start)},
                {"g_stop", fmt(cfg.g_stop)},
                {"g_step", fmt(cfg.g_step)},
                {"trunc", fmt(cfg.trunc)},
                {"with_numeric", cfg.with_numeric ? "1" : "0"},
                {"rows", std::to_string(gv.size())}};
    t.rows.assign(gv.size(), {});

    par::parallel_for(static_cast<int>(gv.size()), cfg.threads, [&](int i) {
        const double g = gv[static_cast<size_t>(i)];
        std::vector<double> row{g, ff::tfim_volume(cfg.spins, g, cfg.trunc).volume};
        if (cfg.with_numeric) {
            const auto spec = models::build_tfim(cfg.spins, g, models::Boundary::periodic);
            const auto ground = models::ground_state(spec, 1e-10, std::int64_t{1} << 15);
            row.push_back(qubit_all_cut_volume(ground.state));
        }
        t.rows[static_cast<size_t>(i)] = std::move(row);
    });
    return t;
}

namespace {

struct DenseEvolver {
    Matrix vectors;
    RealVector energies;
    Vector initial;
    SubsystemDims dims;

    static DenseEvolver make(int spins, double g, models::Boundary boundary) {
        const auto spec = models::build_tfim(spins, g, boundary);
        const auto eig = hilbert::eig_hermitian(spec.assemble());
        Vector init = Vector::Zero(spec.dims.total());
        init(0) = 1.0;  // |0...0>, all sigma_z up
        return DenseEvolver{eig.eigenvectors, eig.eigenvalues, std::move(init), spec.dims};
    }

    PureState at(double t) const {
        const Vector coeff = vectors.adjoint() * initial;
        Vector psi = Vector::Zero(initial.size());
        for (Eigen::Index k = 0; k < coeff.size(); ++k)
            psi += std::exp(Complex(0, -energies(k) * t)) * coeff(k) * vectors.col(k);
        return PureState(std::move(psi), dims);
    }
};

}  // namespace

Table run_tfim_dynamics(const TfimDynamicsConfig& cfg) {
    if (cfg.spins < 2 || cfg.spins > 14) throw ConfigError("tfim-dynamics: spins must be in [2, 14]");
    const auto ts = grid(cfg.t_start, cfg.t_stop, cfg.t_step);
    const auto evolver = DenseEvolver::make(cfg.spins, cfg.g, cfg.boundary);

    Table t;
    t.columns = {"t", "volume_exact"};
    if (cfg.with_vqa) t.columns.push_back("volume_vqa");
    if (cfg.with_vqa && cfg.with_noisy) t.columns.push_back("volume_vqa_noisy");
    t.columns.push_back("ggm");
    t.header = {{"experiment", "tfim-dynamics"},
                {"spins", std::to_string(cfg.spins)},
                {"g", fmt(cfg.g)},
                {"t_start", fmt(cfg.t_start)},
                {"t_stop", fmt(cfg.t_stop)},
                {"t_step", fmt(cfg.t_step)},
                {"depth", std::to_string(cfg.depth)},
                {"trotter_steps", std::to_string(cfg.trotter_steps)},
                {"boundary", cfg.boundary == models::Boundary::periodic ? "periodic" : "open"},
                {"with_vqa", cfg.with_vqa ? "1" : "0"},
                {"with_noisy", cfg.with_noisy ? "1" : "0"},
                {"opt_restarts", std::to_string(cfg.opt.restarts)},
                {"opt_seed", std::to_string(cfg.opt.seed)},
                {"rows", std::to_string(ts.size())}};
    t.rows.assign(ts.size(), {});

    // exact volume and GGM parallelize over the grid
    std::vector<double> exact(ts.size()), ggm_vals(ts.size());
    par::parallel_for(static_cast<int>(ts.size()), cfg.threads, [&](int i) {
        const PureState psi = evolver.at(ts[static_cast<size_t>(i)]);
        exact[static_cast<size_t>(i)] = qc::exact_contiguous_volume(psi).volume;
        ggm_vals[static_cast<size_t>(i)] = gme::ggm(psi);
    });

    // VQA runs sequentially so each grid point warm-starts the next
    std::vector<double> vqa_vals(ts.size()), noisy_vals(ts.size());
    if (cfg.with_vqa) {
        qc::VqaVolumeState chain, noisy_chain;
        for (size_t i = 0; i < ts.size(); ++i) {
            const double time = ts[i];
            const PureState psi =
                cfg.trotter_steps > 0
                    ? qc::run(qc::trotter_circuit(cfg.spins, cfg.g, time, cfg.trotter_steps, cfg.boundary),
                              PureState(evolver.initial, evolver.dims), {})
                    : evolver.at(time);
            vqa_vals[i] = qc::vqa_ergotropic_volume(psi, cfg.depth, cfg.opt, nullptr, &chain).volume;
            if (cfg.with_noisy)
                noisy_vals[i] =
                    qc::vqa_ergotropic_volume(psi, cfg.depth, cfg.opt, &cfg.noise, &noisy_chain).volume;
        }
    }

    for (size_t i = 0; i < ts.size(); ++i) {
        std::vector<double> row{ts[i], exact[i]};
        if (cfg.with_vqa) row.push_back(vqa_vals[i]);
        if (cfg.with_vqa && cfg.with_noisy) row.push_back(noisy_vals[i]);
        row.push_back(ggm_vals[i]);
        t.rows[i] = std::move(row);
    }
    return t;
}

Table run_appendix_a(const AppendixAConfig& cfg) {
    const auto gv = grid(cfg.g_start, cfg.g_stop, cfg.g_step);
    const bool jc = cfg.model == AppendixAConfig::Model::jc;

    Table t;
    t.columns = {"g", "state", "volume_original", "volume_quenched"};
    t.header = {{"experiment", "appendix-a"},
                {"model", jc ? "jc" : "ising"},
                {"g_start", fmt(cfg.g_start)},
                {"g_stop", fmt(cfg.g_stop)},
                {"g_step", fmt(cfg.g_step)},
                {"jc_n_max", std::to_string(cfg.jc_n_max)},
                {"state_codes", "0=product|01> 1=singlet 2=ground"},
                {"opt_restarts", std::to_string(cfg.opt.restarts)},
                {"opt_seed", std::to_string(cfg.opt.seed)},
                {"rows", std::to_string(3 * gv.size())}};
    t.rows.assign(3 * gv.size(), {});

    par::parallel_for(static_cast<int>(gv.size()), cfg.threads, [&](int gi) {
        const double g = gv[static_cast<size_t>(gi)];
        const auto spec = jc ? models::build_tc(1, cfg.jc_n_max, 1.0, 1.0, g)
                             : models::build_tfim(2, g, models::Boundary::periodic);
        const Matrix h = spec.assemble();
        const Bipartition cut(1u, 2);
        const LocalSpectrum spec_a = spec.local_spectrum(0);
        const LocalSpectrum spec_b = spec.local_spectrum(1);

        const std::int64_t dim = spec.dims.total();
        Vector product = Vector::Zero(dim);
        product(1) = 1.0;  // |0>|1>
        Vector singlet = Vector::Zero(dim);
        singlet(1) = 1.0 / std::sqrt(2.0);
        singlet(2) = -1.0 / std::sqrt(2.0);  // (|01> - |10>)/sqrt(2)
        const auto ground = models::ground_state(spec);

        const PureState states[3] = {PureState(product, spec.dims), PureState(singlet, spec.dims),
                                     ground.state};
        for (int s = 0; s < 3; ++s) {
            const double quenched = quenched_gap(states[s], cut, spec_a, spec_b);
            const double original = interacting_gap(states[s], h, cut, cfg.opt);
            t.rows[static_cast<size_t>(gi) * 3 + static_cast<size_t>(s)] =
                {g, static_cast<double>(s), original, quenched};
        }
    });
    return t;
}

namespace {

// GGM / GME-concurrence of the dressed state over the spin-block cut family,
// straight from the diagonal marginal populations.
std::pair<double, double> dressed_reference_measures(const dicke::DressedParams& p) {
    double max_pop = 0.0;
    double min_conc = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= p.n_spins; ++n) {
        const auto marg = dicke::dressed_marginal(p, n);
        double purity = 0.0;
        for (Eigen::Index l = 0; l < marg.populations.size(); ++l) {
            max_pop = std::max(max_pop, marg.populations(l));
            purity += marg.populations(l) * marg.populations(l);
        }
        min_conc = std::min(min_conc, std::sqrt(std::max(0.0, 2.0 * (1.0 - purity))));
    }
    return {1.0 - max_pop, min_conc};
}

}  // namespace

Table run_benchmark_compare(const BenchmarkConfig& cfg) {
    Table t;
    t.columns = {"x", "erg_volume", "ggm", "gme_concurrence"};

    if (cfg.source == BenchmarkConfig::Source::dressed) {
        std::vector<int> nphs;
        for (int nph = cfg.nph_start; nph <= cfg.nph_stop; nph += cfg.nph_step) nphs.push_back(nph);
        if (nphs.empty()) throw ConfigError("benchmark-compare: empty nph grid");
        t.header = {{"experiment", "benchmark-compare"},
                    {"source", "dressed"},
                    {"spins", std::to_string(cfg.spins)},
                    {"excitation", std::to_string(cfg.excitation)},
                    {"nph_start", std::to_string(cfg.nph_start)},
                    {"nph_stop", std::to_string(cfg.nph_stop)},
                    {"nph_step", std::to_string(cfg.nph_step)},
                    {"cuts", "spin-block family"},
                    {"rescaled", cfg.rescaled ? "1" : "0"},
                    {"rows", std::to_string(nphs.size())}};
        t.rows.assign(nphs.size(), {});
        par::parallel_for(static_cast<int>(nphs.size()), cfg.threads, [&](int i) {
            const int nph = nphs[static_cast<size_t>(i)];
            if (cfg.excitation > cfg.spins + nph)
                throw ConfigError("benchmark-compare: excitation exceeds N + N_ph at nph = " +
                                  std::to_string(nph));
            dicke::DressedParams p{cfg.spins, nph, cfg.excitation, 1.0, 1.0};
            const auto [g, c] = dressed_reference_measures(p);
            t.rows[static_cast<size_t>(i)] = {static_cast<double>(nph),
                                              dicke::dressed_volume(p).volume, g, c};
        });
    } else {
        const auto ts = grid(cfg.dynamics.t_start, cfg.dynamics.t_stop, cfg.dynamics.t_step);
        const auto evolver = DenseEvolver::make(cfg.dynamics.spins, cfg.dynamics.g, cfg.dynamics.boundary);
        t.header = {{"experiment", "benchmark-compare"},
                    {"source", "dynamics"},
                    {"spins", std::to_string(cfg.dynamics.spins)},
                    {"g", fmt(cfg.dynamics.g)},
                    {"t_start", fmt(cfg.dynamics.t_start)},
                    {"t_stop", fmt(cfg.dynamics.t_stop)},
                    {"t_step", fmt(cfg.dynamics.t_step)},
                    {"boundary",
                     cfg.dynamics.boundary == models::Boundary::periodic ? "periodic" : "open"},
                    {"rescaled", cfg.rescaled ? "1" : "0"},
                    {"rows", std::to_string(ts.size())}};
        t.rows.assign(ts.size(), {});
        par::parallel_for(static_cast<int>(ts.size()), cfg.threads, [&](int i) {
            const PureState psi = evolver.at(ts[static_cast<size_t>(i)]);
            t.rows[static_cast<size_t>(i)] = {ts[static_cast<size_t>(i)],
                                              qc::exact_contiguous_volume(psi).volume, gme::ggm(psi),
                                              gme::gme_concurrence(psi)};
        });
    }

    if (cfg.rescaled) {
        for (size_t col = 1; col < t.columns.size(); ++col) {
            std::vector<double> vals;
            for (const auto& row : t.rows) vals.push_back(row[col]);
            const auto scaled = gme::rescale_series(vals);
            for (size_t r = 0; r < t.rows.size(); ++r) t.rows[r][col] = scaled[r];
        }
    }
    return t;
}

}  // namespace ergo::exp
