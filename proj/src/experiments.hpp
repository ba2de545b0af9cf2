#pragma once

#include "optimize.hpp"
#include "qcircuit.hpp"
#include "types.hpp"

#include <string>
#include <vector>

namespace ergo::exp {

// Numeric result grid shared by the C API and the CLI. `header` carries the
// configuration echo written into CSV comments.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> header;
};

// Fig.-2-style dressed-state sweep: volume vs total excitation i.
struct TcDressedConfig {
    int spins = 100;
    int n_ph = 50;
    double omega_c = 1.0;
    double omega_a = 1.0;
    bool subspace_mode = true;
    int threads = 0;
};
Table run_tc_dressed(const TcDressedConfig& cfg);

// Fig.-3-style phase diagram: ground-state volume on the (g1, g2) grid.
struct Dicke3Config {
    int atoms = 5;
    int n_max = 36;
    double omega_c = 1.0;
    double omega_a = 1.0;
    double g_min = 0.0;
    double g_max = 1.3;
    int grid_points = 40;
    std::int64_t dense_threshold = 4096;
    int threads = 0;
};
Table run_dicke3_phase(const Dicke3Config& cfg);

// Fig.-4-style ground-state volume vs g from the free-fermion pipeline, with
// an optional ED all-bipartition column for small N.
struct TfimGroundConfig {
    int spins = 20;
    double g_start = 0.02;
    double g_stop = 2.0;
    double g_step = 0.02;
    double trunc = 1e-12;
    bool with_numeric = false;  // requires spins <= 14
    int threads = 0;
};
Table run_tfim_ground(const TfimGroundConfig& cfg);

// Fig.-6-style quench dynamics: exact and VQA volume plus GGM vs time.
struct TfimDynamicsConfig {
    int spins = 6;
    double g = 2.0;
    double t_start = 0.0;
    double t_stop = 2.0;
    double t_step = 0.1;
    int depth = 6;
    int trotter_steps = 0;  // 0: dense evolution for the VQA input state
    bool with_vqa = true;
    bool with_noisy = false;
    qc::NoiseSpec noise{1e-3, 1e-2, 8, 7};
    opt::OptimizerConfig opt;
    models::Boundary boundary = models::Boundary::periodic;
    int threads = 0;
};
Table run_tfim_dynamics(const TfimDynamicsConfig& cfg);

// Fig.-7-style original-vs-quenched comparison on two-body models.
struct AppendixAConfig {
    enum class Model { jc, ising };
    Model model = Model::ising;
    double g_start = 0.0;
    double g_stop = 3.0;
    double g_step = 0.1;
    int jc_n_max = 5;
    opt::OptimizerConfig opt;
    int threads = 0;
};
// state column: 0 = product |01>, 1 = singlet, 2 = interacting ground state
Table run_appendix_a(const AppendixAConfig& cfg);

// Fig.-8-style three-measure comparison.
struct BenchmarkConfig {
    enum class Source { dressed, dynamics };
    Source source = Source::dynamics;
    bool rescaled = true;
    // dressed source: N_ph sweep at fixed spins/excitation
    int spins = 100;
    int excitation = 100;
    int nph_start = 2;
    int nph_stop = 200;
    int nph_step = 2;
    // dynamics source: exact volume over contiguous cuts vs time
    TfimDynamicsConfig dynamics;
    int threads = 0;
};
Table run_benchmark_compare(const BenchmarkConfig& cfg);

}  // namespace ergo::exp
