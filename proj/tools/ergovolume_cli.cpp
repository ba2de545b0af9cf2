// Command-line driver for the ergotropic-volume experiments. Each subcommand
// maps to one C-API runner and writes a CSV with a '#'-prefixed header block
// echoing the full configuration, so identical configs reproduce identical
// bytes. Exit codes: 0 success, 2 config error, 3 numerical failure.

#include "ergovolume.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const ergo_table* t) {
    os << "# tool = ergovolume " << ergo_version() << "\n";
    const int nh = ergo_table_num_header_entries(t);
    for (int i = 0; i < nh; ++i)
        os << "# " << ergo_table_header_key(t, i) << " = " << ergo_table_header_value(t, i)
           << "\n";
    const int rows = ergo_table_num_rows(t);
    const int cols = ergo_table_num_cols(t);
    for (int c = 0; c < cols; ++c) os << (c ? "," : "") << ergo_table_column_name(t, c);
    os << "\n";
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            double v = 0.0;
            ergo_table_value(t, r, c, &v);
            os << (c ? "," : "") << fmt17(v);
        }
        os << "\n";
    }
}

int emit(int rc, ergo_table* t, const std::string& output) {
    if (rc != ERGO_OK) {
        std::cerr << "error: " << (rc == ERGO_ERR_CONFIG ? "config" : "numeric") << ": "
                  << ergo_last_error() << "\n";
        return rc;
    }
    std::unique_ptr<ergo_table, void (*)(ergo_table*)> guard(t, ergo_table_free);
    if (output.empty() || output == "-") {
        write_csv(std::cout, t);
        return 0;
    }
    std::ofstream os(output, std::ios::binary);
    if (!os) {
        std::cerr << "error: config: cannot open output file '" << output << "'\n";
        return ERGO_ERR_CONFIG;
    }
    write_csv(os, t);
    if (!os.good()) {
        std::cerr << "error: numeric: write failed for '" << output << "'\n";
        return ERGO_ERR_NUMERIC;
    }
    return 0;
}

void add_common(CLI::App* sub, std::string* output, int* threads) {
    sub->add_option("-o,--output", *output, "Output CSV path ('-' or empty: stdout)");
    sub->add_option("--threads", *threads,
                    "Worker threads (0: ERGOVOLUME_THREADS or hardware default)");
}

void add_opt_options(CLI::App* sub, ergo_opt_params* opt) {
    sub->add_option("--opt-restarts", opt->restarts, "Optimizer restarts");
    sub->add_option("--opt-max-iterations", opt->max_iterations, "Iteration cap per restart");
    sub->add_option("--opt-tolerance", opt->tolerance, "Objective-improvement threshold");
    sub->add_option("--opt-seed", opt->seed, "Optimizer RNG seed");
    sub->add_option("--opt-initial-step", opt->initial_step, "Initial simplex step");
}

struct DynFlags {
    bool no_vqa = false;
    bool with_noisy = false;
};

void add_dynamics_options(CLI::App* sub, ergo_tfim_dynamics_params* p, DynFlags* flags) {
    sub->add_option("--spins", p->spins, "Number of spins N");
    sub->add_option("-g,--coupling", p->g, "Transverse field g");
    sub->add_option("--t-start", p->t_start, "Time grid start");
    sub->add_option("--t-stop", p->t_stop, "Time grid stop");
    sub->add_option("--t-step", p->t_step, "Time grid step");
    sub->add_option("--depth", p->depth, "Maximum ansatz depth");
    sub->add_option("--trotter-steps", p->trotter_steps,
                    "Trotter steps for circuit state prep (0: dense evolution)");
    sub->add_flag("--no-vqa", flags->no_vqa, "Skip the variational column");
    sub->add_flag("--with-noisy", flags->with_noisy, "Add the depolarizing-noise column");
    sub->add_option("--noise-p1", p->noise.p1, "Single-qubit depolarizing probability");
    sub->add_option("--noise-p2", p->noise.p2, "Two-qubit depolarizing probability");
    sub->add_option("--noise-trajectories", p->noise.trajectories, "Noise trajectories");
    sub->add_option("--noise-seed", p->noise.seed, "Noise RNG seed");
    sub->add_option("--boundary", p->boundary, "Boundary: 0 periodic, 1 open chain")
        ->check(CLI::Range(0, 1));
    add_opt_options(sub, &p->opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ergotropic-volume entanglement experiments"};
    app.set_version_flag("--version", std::string("ergovolume ") + ergo_version());
    app.set_config("--config", "",
                   "Key=value config file ([subcommand] sections); command-line flags win");
    app.require_subcommand(1);

    std::string output;

    ergo_tc_dressed_params tc;
    ergo_tc_dressed_params_init(&tc);
    auto* tc_sub = app.add_subcommand("tc-dressed",
                                      "Dressed-state volume vs excitation (Tavis-Cummings)");
    tc_sub->add_option("--spins", tc.spins, "Number of spins N");
    tc_sub->add_option("--nph", tc.n_ph, "Photon-number cutoff N_ph");
    tc_sub->add_option("--omega-c", tc.omega_c, "Cavity frequency");
    tc_sub->add_option("--omega-a", tc.omega_a, "Atomic frequency");
    bool tc_full_space = false;
    tc_sub->add_flag("--full-space", tc_full_space,
                     "Passive assignment over the full 2^n spin space");
    add_common(tc_sub, &output, &tc.threads);

    ergo_dicke3_params d3;
    ergo_dicke3_params_init(&d3);
    auto* d3_sub = app.add_subcommand("dicke3-phase",
                                      "Three-level Dicke ground-state phase diagram");
    d3_sub->add_option("--atoms", d3.atoms, "Number of three-level atoms");
    d3_sub->add_option("--n-max", d3.n_max, "Photon cutoff");
    d3_sub->add_option("--omega-c", d3.omega_c, "Cavity frequency");
    d3_sub->add_option("--omega-a", d3.omega_a, "Atomic frequency");
    d3_sub->add_option("--g-min", d3.g_min, "Grid start (both axes)");
    d3_sub->add_option("--g-max", d3.g_max, "Grid stop (both axes)");
    d3_sub->add_option("--grid-points", d3.grid_points, "Grid points per axis");
    d3_sub->add_option("--dense-threshold", d3.dense_threshold,
                       "Dense-ED dimension threshold (above: Lanczos)");
    add_common(d3_sub, &output, &d3.threads);

    ergo_tfim_ground_params tg;
    ergo_tfim_ground_params_init(&tg);
    auto* tg_sub = app.add_subcommand("tfim-ground",
                                      "TFIM ground-state volume vs g (free fermions)");
    tg_sub->add_option("--spins", tg.spins, "Number of spins N");
    tg_sub->add_option("--g-start", tg.g_start, "Field grid start");
    tg_sub->add_option("--g-stop", tg.g_stop, "Field grid stop");
    tg_sub->add_option("--g-step", tg.g_step, "Field grid step");
    tg_sub->add_option("--trunc", tg.trunc, "RDM spectrum truncation");
    bool tg_with_numeric = false;
    tg_sub->add_flag("--with-numeric", tg_with_numeric,
                     "Add an ED all-bipartition column (N <= 14)");
    add_common(tg_sub, &output, &tg.threads);

    ergo_tfim_dynamics_params td;
    ergo_tfim_dynamics_params_init(&td);
    auto* td_sub = app.add_subcommand("tfim-dynamics",
                                      "TFIM quench dynamics: exact vs variational volume");
    DynFlags td_flags;
    add_dynamics_options(td_sub, &td, &td_flags);
    add_common(td_sub, &output, &td.threads);

    ergo_appendix_a_params aa;
    ergo_appendix_a_params_init(&aa);
    auto* aa_sub = app.add_subcommand("appendix-a",
                                      "Original vs quenched gap on two-body models");
    aa_sub->add_option("--model", aa.model, "Model: 0 Jaynes-Cummings, 1 two-spin Ising")
        ->check(CLI::Range(0, 1));
    aa_sub->add_option("--g-start", aa.g_start, "Coupling grid start");
    aa_sub->add_option("--g-stop", aa.g_stop, "Coupling grid stop");
    aa_sub->add_option("--g-step", aa.g_step, "Coupling grid step");
    aa_sub->add_option("--jc-n-max", aa.jc_n_max, "JC photon cutoff");
    add_opt_options(aa_sub, &aa.opt);
    add_common(aa_sub, &output, &aa.threads);

    ergo_benchmark_params bm;
    ergo_benchmark_params_init(&bm);
    auto* bm_sub = app.add_subcommand("benchmark-compare",
                                      "Ergotropic volume vs GGM vs GME-concurrence");
    bm_sub->add_option("--source", bm.source, "Series: 0 dressed N_ph sweep, 1 dynamics")
        ->check(CLI::Range(0, 1));
    bool bm_raw = false;
    bm_sub->add_flag("--raw", bm_raw, "Disable min-max rescaling");
    bm_sub->add_option("--spins", bm.spins, "Spins N (dressed source)");
    bm_sub->add_option("--excitation", bm.excitation, "Excitation i (dressed source)");
    bm_sub->add_option("--nph-start", bm.nph_start, "N_ph grid start");
    bm_sub->add_option("--nph-stop", bm.nph_stop, "N_ph grid stop");
    bm_sub->add_option("--nph-step", bm.nph_step, "N_ph grid step");
    bm_sub->add_option("--dyn-spins", bm.dynamics.spins, "Spins N (dynamics source)");
    bm_sub->add_option("--dyn-coupling", bm.dynamics.g, "Field g (dynamics source)");
    bm_sub->add_option("--dyn-t-start", bm.dynamics.t_start, "Time grid start");
    bm_sub->add_option("--dyn-t-stop", bm.dynamics.t_stop, "Time grid stop");
    bm_sub->add_option("--dyn-t-step", bm.dynamics.t_step, "Time grid step");
    bm_sub->add_option("--dyn-boundary", bm.dynamics.boundary,
                       "Boundary: 0 periodic, 1 open chain")
        ->check(CLI::Range(0, 1));
    add_common(bm_sub, &output, &bm.threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: config: " << e.what() << "\n";
        return ERGO_ERR_CONFIG;
    }

    if (tc_full_space) tc.subspace_mode = 0;
    if (tg_with_numeric) tg.with_numeric = 1;
    if (td_flags.no_vqa) td.with_vqa = 0;
    if (td_flags.with_noisy) td.with_noisy = 1;
    if (bm_raw) bm.rescaled = 0;

    ergo_table* table = nullptr;
    int rc = ERGO_ERR_CONFIG;
    if (tc_sub->parsed())
        rc = ergo_run_tc_dressed(&tc, &table);
    else if (d3_sub->parsed())
        rc = ergo_run_dicke3_phase(&d3, &table);
    else if (tg_sub->parsed())
        rc = ergo_run_tfim_ground(&tg, &table);
    else if (td_sub->parsed())
        rc = ergo_run_tfim_dynamics(&td, &table);
    else if (aa_sub->parsed())
        rc = ergo_run_appendix_a(&aa, &table);
    else if (bm_sub->parsed())
        rc = ergo_run_benchmark_compare(&bm, &table);
    else {
        std::cerr << "error: config: no subcommand given\n";
        return ERGO_ERR_CONFIG;
    }
    return emit(rc, table, output);
}
