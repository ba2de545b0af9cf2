#include "ergovolume.h"

#include "experiments.hpp"

#include <exception>
#include <string>

namespace {

thread_local std::string g_last_error;

struct TableImpl {
    ergo::exp::Table data;
};

ergo::opt::OptimizerConfig to_opt(const ergo_opt_params& p) {
    ergo::opt::OptimizerConfig cfg;
    cfg.restarts = p.restarts;
    cfg.max_iterations = p.max_iterations;
    cfg.tolerance = p.tolerance;
    cfg.seed = p.seed;
    cfg.initial_step = p.initial_step;
    return cfg;
}

ergo::qc::NoiseSpec to_noise(const ergo_noise_params& p) {
    return ergo::qc::NoiseSpec{p.p1, p.p2, p.trajectories, p.seed};
}

ergo::exp::TfimDynamicsConfig to_dynamics(const ergo_tfim_dynamics_params& p) {
    ergo::exp::TfimDynamicsConfig cfg;
    cfg.spins = p.spins;
    cfg.g = p.g;
    cfg.t_start = p.t_start;
    cfg.t_stop = p.t_stop;
    cfg.t_step = p.t_step;
    cfg.depth = p.depth;
    cfg.trotter_steps = p.trotter_steps;
    cfg.with_vqa = p.with_vqa != 0;
    cfg.with_noisy = p.with_noisy != 0;
    cfg.noise = to_noise(p.noise);
    cfg.opt = to_opt(p.opt);
    cfg.boundary = p.boundary == 1 ? ergo::models::Boundary::open_chain
                                   : ergo::models::Boundary::periodic;
    cfg.threads = p.threads;
    return cfg;
}

template <typename Fn>
int run_guarded(Fn&& fn, ergo_table** out) {
    if (out == nullptr) {
        g_last_error = "output table pointer is null";
        return ERGO_ERR_CONFIG;
    }
    *out = nullptr;
    try {
        auto* impl = new TableImpl{fn()};
        *out = reinterpret_cast<ergo_table*>(impl);
        g_last_error.clear();
        return ERGO_OK;
    } catch (const ergo::ConfigError& e) {
        g_last_error = e.what();
        return ERGO_ERR_CONFIG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ERGO_ERR_NUMERIC;
    } catch (...) {
        g_last_error = "unknown failure";
        return ERGO_ERR_NUMERIC;
    }
}

const TableImpl* impl_of(const ergo_table* t) {
    return reinterpret_cast<const TableImpl*>(t);
}

}  // namespace

extern "C" {

void ergo_opt_params_init(ergo_opt_params* p) {
    const ergo::opt::OptimizerConfig cfg;
    p->restarts = cfg.restarts;
    p->max_iterations = cfg.max_iterations;
    p->tolerance = cfg.tolerance;
    p->seed = cfg.seed;
    p->initial_step = cfg.initial_step;
}

void ergo_noise_params_init(ergo_noise_params* p) {
    p->p1 = 1e-3;
    p->p2 = 1e-2;
    p->trajectories = 8;
    p->seed = 7;
}

void ergo_tc_dressed_params_init(ergo_tc_dressed_params* p) {
    const ergo::exp::TcDressedConfig cfg;
    p->spins = cfg.spins;
    p->n_ph = cfg.n_ph;
    p->omega_c = cfg.omega_c;
    p->omega_a = cfg.omega_a;
    p->subspace_mode = cfg.subspace_mode ? 1 : 0;
    p->threads = cfg.threads;
}

void ergo_dicke3_params_init(ergo_dicke3_params* p) {
    const ergo::exp::Dicke3Config cfg;
    p->atoms = cfg.atoms;
    p->n_max = cfg.n_max;
    p->omega_c = cfg.omega_c;
    p->omega_a = cfg.omega_a;
    p->g_min = cfg.g_min;
    p->g_max = cfg.g_max;
    p->grid_points = cfg.grid_points;
    p->dense_threshold = cfg.dense_threshold;
    p->threads = cfg.threads;
}

void ergo_tfim_ground_params_init(ergo_tfim_ground_params* p) {
    const ergo::exp::TfimGroundConfig cfg;
    p->spins = cfg.spins;
    p->g_start = cfg.g_start;
    p->g_stop = cfg.g_stop;
    p->g_step = cfg.g_step;
    p->trunc = cfg.trunc;
    p->with_numeric = cfg.with_numeric ? 1 : 0;
    p->threads = cfg.threads;
}

void ergo_tfim_dynamics_params_init(ergo_tfim_dynamics_params* p) {
    const ergo::exp::TfimDynamicsConfig cfg;
    p->spins = cfg.spins;
    p->g = cfg.g;
    p->t_start = cfg.t_start;
    p->t_stop = cfg.t_stop;
    p->t_step = cfg.t_step;
    p->depth = cfg.depth;
    p->trotter_steps = cfg.trotter_steps;
    p->with_vqa = cfg.with_vqa ? 1 : 0;
    p->with_noisy = cfg.with_noisy ? 1 : 0;
    p->noise.p1 = cfg.noise.p1;
    p->noise.p2 = cfg.noise.p2;
    p->noise.trajectories = cfg.noise.trajectories;
    p->noise.seed = cfg.noise.seed;
    ergo_opt_params_init(&p->opt);
    p->boundary = cfg.boundary == ergo::models::Boundary::open_chain ? 1 : 0;
    p->threads = cfg.threads;
}

void ergo_appendix_a_params_init(ergo_appendix_a_params* p) {
    const ergo::exp::AppendixAConfig cfg;
    p->model = cfg.model == ergo::exp::AppendixAConfig::Model::jc ? 0 : 1;
    p->g_start = cfg.g_start;
    p->g_stop = cfg.g_stop;
    p->g_step = cfg.g_step;
    p->jc_n_max = cfg.jc_n_max;
    ergo_opt_params_init(&p->opt);
    p->threads = cfg.threads;
}

void ergo_benchmark_params_init(ergo_benchmark_params* p) {
    const ergo::exp::BenchmarkConfig cfg;
    p->source = cfg.source == ergo::exp::BenchmarkConfig::Source::dressed ? 0 : 1;
    p->rescaled = cfg.rescaled ? 1 : 0;
    p->spins = cfg.spins;
    p->excitation = cfg.excitation;
    p->nph_start = cfg.nph_start;
    p->nph_stop = cfg.nph_stop;
    p->nph_step = cfg.nph_step;
    ergo_tfim_dynamics_params_init(&p->dynamics);
    p->threads = cfg.threads;
}

int ergo_run_tc_dressed(const ergo_tc_dressed_params* p, ergo_table** out) {
    return run_guarded(
        [p] {
            ergo::exp::TcDressedConfig cfg;
            cfg.spins = p->spins;
            cfg.n_ph = p->n_ph;
            cfg.omega_c = p->omega_c;
            cfg.omega_a = p->omega_a;
            cfg.subspace_mode = p->subspace_mode != 0;
            cfg.threads = p->threads;
            return ergo::exp::run_tc_dressed(cfg);
        },
        out);
}

int ergo_run_dicke3_phase(const ergo_dicke3_params* p, ergo_table** out) {
    return run_guarded(
        [p] {
            ergo::exp::Dicke3Config cfg;
            cfg.atoms = p->atoms;
            cfg.n_max = p->n_max;
            cfg.omega_c = p->omega_c;
            cfg.omega_a = p->omega_a;
            cfg.g_min = p->g_min;
            cfg.g_max = p->g_max;
            cfg.grid_points = p->grid_points;
            cfg.dense_threshold = p->dense_threshold;
            cfg.threads = p->threads;
            return ergo::exp::run_dicke3_phase(cfg);
        },
        out);
}

int ergo_run_tfim_ground(const ergo_tfim_ground_params* p, ergo_table** out) {
    return run_guarded(
        [p] {
            ergo::exp::TfimGroundConfig cfg;
            cfg.spins = p->spins;
            cfg.g_start = p->g_start;
            cfg.g_stop = p->g_stop;
            cfg.g_step = p->g_step;
            cfg.trunc = p->trunc;
            cfg.with_numeric = p->with_numeric != 0;
            cfg.threads = p->threads;
            return ergo::exp::run_tfim_ground(cfg);
        },
        out);
}

int ergo_run_tfim_dynamics(const ergo_tfim_dynamics_params* p, ergo_table** out) {
    return run_guarded([p] { return ergo::exp::run_tfim_dynamics(to_dynamics(*p)); }, out);
}

int ergo_run_appendix_a(const ergo_appendix_a_params* p, ergo_table** out) {
    return run_guarded(
        [p] {
            ergo::exp::AppendixAConfig cfg;
            if (p->model != 0 && p->model != 1)
                throw ergo::ConfigError("appendix-a: model must be 0 (jc) or 1 (ising)");
            cfg.model = p->model == 0 ? ergo::exp::AppendixAConfig::Model::jc
                                      : ergo::exp::AppendixAConfig::Model::ising;
            cfg.g_start = p->g_start;
            cfg.g_stop = p->g_stop;
            cfg.g_step = p->g_step;
            cfg.jc_n_max = p->jc_n_max;
            cfg.opt = to_opt(p->opt);
            cfg.threads = p->threads;
            return ergo::exp::run_appendix_a(cfg);
        },
        out);
}

int ergo_run_benchmark_compare(const ergo_benchmark_params* p, ergo_table** out) {
    return run_guarded(
        [p] {
            ergo::exp::BenchmarkConfig cfg;
            if (p->source != 0 && p->source != 1)
                throw ergo::ConfigError("benchmark-compare: source must be 0 (dressed) or 1 (dynamics)");
            cfg.source = p->source == 0 ? ergo::exp::BenchmarkConfig::Source::dressed
                                        : ergo::exp::BenchmarkConfig::Source::dynamics;
            cfg.rescaled = p->rescaled != 0;
            cfg.spins = p->spins;
            cfg.excitation = p->excitation;
            cfg.nph_start = p->nph_start;
            cfg.nph_stop = p->nph_stop;
            cfg.nph_step = p->nph_step;
            cfg.dynamics = to_dynamics(p->dynamics);
            cfg.threads = p->threads;
            return ergo::exp::run_benchmark_compare(cfg);
        },
        out);
}

int ergo_table_num_rows(const ergo_table* t) {
    return t ? static_cast<int>(impl_of(t)->data.rows.size()) : 0;
}

int ergo_table_num_cols(const ergo_table* t) {
    return t ? static_cast<int>(impl_of(t)->data.columns.size()) : 0;
}

const char* ergo_table_column_name(const ergo_table* t, int col) {
    if (!t || col < 0 || col >= ergo_table_num_cols(t)) return nullptr;
    return impl_of(t)->data.columns[static_cast<std::size_t>(col)].c_str();
}

int ergo_table_value(const ergo_table* t, int row, int col, double* out) {
    if (!t || !out || row < 0 || row >= ergo_table_num_rows(t) || col < 0 ||
        col >= ergo_table_num_cols(t)) {
        g_last_error = "table index out of range";
        return ERGO_ERR_CONFIG;
    }
    *out = impl_of(t)->data.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    return ERGO_OK;
}

int ergo_table_num_header_entries(const ergo_table* t) {
    return t ? static_cast<int>(impl_of(t)->data.header.size()) : 0;
}

const char* ergo_table_header_key(const ergo_table* t, int idx) {
    if (!t || idx < 0 || idx >= ergo_table_num_header_entries(t)) return nullptr;
    return impl_of(t)->data.header[static_cast<std::size_t>(idx)].first.c_str();
}

const char* ergo_table_header_value(const ergo_table* t, int idx) {
    if (!t || idx < 0 || idx >= ergo_table_num_header_entries(t)) return nullptr;
    return impl_of(t)->data.header[static_cast<std::size_t>(idx)].second.c_str();
}

void ergo_table_free(ergo_table* t) {
    delete reinterpret_cast<TableImpl*>(t);
}

const char* ergo_last_error(void) {
    return g_last_error.c_str();
}

const char* ergo_version(void) {
    return "0.1.0";
}

}  // extern "C"
