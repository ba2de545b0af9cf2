#ifndef ERGOVOLUME_H
#define ERGOVOLUME_H

/* C API for the ergotropic-volume library.
 *
 * Every experiment runner fills an opaque result table (rows of doubles plus
 * named columns and a key/value header echo). Functions return 0 on success,
 * ERGO_ERR_CONFIG (2) on invalid configuration and ERGO_ERR_NUMERIC (3) on
 * numerical failure; ergo_last_error() describes the most recent failure on
 * the calling thread.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ERGO_OK 0
#define ERGO_ERR_CONFIG 2
#define ERGO_ERR_NUMERIC 3

typedef struct ergo_table ergo_table;

/* Shared derivative-free optimizer settings (interacting gap, VQA). */
typedef struct {
    int restarts;        /* >= 1 */
    int max_iterations;  /* per restart */
    double tolerance;    /* objective-improvement threshold */
    uint64_t seed;
    double initial_step;
} ergo_opt_params;

/* Stochastic depolarizing-noise settings for the circuit backend. */
typedef struct {
    double p1;           /* per single-qubit gate */
    double p2;           /* per two-qubit gate */
    int trajectories;
    uint64_t seed;
} ergo_noise_params;

/* Tavis-Cummings dressed-state sweep: volume vs excitation i = 0..N+N_ph. */
typedef struct {
    int spins;
    int n_ph;
    double omega_c;
    double omega_a;
    int subspace_mode;   /* 1: collective-level spectra; 0: full-space degeneracies */
    int threads;         /* 0: auto */
} ergo_tc_dressed_params;

/* Three-level Dicke ground-state phase diagram on the (g1, g2) grid. */
typedef struct {
    int atoms;
    int n_max;           /* photon cutoff */
    double omega_c;
    double omega_a;
    double g_min;
    double g_max;
    int grid_points;     /* per axis */
    int64_t dense_threshold; /* Hilbert dims below this use dense ED */
    int threads;
} ergo_dicke3_params;

/* TFIM ground-state volume vs g from the free-fermion pipeline. */
typedef struct {
    int spins;
    double g_start;
    double g_stop;
    double g_step;
    double trunc;        /* RDM spectrum truncation */
    int with_numeric;    /* 1: add an ED all-bipartition column (spins <= 14) */
    int threads;
} ergo_tfim_ground_params;

/* TFIM quench dynamics: exact volume, VQA volume and GGM vs time. */
typedef struct {
    int spins;
    double g;
    double t_start;
    double t_stop;
    double t_step;
    int depth;           /* max ansatz depth */
    int trotter_steps;   /* 0: dense evolution for the circuit input state */
    int with_vqa;
    int with_noisy;
    ergo_noise_params noise;
    ergo_opt_params opt;
    int boundary;        /* 0: periodic, 1: open chain */
    int threads;
} ergo_tfim_dynamics_params;

/* Original vs quenched gap on two-body models (JC / 2-spin Ising). */
typedef struct {
    int model;           /* 0: jc, 1: ising */
    double g_start;
    double g_stop;
    double g_step;
    int jc_n_max;        /* photon cutoff for the JC model */
    ergo_opt_params opt;
    int threads;
} ergo_appendix_a_params;

/* Ergotropic volume vs GGM vs GME-concurrence comparison. */
typedef struct {
    int source;          /* 0: dressed N_ph sweep, 1: dynamics time series */
    int rescaled;        /* 1: min-max rescale each measure column */
    int spins;           /* dressed source */
    int excitation;
    int nph_start;
    int nph_stop;
    int nph_step;
    ergo_tfim_dynamics_params dynamics; /* dynamics source */
    int threads;
} ergo_benchmark_params;

/* Defaults matching the paper-scale runs; call before overriding fields. */
void ergo_opt_params_init(ergo_opt_params *p);
void ergo_noise_params_init(ergo_noise_params *p);
void ergo_tc_dressed_params_init(ergo_tc_dressed_params *p);
void ergo_dicke3_params_init(ergo_dicke3_params *p);
void ergo_tfim_ground_params_init(ergo_tfim_ground_params *p);
void ergo_tfim_dynamics_params_init(ergo_tfim_dynamics_params *p);
void ergo_appendix_a_params_init(ergo_appendix_a_params *p);
void ergo_benchmark_params_init(ergo_benchmark_params *p);

/* Runners. On success *out owns a fresh table (free with ergo_table_free);
 * on failure *out is NULL. */
int ergo_run_tc_dressed(const ergo_tc_dressed_params *p, ergo_table **out);
int ergo_run_dicke3_phase(const ergo_dicke3_params *p, ergo_table **out);
int ergo_run_tfim_ground(const ergo_tfim_ground_params *p, ergo_table **out);
int ergo_run_tfim_dynamics(const ergo_tfim_dynamics_params *p, ergo_table **out);
int ergo_run_appendix_a(const ergo_appendix_a_params *p, ergo_table **out);
int ergo_run_benchmark_compare(const ergo_benchmark_params *p, ergo_table **out);

/* Table accessors. Returned strings are owned by the table. */
int ergo_table_num_rows(const ergo_table *t);
int ergo_table_num_cols(const ergo_table *t);
const char *ergo_table_column_name(const ergo_table *t, int col);
int ergo_table_value(const ergo_table *t, int row, int col, double *out);
int ergo_table_num_header_entries(const ergo_table *t);
const char *ergo_table_header_key(const ergo_table *t, int idx);
const char *ergo_table_header_value(const ergo_table *t, int idx);
void ergo_table_free(ergo_table *t);

/* Last error message on this thread; empty string if none. */
const char *ergo_last_error(void);

const char *ergo_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ERGOVOLUME_H */
