#pragma once

#include "ergotropy.hpp"
#include "types.hpp"

#include <Eigen/SparseCore>
#include <map>
#include <string>

namespace ergo::models {

struct LocalTerm {
    int site;
    Matrix op;
};

// Operator acting on an ordered tuple of sites; `op` lives on the tensor
// product of those sites in the given order.
struct InteractionTerm {
    std::vector<int> sites;
    Matrix op;
};

struct HamiltonianSpec {
    SubsystemDims dims;
    std::vector<LocalTerm> local_terms;
    std::vector<InteractionTerm> interaction_terms;
    std::map<std::string, double> parameters;
    int cavity_site = -1;  // >= 0 enables the photon-tail check in ground_state

    Matrix assemble() const;
    Eigen::SparseMatrix<Complex> assemble_sparse() const;

    // Same spec with every interaction term removed.
    HamiltonianSpec quench() const;

    // Eigenvalues of the summed local terms on `site`, ground-shifted to zero.
    LocalSpectrum local_spectrum(int site) const;
    // Ground energy of the local terms on `site` before the shift.
    double local_ground_shift(int site) const;
};

HamiltonianSpec build_tc(int n_spins, int n_max, double omega_c, double omega_a, double g);

HamiltonianSpec build_dicke3(int n_atoms, int n_max, double omega_c, double omega_a,
                             double g1, double g2);

enum class Boundary { periodic, open_chain };

HamiltonianSpec build_tfim(int n_spins, double g, Boundary boundary);

struct GroundStateResult {
    double energy = 0.0;
    PureState state;
    double gap_to_first_excited = 0.0;
    bool degenerate = false;
};

// Lowest eigenpair: dense diagonalization up to `dense_threshold`, matrix-free
// Lanczos with full reorthogonalization (deterministic uniform start) above.
// Cavity models additionally require the photon population above n_max - 2 to
// stay below 1e-8, otherwise a ConfigError demands a larger cutoff.
GroundStateResult ground_state(const HamiltonianSpec& spec, double tol = 1e-10,
                               std::int64_t dense_threshold = 4096);

// Frozen 2x2 / cavity primitives shared by builders and tests.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix annihilator(int n_levels);

}  // namespace ergo::models
