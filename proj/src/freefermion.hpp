#pragma once

#include "ergotropy.hpp"
#include "types.hpp"

namespace ergo::ff {

// Bogoliubov ground-state data on the antiperiodic momentum grid
// k = pi(2j-1)/N, j = 1..N/2.
struct FermionGS {
    std::vector<double> momenta;
    std::vector<std::pair<Complex, Complex>> coeffs;  // (a_k, b_k), |a|^2+|b|^2 = 1
    int n_sites = 0;
    double g = 0.0;
    double ground_energy = 0.0;  // sum of negative block eigenvalues
};

struct CorrelationMatrix {
    Matrix c;  // <c_i^dag c_j>
    Matrix f;  // <c_i^dag c_j^dag>
    int block_size = 0;
};

struct RdmSpectrum {
    RealVector populations;  // descending, possibly truncated
    double discarded_mass = 0.0;
};

FermionGS bogoliubov_coeffs(int n_sites, double g);

CorrelationMatrix correlation_matrix(const FermionGS& gs, int block_size);

// Mode occupations zeta_q (ascending) from the 2n x 2n [[C,F],[F^dag,I-C]]
// spectrum; one entry per (zeta, 1-zeta) pair.
RealVector mode_occupations(const CorrelationMatrix& cm);

// Block RDM populations via best-first enumeration of occupation patterns.
// Patterns below `trunc` are pruned; enumeration caps at 2^24 entries.
RdmSpectrum rdm_spectrum(const CorrelationMatrix& cm, double trunc = 1e-12,
                         double max_discarded = 1e-8);

// Gap for the contiguous M-block cut: shared populations against the shifted
// local spectra {2k : C(M,k)} and {2k : C(N-M,k)}.
double block_gap(const RealVector& populations, int block_size, int n_sites);

// Volume over M = 1..N/2 contiguous blocks, exponent 2/N.
ErgotropyReport tfim_volume(int n_sites, double g, double trunc = 1e-12);

}  // namespace ergo::ff
