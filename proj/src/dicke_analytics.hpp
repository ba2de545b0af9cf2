#pragma once

#include "ergotropy.hpp"
#include "types.hpp"

namespace ergo::dicke {

// Tavis-Cummings dressed-state parameters: N spins, at most N_ph photons,
// total excitation i shared between them.
struct DressedParams {
    int n_spins = 0;
    int n_ph = 0;
    int excitation = 0;
    double omega_c = 1.0;
    double omega_a = 1.0;

    void validate() const;
    // Admissible collective-excitation window of Eq.-(8)-style superpositions:
    // photon number i - l must satisfy 0 <= i - l <= N_ph.
    int l_min() const;
    int l_max() const;
    int norm_count() const;  // number of admissible l values
};

struct DiagonalMarginal {
    RealVector populations;  // indexed by collective excitation l = 0..n
    int block_size = 0;
};

// Equal superposition over the admissible window, in the joint
// Fock(n_ph+1) x Dicke(N+1) basis (photon index slow, l index fast).
PureState dressed_state(const DressedParams& p);

// Diagonal n-spin marginal populations via log-binomials; exact for N up to
// the hundreds.
DiagonalMarginal dressed_marginal(const DressedParams& p, int block_size);

// Gap for the cut {n spins} | {cavity + N-n spins}. subspace_mode restricts
// both sides to collective (Dicke-subspace) level counting; otherwise full
// 2^n degeneracies apply.
double dressed_gap(const DressedParams& p, int block_size, bool subspace_mode);

// Volume over the N spin-block cuts n = 1..N (cavity always with the
// complement).
ErgotropyReport dressed_volume(const DressedParams& p, bool subspace_mode = true);

// Binomial coefficient saturating at uint64 max (large-N level counting only
// ever consumes small cumulative multiplicities).
std::uint64_t binomial_saturating(int n, int k);

}  // namespace ergo::dicke
