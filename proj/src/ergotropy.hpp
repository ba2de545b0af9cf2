#pragma once

#include "optimize.hpp"
#include "types.hpp"

#include <map>
#include <string>

namespace ergo {

// Energy levels of a local (quenched) Hamiltonian: strictly ascending,
// ground level shifted to zero, explicit degeneracies. Multiplicities may be
// astronomically large (2^n level counts), hence 64-bit.
class LocalSpectrum {
public:
    LocalSpectrum(std::vector<double> energies, std::vector<std::uint64_t> multiplicities);

    // Collapses duplicate energies (within `merge_tol`) and shifts the ground
    // level to zero.
    static LocalSpectrum from_levels(std::vector<double> energies, double merge_tol = 1e-12);

    // Same, from (energy, multiplicity) pairs; multiplicity addition saturates
    // at uint64 max.
    static LocalSpectrum from_pairs(std::vector<std::pair<double, std::uint64_t>> pairs,
                                    double merge_tol = 1e-9);

    const std::vector<double>& energies() const { return energies_; }
    const std::vector<std::uint64_t>& multiplicities() const { return mults_; }
    // Total level count; saturates at uint64 max.
    std::uint64_t dimension() const;

    // Tensor combination: every sum of one level from each spectrum, with
    // product multiplicities. Truncated to levels below `max_levels` slots.
    static LocalSpectrum tensor(const LocalSpectrum& a, const LocalSpectrum& b);

private:
    std::vector<double> energies_;
    std::vector<std::uint64_t> mults_;
};

struct PassiveSpectrumPair {
    RealVector populations;  // descending, sum 1
    LocalSpectrum spectrum;
};

struct WeightedCut {
    Bipartition cut;
    std::uint64_t multiplicity;
};

enum class Backend { exact, dicke, freefermion, circuit };

// One bipartition's gap; `label` names the cut (mask string, block size, ...)
// so reports stay meaningful for systems too large for Bipartition masks.
struct GapEntry {
    std::string label;
    std::uint64_t multiplicity = 1;
    double value = 0.0;
};

struct ErgotropyReport {
    std::vector<GapEntry> gaps;
    double volume = 0.0;
    Backend backend = Backend::exact;
    std::map<std::string, std::string> metadata;
};

// "0,2,3": comma-joined side-A subsystem indices.
std::string cut_label(const Bipartition& cut);

const char* backend_name(Backend b);

enum class CutMode { all, contiguous, symmetry_classes };

// Minimum of Tr[H U rho U^dag] over unitaries: descending populations dotted
// with the ascending spectrum expanded by multiplicity.
double passive_energy(const PassiveSpectrumPair& pair);
double passive_energy(const RealVector& populations_desc, const LocalSpectrum& spectrum);

// Eq.-style closed-form ergotropy: Tr[H rho] minus the passive energy of
// rho's eigenvalues against H's spectrum. Clamped to >= 0.
double ergotropy(const DensityOperator& rho, const Matrix& hamiltonian);

// Quenched ergotropic gap across `cut`: sum of both marginals' passive
// energies, sharing the Schmidt spectrum of the pure state.
double quenched_gap(const PureState& state, const Bipartition& cut,
                    const LocalSpectrum& spectrum_a, const LocalSpectrum& spectrum_b);

// Original (interacting) gap: global ergotropy in closed form minus local
// ergotropy obtained by minimizing Tr[H (UA x UB) rho (UA x UB)^dag] over
// fully parametrized local unitaries. May be positive for biseparable states
// when the interacting ground state is entangled.
double interacting_gap(const PureState& state, const Matrix& hamiltonian, const Bipartition& cut,
                       const opt::OptimizerConfig& config);

std::vector<WeightedCut> enumerate_bipartitions(int n_subsystems, CutMode mode);

// Geometric mean of gaps with multiplicities, in log space; exactly zero if
// any gap is at or below the clamp threshold.
double ergotropic_volume(const std::vector<GapEntry>& gaps);
double ergotropic_volume(const std::vector<double>& gaps, const std::vector<std::uint64_t>& multiplicities);

inline constexpr double kGapClampThreshold = 1e-10;

}  // namespace ergo
