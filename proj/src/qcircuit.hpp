#pragma once

#include "ergotropy.hpp"
#include "models.hpp"
#include "optimize.hpp"
#include "types.hpp"

namespace ergo::qc {

enum class GateKind { RX, RY, RZ, H, CX, RXX };

struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;        // second qubit for CX / RXX
    double angle = 0.0; // fixed angle unless listed in parameter_slots
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    std::vector<int> parameter_slots;  // indices of gates with free angles

    int n_params() const { return static_cast<int>(parameter_slots.size()); }
    void validate() const;
};

// Stochastic depolarizing noise: Pauli insertion after each gate, averaged
// over trajectories. Deterministic given the seed.
struct NoiseSpec {
    double p1 = 0.0;
    double p2 = 0.0;
    int trajectories = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

// Applies gates in order with `params` bound to the parameter slots.
// Qubit 0 is the slowest bit of the amplitude index.
PureState run(const Circuit& circuit, const PureState& input, const std::vector<double>& params);

// First-order Trotterization of exp(-i H t) for the Eq.-(12)-style chain:
// alternating RZ(-2 dt) and RXX(-2 g dt) layers.
Circuit trotter_circuit(int n_qubits, double g, double t, int steps,
                        models::Boundary boundary = models::Boundary::periodic);

// Hardware-efficient block ansatz on `partition`: depth repetitions of
// [RY layer, RZ layer, CX ladder] plus a final RY+RZ layer;
// 2 |partition| (depth+1) parameters.
Circuit ansatz(const std::vector<int>& partition, int n_qubits, int depth);

struct VqaResult {
    double energy = 0.0;               // cumulative best across depths 1..d
    std::vector<double> per_depth;     // cumulative best after each depth
    std::vector<double> best_params;   // parameters of the best depth
    std::vector<double> final_params;  // full-depth parameters (warm-start reuse)
    int best_depth = 0;
};

// Minimum of <psi| U^dag(theta) H0 U(theta) |psi> over the block ansatz,
// depth-chained 1..depth with warm starts; sinusoidal coordinate descent.
// `local_diag` is the shifted diagonal observable on the partition (length
// 2^{|partition|}, partition order). Exact expectations by default; `shots`
// > 0 switches to sampled estimates; `noise` averages over trajectories.
// `warm_start` (full-depth parameter length) seeds the final depth, e.g. from
// a neighboring time-grid point.
VqaResult vqa_passive_energy(const PureState& state, const std::vector<int>& partition,
                             const RealVector& local_diag, int depth,
                             const opt::OptimizerConfig& cfg, const NoiseSpec* noise = nullptr,
                             int shots = 0, const std::vector<double>* warm_start = nullptr);

// Per-cut optimized parameters, reusable as warm starts for a nearby state.
struct VqaVolumeState {
    std::vector<std::vector<double>> block_params;       // per cut n = 1..N-1
    std::vector<std::vector<double>> complement_params;  // per cut n = 1..N-1
};

// Gaps for contiguous left blocks n = 1..N-1 via paired passive-energy runs
// with the TFIM quenched levels {0, 2} per qubit; volume = geometric mean.
ErgotropyReport vqa_ergotropic_volume(const PureState& state, int depth,
                                      const opt::OptimizerConfig& cfg,
                                      const NoiseSpec* noise = nullptr,
                                      VqaVolumeState* chain = nullptr);

// Exact reference over the same contiguous left-block cut set.
ErgotropyReport exact_contiguous_volume(const PureState& state);

}  // namespace ergo::qc
