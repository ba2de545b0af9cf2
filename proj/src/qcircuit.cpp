#include "qcircuit.hpp"

#include "freefermion.hpp"
#include "hilbert.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace ergo::qc {

void Circuit::validate() const {
    if (n_qubits < 1 || n_qubits > 24) throw ConfigError("Circuit: qubit count out of range");
    for (const auto& g : gates) {
        const bool two = g.kind == GateKind::CX || g.kind == GateKind::RXX;
        if (g.q0 < 0 || g.q0 >= n_qubits || (two && (g.q1 < 0 || g.q1 >= n_qubits || g.q1 == g.q0)))
            throw ConfigError("Circuit: gate qubit indices invalid");
        if (!two && g.q1 != -1) throw ConfigError("Circuit: single-qubit gate with second qubit");
    }
    for (int slot : parameter_slots) {
        if (slot < 0 || slot >= static_cast<int>(gates.size()))
            throw ConfigError("Circuit: parameter slot out of range");
        const GateKind k = gates[static_cast<size_t>(slot)].kind;
        if (k == GateKind::H || k == GateKind::CX)
            throw ConfigError("Circuit: parameter slot on a fixed-angle gate");
    }
}

void NoiseSpec::validate() const {
    if (p1 < 0 || p1 > 1 || p2 < 0 || p2 > 1) throw ConfigError("NoiseSpec: probabilities outside [0,1]");
    if (trajectories < 1) throw ConfigError("NoiseSpec: need at least one trajectory");
}

namespace {

// qubit q occupies bit (n_qubits - 1 - q) of the amplitude index
inline std::int64_t bit_stride(int q, int n_qubits) { return std::int64_t{1} << (n_qubits - 1 - q); }

void apply_1q(Vector& psi, const Complex u[2][2], int q, int n_qubits) {
    const std::int64_t s = bit_stride(q, n_qubits);
    const std::int64_t dim = psi.size();
    for (std::int64_t base = 0; base < dim; base += 2 * s)
        for (std::int64_t k = 0; k < s; ++k) {
            const std::int64_t i0 = base + k, i1 = i0 + s;
            const Complex a = psi(i0), b = psi(i1);
            psi(i0) = u[0][0] * a + u[0][1] * b;
            psi(i1) = u[1][0] * a + u[1][1] * b;
        }
}

void apply_cx(Vector& psi, int control, int target, int n_qubits) {
    const std::int64_t sc = bit_stride(control, n_qubits);
    const std::int64_t st = bit_stride(target, n_qubits);
    const std::int64_t dim = psi.size();
    for (std::int64_t idx = 0; idx < dim; ++idx)
        if ((idx & sc) && !(idx & st)) std::swap(psi(idx), psi(idx + st));
}

void apply_rxx(Vector& psi, double angle, int qa, int qb, int n_qubits) {
    const std::int64_t sa = bit_stride(qa, n_qubits);
    const std::int64_t sb = bit_stride(qb, n_qubits);
    const Complex c(std::cos(angle / 2), 0), ms(0, -std::sin(angle / 2));
    const std::int64_t dim = psi.size();
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        if ((idx & sa) || (idx & sb)) continue;  // handle each quartet once
        const std::int64_t i00 = idx, i01 = idx + sb, i10 = idx + sa, i11 = idx + sa + sb;
        const Complex a00 = psi(i00), a01 = psi(i01), a10 = psi(i10), a11 = psi(i11);
        psi(i00) = c * a00 + ms * a11;
        psi(i11) = c * a11 + ms * a00;
        psi(i01) = c * a01 + ms * a10;
        psi(i10) = c * a10 + ms * a01;
    }
}

void pauli_insert(Vector& psi, int which, int q, int n_qubits) {
    static const Complex X[2][2] = {{0, 1}, {1, 0}};
    static const Complex Y[2][2] = {{0, Complex(0, -1)}, {Complex(0, 1), 0}};
    static const Complex Z[2][2] = {{1, 0}, {0, -1}};
    apply_1q(psi, which == 0 ? X : which == 1 ? Y : Z, q, n_qubits);
}

// In-place circuit application; `rng` enables stochastic Pauli noise.
void apply_circuit(Vector& psi, const Circuit& c, const std::vector<double>& params,
                   std::mt19937_64* rng, double p1, double p2) {
    std::vector<double> angles(c.gates.size());
    for (size_t i = 0; i < c.gates.size(); ++i) angles[i] = c.gates[i].angle;
    for (size_t k = 0; k < c.parameter_slots.size(); ++k)
        angles[static_cast<size_t>(c.parameter_slots[k])] = params[k];

    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        const double th = angles[i];
        switch (g.kind) {
            case GateKind::RX: {
                const Complex u[2][2] = {{std::cos(th / 2), Complex(0, -std::sin(th / 2))},
                                         {Complex(0, -std::sin(th / 2)), std::cos(th / 2)}};
                apply_1q(psi, u, g.q0, c.n_qubits);
                break;
            }
            case GateKind::RY: {
                const Complex u[2][2] = {{std::cos(th / 2), -std::sin(th / 2)},
                                         {std::sin(th / 2), std::cos(th / 2)}};
                apply_1q(psi, u, g.q0, c.n_qubits);
                break;
            }
            case GateKind::RZ: {
                const Complex u[2][2] = {{std::exp(Complex(0, -th / 2)), 0},
                                         {0, std::exp(Complex(0, th / 2))}};
                apply_1q(psi, u, g.q0, c.n_qubits);
                break;
            }
            case GateKind::H: {
                const double r = 1.0 / std::sqrt(2.0);
                const Complex u[2][2] = {{r, r}, {r, -r}};
                apply_1q(psi, u, g.q0, c.n_qubits);
                break;
            }
            case GateKind::CX:
                apply_cx(psi, g.q0, g.q1, c.n_qubits);
                break;
            case GateKind::RXX:
                apply_rxx(psi, th, g.q0, g.q1, c.n_qubits);
                break;
        }
        if (rng) {
            const bool two = g.kind == GateKind::CX || g.kind == GateKind::RXX;
            const double p = two ? p2 : p1;
            if (p > 0 && uni(*rng) < p) {
                if (two) {
                    // uniform non-identity two-qubit Pauli
                    std::uniform_int_distribution<int> pick(1, 15);
                    const int pp = pick(*rng);
                    if (pp % 4 != 0) pauli_insert(psi, pp % 4 - 1, g.q1, c.n_qubits);
                    if (pp / 4 != 0) pauli_insert(psi, pp / 4 - 1, g.q0, c.n_qubits);
                } else {
                    std::uniform_int_distribution<int> pick(0, 2);
                    pauli_insert(psi, pick(*rng), g.q0, c.n_qubits);
                }
            }
        }
    }
}

}  // namespace

PureState run(const Circuit& circuit, const PureState& input, const std::vector<double>& params) {
    circuit.validate();
    if (static_cast<int>(params.size()) != circuit.n_params())
        throw ConfigError("run: expected " + std::to_string(circuit.n_params()) + " parameters, got " +
                          std::to_string(params.size()));
    if (input.amplitudes().size() != (std::int64_t{1} << circuit.n_qubits))
        throw ConfigError("run: input dimension does not match qubit count");
    Vector psi = input.amplitudes();
    apply_circuit(psi, circuit, params, nullptr, 0, 0);
    return PureState(std::move(psi), input.dims());
}

Circuit trotter_circuit(int n_qubits, double g, double t, int steps, models::Boundary boundary) {
    if (steps < 1) throw ConfigError("trotter_circuit: steps must be >= 1");
    Circuit c;
    c.n_qubits = n_qubits;
    const double dt = t / steps;
    const int n_bonds = boundary == models::Boundary::periodic ? n_qubits : n_qubits - 1;
    for (int s = 0; s < steps; ++s) {
        // exp(+i dt sigma_z) per site = RZ(-2 dt)
        for (int q = 0; q < n_qubits; ++q) c.gates.push_back({GateKind::RZ, q, -1, -2.0 * dt});
        // exp(+i g dt sigma_x sigma_x) per bond = RXX(-2 g dt)
        for (int b = 0; b < n_bonds; ++b)
            c.gates.push_back({GateKind::RXX, b, (b + 1) % n_qubits, -2.0 * g * dt});
    }
    return c;
}

Circuit ansatz(const std::vector<int>& partition, int n_qubits, int depth) {
    if (partition.empty() || depth < 1) throw ConfigError("ansatz: need a nonempty partition and depth >= 1");
    Circuit c;
    c.n_qubits = n_qubits;
    for (int layer = 0; layer <= depth; ++layer) {
        for (int q : partition) {
            c.parameter_slots.push_back(static_cast<int>(c.gates.size()));
            c.gates.push_back({GateKind::RY, q, -1, 0.0});
        }
        for (int q : partition) {
            c.parameter_slots.push_back(static_cast<int>(c.gates.size()));
            c.gates.push_back({GateKind::RZ, q, -1, 0.0});
        }
        if (layer < depth)
            for (size_t j = 0; j + 1 < partition.size(); ++j)
                c.gates.push_back({GateKind::CX, partition[j], partition[j + 1], 0.0});
    }
    c.validate();
    return c;
}

namespace {

// diag expectation of the partition observable after the ansatz
double diag_energy(const Vector& psi, const std::vector<std::int64_t>& sub_of,
                   const RealVector& local_diag) {
    double e = 0.0;
    for (std::int64_t idx = 0; idx < psi.size(); ++idx)
        e += std::norm(psi(idx)) * local_diag(sub_of[static_cast<size_t>(idx)]);
    return e;
}

double shot_energy(const Vector& psi, const std::vector<std::int64_t>& sub_of,
                   const RealVector& local_diag, int shots, std::mt19937_64& rng) {
    std::vector<double> probs(static_cast<size_t>(psi.size()));
    for (std::int64_t idx = 0; idx < psi.size(); ++idx) probs[static_cast<size_t>(idx)] = std::norm(psi(idx));
    std::discrete_distribution<std::int64_t> dist(probs.begin(), probs.end());
    double e = 0.0;
    for (int s = 0; s < shots; ++s) e += local_diag(sub_of[static_cast<size_t>(dist(rng))]);
    return e / shots;
}

}  // namespace

VqaResult vqa_passive_energy(const PureState& state, const std::vector<int>& partition,
                             const RealVector& local_diag, int depth,
                             const opt::OptimizerConfig& cfg, const NoiseSpec* noise, int shots,
                             const std::vector<double>* warm_start) {
    const int n_qubits = state.dims().count();
    for (int d : state.dims().dims())
        if (d != 2) throw ConfigError("vqa_passive_energy: qubit register required");
    for (int q : partition)
        if (q < 0 || q >= n_qubits) throw ConfigError("vqa_passive_energy: partition qubit out of range");
    const int p = static_cast<int>(partition.size());
    if (local_diag.size() != (std::int64_t{1} << p))
        throw ConfigError("vqa_passive_energy: observable length must be 2^|partition|");
    if (local_diag.minCoeff() < -1e-12)
        throw ConfigError("vqa_passive_energy: observable must be ground-shifted to zero");
    if (noise) noise->validate();
    if (depth < 1) throw ConfigError("vqa_passive_energy: depth must be >= 1");

    // partition sub-index of each full amplitude index
    const std::int64_t dim = state.amplitudes().size();
    std::vector<std::int64_t> sub_of(static_cast<size_t>(dim));
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        std::int64_t s = 0;
        for (int q : partition) s = (s << 1) | ((idx >> (n_qubits - 1 - q)) & 1);
        sub_of[static_cast<size_t>(idx)] = s;
    }

    VqaResult result;
    result.energy = std::numeric_limits<double>::infinity();
    std::vector<double> prev_params;

    for (int d = 1; d <= depth; ++d) {
        const Circuit circ = ansatz(partition, n_qubits, d);
        // p1 = p2 = 0 takes the noiseless path so that a disabled NoiseSpec is
        // bitwise identical to an absent one (trajectory averaging reorders sums)
        const bool noisy = noise && (noise->p1 > 0 || noise->p2 > 0);
        auto objective = [&, noisy](const std::vector<double>& theta) {
            if (!noisy) {
                Vector psi = state.amplitudes();
                apply_circuit(psi, circ, theta, nullptr, 0, 0);
                if (shots > 0) {
                    std::mt19937_64 rng(cfg.seed + 0x9e3779b9);
                    return shot_energy(psi, sub_of, local_diag, shots, rng);
                }
                return diag_energy(psi, sub_of, local_diag);
            }
            double acc = 0.0;
            for (int tr = 0; tr < noise->trajectories; ++tr) {
                std::mt19937_64 rng(noise->seed + static_cast<std::uint64_t>(tr) * 0x9e3779b97f4a7c15ull);
                Vector psi = state.amplitudes();
                apply_circuit(psi, circ, theta, &rng, noise->p1, noise->p2);
                if (shots > 0) {
                    std::mt19937_64 srng(cfg.seed + static_cast<std::uint64_t>(tr));
                    acc += shot_energy(psi, sub_of, local_diag, shots, srng);
                } else {
                    acc += diag_energy(psi, sub_of, local_diag);
                }
            }
            return acc / noise->trajectories;
        };

        // warm starts: previous depth's layers with a fresh zero layer spliced
        // in before the final rotation layer, plus any caller-provided
        // full-depth parameters
        std::vector<std::vector<double>> warms;
        if (!prev_params.empty()) {
            const size_t layer = static_cast<size_t>(2 * p);
            std::vector<double> warm(prev_params.begin(),
                                     prev_params.end() - static_cast<std::ptrdiff_t>(layer));
            warm.insert(warm.end(), layer, 0.0);
            warm.insert(warm.end(), prev_params.end() - static_cast<std::ptrdiff_t>(layer),
                        prev_params.end());
            warms.push_back(std::move(warm));
        }
        if (warm_start && static_cast<int>(warm_start->size()) == circ.n_params())
            warms.push_back(*warm_start);

        const auto o = opt::minimize_sinusoidal(objective, circ.n_params(), cfg, warms);
        prev_params = o.best_params;
        if (o.best_value < result.energy) {
            result.energy = o.best_value;
            result.best_params = o.best_params;
            result.best_depth = d;
        }
        result.per_depth.push_back(result.energy);
    }
    result.final_params = prev_params;
    return result;
}

ErgotropyReport vqa_ergotropic_volume(const PureState& state, int depth,
                                      const opt::OptimizerConfig& cfg, const NoiseSpec* noise,
                                      VqaVolumeState* chain) {
    const int n = state.dims().count();
    ErgotropyReport report;
    report.backend = Backend::circuit;
    report.metadata["depth"] = std::to_string(depth);
    report.metadata["noisy"] = noise ? "1" : "0";

    const bool have_chain = chain && static_cast<int>(chain->block_params.size()) == n - 1;
    if (chain && !have_chain) {
        chain->block_params.assign(static_cast<size_t>(n) - 1, {});
        chain->complement_params.assign(static_cast<size_t>(n) - 1, {});
    }

    std::vector<double> gaps;
    for (int cut = 1; cut < n; ++cut) {
        std::vector<int> left(static_cast<size_t>(cut)), right(static_cast<size_t>(n - cut));
        for (int q = 0; q < cut; ++q) left[static_cast<size_t>(q)] = q;
        for (int q = cut; q < n; ++q) right[static_cast<size_t>(q - cut)] = q;

        auto diag_for = [](int m) {
            RealVector d(std::int64_t{1} << m);
            for (std::int64_t s = 0; s < d.size(); ++s)
                d(s) = 2.0 * std::popcount(static_cast<std::uint64_t>(s));
            return d;
        };
        const size_t ci = static_cast<size_t>(cut) - 1;
        const std::vector<double>* wa =
            have_chain && !chain->block_params[ci].empty() ? &chain->block_params[ci] : nullptr;
        const std::vector<double>* wb =
            have_chain && !chain->complement_params[ci].empty() ? &chain->complement_params[ci] : nullptr;
        const auto ra = vqa_passive_energy(state, left, diag_for(cut), depth, cfg, noise, 0, wa);
        const auto rb = vqa_passive_energy(state, right, diag_for(n - cut), depth, cfg, noise, 0, wb);
        if (chain) {
            chain->block_params[ci] = ra.final_params;
            chain->complement_params[ci] = rb.final_params;
        }
        const double gap = ra.energy + rb.energy;
        report.gaps.push_back(GapEntry{"n=" + std::to_string(cut), 1, gap});
        gaps.push_back(gap);
    }
    report.volume = ergotropic_volume(gaps, std::vector<std::uint64_t>(gaps.size(), 1));
    return report;
}

ErgotropyReport exact_contiguous_volume(const PureState& state) {
    const int n = state.dims().count();
    ErgotropyReport report;
    report.backend = Backend::exact;

    std::vector<double> gaps;
    for (int cut = 1; cut < n; ++cut) {
        const Bipartition bp((1u << cut) - 1u, n);
        RealVector lam2 = hilbert::schmidt_squared(state, bp);
        std::vector<double> nz;
        for (Eigen::Index i = 0; i < lam2.size(); ++i)
            if (lam2(i) > 1e-15) nz.push_back(lam2(i));
        const RealVector pops = Eigen::Map<RealVector>(nz.data(), static_cast<Eigen::Index>(nz.size()));
        const double gap = ff::block_gap(pops, cut, n);
        report.gaps.push_back(GapEntry{"n=" + std::to_string(cut), 1, gap});
        gaps.push_back(gap);
    }
    report.volume = ergotropic_volume(gaps, std::vector<std::uint64_t>(gaps.size(), 1));
    return report;
}

}  // namespace ergo::qc
