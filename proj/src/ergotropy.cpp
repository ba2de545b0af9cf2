#include "ergotropy.hpp"

#include "hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ergo {

LocalSpectrum::LocalSpectrum(std::vector<double> energies, std::vector<std::uint64_t> multiplicities)
    : energies_(std::move(energies)), mults_(std::move(multiplicities)) {
    if (energies_.empty() || energies_.size() != mults_.size())
        throw ConfigError("LocalSpectrum: energies/multiplicities size mismatch");
    if (std::abs(energies_.front()) > 1e-12)
        throw ConfigError("LocalSpectrum: ground level must be shifted to zero");
    for (size_t i = 0; i + 1 < energies_.size(); ++i)
        if (!(energies_[i] < energies_[i + 1]))
            throw ConfigError("LocalSpectrum: energies must be strictly ascending");
    for (auto m : mults_)
        if (m == 0) throw ConfigError("LocalSpectrum: multiplicities must be >= 1");
}

LocalSpectrum LocalSpectrum::from_levels(std::vector<double> energies, double merge_tol) {
    if (energies.empty()) throw ConfigError("LocalSpectrum: empty level list");
    std::sort(energies.begin(), energies.end());
    const double ground = energies.front();
    std::vector<double> es;
    std::vector<std::uint64_t> ms;
    for (double e : energies) {
        const double shifted = e - ground;
        if (!es.empty() && shifted - es.back() <= merge_tol)
            ++ms.back();
        else {
            es.push_back(shifted);
            ms.push_back(1);
        }
    }
    es.front() = 0.0;
    return LocalSpectrum(std::move(es), std::move(ms));
}

LocalSpectrum LocalSpectrum::from_pairs(std::vector<std::pair<double, std::uint64_t>> pairs,
                                        double merge_tol) {
    if (pairs.empty()) throw ConfigError("LocalSpectrum: empty pair list");
    std::sort(pairs.begin(), pairs.end());
    std::vector<double> es;
    std::vector<std::uint64_t> ms;
    for (const auto& [e, m] : pairs) {
        if (!es.empty() && e - es.back() <= merge_tol) {
            const std::uint64_t head = std::numeric_limits<std::uint64_t>::max() - ms.back();
            ms.back() += std::min(m, head);
        } else {
            es.push_back(e);
            ms.push_back(m);
        }
    }
    const double ground = es.front();
    for (double& e : es) e -= ground;
    es.front() = 0.0;
    return LocalSpectrum(std::move(es), std::move(ms));
}

std::uint64_t LocalSpectrum::dimension() const {
    std::uint64_t total = 0;
    for (auto m : mults_) {
        if (total > std::numeric_limits<std::uint64_t>::max() - m)
            return std::numeric_limits<std::uint64_t>::max();
        total += m;
    }
    return total;
}

LocalSpectrum LocalSpectrum::tensor(const LocalSpectrum& a, const LocalSpectrum& b) {
    std::map<double, std::uint64_t> acc;
    for (size_t i = 0; i < a.energies_.size(); ++i)
        for (size_t j = 0; j < b.energies_.size(); ++j) {
            const double e = a.energies_[i] + b.energies_[j];
            acc[e] += a.mults_[i] * b.mults_[j];
        }
    std::vector<double> es;
    std::vector<std::uint64_t> ms;
    double last = -1.0;
    for (auto& [e, m] : acc) {
        if (!es.empty() && e - last <= 1e-12)
            ms.back() += m;
        else {
            es.push_back(e);
            ms.push_back(m);
            last = e;
        }
    }
    return LocalSpectrum(std::move(es), std::move(ms));
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::exact: return "exact";
        case Backend::dicke: return "dicke";
        case Backend::freefermion: return "freefermion";
        case Backend::circuit: return "circuit";
    }
    return "unknown";
}

double passive_energy(const RealVector& populations_desc, const LocalSpectrum& spectrum) {
    const auto n = static_cast<std::uint64_t>(populations_desc.size());
    if (n > spectrum.dimension())
        throw ConfigError("passive_energy: marginal larger than the local space (" +
                          std::to_string(n) + " populations, " +
                          std::to_string(spectrum.dimension()) + " levels)");
    double e = 0.0;
    std::uint64_t consumed = 0;
    size_t level = 0;
    while (consumed < n) {
        const std::uint64_t take = std::min<std::uint64_t>(spectrum.multiplicities()[level], n - consumed);
        if (spectrum.energies()[level] != 0.0) {
            double block = 0.0;
            for (std::uint64_t k = 0; k < take; ++k)
                block += populations_desc(static_cast<Eigen::Index>(consumed + k));
            e += spectrum.energies()[level] * block;
        }
        consumed += take;
        ++level;
    }
    return e;
}

double passive_energy(const PassiveSpectrumPair& pair) {
    for (Eigen::Index i = 0; i + 1 < pair.populations.size(); ++i)
        if (pair.populations(i) < pair.populations(i + 1) - 1e-12)
            throw ConfigError("passive_energy: populations must be descending");
    const double sum = pair.populations.sum();
    if (std::abs(sum - 1.0) > 1e-10)
        throw ConfigError("passive_energy: populations must sum to 1");
    return passive_energy(pair.populations, pair.spectrum);
}

namespace {

double clamp_gap(double g) {
    if (g < -1e-6)
        throw NumericError("negative gap beyond round-off: " + std::to_string(g));
    return g < 0 ? 0.0 : g;
}

RealVector descending(RealVector v) {
    std::sort(v.data(), v.data() + v.size(), std::greater<double>());
    return v;
}

}  // namespace

double ergotropy(const DensityOperator& rho, const Matrix& hamiltonian) {
    if (rho.matrix().rows() != hamiltonian.rows())
        throw ConfigError("ergotropy: state and Hamiltonian dimension mismatch");
    const auto h_eig = hilbert::eig_hermitian(hamiltonian);
    const auto rho_eig = hilbert::eig_hermitian(rho.matrix());
    const RealVector pops = descending(rho_eig.eigenvalues);

    const double current = (hamiltonian * rho.matrix()).trace().real();
    double passive = 0.0;
    for (Eigen::Index i = 0; i < pops.size(); ++i) passive += pops(i) * h_eig.eigenvalues(i);
    return clamp_gap(current - passive);
}

double quenched_gap(const PureState& state, const Bipartition& cut,
                    const LocalSpectrum& spectrum_a, const LocalSpectrum& spectrum_b) {
    const RealVector lam2 = hilbert::schmidt_squared(state, cut);
    // Drop numerically-zero Schmidt weight so either side's (possibly smaller)
    // spectrum can host the populations.
    std::vector<double> nz;
    for (Eigen::Index i = 0; i < lam2.size(); ++i)
        if (lam2(i) > 1e-15) nz.push_back(lam2(i));
    RealVector pops = Eigen::Map<RealVector>(nz.data(), static_cast<Eigen::Index>(nz.size()));

    const double gap = passive_energy(pops, spectrum_a) + passive_energy(pops, spectrum_b);
    return clamp_gap(gap) <= kGapClampThreshold ? 0.0 : gap;
}

double interacting_gap(const PureState& state, const Matrix& hamiltonian, const Bipartition& cut,
                       const opt::OptimizerConfig& config) {
    const auto& dims = state.dims();
    if (hamiltonian.rows() != dims.total())
        throw ConfigError("interacting_gap: Hamiltonian dimension mismatch");

    std::vector<int> sites_a, sites_b;
    std::int64_t da = 1, db = 1;
    for (int i = 0; i < dims.count(); ++i) {
        if (cut.contains(i)) {
            sites_a.push_back(i);
            da *= dims.dim(i);
        } else {
            sites_b.push_back(i);
            db *= dims.dim(i);
        }
    }

    // full-index decomposition into (a, b) row-major sub-indices
    const std::int64_t total = dims.total();
    std::vector<std::int64_t> a_of(static_cast<size_t>(total)), b_of(static_cast<size_t>(total));
    {
        std::vector<std::int64_t> st(static_cast<size_t>(dims.count()));
        std::int64_t acc = 1;
        for (int i = dims.count() - 1; i >= 0; --i) {
            st[static_cast<size_t>(i)] = acc;
            acc *= dims.dim(i);
        }
        for (std::int64_t idx = 0; idx < total; ++idx) {
            std::int64_t a = 0, b = 0;
            for (int s : sites_a) a = a * dims.dim(s) + (idx / st[static_cast<size_t>(s)]) % dims.dim(s);
            for (int s : sites_b) b = b * dims.dim(s) + (idx / st[static_cast<size_t>(s)]) % dims.dim(s);
            a_of[static_cast<size_t>(idx)] = a;
            b_of[static_cast<size_t>(idx)] = b;
        }
    }

    const Vector& psi = state.amplitudes();
    const int na = static_cast<int>(da) * static_cast<int>(da);
    const int nb = static_cast<int>(db) * static_cast<int>(db);

    auto objective = [&](const std::vector<double>& params) {
        const std::vector<double> pa(params.begin(), params.begin() + na);
        const std::vector<double> pb(params.begin() + na, params.end());
        const Matrix ua = opt::hermitian_exponential_unitary(pa, static_cast<int>(da));
        const Matrix ub = opt::hermitian_exponential_unitary(pb, static_cast<int>(db));
        // (UA x UB) psi, respecting the site interleaving of the cut
        Vector rotated = Vector::Zero(total);
        for (std::int64_t src = 0; src < total; ++src) {
            const Complex amp = psi(src);
            if (amp == Complex(0, 0)) continue;
            const std::int64_t sa = a_of[static_cast<size_t>(src)];
            const std::int64_t sb = b_of[static_cast<size_t>(src)];
            for (std::int64_t dst = 0; dst < total; ++dst)
                rotated(dst) += ua(a_of[static_cast<size_t>(dst)], sa) * ub(b_of[static_cast<size_t>(dst)], sb) * amp;
        }
        return (rotated.adjoint() * hamiltonian * rotated)(0, 0).real();
    };

    const auto h_eig = hilbert::eig_hermitian(hamiltonian);
    const double ground = h_eig.eigenvalues(0);

    const auto res = opt::minimize(objective, na + nb, config);
    if (!res.converged)
        throw NumericError("interacting_gap: optimizer did not converge; best value " +
                           std::to_string(res.best_value) + " after " +
                           std::to_string(res.iterations_used) + " iterations");
    return res.best_value - ground;
}

std::vector<WeightedCut> enumerate_bipartitions(int n_subsystems, CutMode mode) {
    if (n_subsystems < 2) throw ConfigError("enumerate_bipartitions: need at least 2 subsystems");
    if (n_subsystems > 30) throw ConfigError("enumerate_bipartitions: subsystem count too large for masks");
    std::vector<WeightedCut> cuts;

    switch (mode) {
        case CutMode::all: {
            // canonical representative contains subsystem 0
            const std::uint32_t full = (1u << n_subsystems) - 1u;
            for (std::uint32_t m = 1; m < full; ++m)
                if (m & 1u) cuts.push_back({Bipartition(m, n_subsystems), 1});
            break;
        }
        case CutMode::contiguous: {
            // ring-contiguous blocks; complements deduplicated at size n/2
            for (int size = 1; size <= n_subsystems / 2; ++size) {
                const int starts = (2 * size == n_subsystems) ? n_subsystems / 2 : n_subsystems;
                for (int s = 0; s < starts; ++s) {
                    std::uint32_t m = 0;
                    for (int k = 0; k < size; ++k) m |= 1u << ((s + k) % n_subsystems);
                    cuts.push_back({Bipartition(m, n_subsystems), 1});
                }
            }
            break;
        }
        case CutMode::symmetry_classes: {
            // subsystem 0 distinguished (cavity); the rest exchange-symmetric.
            // Class k: k non-distinguished subsystems vs the remainder.
            const int n = n_subsystems - 1;
            for (int k = 1; k <= n; ++k) {
                std::uint32_t m = 0;
                for (int j = 1; j <= k; ++j) m |= 1u << j;
                std::uint64_t mult = 1;
                for (int j = 0; j < k; ++j) mult = mult * static_cast<std::uint64_t>(n - j) / (j + 1);
                cuts.push_back({Bipartition(m, n_subsystems), mult});
            }
            break;
        }
    }
    return cuts;
}

double ergotropic_volume(const std::vector<double>& gaps, const std::vector<std::uint64_t>& multiplicities) {
    if (gaps.empty()) throw ConfigError("ergotropic_volume: empty gap set");
    if (gaps.size() != multiplicities.size())
        throw ConfigError("ergotropic_volume: gaps/multiplicities size mismatch");
    long double log_sum = 0.0;
    std::uint64_t weight = 0;
    for (size_t i = 0; i < gaps.size(); ++i) {
        const double g = clamp_gap(gaps[i]);
        if (g <= kGapClampThreshold) return 0.0;
        log_sum += static_cast<long double>(multiplicities[i]) * std::log(static_cast<long double>(g));
        weight += multiplicities[i];
    }
    return static_cast<double>(std::exp(log_sum / static_cast<long double>(weight)));
}

double ergotropic_volume(const std::vector<GapEntry>& gaps) {
    std::vector<double> g;
    std::vector<std::uint64_t> m;
    for (const auto& entry : gaps) {
        g.push_back(entry.value);
        m.push_back(entry.multiplicity);
    }
    return ergotropic_volume(g, m);
}

std::string cut_label(const Bipartition& cut) {
    std::string s;
    for (int i = 0; i < cut.n_subsystems(); ++i)
        if (cut.contains(i)) {
            if (!s.empty()) s += ',';
            s += std::to_string(i);
        }
    return s;
}

}  // namespace ergo
