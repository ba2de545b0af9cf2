#include "dicke_analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ergo::dicke {

namespace {

double log_binomial(int n, int r) {
    return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

RealVector nonzero_descending(const RealVector& pops) {
    std::vector<double> v;
    for (Eigen::Index i = 0; i < pops.size(); ++i)
        if (pops(i) > 1e-300) v.push_back(pops(i));
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Eigen::Map<RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Spin-block spectrum: levels 2*omega_a*l for l = 0..n, collective (mult 1)
// or full-space (mult C(n, l)).
LocalSpectrum spin_block_spectrum(int n, double omega_a, bool subspace_mode) {
    std::vector<std::pair<double, std::uint64_t>> pairs;
    for (int l = 0; l <= n; ++l)
        pairs.emplace_back(2.0 * omega_a * l, subspace_mode ? 1 : binomial_saturating(n, l));
    return LocalSpectrum::from_pairs(std::move(pairs));
}

// Cavity + (N - n) spins: energies m*omega_c + 2*l*omega_a with the admissible
// (m, l) pair counting.
LocalSpectrum complement_spectrum(const DressedParams& p, int n, bool subspace_mode) {
    std::vector<std::pair<double, std::uint64_t>> pairs;
    const int rest = p.n_spins - n;
    for (int m = 0; m <= p.n_ph; ++m)
        for (int l = 0; l <= rest; ++l)
            pairs.emplace_back(m * p.omega_c + 2.0 * l * p.omega_a,
                               subspace_mode ? 1 : binomial_saturating(rest, l));
    return LocalSpectrum::from_pairs(std::move(pairs));
}

}  // namespace

std::uint64_t binomial_saturating(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    if (log_binomial(n, k) > 43.0 * std::log(10.0))
        return std::numeric_limits<std::uint64_t>::max();
    std::uint64_t c = 1;
    for (int j = 0; j < k; ++j) {
        // exact for results below ~1e19 given the log guard above
        const auto num = static_cast<std::uint64_t>(n - j);
        if (c > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        c = c * num / static_cast<std::uint64_t>(j + 1);
    }
    return c;
}

void DressedParams::validate() const {
    if (n_spins < 1 || n_ph < 0 || excitation < 0)
        throw ConfigError("DressedParams: counts must be nonnegative (N >= 1)");
    if (excitation > n_spins + n_ph)
        throw ConfigError("DressedParams: excitation " + std::to_string(excitation) +
                          " exceeds N + N_ph = " + std::to_string(n_spins + n_ph));
    if (omega_c <= 0 || omega_a <= 0) throw ConfigError("DressedParams: frequencies must be positive");
}

int DressedParams::l_min() const { return std::max(0, excitation - n_ph); }
int DressedParams::l_max() const { return std::min(n_spins, excitation); }
int DressedParams::norm_count() const { return l_max() - l_min() + 1; }

PureState dressed_state(const DressedParams& p) {
    p.validate();
    const int count = p.norm_count();
    if (count < 1) throw ConfigError("dressed_state: empty admissible window");

    const int dicke_dim = p.n_spins + 1;
    const SubsystemDims dims({p.n_ph + 1, dicke_dim});
    Vector amps = Vector::Zero(dims.total());
    const double amp = 1.0 / std::sqrt(static_cast<double>(count));
    for (int l = p.l_min(); l <= p.l_max(); ++l) {
        const int m = p.excitation - l;  // photon number
        amps(static_cast<Eigen::Index>(m) * dicke_dim + l) = amp;
    }
    return PureState(std::move(amps), dims);
}

DiagonalMarginal dressed_marginal(const DressedParams& p, int block_size) {
    p.validate();
    if (block_size < 1 || block_size > p.n_spins)
        throw ConfigError("dressed_marginal: block size out of range");
    const int N = p.n_spins, n = block_size, i = p.excitation;
    const int count = p.norm_count();

    RealVector pops = RealVector::Zero(n + 1);
    for (int l = 0; l <= n; ++l) {
        double s = 0.0;
        for (int j = 0; j <= i - l && j <= N - n; ++j) {
            const int m = i - l - j;  // photon number of the term
            if (m < 0 || m > p.n_ph) continue;
            if (l + j > N) continue;
            s += std::exp(log_binomial(N - n, j) + log_binomial(n, l) - log_binomial(N, l + j));
        }
        pops(l) = s / count;
    }
    return DiagonalMarginal{std::move(pops), n};
}

double dressed_gap(const DressedParams& p, int block_size, bool subspace_mode) {
    const DiagonalMarginal marg = dressed_marginal(p, block_size);
    const RealVector pops = nonzero_descending(marg.populations);
    const double ea = passive_energy(pops, spin_block_spectrum(block_size, p.omega_a, subspace_mode));
    const double eb = passive_energy(pops, complement_spectrum(p, block_size, subspace_mode));
    return ea + eb;
}

ErgotropyReport dressed_volume(const DressedParams& p, bool subspace_mode) {
    p.validate();
    ErgotropyReport report;
    report.backend = Backend::dicke;
    report.metadata["subspace_mode"] = subspace_mode ? "1" : "0";
    report.metadata["excitation"] = std::to_string(p.excitation);

    std::vector<double> gaps;
    for (int n = 1; n <= p.n_spins; ++n) {
        const double gap = dressed_gap(p, n, subspace_mode);
        report.gaps.push_back(GapEntry{"n=" + std::to_string(n), 1, gap});
        gaps.push_back(gap);
    }
    report.volume = ergotropic_volume(gaps, std::vector<std::uint64_t>(gaps.size(), 1));
    return report;
}

}  // namespace ergo::dicke
