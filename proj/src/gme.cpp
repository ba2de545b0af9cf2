#include "gme.hpp"

#include "ergotropy.hpp"
#include "hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ergo::gme {

namespace {

// All bipartitions (canonical side contains subsystem 0).
std::vector<Bipartition> all_cuts(int n) {
    std::vector<Bipartition> cuts;
    for (const auto& wc : enumerate_bipartitions(n, CutMode::all)) cuts.push_back(wc.cut);
    return cuts;
}

}  // namespace

double ggm(const PureState& state) {
    double max_lam2 = 0.0;
    for (const auto& cut : all_cuts(state.dims().count())) {
        const RealVector lam2 = hilbert::schmidt_squared(state, cut);
        max_lam2 = std::max(max_lam2, lam2(0));
    }
    return 1.0 - max_lam2;
}

double gme_concurrence(const PureState& state) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& cut : all_cuts(state.dims().count())) {
        const RealVector lam2 = hilbert::schmidt_squared(state, cut);
        const double purity = lam2.array().square().sum();
        best = std::min(best, std::sqrt(std::max(0.0, 2.0 * (1.0 - purity))));
    }
    return best;
}

std::vector<double> rescale_series(const std::vector<double>& values) {
    if (values.size() < 2) throw ConfigError("rescale_series: need at least two values");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*hi - *lo <= 0) throw ConfigError("rescale_series: constant series has no rescale");
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back((v - *lo) / (*hi - *lo));
    return out;
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
    const size_t n = v.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        const double avg = 0.5 * (i + j) + 1.0;  // average rank for ties
        for (size_t k = i; k <= j; ++k) r[idx[k]] = avg;
        i = j + 1;
    }
    return r;
}

}  // namespace

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw ConfigError("spearman: need two equal-length series of size >= 2");
    const std::vector<double> ra = ranks(a), rb = ranks(b);
    const size_t n = a.size();
    double ma = 0, mb = 0;
    for (size_t i = 0; i < n; ++i) {
        ma += ra[i];
        mb += rb[i];
    }
    ma /= n;
    mb /= n;
    double num = 0, da = 0, db = 0;
    for (size_t i = 0; i < n; ++i) {
        num += (ra[i] - ma) * (rb[i] - mb);
        da += (ra[i] - ma) * (ra[i] - ma);
        db += (rb[i] - mb) * (rb[i] - mb);
    }
    if (da <= 0 || db <= 0) throw ConfigError("spearman: constant series");
    return num / std::sqrt(da * db);
}

}  // namespace ergo::gme
