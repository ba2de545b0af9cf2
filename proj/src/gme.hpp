#pragma once

#include "types.hpp"

namespace ergo::gme {

// Generalized geometric measure: 1 - max over bipartitions of the largest
// squared Schmidt coefficient.
double ggm(const PureState& state);

// Min over bipartitions of sqrt(2 (1 - Tr rho_A^2)).
double gme_concurrence(const PureState& state);

// (v - min) / (max - min); throws on a constant series.
std::vector<double> rescale_series(const std::vector<double>& values);

// Spearman rank correlation of two equal-length series; average ranks on ties.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace ergo::gme
