#pragma once

#include "types.hpp"

#include <Eigen/QR>
#include <random>

namespace testutil {

inline ergo::Vector random_amplitudes(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ergo::Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = ergo::Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    return v;
}

inline ergo::PureState random_state(const ergo::SubsystemDims& dims, std::mt19937_64& rng) {
    return ergo::PureState(random_amplitudes(dims.total(), rng), dims);
}

// Haar-distributed via QR of a complex Gaussian matrix with phase fixing.
inline ergo::Matrix random_unitary(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ergo::Matrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = ergo::Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ergo::Matrix> qr(g);
    ergo::Matrix q = qr.householderQ();
    ergo::Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const ergo::Complex piv = r(j, j);
        q.col(j) *= piv / std::abs(piv);
    }
    return q;
}

}  // namespace testutil
