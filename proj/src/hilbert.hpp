#pragma once

#include "types.hpp"

namespace ergo::hilbert {

// I x ... x op x ... x I with `op` acting on subsystem `site`.
Matrix embed_local(const Matrix& op, int site, const SubsystemDims& dims);

// Reduced density operator on the subsystems named by `keep` (side A),
// subsystem order preserved.
DensityOperator partial_trace(const PureState& state, const Bipartition& keep);
DensityOperator partial_trace(const DensityOperator& rho, const Bipartition& keep);

struct EigResult {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // unitary columns
};

// Hermitian eigendecomposition; symmetrizes (M + M^dag)/2 first and rejects
// inputs whose asymmetry exceeds 1e-10 relative to the largest entry.
EigResult eig_hermitian(const Matrix& op);

// Squared Schmidt coefficients across `cut`, descending, sum 1.
RealVector schmidt_squared(const PureState& state, const Bipartition& cut);

}  // namespace ergo::hilbert
