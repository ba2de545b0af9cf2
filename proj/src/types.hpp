#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ergo {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Error taxonomy mirrored by the C API exit codes.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Ordered local dimensions of a tensor-product space. Subsystem 0 is the
// slowest-varying factor (leftmost in kets).
class SubsystemDims {
public:
    SubsystemDims() = default;
    explicit SubsystemDims(std::vector<int> dims) : dims_(std::move(dims)) {
        for (int d : dims_) {
            if (d < 2) throw ConfigError("subsystem dimension must be >= 2, got " + std::to_string(d));
        }
    }

    int count() const { return static_cast<int>(dims_.size()); }
    int dim(int site) const { return dims_.at(static_cast<size_t>(site)); }
    const std::vector<int>& dims() const { return dims_; }

    std::int64_t total() const {
        std::int64_t t = 1;
        for (int d : dims_) t *= d;
        return t;
    }

    bool operator==(const SubsystemDims& o) const { return dims_ == o.dims_; }

private:
    std::vector<int> dims_;
};

// Subset of subsystem indices naming side A of a bipartition.
class Bipartition {
public:
    Bipartition(std::uint32_t side_a, int n_subsystems)
        : side_a_(side_a), n_(n_subsystems) {
        const std::uint32_t full = (n_subsystems >= 32) ? ~0u : ((1u << n_subsystems) - 1u);
        if (side_a == 0 || (side_a & full) == full)
            throw ConfigError("bipartition side A must be a nonempty proper subset");
        if ((side_a & ~full) != 0)
            throw ConfigError("bipartition mask references out-of-range subsystems");
    }

    std::uint32_t mask() const { return side_a_; }
    int n_subsystems() const { return n_; }
    bool contains(int site) const { return (side_a_ >> site) & 1u; }
    Bipartition complement() const {
        const std::uint32_t full = (1u << n_) - 1u;
        return Bipartition(full & ~side_a_, n_);
    }
    int size_a() const {
        int c = 0;
        for (int i = 0; i < n_; ++i) c += contains(i);
        return c;
    }
    bool operator==(const Bipartition& o) const { return side_a_ == o.side_a_ && n_ == o.n_; }
    bool operator<(const Bipartition& o) const { return side_a_ < o.side_a_; }

private:
    std::uint32_t side_a_;
    int n_;
};

class PureState {
public:
    PureState(Vector amplitudes, SubsystemDims dims)
        : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
        if (amplitudes_.size() != dims_.total())
            throw ConfigError("state length " + std::to_string(amplitudes_.size()) +
                              " does not match dims product " + std::to_string(dims_.total()));
        const double norm = amplitudes_.norm();
        if (std::abs(norm - 1.0) > 1e-12) {
            if (std::abs(norm - 1.0) > 1e-8)
                throw NumericError("state not normalized: ||psi|| = " + std::to_string(norm));
            amplitudes_ /= norm;
        }
    }

    const Vector& amplitudes() const { return amplitudes_; }
    const SubsystemDims& dims() const { return dims_; }

private:
    Vector amplitudes_;
    SubsystemDims dims_;
};

class DensityOperator {
public:
    DensityOperator(Matrix matrix, SubsystemDims dims)
        : matrix_(std::move(matrix)), dims_(std::move(dims)) {
        if (matrix_.rows() != matrix_.cols() || matrix_.rows() != dims_.total())
            throw ConfigError("density matrix shape does not match dims");
        const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
        if (herm > 1e-10) throw NumericError("density operator not Hermitian, asymmetry " + std::to_string(herm));
        const double tr = matrix_.trace().real();
        if (std::abs(tr - 1.0) > 1e-10) throw NumericError("density operator trace " + std::to_string(tr));
    }

    const Matrix& matrix() const { return matrix_; }
    const SubsystemDims& dims() const { return dims_; }

private:
    Matrix matrix_;
    SubsystemDims dims_;
};

}  // namespace ergo
