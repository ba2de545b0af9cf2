#include "hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ergo::hilbert {

namespace {

// Row-major strides; site 0 is the slowest-varying factor.
std::vector<std::int64_t> strides(const SubsystemDims& dims) {
    const int n = dims.count();
    std::vector<std::int64_t> s(static_cast<size_t>(n));
    std::int64_t acc = 1;
    for (int i = n - 1; i >= 0; --i) {
        s[static_cast<size_t>(i)] = acc;
        acc *= dims.dim(i);
    }
    return s;
}

struct SplitIndex {
    std::vector<int> sites_a, sites_b;
    std::int64_t dim_a = 1, dim_b = 1;
};

SplitIndex split(const SubsystemDims& dims, const Bipartition& keep) {
    if (keep.n_subsystems() != dims.count())
        throw ConfigError("bipartition subsystem count does not match state dims");
    SplitIndex sp;
    for (int i = 0; i < dims.count(); ++i) {
        if (keep.contains(i)) {
            sp.sites_a.push_back(i);
            sp.dim_a *= dims.dim(i);
        } else {
            sp.sites_b.push_back(i);
            sp.dim_b *= dims.dim(i);
        }
    }
    return sp;
}

// Rearranges a pure state into a dim_a x dim_b matrix with side-A sites as the
// row index (order preserved).
Matrix reshape_cut(const PureState& state, const Bipartition& cut, const SplitIndex& sp) {
    const auto& dims = state.dims();
    const auto st = strides(dims);
    std::vector<std::int64_t> stride_a(sp.sites_a.size()), stride_b(sp.sites_b.size());

    // stride of each site within its side's combined row-major index
    std::int64_t acc = 1;
    for (int i = static_cast<int>(sp.sites_a.size()) - 1; i >= 0; --i) {
        stride_a[static_cast<size_t>(i)] = acc;
        acc *= dims.dim(sp.sites_a[static_cast<size_t>(i)]);
    }
    acc = 1;
    for (int i = static_cast<int>(sp.sites_b.size()) - 1; i >= 0; --i) {
        stride_b[static_cast<size_t>(i)] = acc;
        acc *= dims.dim(sp.sites_b[static_cast<size_t>(i)]);
    }

    Matrix m(sp.dim_a, sp.dim_b);
    const std::int64_t total = dims.total();
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t a = 0, b = 0;
        for (size_t k = 0; k < sp.sites_a.size(); ++k)
            a += ((idx / st[static_cast<size_t>(sp.sites_a[k])]) % dims.dim(sp.sites_a[k])) * stride_a[k];
        for (size_t k = 0; k < sp.sites_b.size(); ++k)
            b += ((idx / st[static_cast<size_t>(sp.sites_b[k])]) % dims.dim(sp.sites_b[k])) * stride_b[k];
        m(a, b) = state.amplitudes()(idx);
    }
    (void)cut;
    return m;
}

}  // namespace

Matrix embed_local(const Matrix& op, int site, const SubsystemDims& dims) {
    if (site < 0 || site >= dims.count())
        throw ConfigError("embed_local: site " + std::to_string(site) + " out of range");
    if (op.rows() != op.cols() || op.rows() != dims.dim(site))
        throw ConfigError("embed_local: operator dimension " + std::to_string(op.rows()) +
                          " does not match subsystem " + std::to_string(site) + " dimension " +
                          std::to_string(dims.dim(site)));
    std::int64_t left = 1, right = 1;
    for (int i = 0; i < site; ++i) left *= dims.dim(i);
    for (int i = site + 1; i < dims.count(); ++i) right *= dims.dim(i);
    const std::int64_t d = dims.dim(site);

    Matrix out = Matrix::Zero(dims.total(), dims.total());
    for (std::int64_t l = 0; l < left; ++l)
        for (std::int64_t r = 0; r < d; ++r)
            for (std::int64_t c = 0; c < d; ++c) {
                const Complex v = op(r, c);
                if (v == Complex(0, 0)) continue;
                const std::int64_t row0 = (l * d + r) * right;
                const std::int64_t col0 = (l * d + c) * right;
                for (std::int64_t k = 0; k < right; ++k) out(row0 + k, col0 + k) = v;
            }
    return out;
}

DensityOperator partial_trace(const PureState& state, const Bipartition& keep) {
    const SplitIndex sp = split(state.dims(), keep);
    const Matrix m = reshape_cut(state, keep, sp);
    Matrix rho = m * m.adjoint();
    rho = Complex(0.5, 0) * (rho + rho.adjoint());

    std::vector<int> kept_dims;
    for (int s : sp.sites_a) kept_dims.push_back(state.dims().dim(s));
    return DensityOperator(std::move(rho), SubsystemDims(kept_dims));
}

DensityOperator partial_trace(const DensityOperator& rho, const Bipartition& keep) {
    const SplitIndex sp = split(rho.dims(), keep);
    const auto& dims = rho.dims();
    const auto st = strides(dims);

    std::vector<std::int64_t> stride_a(sp.sites_a.size());
    std::int64_t acc = 1;
    for (int i = static_cast<int>(sp.sites_a.size()) - 1; i >= 0; --i) {
        stride_a[static_cast<size_t>(i)] = acc;
        acc *= dims.dim(sp.sites_a[static_cast<size_t>(i)]);
    }

    Matrix out = Matrix::Zero(sp.dim_a, sp.dim_a);
    const std::int64_t total = dims.total();
    // Map each full index to (a, b); accumulate diagonal-in-b elements.
    std::vector<std::int64_t> a_of(static_cast<size_t>(total)), b_of(static_cast<size_t>(total));
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t a = 0, b = 0;
        std::int64_t bacc = 1;
        for (int i = static_cast<int>(sp.sites_b.size()) - 1; i >= 0; --i) {
            const int s = sp.sites_b[static_cast<size_t>(i)];
            b += ((idx / st[static_cast<size_t>(s)]) % dims.dim(s)) * bacc;
            bacc *= dims.dim(s);
        }
        for (size_t k = 0; k < sp.sites_a.size(); ++k)
            a += ((idx / st[static_cast<size_t>(sp.sites_a[k])]) % dims.dim(sp.sites_a[k])) * stride_a[k];
        a_of[static_cast<size_t>(idx)] = a;
        b_of[static_cast<size_t>(idx)] = b;
    }
    for (std::int64_t r = 0; r < total; ++r)
        for (std::int64_t c = 0; c < total; ++c)
            if (b_of[static_cast<size_t>(r)] == b_of[static_cast<size_t>(c)])
                out(a_of[static_cast<size_t>(r)], a_of[static_cast<size_t>(c)]) += rho.matrix()(r, c);

    out = Complex(0.5, 0) * (out + out.adjoint());
    std::vector<int> kept_dims;
    for (int s : sp.sites_a) kept_dims.push_back(dims.dim(s));
    return DensityOperator(std::move(out), SubsystemDims(kept_dims));
}

EigResult eig_hermitian(const Matrix& op) {
    if (op.rows() != op.cols()) throw ConfigError("eig_hermitian: matrix not square");
    const double scale = std::max(1.0, op.cwiseAbs().maxCoeff());
    const double asym = (op - op.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * scale)
        throw NumericError("eig_hermitian: matrix not Hermitian, max asymmetry " + std::to_string(asym));
    Matrix sym = Complex(0.5, 0) * (op + op.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success) throw NumericError("eig_hermitian: eigensolver failed");
    return EigResult{solver.eigenvalues(), solver.eigenvectors()};
}

RealVector schmidt_squared(const PureState& state, const Bipartition& cut) {
    const SplitIndex sp = split(state.dims(), cut);
    const Matrix m = reshape_cut(state, cut, sp);
    Eigen::BDCSVD<Matrix> svd(m);
    RealVector sv = svd.singularValues();
    RealVector lam2 = sv.array().square();
    const double s = lam2.sum();
    if (s > 0) lam2 /= s;  // renormalize round-off
    return lam2;           // BDCSVD returns descending singular values
}

}  // namespace ergo::hilbert
