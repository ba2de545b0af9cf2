#include "models.hpp"

#include "hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>

namespace ergo::models {

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix annihilator(int n_levels) {
    if (n_levels < 2) throw ConfigError("annihilator: need at least 2 levels");
    Matrix a = Matrix::Zero(n_levels, n_levels);
    for (int n = 1; n < n_levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

namespace {

using Triplets = std::vector<Eigen::Triplet<Complex>>;

// Row-major strides of the full space; site 0 slowest.
std::vector<std::int64_t> full_strides(const SubsystemDims& dims) {
    std::vector<std::int64_t> st(static_cast<size_t>(dims.count()));
    std::int64_t acc = 1;
    for (int i = dims.count() - 1; i >= 0; --i) {
        st[static_cast<size_t>(i)] = acc;
        acc *= dims.dim(i);
    }
    return st;
}

// Scatters `op` (on the ordered site tuple) into full-space triplets.
void scatter_term(const SubsystemDims& dims, const std::vector<int>& sites, const Matrix& op,
                  Triplets& out) {
    std::int64_t op_dim = 1;
    for (int s : sites) {
        if (s < 0 || s >= dims.count()) throw ConfigError("interaction term: site out of range");
        op_dim *= dims.dim(s);
    }
    if (op.rows() != op.cols() || op.rows() != op_dim)
        throw ConfigError("interaction term: operator dimension mismatch");

    const auto st = full_strides(dims);

    // full-space offset of each sub-space basis index
    std::vector<std::int64_t> scatter_sub(static_cast<size_t>(op_dim));
    for (std::int64_t si = 0; si < op_dim; ++si) {
        std::int64_t rem = si, offset = 0;
        for (int i = static_cast<int>(sites.size()) - 1; i >= 0; --i) {
            const int s = sites[static_cast<size_t>(i)];
            offset += (rem % dims.dim(s)) * st[static_cast<size_t>(s)];
            rem /= dims.dim(s);
        }
        scatter_sub[static_cast<size_t>(si)] = offset;
    }

    // full-space offsets of the spectator (rest) indices
    std::vector<int> rest_sites;
    for (int i = 0; i < dims.count(); ++i)
        if (std::find(sites.begin(), sites.end(), i) == sites.end()) rest_sites.push_back(i);
    std::int64_t rest_dim = 1;
    for (int s : rest_sites) rest_dim *= dims.dim(s);
    std::vector<std::int64_t> scatter_rest(static_cast<size_t>(rest_dim));
    for (std::int64_t ri = 0; ri < rest_dim; ++ri) {
        std::int64_t rem = ri, offset = 0;
        for (int i = static_cast<int>(rest_sites.size()) - 1; i >= 0; --i) {
            const int s = rest_sites[static_cast<size_t>(i)];
            offset += (rem % dims.dim(s)) * st[static_cast<size_t>(s)];
            rem /= dims.dim(s);
        }
        scatter_rest[static_cast<size_t>(ri)] = offset;
    }

    for (std::int64_t r = 0; r < op_dim; ++r)
        for (std::int64_t c = 0; c < op_dim; ++c) {
            const Complex v = op(r, c);
            if (v == Complex(0, 0)) continue;
            for (std::int64_t rest : scatter_rest)
                out.emplace_back(static_cast<int>(rest + scatter_sub[static_cast<size_t>(r)]),
                                 static_cast<int>(rest + scatter_sub[static_cast<size_t>(c)]), v);
        }
}

}  // namespace

Eigen::SparseMatrix<Complex> HamiltonianSpec::assemble_sparse() const {
    Triplets trips;
    for (const auto& lt : local_terms) scatter_term(dims, {lt.site}, lt.op, trips);
    for (const auto& it : interaction_terms) scatter_term(dims, it.sites, it.op, trips);
    Eigen::SparseMatrix<Complex> h(dims.total(), dims.total());
    h.setFromTriplets(trips.begin(), trips.end());
    return h;
}

Matrix HamiltonianSpec::assemble() const {
    Matrix h = Matrix(assemble_sparse());
    const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff()))
        throw NumericError("HamiltonianSpec: assembled matrix not Hermitian");
    return h;
}

HamiltonianSpec HamiltonianSpec::quench() const {
    HamiltonianSpec q = *this;
    q.interaction_terms.clear();
    return q;
}

double HamiltonianSpec::local_ground_shift(int site) const {
    if (site < 0 || site >= dims.count()) throw ConfigError("local_ground_shift: site out of range");
    Matrix h = Matrix::Zero(dims.dim(site), dims.dim(site));
    for (const auto& lt : local_terms)
        if (lt.site == site) h += lt.op;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    return es.eigenvalues()(0);
}

LocalSpectrum HamiltonianSpec::local_spectrum(int site) const {
    if (site < 0 || site >= dims.count()) throw ConfigError("local_spectrum: site out of range");
    Matrix h = Matrix::Zero(dims.dim(site), dims.dim(site));
    for (const auto& lt : local_terms)
        if (lt.site == site) h += lt.op;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    std::vector<double> levels(es.eigenvalues().data(), es.eigenvalues().data() + dims.dim(site));
    return LocalSpectrum::from_levels(std::move(levels), 1e-9);
}

HamiltonianSpec build_tc(int n_spins, int n_max, double omega_c, double omega_a, double g) {
    if (n_spins < 1 || n_max < 1) throw ConfigError("build_tc: need N >= 1 and n_max >= 1");
    const int nc = n_max + 1;
    std::vector<int> dv(static_cast<size_t>(n_spins) + 1, 2);
    dv[0] = nc;

    HamiltonianSpec spec;
    spec.dims = SubsystemDims(dv);
    spec.cavity_site = 0;
    spec.parameters = {{"omega_c", omega_c}, {"omega_a", omega_a}, {"g", g},
                       {"N", static_cast<double>(n_spins)}, {"n_max", static_cast<double>(n_max)}};

    const Matrix a = annihilator(nc);
    spec.local_terms.push_back({0, omega_c * (a.adjoint() * a)});
    // sigma_pm = (sigma_x +- i sigma_y)/2: standard raising/lowering
    Matrix sp = Matrix::Zero(2, 2), sm = Matrix::Zero(2, 2);
    sp(0, 1) = 1;
    sm(1, 0) = 1;
    const double coupling = g / std::sqrt(static_cast<double>(n_spins));
    for (int i = 1; i <= n_spins; ++i) {
        spec.local_terms.push_back({i, omega_a * pauli_z()});
        Matrix v = coupling * (Matrix(Eigen::kroneckerProduct(a, sp)) +
                               Matrix(Eigen::kroneckerProduct(Matrix(a.adjoint()), sm)));
        spec.interaction_terms.push_back({{0, i}, std::move(v)});
    }
    return spec;
}

HamiltonianSpec build_dicke3(int n_atoms, int n_max, double omega_c, double omega_a,
                             double g1, double g2) {
    if (n_atoms < 1 || n_max < 1) throw ConfigError("build_dicke3: need N >= 1 and n_max >= 1");
    const int nc = n_max + 1;
    std::vector<int> dv(static_cast<size_t>(n_atoms) + 1, 3);
    dv[0] = nc;

    HamiltonianSpec spec;
    spec.dims = SubsystemDims(dv);
    spec.cavity_site = 0;
    spec.parameters = {{"omega_c", omega_c}, {"omega_a", omega_a}, {"g1", g1}, {"g2", g2},
                       {"N", static_cast<double>(n_atoms)}, {"n_max", static_cast<double>(n_max)}};

    const Matrix a = annihilator(nc);
    spec.local_terms.push_back({0, omega_c * (a.adjoint() * a)});

    auto proj = [](int i, int j) {
        Matrix m = Matrix::Zero(3, 3);
        m(i, j) = 1;
        return m;
    };
    const Matrix quad1 = Complex(0, 1) * (a - Matrix(a.adjoint()));  // i(a - a^dag)
    const Matrix quad2 = Complex(0, 1) * (a + Matrix(a.adjoint()));  // i(a + a^dag)
    const double c1 = g1 / std::sqrt(static_cast<double>(n_atoms));
    const double c2 = g2 / std::sqrt(static_cast<double>(n_atoms));
    for (int k = 1; k <= n_atoms; ++k) {
        spec.local_terms.push_back({k, omega_a * (proj(1, 1) + proj(2, 2))});
        Matrix v = c1 * Matrix(Eigen::kroneckerProduct(quad1, Matrix(proj(0, 1) + proj(1, 0)))) +
                   c2 * Matrix(Eigen::kroneckerProduct(quad2, Matrix(proj(0, 2) - proj(2, 0))));
        spec.interaction_terms.push_back({{0, k}, std::move(v)});
    }
    return spec;
}

HamiltonianSpec build_tfim(int n_spins, double g, Boundary boundary) {
    if (n_spins < 2) throw ConfigError("build_tfim: need N >= 2");
    HamiltonianSpec spec;
    spec.dims = SubsystemDims(std::vector<int>(static_cast<size_t>(n_spins), 2));
    spec.parameters = {{"g", g}, {"N", static_cast<double>(n_spins)},
                       {"periodic", boundary == Boundary::periodic ? 1.0 : 0.0}};

    for (int i = 0; i < n_spins; ++i) spec.local_terms.push_back({i, -1.0 * pauli_z()});
    const Matrix bond = -g * Matrix(Eigen::kroneckerProduct(pauli_x(), pauli_x()));
    // Eq.-style sum runs to i = N on a ring (N = 2 double-counts its bond);
    // open boundary stops at N-1 bonds.
    const int n_bonds = boundary == Boundary::periodic ? n_spins : n_spins - 1;
    for (int i = 0; i < n_bonds; ++i)
        spec.interaction_terms.push_back({{i, (i + 1) % n_spins}, bond});
    return spec;
}

namespace {

// Lanczos with full reorthogonalization on a sparse Hermitian matrix.
// Deterministic uniform start; restarts from the current Ritz vector.
GroundStateResult lanczos_ground(const Eigen::SparseMatrix<Complex>& h, const SubsystemDims& dims,
                                 double tol) {
    const std::int64_t dim = h.rows();
    const int m_max = static_cast<int>(std::min<std::int64_t>(dim, 300));
    Vector start = Vector::Constant(dim, Complex(1.0, 0.0));
    start /= start.norm();

    double energy = 0.0, second = 0.0;
    Vector ground;
    bool converged = false;

    for (int restart = 0; restart < 6 && !converged; ++restart) {
        std::vector<Vector> basis;
        std::vector<double> alpha, beta;
        Vector v = start;
        Vector w;
        for (int j = 0; j < m_max; ++j) {
            basis.push_back(v);
            w = h * v;
            const double a = (v.adjoint() * w)(0, 0).real();
            alpha.push_back(a);
            w -= a * v;
            if (j > 0) w -= beta.back() * basis[static_cast<size_t>(j) - 1];
            // full reorthogonalization
            for (const Vector& u : basis) w -= (u.adjoint() * w)(0, 0) * u;
            const double b = w.norm();
            if (b < 1e-14) break;
            // periodic Ritz residual check: |beta_j * s_last| bounds the
            // ground-pair residual, so stop once it is negligible
            if (j >= 20 && j % 10 == 0) {
                const int m = j + 1;
                Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
                for (int q = 0; q < m; ++q) {
                    tri(q, q) = alpha[static_cast<size_t>(q)];
                    if (q + 1 < m) tri(q, q + 1) = tri(q + 1, q) = beta[static_cast<size_t>(q)];
                }
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> check(tri);
                if (b * std::abs(check.eigenvectors()(m - 1, 0)) < 1e-12) break;
            }
            beta.push_back(b);
            v = w / b;
        }

        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
        for (int j = 0; j < m; ++j) {
            tri(j, j) = alpha[static_cast<size_t>(j)];
            if (j + 1 < m) tri(j, j + 1) = tri(j + 1, j) = beta[static_cast<size_t>(j)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
        energy = es.eigenvalues()(0);
        second = m > 1 ? es.eigenvalues()(1) : energy;

        ground = Vector::Zero(dim);
        for (int j = 0; j < m; ++j) ground += es.eigenvectors()(j, 0) * basis[static_cast<size_t>(j)];
        ground /= ground.norm();

        const double residual = (h * ground - energy * ground).norm();
        if (residual < std::max(tol, 1e-10) * std::max(1.0, std::abs(energy))) {
            converged = true;
        } else {
            start = ground;
        }
    }
    if (!converged)
        throw NumericError("ground_state: Lanczos did not converge");

    const double gap = second - energy;
    return GroundStateResult{energy, PureState(ground, dims), gap, gap < tol};
}

}  // namespace

GroundStateResult ground_state(const HamiltonianSpec& spec, double tol, std::int64_t dense_threshold) {
    auto solve_dense = [&]() {
        const auto eig = hilbert::eig_hermitian(spec.assemble());
        const double gap = eig.eigenvalues(1) - eig.eigenvalues(0);
        return GroundStateResult{eig.eigenvalues(0), PureState(eig.eigenvectors.col(0), spec.dims),
                                 gap, gap < tol};
    };
    GroundStateResult res = spec.dims.total() <= dense_threshold
                                ? solve_dense()
                                : lanczos_ground(spec.assemble_sparse(), spec.dims, tol);

    if (spec.cavity_site >= 0) {
        // Photon-tail check: population above n_max - 2 must be negligible.
        const int nc = spec.dims.dim(spec.cavity_site);
        const std::int64_t rest = spec.dims.total() / nc;
        double tail = 0.0;
        const Vector& psi = res.state.amplitudes();
        for (int n = nc - 2; n < nc; ++n)
            for (std::int64_t r = 0; r < rest; ++r) tail += std::norm(psi(n * rest + r));
        if (tail > 1e-8)
            throw ConfigError("ground_state: photon tail population " + std::to_string(tail) +
                              " exceeds 1e-8; increase n_max");
    }
    return res;
}

}  // namespace ergo::models
