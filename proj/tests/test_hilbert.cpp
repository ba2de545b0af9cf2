#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbert.hpp"
#include "test_util.hpp"

#include <unsupported/Eigen/KroneckerProduct>

using namespace ergo;

namespace {

PureState bell() {
    Vector v = Vector::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    return PureState(v, SubsystemDims({2, 2}));
}

PureState ghz(int n) {
    Vector v = Vector::Zero(1 << n);
    v(0) = v((1 << n) - 1) = 1.0 / std::sqrt(2.0);
    return PureState(v, SubsystemDims(std::vector<int>(n, 2)));
}

}  // namespace

TEST_CASE("embed_local places the operator on the named site") {
    const SubsystemDims dims({2, 3, 2});
    Matrix op(3, 3);
    op.setZero();
    op(0, 1) = 1.0;
    op(2, 2) = 2.0;

    const Matrix embedded = hilbert::embed_local(op, 1, dims);
    const Matrix i2 = Matrix::Identity(2, 2);
    const Matrix expected =
        Eigen::kroneckerProduct(i2, Matrix(Eigen::kroneckerProduct(op, i2))).eval();
    CHECK((embedded - expected).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("embed_local on site 0 is op x I") {
    const SubsystemDims dims({2, 2});
    Matrix sz(2, 2);
    sz << 1.0, 0.0, 0.0, -1.0;
    const Matrix embedded = hilbert::embed_local(sz, 0, dims);
    CHECK(embedded(0, 0).real() == doctest::Approx(1.0));
    CHECK(embedded(1, 1).real() == doctest::Approx(1.0));
    CHECK(embedded(2, 2).real() == doctest::Approx(-1.0));
    CHECK(embedded(3, 3).real() == doctest::Approx(-1.0));
}

TEST_CASE("partial trace of Bell state is maximally mixed") {
    const auto rho = hilbert::partial_trace(bell(), Bipartition(0b01, 2));
    CHECK(rho.dims().total() == 2);
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(rho.matrix()(0, 1)) == doctest::Approx(0.0));
}

TEST_CASE("pure and density partial traces agree on random states") {
    std::mt19937_64 rng(11);
    const SubsystemDims dims({2, 3, 2});
    for (int trial = 0; trial < 20; ++trial) {
        const PureState psi = testutil::random_state(dims, rng);
        const Matrix full = psi.amplitudes() * psi.amplitudes().adjoint();
        const DensityOperator rho_full(full, dims);
        for (std::uint32_t mask = 1; mask < 7; ++mask) {
            const Bipartition cut(mask, 3);
            const auto a = hilbert::partial_trace(psi, cut);
            const auto b = hilbert::partial_trace(rho_full, cut);
            CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("partial trace keeps subsystem order") {
    // |psi> = |0>|+> : tracing out site 0 leaves |+><+|
    Vector v = Vector::Zero(4);
    v(0) = v(1) = 1.0 / std::sqrt(2.0);
    const PureState psi(v, SubsystemDims({2, 2}));
    const auto rho = hilbert::partial_trace(psi, Bipartition(0b10, 2));
    CHECK(rho.matrix()(0, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("eig_hermitian returns an ascending spectral decomposition") {
    std::mt19937_64 rng(3);
    const Matrix u = testutil::random_unitary(5, rng);
    RealVector evs(5);
    evs << -2.0, -0.5, 0.0, 1.25, 3.0;
    const Matrix m = u * evs.asDiagonal() * u.adjoint();

    const auto eig = hilbert::eig_hermitian(m);
    for (int i = 0; i < 5; ++i) CHECK(eig.eigenvalues(i) == doctest::Approx(evs(i)).epsilon(1e-10));
    const Matrix rebuilt = eig.eigenvectors * eig.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                           eig.eigenvectors.adjoint();
    CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("eig_hermitian rejects clearly non-Hermitian input") {
    Matrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(hilbert::eig_hermitian(m), NumericError);
}

TEST_CASE("schmidt_squared of Bell state is (1/2, 1/2)") {
    const RealVector s = hilbert::schmidt_squared(bell(), Bipartition(0b01, 2));
    REQUIRE(s.size() >= 2);
    CHECK(s(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s(1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("schmidt_squared matches marginal eigenvalues on random states") {
    std::mt19937_64 rng(17);
    const SubsystemDims dims({2, 2, 3});
    for (int trial = 0; trial < 10; ++trial) {
        const PureState psi = testutil::random_state(dims, rng);
        const Bipartition cut(0b011, 3);
        const RealVector s = hilbert::schmidt_squared(psi, cut);
        const auto rho = hilbert::partial_trace(psi, cut);
        auto eig = hilbert::eig_hermitian(rho.matrix());
        std::vector<double> evs(eig.eigenvalues.data(), eig.eigenvalues.data() + eig.eigenvalues.size());
        std::sort(evs.begin(), evs.end(), std::greater<double>());
        for (Eigen::Index i = 0; i < s.size(); ++i)
            CHECK(s(i) == doctest::Approx(evs[static_cast<size_t>(i)]).epsilon(1e-9));
        CHECK(s.sum() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("schmidt_squared is symmetric under complementation") {
    std::mt19937_64 rng(23);
    const SubsystemDims dims({2, 3, 2});
    const PureState psi = testutil::random_state(dims, rng);
    const Bipartition cut(0b001, 3);
    const RealVector a = hilbert::schmidt_squared(psi, cut);
    const RealVector b = hilbert::schmidt_squared(psi, cut.complement());
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) CHECK(a(i) == doctest::Approx(b(i)).epsilon(1e-10));
}

TEST_CASE("GHZ marginals are (1/2, 1/2) across every cut") {
    const PureState psi = ghz(4);
    for (std::uint32_t mask = 1; mask < 15; ++mask) {
        const RealVector s = hilbert::schmidt_squared(psi, Bipartition(mask, 4));
        CHECK(s(0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(s(1) == doctest::Approx(0.5).epsilon(1e-12));
    }
}
