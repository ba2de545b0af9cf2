#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbert.hpp"
#include "models.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>

using namespace ergo;

namespace {

std::vector<double> dense_spectrum(const models::HamiltonianSpec& spec) {
    const auto eig = hilbert::eig_hermitian(spec.assemble());
    return {eig.eigenvalues.data(), eig.eigenvalues.data() + eig.eigenvalues.size()};
}

bool contains_level(const std::vector<double>& levels, double value, double tol = 1e-9) {
    return std::any_of(levels.begin(), levels.end(),
                       [&](double e) { return std::abs(e - value) < tol; });
}

}  // namespace

TEST_CASE("pauli and ladder primitives") {
    CHECK((models::pauli_x() * models::pauli_x() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-14);
    const Matrix comm = models::pauli_x() * models::pauli_y() - models::pauli_y() * models::pauli_x();
    CHECK((comm - Complex(0, 2) * models::pauli_z()).cwiseAbs().maxCoeff() < 1e-14);
    const Matrix a = models::annihilator(4);
    const Matrix n = a.adjoint() * a;
    CHECK(n(2, 2).real() == doctest::Approx(2.0));
    CHECK(std::abs(a(1, 2) - Complex(std::sqrt(2.0), 0)) < 1e-14);
}

TEST_CASE("TC single-excitation polariton doublet sits at 2 omega_a +/- g") {
    // resonant: cavity quantum omega_c = spin splitting 2 omega_a
    const int n_spins = 3;
    const double g = 0.5;
    const auto spec = models::build_tc(n_spins, 2, 2.0, 1.0, g);
    const auto levels = dense_spectrum(spec);

    const double e0 = -static_cast<double>(n_spins);  // vacuum: all spins at -omega_a
    CHECK(contains_level(levels, e0));
    CHECK(contains_level(levels, e0 + 2.0 - g));
    CHECK(contains_level(levels, e0 + 2.0 + g));
    // N - 1 uncoupled antisymmetric spin flips stay at the bare energy
    const long bare = std::count_if(levels.begin(), levels.end(),
                                    [&](double e) { return std::abs(e - (e0 + 2.0)) < 1e-9; });
    CHECK(bare == n_spins - 1);
}

TEST_CASE("TC assembly is Hermitian and sparse matches dense") {
    const auto spec = models::build_tc(2, 3, 1.0, 1.0, 0.7);
    const Matrix h = spec.assemble();
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    const Matrix hs = Matrix(spec.assemble_sparse());
    CHECK((h - hs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("TFIM N=2 periodic double-counts the single bond") {
    const auto spec = models::build_tfim(2, 0.3, models::Boundary::periodic);
    Matrix expected = Matrix::Zero(4, 4);
    const Matrix sz = models::pauli_z();
    const Matrix sx = models::pauli_x();
    const Matrix i2 = Matrix::Identity(2, 2);
    expected -= Eigen::kroneckerProduct(sz, i2).eval();
    expected -= Eigen::kroneckerProduct(i2, sz).eval();
    expected -= 2.0 * 0.3 * Eigen::kroneckerProduct(sx, sx).eval();
    CHECK((spec.assemble() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("TFIM open chain has N-1 bonds") {
    const auto spec = models::build_tfim(4, 1.0, models::Boundary::open_chain);
    CHECK(spec.interaction_terms.size() == 3);
    const auto periodic = models::build_tfim(4, 1.0, models::Boundary::periodic);
    CHECK(periodic.interaction_terms.size() == 4);
}

TEST_CASE("quench drops every interaction term") {
    const auto spec = models::build_tfim(3, 0.8, models::Boundary::periodic);
    const auto quenched = spec.quench();
    CHECK(quenched.interaction_terms.empty());
    Matrix locals = Matrix::Zero(8, 8);
    for (const auto& term : spec.local_terms)
        locals += hilbert::embed_local(term.op, term.site, spec.dims);
    CHECK((quenched.assemble() - locals).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("local_spectrum shifts the ground level to zero") {
    const auto spec = models::build_tfim(3, 0.8, models::Boundary::periodic);
    const auto local = spec.local_spectrum(1);
    REQUIRE(local.energies().size() == 2);
    CHECK(local.energies()[0] == doctest::Approx(0.0));
    CHECK(local.energies()[1] == doctest::Approx(2.0));
    CHECK(spec.local_ground_shift(1) == doctest::Approx(-1.0));
}

TEST_CASE("ground_state dense path matches the spectrum floor") {
    const auto spec = models::build_tfim(6, 1.3, models::Boundary::periodic);
    const auto gs = models::ground_state(spec);
    const auto levels = dense_spectrum(spec);
    CHECK(gs.energy == doctest::Approx(levels.front()).epsilon(1e-10));
    const Matrix h = spec.assemble();
    const Vector residual = h * gs.state.amplitudes() - gs.energy * gs.state.amplitudes();
    CHECK(residual.norm() < 1e-8);
}

TEST_CASE("Lanczos path agrees with dense diagonalization") {
    const auto spec = models::build_tfim(8, 0.9, models::Boundary::periodic);
    const auto dense = models::ground_state(spec);
    const auto lanczos = models::ground_state(spec, 1e-10, /*dense_threshold=*/2);
    CHECK(lanczos.energy == doctest::Approx(dense.energy).epsilon(1e-9));
    const double overlap = std::abs(dense.state.amplitudes().dot(lanczos.state.amplitudes()));
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("three-level Dicke assembly is Hermitian with the expected dims") {
    const auto spec = models::build_dicke3(3, 5, 1.0, 1.0, 0.4, 0.9);
    CHECK(spec.dims.count() == 4);
    CHECK(spec.dims.dim(0) == 6);
    CHECK(spec.dims.dim(1) == 3);
    const Matrix h = spec.assemble();
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((h - Matrix(spec.assemble_sparse())).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("three-level Dicke normal-phase ground state is near the vacuum") {
    const auto spec = models::build_dicke3(2, 6, 1.0, 1.0, 0.1, 0.1);
    const auto gs = models::ground_state(spec);
    CHECK(std::abs(gs.state.amplitudes()(0)) > 0.99);
}

TEST_CASE("photon-tail overflow raises a ConfigError asking for a larger cutoff") {
    // deep superradiant coupling with a tiny photon cutoff
    const auto spec = models::build_dicke3(3, 3, 1.0, 1.0, 1.3, 0.0);
    CHECK_THROWS_AS(models::ground_state(spec), ConfigError);
}
