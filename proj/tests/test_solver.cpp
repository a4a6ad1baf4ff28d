#include <doctest.h>

#include <cmath>

#include "ncqm/solver.hpp"

using namespace ncqm;

namespace {

const NCParams kSub{1.0, 0.3, 1.0, 1.0};
const NCParams kSup{1.0, 2.0, 1.0, 1.0};
const NCParams kNeg{1.0, -0.5, 1.0, 1.0};
const RadialPotential kZero = [](double) { return 0.0; };

}  // namespace

TEST_CASE("free su2 block j=1/2 at theta=1 kappa=2") {
    // kinetic-only matrix [[2,-1],[-1,2]]; eigenvalues 1 and 3 (the omega->0
    // limit of the oscillator ladder 2(n+ + 1/2))
    const TridiagonalHamiltonian tri = build_hamiltonian(kSup, IrrepLabel::su2(1), kZero, 0);
    REQUIRE(tri.dim == 2);
    CHECK(tri.diag[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(tri.diag[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(tri.offdiag[0] == doctest::Approx(-1.0).epsilon(1e-14));
    const SpectrumResult res = eigensolve(tri);
    CHECK(res.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(res.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("eigensolve basics") {
    TridiagonalHamiltonian tri;
    tri.irrep = IrrepLabel::sl2(1, +1);
    SUBCASE("1x1") {
        tri.dim = 1;
        tri.diag = VectorR::Zero(1);
        tri.offdiag = VectorR();
        CHECK(eigensolve(tri).eigenvalues[0] == 0.0);
    }
    SUBCASE("2x2 closed form") {
        tri.dim = 2;
        tri.diag = VectorR(2);
        tri.diag << 0.5, 1.5;
        tri.offdiag = VectorR(1);
        tri.offdiag << -1.0;
        const SpectrumResult res = eigensolve(tri);
        CHECK(res.eigenvalues[0] == doctest::Approx(1.0 - 0.5 * std::sqrt(5.0)).epsilon(1e-13));
        CHECK(res.eigenvalues[1] == doctest::Approx(1.0 + 0.5 * std::sqrt(5.0)).epsilon(1e-13));
    }
    SUBCASE("eigenpair residual below 1e-10 * scale") {
        const TridiagonalHamiltonian h = build_hamiltonian(kSub, IrrepLabel::sl2(3, -1),
                                                           [](double r2) { return 0.2 * r2; }, 48);
        const SpectrumResult res = eigensolve(h);
        MatrixR m = MatrixR::Zero(h.dim, h.dim);
        for (int i = 0; i < h.dim; ++i) m(i, i) = h.diag[i];
        for (int i = 0; i + 1 < h.dim; ++i) m(i, i + 1) = m(i + 1, i) = h.offdiag[i];
        const double scale = m.cwiseAbs().maxCoeff();
        for (int i = 0; i < h.dim; ++i) {
            const VectorR v = res.eigenvectors.col(i);
            CHECK((m * v - res.eigenvalues[size_t(i)] * v).cwiseAbs().maxCoeff() < 1e-10 * scale);
            CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("kappa<0 gauge: real symmetric block has the ungauged spectrum") {
    const TridiagonalHamiltonian tri = build_hamiltonian(kNeg, IrrepLabel::sl2(2, +1),
                                                         [](double r2) { return 0.1 * r2; }, 48);
    CHECK(tri.phase_gauged);
    for (int i = 0; i + 1 < tri.dim; ++i) CHECK(tri.offdiag[i] > 0.0);
    const MatrixC raw = tri.ungauged();
    CHECK(hermiticity_defect(raw) < 1e-12);
    Eigen::SelfAdjointEigenSolver<MatrixC> es(raw);
    const SpectrumResult res = eigensolve(tri);
    for (int i = 0; i < tri.dim; ++i)
        CHECK(res.eigenvalues[size_t(i)] ==
              doctest::Approx(es.eigenvalues()[i]).epsilon(1e-12));
}

TEST_CASE("kappa=0 limit of the diagonal") {
    const NCParams p{1.0, 0.0, 1.0, 1.0};
    const TridiagonalHamiltonian tri = build_hamiltonian(p, IrrepLabel::sl2(1, +1), kZero, 4);
    for (int i = 0; i < 4; ++i) {
        const double m = 0.5 + i;
        CHECK(tri.diag[i] == doctest::Approx(2.0 * m).epsilon(1e-14));
    }
    CHECK(tri.offdiag[0] == doctest::Approx(-1.0).epsilon(1e-14));  // -sqrt((m+1/2)^2-(k-1/2)^2) at m=1/2
}

TEST_CASE("potential sampled only on the lattice theta(2m-l) >= theta") {
    double smallest = 1e300;
    const RadialPotential probe = [&smallest](double r2) {
        if (r2 < smallest) smallest = r2;
        return 0.0;
    };
    build_hamiltonian(kSub, IrrepLabel::sl2(2, +1), probe, 16);
    CHECK(smallest >= 1.0);  // theta * (2k - l) = theta * 1
    smallest = 1e300;
    build_hamiltonian(kSup, IrrepLabel::su2(3), probe, 0);
    CHECK(smallest >= 1.0);  // theta * (2m + 2j + 1) at m = -j
}

TEST_CASE("solve_converged") {
    SUBCASE("oscillator potential converges to the closed form") {
        const RadialPotential vosc = [](double r2) { return 0.5 * r2; };  // mu w^2/2 with w=1
        for (const NCParams& p : {kSub, kNeg}) {
            const SpectrumResult res = solve_converged(p, IrrepLabel::sl2(1, +1), vosc, 3, 1e-9);
            for (int i = 0; i < 3; ++i) CHECK(res.converged[size_t(i)]);
        }
    }
    SUBCASE("theta=kappa=0.1 in the l=0 block gives the n+ = n- ladder 1, 3, 5") {
        const NCParams p{0.1, 0.1, 1.0, 1.0};
        const RadialPotential vosc = [](double r2) { return 0.5 * r2; };
        const SpectrumResult res = solve_converged(p, IrrepLabel::sl2(1, +1), vosc, 3, 1e-10);
        CHECK(res.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-9));  // (0,0)
        CHECK(res.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-9));  // (1,1)
        CHECK(res.eigenvalues[2] == doctest::Approx(5.0).epsilon(1e-9));  // (2,2)
    }
    SUBCASE("free particle at kappa=0 never stabilizes") {
        const NCParams p{1.0, 0.0, 1.0, 1.0};
        CHECK_THROWS_AS(solve_converged(p, IrrepLabel::sl2(1, +1), kZero, 2, 1e-9), NoBoundStatesError);
    }
    SUBCASE("su2 inputs are rejected") {
        CHECK_THROWS_AS(solve_converged(kSup, IrrepLabel::su2(1), kZero, 1, 1e-9), std::invalid_argument);
    }
}
