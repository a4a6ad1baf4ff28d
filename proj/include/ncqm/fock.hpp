#pragma once

#include <string>
#include <vector>

#include "ncqm/linalg.hpp"
#include "ncqm/params.hpp"

namespace ncqm {

// Truncated two-mode Fock realization of the deformed variables, built by
// applying the Bopp matrix to the standard ladder realization of ordinary
// (x_i, p_i). Dimension cutoff^2; identities involving products of more than
// one variable hold exactly only away from the truncation boundary, so checks
// are projected on interior windows (occupations <= cutoff-1-margin per mode):
// margin 1 for products of <= 3 linear factors, margin 2 for products of two
// quadratic forms.
struct FockRealization {
    NCParams params;
    Region region = Region::ZeroKappa;
    int cutoff = 0;  // per-mode occupation count N
    MatrixC x1, x2, p1, p2;
    int interior_dim = 0;  // (N-1)^2, occupations <= N-2

    int dim() const { return cutoff * cutoff; }

    MatrixC x_squared() const { return x1 * x1 + x2 * x2; }
    MatrixC p_squared() const { return p1 * p1 + p2 * p2; }
    MatrixC xp_symmetric() const { return x1 * p1 + p1 * x1 + x2 * p2 + p2 * x2; }
    // rotation generator on both planes; undefined at the critical point
    MatrixC angular_momentum() const;
};

// cutoff >= 6; throws CriticalRegionError / CutoffTooSmallError.
FockRealization build_realization(const NCParams& p, int cutoff);

// max |(defect)_ij| over the interior window with the given margin
double interior_residual(const FockRealization& r, const MatrixC& defect, int margin);

struct GeneratorSet {
    MatrixC rot;              // L
    MatrixC k1, k2;           // coordinate translations
    MatrixC m1, m2;           // momentum translations
    MatrixC g0, gplus, gminus;  // sl(2,R) J0,J+- or su(2) J3,J+-
    bool su2 = false;
};

// L, K, M in every non-critical region; G's except at kappa = 0
// (ZeroKappaGeneratorsError).
GeneratorSet build_generators(const FockRealization& r);

// interior max-norm (margin 2) of 4*Casimir - (L/hbar)^2 + 1
double casimir_residual(const FockRealization& r);

enum class TransformKind { TimeReversal, Parity };

// Transformed variables as the defining real linear combinations of the
// originals; `antilinear` marks time reversal (composition with entrywise
// conjugation squares to the identity on the variables).
struct TransformedVariables {
    MatrixC x1, x2, p1, p2;
    Eigen::Matrix4d map;  // xi' = map * xi
    bool antilinear = false;
};

TransformedVariables discrete_transform(const FockRealization& r, TransformKind kind);

struct ResidualCheck {
    std::string check;
    std::string region;
    int cutoff = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Auxiliary ladder algebras built from the quadratics P+-K+- and X+-M+-.
std::vector<ResidualCheck> auxiliary_algebra_checks(const FockRealization& r);

// Full residual battery: realization commutators, rotation/translation
// algebra, Lie-algebra relations, Casimir constraint, auxiliary algebra and
// discrete-symmetry rules.
std::vector<ResidualCheck> verify_all(const NCParams& p, int cutoff);

struct OracleSpectrum {
    std::vector<double> values;           // converged eigenvalues, ascending
    std::vector<double> interior_weight;  // matching interior weights (>= 0.999)
};

// Direct diagonalization; an eigenvalue counts as converged when its vector
// carries >= 99.9% weight on the interior window.
OracleSpectrum diagonalize_hamiltonian(const FockRealization& r, const MatrixC& h);

}  // namespace ncqm
