#pragma once

#include <Eigen/Dense>

#include "ncqm/errors.hpp"

namespace ncqm {

// Noncommutativity parameters of the deformed phase-space algebra
//   [X1,X2] = i theta,  [Xi,Pj] = i hbar delta_ij,  [P1,P2] = i kappa.
struct NCParams {
    double theta = 0.0;   // coordinate noncommutativity, >= 0, length^2
    double kappa = 0.0;   // momentum noncommutativity, real, momentum^2
    double hbar = 1.0;    // > 0
    double mu = 1.0;      // mass, > 0

    // kappa*theta / hbar^2 (dimensionless; = 1 at the critical point)
    double ratio() const { return kappa * theta / (hbar * hbar); }

    // critical momentum noncommutativity hbar^2/theta, defined for theta > 0
    double kappa_critical() const;

    void validate() const;  // throws std::invalid_argument
};

enum class Region { NegativeKappa, ZeroKappa, SubCritical, Critical, SuperCritical };

const char* to_string(Region r);

// Exact classification: sign of kappa, then kappa*theta vs hbar^2 (no tolerance).
Region classify_region(const NCParams& p);

// Commutator table in matrix form: ([xi_i, xi_j]) = i hbar G_hat,
// xi = (X1, X2, P1, P2)^t. `det` is det([xi_i, xi_j]) = (1 - kappa theta/hbar^2)^2 hbar^4.
struct CommutatorMatrix {
    Eigen::Matrix4d g_hat;
    double det;
};

CommutatorMatrix commutator_matrix(const NCParams& p);

// The standard symplectic form G (theta = kappa = 0 commutator table).
Eigen::Matrix4d symplectic_form();

// Linear map M: xi = M (x1,x2,p1,p2)^t with ordinary canonical variables,
// satisfying M G M^t = G_hat. One Sp(4,R)-factorizing branch below the
// critical point, another above it. Throws CriticalRegionError at the point.
Eigen::Matrix4d bopp_matrix(const NCParams& p);

}  // namespace ncqm
