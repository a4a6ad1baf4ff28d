#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ncqm/irreps.hpp"
#include "ncqm/linalg.hpp"
#include "ncqm/params.hpp"

namespace ncqm {

// Central potential V(r^2); sampled only at the lattice points theta*(2m - l)
// (Sl2) or theta*(2m + 2j + 1) (Su2).
using RadialPotential = std::function<double(double)>;

// Hamiltonian of a central potential restricted to one irrep, in the basis
// where X^2 is diagonal. Real symmetric after gauging: for kappa < 0 the raw
// off-diagonals are imaginary and the unit-phase similarity C_m -> i^(m-k) C_m
// is applied and recorded.
struct TridiagonalHamiltonian {
    IrrepLabel irrep;
    VectorR diag;
    VectorR offdiag;          // length dim-1
    int dim = 0;
    bool phase_gauged = false;  // true iff the i^(m-k) similarity was applied

    // the complex Hermitian matrix before gauging (verification path)
    MatrixC ungauged() const;
};

// Matrix elements of H = P^2/(2 mu) + V(X^2) in the irrep basis.
// Su2 ignores `truncation` (dim = 2j+1).
TridiagonalHamiltonian build_hamiltonian(const NCParams& p, const IrrepLabel& irrep,
                                         const RadialPotential& v, int truncation);

struct SpectrumResult {
    IrrepLabel irrep;
    std::vector<double> eigenvalues;       // ascending
    MatrixR eigenvectors;                  // column i <-> eigenvalues[i]
    int truncation = 0;
    std::vector<bool> converged;           // per eigenvalue
    std::vector<bool> threshold;           // |E - threshold_energy| < 10*tol, when requested
};

// Full solve of one tridiagonal block; residual ||Hv - lambda v|| < 1e-10 ||H||.
SpectrumResult eigensolve(const TridiagonalHamiltonian& tri);

// Sl2 only: grow the truncation (64, 128, ... , 16384) until the lowest `want`
// eigenvalues are stable to `tol` between successive sizes. Levels that never
// stabilize (continuum-like) come back with converged = false; throws
// NoBoundStatesError when none stabilizes.
SpectrumResult solve_converged(const NCParams& p, const IrrepLabel& irrep, const RadialPotential& v,
                               int want, double tol,
                               std::optional<double> threshold_energy = std::nullopt);

}  // namespace ncqm
