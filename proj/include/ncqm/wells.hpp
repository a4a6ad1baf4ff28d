#pragma once

#include <vector>

#include "ncqm/irreps.hpp"
#include "ncqm/params.hpp"
#include "ncqm/solver.hpp"

namespace ncqm {

// Cylindrical step well V(X^2) = V0 Theta(X^2 - A^2), Theta(z) = 0 for z <= 0.
// The radius enters the physics only through A^2/theta, which is stored as
// given to keep the integer boundary comparisons exact.
struct WellSpec {
    double v0 = 0.0;            // barrier height; infinity() for the hard well
    double a2_over_theta = 1.0;  // A^2/theta > 0

    static WellSpec finite(double v0, double a2_over_theta);
    static WellSpec infinite(double a2_over_theta);
    bool is_infinite() const;
    double radius(double theta) const;  // A = sqrt(a2_over_theta * theta)
    void validate() const;
};

// Number of basis states of an irrep with mean square radius inside the well.
struct InteriorCount {
    int n0 = -1;       // Sl2: largest interior n (may be negative: empty)
    int twice_m0 = 0;  // Su2: 2*m0
    int dim = 0;       // interior states, >= 0
};

InteriorCount interior_count(const NCParams& p, const IrrepLabel& irrep, double a2_over_theta);

// The step potential as a RadialPotential sampled on the lattice theta*(2m-l).
RadialPotential step_potential(const NCParams& p, const WellSpec& well);

// Hard-well spectrum of one irrep: eigenvalues of the interior-restricted
// kinetic tridiagonal block (primary path). Empty interior gives {}.
std::vector<double> infinite_well_spectrum(const NCParams& p, const IrrepLabel& irrep, double a2_over_theta);

// Same spectrum from the roots of the terminating recursion polynomial,
// mapped through the region energy formulas (cross-check path).
std::vector<double> infinite_well_spectrum_roots(const NCParams& p, const IrrepLabel& irrep,
                                                 double a2_over_theta);

// Bound states of the finite well in (0, V0): Sl2 regions by the two matching
// conditions (interior regular solution against exterior minimal solution),
// Su2 by direct diagonalization of the (2j+1)-dimensional step Hamiltonian.
std::vector<double> finite_well_bound_states(const NCParams& p, const IrrepLabel& irrep,
                                             const WellSpec& well);

struct StateCountRow {
    IrrepLabel irrep;
    int count = 0;
};

// Hard-well state counts for every admissible irrep up to max_label.
std::vector<StateCountRow> state_counts(const NCParams& p, double a2_over_theta, double max_label);

// Closed forms for the smallest su(2) irreps (finite V0), j in {0, 1/2}.
std::vector<double> su2_closed_forms(const NCParams& p, const WellSpec& well, int twice_j);

}  // namespace ncqm
