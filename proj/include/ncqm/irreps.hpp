#pragma once

#include <string>
#include <vector>

#include "ncqm/linalg.hpp"
#include "ncqm/params.hpp"

namespace ncqm {

// Admissible unitary irreps of SU(2) x SO(2) or SL(2,R) x SO(2), constrained by
// 4*Casimir = (L/hbar)^2 - 1.  Labels are stored twice their value so that
// half-integers stay exact.
struct IrrepLabel {
    enum class Family { Su2, Sl2 };

    Family family = Family::Sl2;
    int twice_label = 1;  // 2j (Su2, >= 0) or 2k (Sl2, >= 1)
    int sign = +1;        // Sl2 only: s in l = s(2k-1); canonically +1 for k = 1/2

    static IrrepLabel su2(int twice_j);
    static IrrepLabel sl2(int twice_k, int s);

    double label() const { return 0.5 * twice_label; }  // j or k
    int l() const;                                      // SO(2) eigenvalue
    bool admissible_for(Region r) const;
    std::string str() const;  // e.g. "su2(j=3/2,l=-4)" / "sl2(k=1,l=+1)"

    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

// All admissible irreps with label j (or k) <= max_label, in canonical order
// (ascending label; s=+1 before s=-1; k=1/2 listed once).
std::vector<IrrepLabel> admissible_irreps(Region region, double max_label);

// Diagonal of G0/G3 and the raising off-diagonal <m+1|G+|m>.
// Su2: dim = 2j+1 (truncation ignored), m = -j..j, raise sqrt((j-m)(j+m+1)).
// Sl2 discrete class: dim = truncation, m = k..k+dim-1, raise sqrt((m-k+1)(m+k)).
struct GeneratorMatrices {
    VectorR diag;
    VectorR raise;
    int dim = 0;

    MatrixC g0() const;  // diagonal
    MatrixC g1() const;  // (G+ + G-)/2
    MatrixC g2() const;  // (G+ - G-)/2i
};

GeneratorMatrices generator_matrices(const IrrepLabel& irrep, int truncation);

// alpha with tanh(alpha) = B/A; conjugating A*J0 + B*J1 by exp(i alpha J2)
// yields A*sqrt(1 - B^2/A^2)*J0 in any unitary sl(2,R) irrep.
// Throws NotBoostableError when |B| >= |A|.
double sl2_boost_angle(double a, double b);

// phi = arctan(B/A); conjugating A*J3 + B*J1 by exp(i phi J2) yields
// A*sqrt(1 + B^2/A^2)*J3 on su(2) irreps. Throws DegenerateAxisError when A = 0.
double su2_rotation_angle(double a, double b);

}  // namespace ncqm
