#pragma once

#include <vector>

#include "ncqm/irreps.hpp"
#include "ncqm/params.hpp"

namespace ncqm {

// Associated Laguerre polynomial L_n^(alpha)(x) by the three-term recurrence.
double laguerre(int n, double alpha, double x);

// The n simple positive roots, as eigenvalues of the symmetric Jacobi
// (recurrence) matrix.
std::vector<double> laguerre_roots(int n, double alpha);

// Jacobi polynomial P_n^(alpha,beta)(x) by the three-term recurrence in n.
double jacobi(int n, double alpha, double beta, double x);

// Interior solution of the kappa = 0 radial recursion:
//   psi_{n,k}(z) = sqrt(n!(2k-1)!/(n+2k-1)!) L_n^(2k-1)(z),  psi_{0,k} = 1.
double psi_interior(int n, int twice_k, double z);

// Data for the radial three-term recursions written in normalized form.
// Sl2 regions:  (a n - w) C_n = sqrt(n(2k+n-1)) C_{n-1} + sqrt((n+1)(2k+n)) C_{n+1},
//               a = b + 1/b,  b = sqrt(1 - theta kappa/hbar^2)  (kappa < 0 gauged real).
// Su2 region:   the finite ladder with a = b - 1/b, b = sqrt(theta kappa/hbar^2 - 1).
struct RecursionSpec {
    bool su2 = false;
    double a = 2.0;
    double b = 1.0;
    int twice_label = 1;  // 2k or 2j
    double w = 0.0;       // spectral variable (w or z), shifted per zone

    static RecursionSpec for_irrep(const NCParams& p, const IrrepLabel& irrep);

    RecursionSpec with_w(double value) const {
        RecursionSpec s = *this;
        s.w = value;
        return s;
    }

    // spectral variable from energy with constant potential V in the zone
    double w_of_energy(const NCParams& p, const IrrepLabel& irrep, double energy, double v) const;
    // inverse map (the infinite-well energy formulas)
    double energy_of_w(const NCParams& p, const IrrepLabel& irrep, double w_value) const;
};

// Normalized recursion coefficients K_0..K_nmax of the generating-function
// solution (K_0 = 1). Sl2: K_{n+1} = ((a n - w) K_n - (2k+n-1) K_{n-1})/(n+1).
// Su2: K_1 = (a j - z), K_{n+1} = -((a(n-j)+z) K_n + (2j-n+1) K_{n-1})/(n+1).
std::vector<double> recursion_coefficients(const RecursionSpec& spec, int nmax);

// Psi_{n,k}(w) = sqrt((2k-1)! n!/(2k+n-1)!) K_n — degree-n polynomial in w;
// reduces to psi_interior(n, k, w + 2k) as b -> 1.
double psi_generating(int n, const RecursionSpec& spec);

struct CoefficientSequence {
    enum class Provenance { InteriorRegular, ExteriorMinimal };
    int n_from = 0;
    std::vector<double> values;  // values[i] = C_{n_from + i}, normalized to values[0] = 1
    Provenance provenance = Provenance::ExteriorMinimal;
    int rescales = 0;  // renormalizations applied during backward recursion

    double at(int n) const { return values.at(size_t(n - n_from)); }
};

// Subdominant (decaying) solution of the Sl2 recursion on [n_from, n_to],
// by backward (Miller) recursion from a start index chosen for full double
// accuracy; normalized so that C_{n_from} = 1.
// Throws NotBoundRegimeError when a = 2 (kappa = 0) and w + 2k >= 0, where the
// solutions are oscillatory and no minimal solution is selected.
CoefficientSequence minimal_exterior(const RecursionSpec& spec, int n_from, int n_to);

}  // namespace ncqm
