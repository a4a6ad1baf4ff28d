#include "ncqm/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm {

MatrixC TridiagonalHamiltonian::ungauged() const {
    MatrixC h = MatrixC::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) h(i, i) = diag[i];
    for (int i = 0; i + 1 < dim; ++i) {
        if (phase_gauged) {
            // undo C_m -> i^(m-k): H_{n,n+1} = -i * |offdiag|, H_{n+1,n} = +i * |offdiag|
            h(i, i + 1) = Complex(0.0, -1.0) * offdiag[i];
            h(i + 1, i) = Complex(0.0, +1.0) * offdiag[i];
        } else {
            h(i, i + 1) = h(i + 1, i) = offdiag[i];
        }
    }
    return h;
}

TridiagonalHamiltonian build_hamiltonian(const NCParams& p, const IrrepLabel& irrep,
                                         const RadialPotential& v, int truncation) {
    const Region reg = classify_region(p);
    if (reg == Region::Critical) throw CriticalRegionError();
    if (!irrep.admissible_for(reg)) throw IrrepRegionMismatchError();
    if (!(p.theta > 0.0)) throw ThetaZeroError("central-potential solver requires theta > 0");

    TridiagonalHamiltonian tri;
    tri.irrep = irrep;
    const double h2 = p.hbar * p.hbar;
    const double l = irrep.l();

    if (irrep.family == IrrepLabel::Family::Su2) {
        const double j = irrep.label();
        const double b = std::sqrt(p.ratio() - 1.0);
        tri.dim = irrep.twice_label + 1;
        tri.diag.resize(tri.dim);
        tri.offdiag.resize(tri.dim - 1);
        for (int i = 0; i < tri.dim; ++i) {
            const double m = -j + i;
            tri.diag[i] = (-2.0 * p.kappa * (1.0 - 2.0 * h2 / (p.kappa * p.theta)) * m +
                           p.kappa * (2.0 * j + 1.0)) /
                              (2.0 * p.mu) +
                          v(p.theta * (2.0 * m + 2.0 * j + 1.0));
        }
        for (int i = 0; i + 1 < tri.dim; ++i) {
            const double m = -j + i;
            tri.offdiag[i] = -(h2 / (p.mu * p.theta)) * b * std::sqrt((j + m + 1.0) * (j - m));
        }
        return tri;
    }

    if (truncation < 1) throw std::invalid_argument("build_hamiltonian: truncation >= 1");
    const double k = irrep.label();
    const double b = std::sqrt(1.0 - p.ratio());
    tri.dim = truncation;
    tri.diag.resize(tri.dim);
    tri.offdiag.resize(tri.dim - 1);
    const double kin_slope = (2.0 * p.kappa * (2.0 * h2 / (p.kappa * p.theta) - 1.0));
    for (int i = 0; i < tri.dim; ++i) {
        const double m = k + i;
        const double kinetic = reg == Region::ZeroKappa ? 4.0 * h2 * m / p.theta : kin_slope * m;
        tri.diag[i] = (kinetic - p.kappa * l) / (2.0 * p.mu) + v(p.theta * (2.0 * m - l));
    }
    const bool gauge = reg == Region::NegativeKappa;
    for (int i = 0; i + 1 < tri.dim; ++i) {
        const double m = k + i;
        const double mag = (h2 / (p.mu * p.theta)) * b * std::sqrt((m + 0.5) * (m + 0.5) - (k - 0.5) * (k - 0.5));
        // kappa < 0: raw entries are -+ i*mag; the i^(m-k) similarity makes them +mag
        tri.offdiag[i] = gauge ? mag : -mag;
    }
    tri.phase_gauged = gauge;
    return tri;
}

SpectrumResult eigensolve(const TridiagonalHamiltonian& tri) {
    if (tri.dim < 1) throw std::invalid_argument("eigensolve: dim >= 1");
    SpectrumResult res;
    res.irrep = tri.irrep;
    res.truncation = tri.dim;
    const TridiagonalEigen e = tridiagonal_eigen(tri.diag, tri.offdiag, true);
    res.eigenvalues.assign(e.values.data(), e.values.data() + tri.dim);
    res.eigenvectors = e.vectors;
    res.converged.assign(size_t(tri.dim), true);
    res.threshold.assign(size_t(tri.dim), false);
    return res;
}

SpectrumResult solve_converged(const NCParams& p, const IrrepLabel& irrep, const RadialPotential& v,
                               int want, double tol,
                               std::optional<double> threshold_energy) {
    if (irrep.family == IrrepLabel::Family::Su2)
        throw std::invalid_argument("solve_converged: Su2 irreps are exact at dim 2j+1; use eigensolve");
    if (want < 1) throw std::invalid_argument("solve_converged: want >= 1");

    constexpr int kCeiling = 16384;
    constexpr int kVectorCap = 2048;  // skip the dense eigenvector pass beyond this
    int start = 64;
    while (start < 2 * want && start < kCeiling) start *= 2;

    // scan with eigenvalues only; vectors are recomputed once at the final size
    std::vector<double> prev;
    for (int dim = start; dim <= kCeiling; dim *= 2) {
        const TridiagonalHamiltonian tri = build_hamiltonian(p, irrep, v, dim);
        const TridiagonalEigen e = tridiagonal_eigen(tri.diag, tri.offdiag, false);
        std::vector<double> cur(e.values.data(), e.values.data() + std::min<Eigen::Index>(want, dim));
        if (!prev.empty()) {
            std::vector<bool> stable(size_t(want), false);
            bool all_stable = true, any = false;
            for (int i = 0; i < want; ++i) {
                const bool ok = std::abs(cur[size_t(i)] - prev[size_t(i)]) < tol;
                stable[size_t(i)] = ok;
                all_stable = all_stable && ok;
                any = any || ok;
            }
            if (all_stable || 2 * dim > kCeiling) {
                if (!any) throw NoBoundStatesError();
                SpectrumResult res;
                if (dim <= kVectorCap) {
                    res = eigensolve(tri);
                } else {
                    res.irrep = irrep;
                    res.truncation = dim;
                    res.eigenvalues.assign(e.values.data(), e.values.data() + dim);
                }
                res.converged.assign(res.eigenvalues.size(), false);
                res.threshold.assign(res.eigenvalues.size(), false);
                for (int i = 0; i < want; ++i) {
                    res.converged[size_t(i)] = stable[size_t(i)];
                    if (threshold_energy)
                        res.threshold[size_t(i)] =
                            std::abs(res.eigenvalues[size_t(i)] - *threshold_energy) < 10.0 * tol;
                }
                return res;
            }
        }
        prev = std::move(cur);
    }
    throw NoBoundStatesError();  // unreachable
}

}  // namespace ncqm
