#include "ncqm/wells.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ncqm/specfun.hpp"

namespace ncqm {

namespace {

int floor_div(int a, int b) {  // b > 0
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int floor_ratio(double a2_over_theta) {
    if (!(a2_over_theta > 0.0)) throw std::invalid_argument("A^2/theta must be > 0");
    return int(std::floor(a2_over_theta));
}

}  // namespace

WellSpec WellSpec::finite(double v0, double a2_over_theta) {
    WellSpec w{v0, a2_over_theta};
    w.validate();
    return w;
}

WellSpec WellSpec::infinite(double a2_over_theta) {
    WellSpec w{std::numeric_limits<double>::infinity(), a2_over_theta};
    w.validate();
    return w;
}

bool WellSpec::is_infinite() const { return std::isinf(v0); }

double WellSpec::radius(double theta) const { return std::sqrt(a2_over_theta * theta); }

void WellSpec::validate() const {
    if (!(a2_over_theta > 0.0)) throw std::invalid_argument("well radius must be positive");
    if (!(v0 > 0.0)) throw std::invalid_argument("well height must be positive");
}

InteriorCount interior_count(const NCParams& p, const IrrepLabel& irrep, double a2_over_theta) {
    if (!(p.theta > 0.0)) throw ThetaZeroError();
    const Region reg = classify_region(p);
    if (!irrep.admissible_for(reg)) throw IrrepRegionMismatchError();
    const int f = floor_ratio(a2_over_theta);
    InteriorCount c;
    if (irrep.family == IrrepLabel::Family::Su2) {
        c.twice_m0 = f - irrep.twice_label - 1;
        c.dim = std::clamp(floor_div(f - 1, 2) + 1, 0, irrep.twice_label + 1);
        c.n0 = c.dim - 1;
        return c;
    }
    c.n0 = irrep.sign > 0 ? floor_div(f - 1, 2) : floor_div(f + 1, 2) - irrep.twice_label;
    c.dim = std::max(0, c.n0 + 1);
    return c;
}

RadialPotential step_potential(const NCParams& p, const WellSpec& well) {
    well.validate();
    if (!(p.theta > 0.0)) throw ThetaZeroError();
    const int f = floor_ratio(well.a2_over_theta);
    const double v0 = well.v0;
    const double theta = p.theta;
    // sampled arguments are theta * integer; Theta(0) = 0 keeps the boundary inside
    return [f, v0, theta](double r2) { return std::llround(r2 / theta) > f ? v0 : 0.0; };
}

std::vector<double> infinite_well_spectrum(const NCParams& p, const IrrepLabel& irrep,
                                           double a2_over_theta) {
    const InteriorCount c = interior_count(p, irrep, a2_over_theta);
    if (c.dim == 0) return {};
    const auto zero = [](double) { return 0.0; };
    const TridiagonalHamiltonian full = build_hamiltonian(p, irrep, zero, c.dim);
    TridiagonalHamiltonian block = full;
    if (irrep.family == IrrepLabel::Family::Su2 && c.dim < full.dim) {
        block.dim = c.dim;
        block.diag = full.diag.head(c.dim);
        block.offdiag = c.dim > 1 ? VectorR(full.offdiag.head(c.dim - 1)) : VectorR();
    }
    const SpectrumResult res = eigensolve(block);
    return res.eigenvalues;
}

namespace {

// Roots of the terminating coefficient K_dim as a function of the spectral
// variable, bracketed on a Gershgorin interval of the equivalent symmetric
// recursion matrix and refined by bisection.
std::vector<double> terminating_roots(const RecursionSpec& base, int dim) {
    const double twol = base.twice_label;
    VectorR diag(dim), off(std::max(0, dim - 1));
    if (base.su2) {
        const double j = 0.5 * twol;
        for (int n = 0; n < dim; ++n) diag[n] = -base.a * (n - j);
        for (int n = 0; n + 1 < dim; ++n) off[n] = std::sqrt((n + 1.0) * (twol - n));
    } else {
        for (int n = 0; n < dim; ++n) diag[n] = base.a * n;
        for (int n = 0; n + 1 < dim; ++n) off[n] = std::sqrt((n + 1.0) * (twol + n));
    }
    double lo = diag[0], hi = diag[0];
    for (int n = 0; n < dim; ++n) {
        const double radius = (n > 0 ? std::abs(off[n - 1]) : 0.0) + (n + 1 < dim ? std::abs(off[n]) : 0.0);
        lo = std::min(lo, diag[n] - radius);
        hi = std::max(hi, diag[n] + radius);
    }
    const double pad = 1e-6 * (hi - lo + 1.0);
    lo -= pad;
    hi += pad;

    auto eval = [&](double w) { return recursion_coefficients(base.with_w(w), dim)[size_t(dim)]; };
    std::vector<double> roots;
    for (int points = 4001; points <= 1024001; points *= 4) {
        roots.clear();
        const double step = (hi - lo) / (points - 1);
        double prev = eval(lo);
        double xprev = lo;
        for (int i = 1; i < points; ++i) {
            const double x = lo + i * step;
            const double val = eval(x);
            if (prev == 0.0) {
                roots.push_back(xprev);
            } else if (val != 0.0 && std::signbit(val) != std::signbit(prev)) {
                double x0 = xprev, x1 = x, f0 = prev;
                for (int it = 0; it < 200; ++it) {
                    const double xm = 0.5 * (x0 + x1);
                    const double fm = eval(xm);
                    if (fm == 0.0 || x1 - x0 < 1e-15 * std::max(1.0, std::abs(xm))) {
                        x0 = x1 = xm;
                        break;
                    }
                    if (std::signbit(fm) != std::signbit(f0)) {
                        x1 = xm;
                    } else {
                        x0 = xm;
                        f0 = fm;
                    }
                }
                roots.push_back(0.5 * (x0 + x1));
            }
            prev = val;
            xprev = x;
        }
        if (eval(hi) == 0.0) roots.push_back(hi);
        if (int(roots.size()) == dim) break;
    }
    if (int(roots.size()) != dim)
        throw std::runtime_error("terminating_roots: failed to isolate all polynomial roots");
    return roots;
}

}  // namespace

std::vector<double> infinite_well_spectrum_roots(const NCParams& p, const IrrepLabel& irrep,
                                                 double a2_over_theta) {
    const InteriorCount c = interior_count(p, irrep, a2_over_theta);
    if (c.dim == 0) return {};
    const RecursionSpec spec = RecursionSpec::for_irrep(p, irrep);
    std::vector<double> ws = terminating_roots(spec, c.dim);
    std::vector<double> energies;
    energies.reserve(ws.size());
    for (double w : ws) energies.push_back(spec.energy_of_w(p, irrep, w));
    std::sort(energies.begin(), energies.end());
    return energies;
}

namespace {

// Matching determinant of the finite well at energy e (Sl2 regions):
// interior regular solution for n <= n0, exterior minimal solution beyond,
// glued by the recursion rows n0 and n0+1.
double matching_determinant(const NCParams& p, const IrrepLabel& irrep, const WellSpec& well,
                            const RecursionSpec& spec, int n0, double e) {
    const double twok = irrep.twice_label;
    const double a = spec.a;
    const double w_in = spec.w_of_energy(p, irrep, e, 0.0);
    const double w_out = spec.w_of_energy(p, irrep, e, well.v0);
    const RecursionSpec in = spec.with_w(w_in);
    const double psi_n0 = psi_generating(n0, in);
    const double psi_nm1 = n0 >= 1 ? psi_generating(n0 - 1, in) : 0.0;
    const CoefficientSequence ext = minimal_exterior(spec.with_w(w_out), n0 + 1, n0 + 2);
    const double phi1 = ext.at(n0 + 1);  // = 1 by normalization
    const double phi2 = ext.at(n0 + 2);
    const double r1 = (a * n0 - w_in) * psi_n0 -
                      (n0 >= 1 ? std::sqrt(n0 * (twok + n0 - 1.0)) * psi_nm1 : 0.0);
    const double r1n = std::sqrt((n0 + 1.0) * (twok + n0)) * phi1;
    const double r2psi = -std::sqrt((n0 + 1.0) * (twok + n0)) * psi_n0;
    const double r2n = (a * (n0 + 1.0) - w_out) * phi1 - std::sqrt((n0 + 2.0) * (twok + n0 + 1.0)) * phi2;
    return r1 * r2n + r1n * r2psi;
}

}  // namespace

std::vector<double> finite_well_bound_states(const NCParams& p, const IrrepLabel& irrep,
                                             const WellSpec& well) {
    well.validate();
    if (well.is_infinite()) throw std::invalid_argument("finite_well_bound_states needs finite V0");
    if (!(p.theta > 0.0)) throw ThetaZeroError();
    const Region reg = classify_region(p);
    if (!irrep.admissible_for(reg)) throw IrrepRegionMismatchError();

    if (irrep.family == IrrepLabel::Family::Su2) {
        const SpectrumResult res = eigensolve(build_hamiltonian(p, irrep, step_potential(p, well), 0));
        std::vector<double> out;
        for (double e : res.eigenvalues)
            if (e < well.v0) out.push_back(e);
        return out;
    }

    const InteriorCount c = interior_count(p, irrep, well.a2_over_theta);
    if (c.dim == 0) return {};  // everything feels V0: nothing below the barrier
    const RecursionSpec spec = RecursionSpec::for_irrep(p, irrep);

    // bracketing grid over (0, V0), refined near the hard-well values where
    // deep-well states cluster
    std::vector<double> grid;
    const double eps = 1e-9 * well.v0;
    for (int i = 0; i < 400; ++i) grid.push_back(eps + (well.v0 - 2.0 * eps) * i / 399.0);
    const std::vector<double> hard = infinite_well_spectrum(p, irrep, well.a2_over_theta);
    if (!hard.empty()) {
        const double cap = std::min(well.v0 - eps, 1.5 * hard.back() + 1.0);
        for (int i = 0; i < 400; ++i) grid.push_back(eps + (cap - eps) * i / 399.0);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    // the kappa = 0 exterior recursion loses its minimal/dominant split as
    // E -> V0; keep a thin threshold sliver out of the bracketing grid
    // (near-threshold states are reported by the step-potential solver only)
    const bool laguerre_like = std::abs(spec.a - 2.0) < 1e-6;
    if (laguerre_like) {
        const auto near_top = [&](double e) {
            return spec.w_of_energy(p, irrep, e, well.v0) + irrep.twice_label > -1e-4;
        };
        grid.erase(std::remove_if(grid.begin(), grid.end(), near_top), grid.end());
        if (grid.size() < 2) return {};
    }

    auto det = [&](double e) { return matching_determinant(p, irrep, well, spec, c.n0, e); };
    std::vector<double> roots;
    double prev = det(grid[0]);
    for (size_t i = 1; i < grid.size(); ++i) {
        const double val = det(grid[i]);
        if (prev == 0.0) {
            roots.push_back(grid[i - 1]);
        } else if (val != 0.0 && std::signbit(val) != std::signbit(prev)) {
            double x0 = grid[i - 1], x1 = grid[i], f0 = prev;
            while (x1 - x0 > 1e-10 * well.v0) {
                const double xm = 0.5 * (x0 + x1);
                const double fm = det(xm);
                if (fm == 0.0) {
                    x0 = x1 = xm;
                    break;
                }
                if (std::signbit(fm) != std::signbit(f0)) {
                    x1 = xm;
                } else {
                    x0 = xm;
                    f0 = fm;
                }
            }
            roots.push_back(0.5 * (x0 + x1));
        }
        prev = val;
    }
    return roots;
}

std::vector<StateCountRow> state_counts(const NCParams& p, double a2_over_theta, double max_label) {
    if (!(p.theta > 0.0)) throw ThetaZeroError();
    std::vector<StateCountRow> rows;
    for (const IrrepLabel& irrep : admissible_irreps(classify_region(p), max_label))
        rows.push_back({irrep, interior_count(p, irrep, a2_over_theta).dim});
    return rows;
}

std::vector<double> su2_closed_forms(const NCParams& p, const WellSpec& well, int twice_j) {
    if (classify_region(p) != Region::SuperCritical) throw IrrepRegionMismatchError();
    if (well.is_infinite()) throw std::invalid_argument("su2_closed_forms needs finite V0");
    if (twice_j != 0 && twice_j != 1) throw std::invalid_argument("closed forms cover j in {0, 1/2}");
    const int f = floor_ratio(well.a2_over_theta);
    const double h2 = p.hbar * p.hbar;
    if (twice_j == 0) {
        // single state; feels the barrier only when A^2 < theta
        return {p.kappa / (2.0 * p.mu) + (f < 1 ? well.v0 : 0.0)};
    }
    const double th_p = f < 3 ? 1.0 : 0.0;  // Theta(1/2 - m0), 2m0 = f - 2
    const double th_m = f < 1 ? 1.0 : 0.0;  // Theta(-1/2 - m0)
    const double q = p.mu * well.v0 / p.kappa;
    const double root = std::sqrt(q * (4.0 * h2 / (p.theta * p.kappa) + q - 2.0) * (th_p - th_m) + 1.0);
    const double shift = 0.5 * well.v0 * (th_p + th_m);
    const double e_minus = p.kappa / p.mu * (1.0 - 0.5 * root) + shift;
    const double e_plus = p.kappa / p.mu * (1.0 + 0.5 * root) + shift;
    return {e_minus, e_plus};
}

}  // namespace ncqm
