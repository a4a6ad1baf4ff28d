#include "ncqm/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "ncqm/linalg.hpp"

namespace ncqm {

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: n >= 0");
    if (n == 0) return 1.0;
    double lm1 = 1.0, l = 1.0 + alpha - x;
    for (int m = 1; m < n; ++m) {
        const double lp1 = ((2.0 * m + 1.0 + alpha - x) * l - (m + alpha) * lm1) / (m + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

std::vector<double> laguerre_roots(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("laguerre_roots: n >= 1");
    if (!(alpha > -1.0)) throw std::invalid_argument("laguerre_roots: alpha > -1");
    VectorR diag(n), off(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
    for (int i = 0; i + 1 < n; ++i) off[i] = -std::sqrt((i + 1.0) * (i + 1.0 + alpha));
    const TridiagonalEigen e = tridiagonal_eigen(diag, off, false);
    return {e.values.data(), e.values.data() + n};
}

double jacobi(int n, double alpha, double beta, double x) {
    if (n < 0) throw std::invalid_argument("jacobi: n >= 0");
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
    for (int m = 2; m <= n; ++m) {
        const double c = 2.0 * m + alpha + beta;
        const double a1 = 2.0 * m * (m + alpha + beta) * (c - 2.0);
        const double a2 = (c - 1.0) * (alpha * alpha - beta * beta);
        const double a3 = (c - 1.0) * c * (c - 2.0);
        const double a4 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * c;
        const double pp1 = ((a2 + a3 * x) * p - a4 * pm1) / a1;
        pm1 = p;
        p = pp1;
    }
    return p;
}

namespace {

// sqrt((2k-1)! n! / (2k+n-1)!)
double weight_prefactor(int n, int twice_k) {
    return std::exp(0.5 * (std::lgamma(twice_k) + std::lgamma(n + 1.0) - std::lgamma(twice_k + n)));
}

}  // namespace

double psi_interior(int n, int twice_k, double z) {
    if (n < 0 || twice_k < 1) throw std::invalid_argument("psi_interior: n >= 0, 2k >= 1");
    return weight_prefactor(n, twice_k) * laguerre(n, twice_k - 1.0, z);
}

RecursionSpec RecursionSpec::for_irrep(const NCParams& p, const IrrepLabel& irrep) {
    const Region reg = classify_region(p);
    if (reg == Region::Critical) throw CriticalRegionError();
    if (!irrep.admissible_for(reg)) throw IrrepRegionMismatchError();
    RecursionSpec s;
    s.twice_label = irrep.twice_label;
    if (irrep.family == IrrepLabel::Family::Su2) {
        s.su2 = true;
        s.b = std::sqrt(p.ratio() - 1.0);
        s.a = s.b - 1.0 / s.b;
    } else {
        s.su2 = false;
        s.b = std::sqrt(1.0 - p.ratio());
        s.a = s.b + 1.0 / s.b;
    }
    return s;
}

double RecursionSpec::w_of_energy(const NCParams& p, const IrrepLabel& irrep, double energy, double v) const {
    const double h2 = p.hbar * p.hbar;
    const double base = p.theta * p.mu * (energy - v) / h2;
    if (su2) {
        const double j2 = irrep.twice_label;  // 2j
        return (base - p.theta * p.kappa * (j2 + 1.0) / (2.0 * h2)) / b;
    }
    const double k = irrep.label();
    const double s = irrep.sign;
    return (base - 2.0 * k + p.theta * p.kappa * (2.0 * k * (s + 1.0) - s) / (2.0 * h2)) / b;
}

double RecursionSpec::energy_of_w(const NCParams& p, const IrrepLabel& irrep, double w_value) const {
    const double h2 = p.hbar * p.hbar;
    if (su2) {
        const double j2 = irrep.twice_label;
        return w_value * h2 * b / (p.theta * p.mu) + (j2 + 1.0) * p.kappa / (2.0 * p.mu);
    }
    const double k = irrep.label();
    const double s = irrep.sign;
    return h2 / (p.theta * p.mu) *
           (w_value * b + 2.0 * k - p.theta * p.kappa / h2 * (k * (1.0 + s) - s / 2.0));
}

std::vector<double> recursion_coefficients(const RecursionSpec& spec, int nmax) {
    if (nmax < 0) throw std::invalid_argument("recursion_coefficients: nmax >= 0");
    std::vector<double> k(size_t(nmax) + 1);
    k[0] = 1.0;
    if (nmax == 0) return k;
    if (spec.su2) {
        const double j = 0.5 * spec.twice_label;
        k[1] = spec.a * j - spec.w;
        for (int n = 1; n < nmax; ++n)
            k[n + 1] = -((spec.a * (n - j) + spec.w) * k[n] + (2.0 * j - n + 1.0) * k[n - 1]) / (n + 1.0);
        return k;
    }
    const double twok = spec.twice_label;
    k[1] = -spec.w;
    for (int n = 1; n < nmax; ++n)
        k[n + 1] = ((spec.a * n - spec.w) * k[n] - (twok + n - 1.0) * k[n - 1]) / (n + 1.0);
    return k;
}

double psi_generating(int n, const RecursionSpec& spec) {
    if (spec.su2) throw std::invalid_argument("psi_generating: Sl2 recursion expected");
    if (n < 0) throw std::invalid_argument("psi_generating: n >= 0");
    return weight_prefactor(n, spec.twice_label) * recursion_coefficients(spec, n)[size_t(n)];
}

namespace {

// One backward sweep from n_start down to n_from; returns C[n_from..n_to]
// normalized to C[n_from] = 1, plus the rescale count.
std::pair<std::vector<double>, int> backward_sweep(const RecursionSpec& spec, int n_from, int n_to,
                                                   int n_start) {
    const double twok = spec.twice_label;
    const double a = spec.a, w = spec.w;
    double cn1 = 0.0;         // C_{n+1}
    double cn = 1e-200;       // C_n, arbitrary seed
    int rescales = 0;
    std::vector<double> kept(size_t(n_to - n_from) + 1, 0.0);
    
    for (int n = n_start; n > n_from; --n) {
        const double cm1 =
            ((a * n - w) * cn - std::sqrt((n + 1.0) * (twok + n)) * cn1) / std::sqrt(n * (twok + n - 1.0));
        cn1 = cn;
        cn = cm1;
        if (n - 1 <= n_to && n - 1 >= n_from) kept[size_t(n - 1 - n_from)] = cm1;
        if (std::abs(cn) > 1e200) {
            const double s = std::abs(cn);
            cn /= s;
            cn1 /= s;
            for (double& v : kept) v /= s;
            ++rescales;
        }
    }
    const double norm = kept[0];
    if (norm == 0.0 || !std::isfinite(norm)) throw std::runtime_error("minimal_exterior: normalization failed");
    for (double& v : kept) v /= norm;
    return {kept, rescales};
}

}  // namespace

CoefficientSequence minimal_exterior(const RecursionSpec& spec, int n_from, int n_to) {
    if (spec.su2) throw std::invalid_argument("minimal_exterior: Sl2 recursion expected");
    if (n_from < 0 || n_to < n_from) throw std::invalid_argument("minimal_exterior: bad range");
    const double z_like = spec.w + spec.twice_label;  // w + 2k; kappa=0 bound regime needs < 0
    const bool laguerre_like = std::abs(spec.a - 2.0) < 1e-9;
    if (laguerre_like && z_like >= 0.0) throw NotBoundRegimeError();

    int n_start = std::max(2 * n_to + 50, 64);
    if (laguerre_like) {
        // contamination ~ exp(-4 sqrt(-z)(sqrt(ns)-sqrt(nto))); demand exponent > 42
        const double root = std::sqrt(double(n_to)) + 10.5 / std::sqrt(-z_like);
        n_start = std::max(n_start, std::min(1000000, int(std::ceil(root * root)) + 1));
    } else {
        // geometric separation (b vs 1/b per step) once n dominates; validated below
        const double lb = std::abs(std::log(spec.b));
        if (lb > 1e-12) n_start = std::max(n_start, n_to + std::min(1000000, int(std::ceil(21.0 / lb))));
    }

    auto [vals, rescales] = backward_sweep(spec, n_from, n_to, n_start);
    // Miller-type self check: results must be independent of the start index.
    double rel = 0.0;
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto [vals2, r2] = backward_sweep(spec, n_from, n_to, n_start + 100);
        rel = 0.0;
        for (size_t i = 0; i < vals.size(); ++i)
            rel = std::max(rel, std::abs(vals[i] - vals2[i]) / std::max(1e-300, std::abs(vals[i])));
        if (rel < 1e-12) break;
        n_start = n_start + 100 + (n_start / 2);
        std::tie(vals, rescales) = backward_sweep(spec, n_from, n_to, n_start);
    }
    if (!(rel < 1e-10))
        throw NotBoundRegimeError("backward recursion does not stabilize (spectral value too close to threshold)");

    CoefficientSequence seq;
    seq.n_from = n_from;
    seq.values = std::move(vals);
    seq.provenance = CoefficientSequence::Provenance::ExteriorMinimal;
    seq.rescales = rescales;
    return seq;
}

}  // namespace ncqm
