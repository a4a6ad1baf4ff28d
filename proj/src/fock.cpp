#include "ncqm/fock.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace ncqm {

namespace {

constexpr Complex kI{0.0, 1.0};

MatrixR ladder(int n) {
    MatrixR a = MatrixR::Zero(n, n);
    for (int i = 1; i < n; ++i) a(i - 1, i) = std::sqrt(double(i));
    return a;
}

MatrixR kron(const MatrixR& a, const MatrixR& b) {
    MatrixR out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

MatrixC comm(const MatrixC& a, const MatrixC& b) { return a * b - b * a; }

struct CheckAccum {
    std::vector<ResidualCheck>& rows;
    const FockRealization& real;

    void add(const std::string& id, const MatrixC& defect, int margin, double tol) {
        const double res = interior_residual(real, defect, margin);
        rows.push_back({id, to_string(real.region), real.cutoff, res, tol, res < tol});
    }
    void add_scalar(const std::string& id, double res, double tol) {
        rows.push_back({id, to_string(real.region), real.cutoff, res, tol, res < tol});
    }
};

}  // namespace

MatrixC FockRealization::angular_momentum() const {
    const double r = params.ratio();
    const double h = params.hbar;
    return ((x1 * p2 - x2 * p1) + params.theta / (2.0 * h) * p_squared() +
            params.kappa / (2.0 * h) * x_squared()) /
           (1.0 - r);
}

FockRealization build_realization(const NCParams& p, int cutoff) {
    const Region reg = classify_region(p);
    if (reg == Region::Critical) throw CriticalRegionError();
    if (cutoff < 6) throw CutoffTooSmallError();

    const int n = cutoff;
    const MatrixR a = ladder(n);
    const MatrixR id = MatrixR::Identity(n, n);
    const MatrixR a1 = kron(a, id), a2 = kron(id, a);
    const double s = std::sqrt(p.hbar / 2.0);
    const MatrixC x1o = s * (a1 + a1.transpose());
    const MatrixC x2o = s * (a2 + a2.transpose());
    const MatrixC p1o = kI * s * (a1.transpose() - a1);
    const MatrixC p2o = kI * s * (a2.transpose() - a2);

    const Eigen::Matrix4d m = bopp_matrix(p);
    FockRealization r;
    r.params = p;
    r.region = reg;
    r.cutoff = cutoff;
    r.interior_dim = (cutoff - 1) * (cutoff - 1);
    const MatrixC* eta[4] = {&x1o, &x2o, &p1o, &p2o};
    MatrixC* xi[4] = {&r.x1, &r.x2, &r.p1, &r.p2};
    for (int i = 0; i < 4; ++i) {
        *xi[i] = MatrixC::Zero(n * n, n * n);
        for (int j = 0; j < 4; ++j)
            if (m(i, j) != 0.0) *xi[i] += m(i, j) * (*eta[j]);
    }
    return r;
}

double interior_residual(const FockRealization& r, const MatrixC& defect, int margin) {
    const int n = r.cutoff;
    const int cap = n - 1 - margin;
    double worst = 0.0;
    for (int i = 0; i < n * n; ++i) {
        if (i / n > cap || i % n > cap) continue;
        for (int j = 0; j < n * n; ++j) {
            if (j / n > cap || j % n > cap) continue;
            worst = std::max(worst, std::abs(defect(i, j)));
        }
    }
    return worst;
}

namespace {

// L, K_i, M_i: defined in every non-critical region, including kappa = 0.
GeneratorSet kinematic_generators(const FockRealization& r) {
    const NCParams& p = r.params;
    const double ratio = p.ratio();
    GeneratorSet g;
    g.rot = r.angular_momentum();
    g.k1 = (r.p1 - p.kappa / p.hbar * r.x2) / (1.0 - ratio);
    g.k2 = (r.p2 + p.kappa / p.hbar * r.x1) / (1.0 - ratio);
    g.m1 = (r.x1 + p.theta / p.hbar * r.p2) / (ratio - 1.0);
    g.m2 = (r.x2 - p.theta / p.hbar * r.p1) / (ratio - 1.0);
    return g;
}

}  // namespace

GeneratorSet build_generators(const FockRealization& r) {
    const NCParams& p = r.params;
    const double ratio = p.ratio();
    if (r.region == Region::ZeroKappa) throw ZeroKappaGeneratorsError();
    // the quadratic combinations divide by theta exactly as they divide by kappa
    if (p.theta == 0.0) throw ZeroKappaGeneratorsError("group generators undefined at theta = 0");
    GeneratorSet g = kinematic_generators(r);

    const MatrixC x2m = r.x_squared(), p2m = r.p_squared(), xpm = r.xp_symmetric();
    const MatrixC lh = g.rot / p.hbar;
    if (r.region == Region::SuperCritical || r.region == Region::SubCritical) {
        const double root = std::sqrt(std::abs(1.0 / ratio - 1.0));
        g.su2 = r.region == Region::SuperCritical;
        g.g0 = 0.25 * std::sqrt(ratio) * (p2m / p.kappa + x2m / p.theta + 2.0 * lh);
        const MatrixC base = -p2m / p.kappa + x2m / p.theta;
        g.gplus = (base - kI / std::sqrt(p.theta * p.kappa) * xpm) / (4.0 * root);
        g.gminus = (base + kI / std::sqrt(p.theta * p.kappa) * xpm) / (4.0 * root);
        return g;
    }
    // kappa < 0
    const double ak = -p.kappa;
    g.su2 = false;
    g.g0 = (p2m / ak + x2m / p.theta) / (4.0 * std::sqrt(1.0 + p.hbar * p.hbar / (p.theta * ak)));
    const MatrixC j1 = xpm / (4.0 * p.hbar * std::sqrt(1.0 + p.theta * ak / (p.hbar * p.hbar)));
    const MatrixC j2 = 0.25 * std::sqrt(p.theta * ak) / p.hbar * (-p2m / ak + x2m / p.theta + 2.0 * lh);
    g.gplus = j1 + kI * j2;
    g.gminus = j1 - kI * j2;
    return g;
}

namespace {

double casimir_residual_of(const FockRealization& r, const GeneratorSet& g) {
    const int d = r.dim();
    const MatrixC lh = g.rot / r.params.hbar;
    MatrixC cas;
    if (g.su2)
        cas = 0.5 * (g.gplus * g.gminus + g.gminus * g.gplus) + g.g0 * g.g0;
    else
        cas = g.g0 * g.g0 - 0.5 * (g.gplus * g.gminus + g.gminus * g.gplus);
    const MatrixC defect = 4.0 * cas - lh * lh + MatrixC::Identity(d, d);
    return interior_residual(r, defect, 2);
}

}  // namespace

double casimir_residual(const FockRealization& r) {
    return casimir_residual_of(r, build_generators(r));
}

TransformedVariables discrete_transform(const FockRealization& r, TransformKind kind) {
    const NCParams& p = r.params;
    const double ratio = p.ratio();
    Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
    if (r.region != Region::SuperCritical) {
        const double c = 1.0 / std::sqrt(1.0 - ratio);
        // X_i -> c (X_i + theta/hbar eps_ij P_j); P_i -> c (-P_i + kappa/hbar eps_ij X_j)
        t(0, 0) = c;
        t(0, 3) = c * p.theta / p.hbar;
        t(1, 1) = c;
        t(1, 2) = -c * p.theta / p.hbar;
        t(2, 2) = -c;
        t(2, 1) = c * p.kappa / p.hbar;
        t(3, 3) = -c;
        t(3, 0) = -c * p.kappa / p.hbar;
    } else {
        const double c = 1.0 / std::sqrt(1.0 - 1.0 / ratio);
        t(0, 0) = c;
        t(0, 3) = c * p.hbar / p.kappa;
        t(1, 1) = -c;
        t(1, 2) = c * p.hbar / p.kappa;
        t(2, 2) = c;
        t(2, 1) = -c * p.hbar / p.theta;
        t(3, 3) = -c;
        t(3, 0) = -c * p.hbar / p.theta;
    }
    if (kind == TransformKind::Parity) {
        // X1^P = X1^T, X2^P = -X2^T, P1^P = -P1^T, P2^P = P2^T
        const Eigen::Vector4d d(1.0, -1.0, -1.0, 1.0);
        t = d.asDiagonal() * t;
    }
    TransformedVariables out;
    out.map = t;
    out.antilinear = kind == TransformKind::TimeReversal;
    const MatrixC* src[4] = {&r.x1, &r.x2, &r.p1, &r.p2};
    MatrixC* dst[4] = {&out.x1, &out.x2, &out.p1, &out.p2};
    for (int i = 0; i < 4; ++i) {
        *dst[i] = MatrixC::Zero(r.dim(), r.dim());
        for (int j = 0; j < 4; ++j)
            if (t(i, j) != 0.0) *dst[i] += t(i, j) * (*src[j]);
    }
    return out;
}

std::vector<ResidualCheck> auxiliary_algebra_checks(const FockRealization& r) {
    if (r.region == Region::ZeroKappa) throw ZeroKappaGeneratorsError();
    if (r.params.theta == 0.0) throw ZeroKappaGeneratorsError("ladder algebras undefined at theta = 0");
    const NCParams& p = r.params;
    const GeneratorSet g = build_generators(r);
    std::vector<ResidualCheck> rows;
    CheckAccum acc{rows, r};

    const double ratio = p.ratio();
    const int d = r.dim();
    const MatrixC id = MatrixC::Identity(d, d);
    const MatrixC lh = g.rot / p.hbar;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const MatrixC pp = (r.p1 + kI * r.p2) * inv_sqrt2, pm = (r.p1 - kI * r.p2) * inv_sqrt2;
    const MatrixC kp = (g.k1 + kI * g.k2) * inv_sqrt2, km = (g.k1 - kI * g.k2) * inv_sqrt2;
    const MatrixC xp = (r.x1 + kI * r.x2) * inv_sqrt2, xm = (r.x1 - kI * r.x2) * inv_sqrt2;
    const MatrixC mp = (g.m1 + kI * g.m2) * inv_sqrt2, mm = (g.m1 - kI * g.m2) * inv_sqrt2;

    const MatrixC pkp = pp * kp, pkm = pm * km;
    const MatrixC xmp = xp * mp, xmm = xm * mm;
    acc.add("aux-pk-rot", comm(g.rot, pkp) - 2.0 * p.hbar * pkp, 2, 1e-9);
    acc.add("aux-xm-rot", comm(g.rot, xmp) - 2.0 * p.hbar * xmp, 2, 1e-9);

    // below the critical point both quadratic ladders close on su(2); above on sl(2,R)
    const double sgn = ratio < 1.0 ? +1.0 : -1.0;
    const double croot = std::sqrt(std::abs(1.0 - ratio));
    const MatrixC jp = std::sqrt(2.0) * croot / std::abs(p.kappa) * pkp;
    const MatrixC jm = std::sqrt(2.0) * croot / std::abs(p.kappa) * pkm;
    acc.add("aux-pk-bracket", comm(jp, jm) - sgn * 2.0 * lh, 2, 1e-9);
    const MatrixC p2k = r.p_squared() / p.kappa + lh;
    const MatrixC cas_pk = sgn * (0.5 * (jp * jm + jm * jp)) + lh * lh;
    acc.add("aux-pk-casimir", cas_pk - 0.5 * (p2k * p2k + lh * lh - id), 2, 1e-9);

    const MatrixC np = std::sqrt(2.0) * croot / p.theta * xmp;
    const MatrixC nm = std::sqrt(2.0) * croot / p.theta * xmm;
    acc.add("aux-xm-bracket", comm(np, nm) - sgn * 2.0 * lh, 2, 1e-9);
    const MatrixC x2t = r.x_squared() / p.theta + lh;
    const MatrixC cas_xm = sgn * (0.5 * (np * nm + nm * np)) + lh * lh;
    acc.add("aux-xm-casimir", cas_xm - 0.5 * (x2t * x2t + lh * lh - id), 2, 1e-9);
    return rows;
}

std::vector<ResidualCheck> verify_all(const NCParams& p, int cutoff) {
    const FockRealization r = build_realization(p, cutoff);
    std::vector<ResidualCheck> rows;
    CheckAccum acc{rows, r};
    const int d = r.dim();
    const MatrixC id = MatrixC::Identity(d, d);
    const double h = p.hbar;

    double herm = 0.0;
    for (const MatrixC* m : {&r.x1, &r.x2, &r.p1, &r.p2}) herm = std::max(herm, hermiticity_defect(*m));
    acc.add_scalar("hermiticity", herm, 1e-12);

    acc.add("algebra-xx", comm(r.x1, r.x2) - kI * p.theta * id, 1, 1e-10);
    acc.add("algebra-pp", comm(r.p1, r.p2) - kI * p.kappa * id, 1, 1e-10);
    double xp_res = interior_residual(r, comm(r.x1, r.p1) - kI * h * id, 1);
    xp_res = std::max(xp_res, interior_residual(r, comm(r.x2, r.p2) - kI * h * id, 1));
    xp_res = std::max(xp_res, interior_residual(r, comm(r.x1, r.p2), 1));
    xp_res = std::max(xp_res, interior_residual(r, comm(r.x2, r.p1), 1));
    acc.add_scalar("algebra-xp", xp_res, 1e-10);

    const bool have_group = r.region != Region::ZeroKappa && p.theta != 0.0;
    const GeneratorSet g = have_group ? build_generators(r) : kinematic_generators(r);

    double rotx = interior_residual(r, comm(g.rot, r.x1) - kI * h * r.x2, 1);
    rotx = std::max(rotx, interior_residual(r, comm(g.rot, r.x2) + kI * h * r.x1, 1));
    acc.add_scalar("rotation-vector-x", rotx, 1e-10);
    double rotp = interior_residual(r, comm(g.rot, r.p1) - kI * h * r.p2, 1);
    rotp = std::max(rotp, interior_residual(r, comm(g.rot, r.p2) + kI * h * r.p1, 1));
    acc.add_scalar("rotation-vector-p", rotp, 1e-10);

    const double ratio = p.ratio();
    double kx = interior_residual(r, comm(g.k1, r.x1) + kI * h * id, 1);
    kx = std::max(kx, interior_residual(r, comm(g.k2, r.x2) + kI * h * id, 1));
    kx = std::max(kx, interior_residual(r, comm(g.k1, r.x2), 1));
    acc.add_scalar("ktrans-x", kx, 1e-10);
    double kp_ = std::max(interior_residual(r, comm(g.k1, r.p1), 1), interior_residual(r, comm(g.k1, r.p2), 1));
    acc.add_scalar("ktrans-p", kp_, 1e-10);
    acc.add("ktrans-kk", comm(g.k1, g.k2) + kI * p.kappa / (1.0 - ratio) * id, 1, 1e-10);
    acc.add("ktrans-rot", comm(g.rot, g.k1) - kI * h * g.k2, 1, 1e-10);
    double mx = std::max(interior_residual(r, comm(g.m1, r.x1), 1), interior_residual(r, comm(g.m1, r.x2), 1));
    acc.add_scalar("mtrans-x", mx, 1e-10);
    double mp_ = interior_residual(r, comm(g.m1, r.p1) + kI * h * id, 1);
    mp_ = std::max(mp_, interior_residual(r, comm(g.m2, r.p2) + kI * h * id, 1));
    acc.add_scalar("mtrans-p", mp_, 1e-10);
    acc.add("mtrans-mm", comm(g.m1, g.m2) + kI * p.theta / (1.0 - ratio) * id, 1, 1e-10);
    acc.add("mtrans-rot", comm(g.rot, g.m1) - kI * h * g.m2, 1, 1e-10);

    if (have_group) {
        const double sgn = g.su2 ? +1.0 : -1.0;
        acc.add_scalar("lie-adjoint", (g.gplus - g.gminus.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        double raise = interior_residual(r, comm(g.g0, g.gplus) - g.gplus, 2);
        raise = std::max(raise, interior_residual(r, comm(g.g0, g.gminus) + g.gminus, 2));
        acc.add_scalar("lie-raising", raise, 1e-10);
        acc.add("lie-pm", comm(g.gplus, g.gminus) - sgn * 2.0 * g.g0, 2, 1e-10);
        acc.add_scalar("casimir-constraint", casimir_residual_of(r, g), 1e-9);
        for (const ResidualCheck& c : auxiliary_algebra_checks(r)) rows.push_back(c);
    }

    // discrete symmetries
    const TransformedVariables tv = discrete_transform(r, TransformKind::TimeReversal);
    const TransformedVariables pv = discrete_transform(r, TransformKind::Parity);
    double talg = interior_residual(r, comm(tv.x1, tv.x2) + kI * p.theta * id, 1);
    talg = std::max(talg, interior_residual(r, comm(tv.p1, tv.p2) + kI * p.kappa * id, 1));
    talg = std::max(talg, interior_residual(r, comm(tv.x1, tv.p1) + kI * h * id, 1));
    talg = std::max(talg, interior_residual(r, comm(tv.x2, tv.p2) + kI * h * id, 1));
    acc.add_scalar("tr-algebra-flip", talg, 1e-10);
    double palg = interior_residual(r, comm(pv.x1, pv.x2) - kI * p.theta * id, 1);
    palg = std::max(palg, interior_residual(r, comm(pv.p1, pv.p2) - kI * p.kappa * id, 1));
    palg = std::max(palg, interior_residual(r, comm(pv.x1, pv.p1) - kI * h * id, 1));
    acc.add_scalar("parity-algebra", palg, 1e-10);

    const MatrixC x2m = r.x_squared(), p2m = r.p_squared(), xpm = r.xp_symmetric();
    const MatrixC lrot = g.rot;
    auto quad_rules = [&](const TransformedVariables& v) {
        const MatrixC x2t = v.x1 * v.x1 + v.x2 * v.x2;
        const MatrixC p2t = v.p1 * v.p1 + v.p2 * v.p2;
        const MatrixC xpt = v.x1 * v.p1 + v.p1 * v.x1 + v.x2 * v.p2 + v.p2 * v.x2;
        const MatrixC lt = ((v.x1 * v.p2 - v.x2 * v.p1) + p.theta / (2.0 * h) * p2t +
                            p.kappa / (2.0 * h) * x2t) /
                           (1.0 - ratio);
        double res;
        if (r.region != Region::SuperCritical) {
            res = interior_residual(r, lt + lrot, 1);
            res = std::max(res, interior_residual(r, x2t - x2m - 2.0 * p.theta / h * lrot, 1));
            res = std::max(res, interior_residual(r, p2t - p2m - 2.0 * p.kappa / h * lrot, 1));
            const double sxp = v.antilinear ? -1.0 : +1.0;
            res = std::max(res, interior_residual(r, xpt - sxp * xpm, 1));
        } else {
            res = interior_residual(r, lt - lrot, 1);
            res = std::max(res, interior_residual(r, x2t + p.theta / p.kappa * p2m + 2.0 * p.theta / h * lrot, 1));
            res = std::max(res, interior_residual(r, p2t + p.kappa / p.theta * x2m + 2.0 * p.kappa / h * lrot, 1));
            const double sxp = v.antilinear ? +1.0 : -1.0;
            res = std::max(res, interior_residual(r, xpt - sxp * xpm, 1));
        }
        return res;
    };
    acc.add_scalar("tr-quadratic", quad_rules(tv), 1e-10);
    acc.add_scalar("parity-quadratic", quad_rules(pv), 1e-10);

    // P after T on the variables is diag(1,-1,-1,1) exactly, in either order;
    // the composed map leaves L, X^2, P^2 invariant and flips XP+PX.
    const Eigen::Matrix4d dpt = Eigen::Vector4d(1.0, -1.0, -1.0, 1.0).asDiagonal();
    const double tp_map = ((pv.map * tv.map - dpt).cwiseAbs().maxCoeff() +
                           (tv.map * pv.map - dpt).cwiseAbs().maxCoeff());
    acc.add_scalar("tp-commute", tp_map, 1e-12);
    const MatrixC x1pt = r.x1, x2pt = -r.x2, p1pt = -r.p1, p2pt = r.p2;
    const MatrixC x2c = x1pt * x1pt + x2pt * x2pt;
    const MatrixC p2c = p1pt * p1pt + p2pt * p2pt;
    const MatrixC xpc = x1pt * p1pt + p1pt * x1pt + x2pt * p2pt + p2pt * x2pt;
    const MatrixC lc = ((x1pt * p2pt - x2pt * p1pt) + p.theta / (2.0 * h) * p2c +
                        p.kappa / (2.0 * h) * x2c) /
                       (1.0 - ratio);
    double ptres = interior_residual(r, lc - lrot, 1);
    ptres = std::max(ptres, interior_residual(r, x2c - x2m, 1));
    ptres = std::max(ptres, interior_residual(r, p2c - p2m, 1));
    ptres = std::max(ptres, interior_residual(r, xpc + xpm, 1));
    acc.add_scalar("pt-quadratic", ptres, 1e-10);

    // antilinearity: (real linear map) . (entrywise conjugation), twice = id
    const MatrixC* orig[4] = {&r.x1, &r.x2, &r.p1, &r.p2};
    auto antiunitary = [&](const MatrixC* in[4], MatrixC out[4]) {
        for (int i = 0; i < 4; ++i) {
            out[i] = MatrixC::Zero(d, d);
            for (int jc = 0; jc < 4; ++jc)
                if (tv.map(i, jc) != 0.0) out[i] += tv.map(i, jc) * in[jc]->conjugate();
        }
    };
    MatrixC once[4], second[4];
    antiunitary(orig, once);
    const MatrixC* once_ptr[4] = {&once[0], &once[1], &once[2], &once[3]};
    antiunitary(once_ptr, second);
    double invol = 0.0;
    for (int i = 0; i < 4; ++i)
        invol = std::max(invol, (second[i] - *orig[i]).cwiseAbs().maxCoeff());
    acc.add_scalar("tr-involution", invol, 1e-12);

    return rows;
}

OracleSpectrum diagonalize_hamiltonian(const FockRealization& r, const MatrixC& h) {
    if (hermiticity_defect(h) > 1e-10) throw NonHermitianInputError();
    Eigen::SelfAdjointEigenSolver<MatrixC> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
    const int n = r.cutoff;
    const int cap = n - 1 - 2;
    OracleSpectrum out;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double w = 0.0;
        for (int row = 0; row < n * n; ++row)
            if (row / n <= cap && row % n <= cap) w += std::norm(es.eigenvectors()(row, i));
        if (w >= 0.999) {
            out.values.push_back(es.eigenvalues()[i]);
            out.interior_weight.push_back(w);
        }
    }
    return out;
}

}  // namespace ncqm
