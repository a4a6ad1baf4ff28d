#include "ncqm/params.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm {

double NCParams::kappa_critical() const {
    if (theta <= 0.0) throw std::invalid_argument("kappa_critical requires theta > 0");
    return hbar * hbar / theta;
}

void NCParams::validate() const {
    if (!(theta >= 0.0)) throw std::invalid_argument("theta must be >= 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
    if (!std::isfinite(theta) || !std::isfinite(kappa) || !std::isfinite(hbar) || !std::isfinite(mu))
        throw std::invalid_argument("parameters must be finite");
}

const char* to_string(Region r) {
    switch (r) {
        case Region::NegativeKappa: return "negative-kappa";
        case Region::ZeroKappa: return "zero-kappa";
        case Region::SubCritical: return "sub-critical";
        case Region::Critical: return "critical";
        case Region::SuperCritical: return "super-critical";
    }
    return "?";
}

Region classify_region(const NCParams& p) {
    p.validate();
    if (p.kappa < 0.0) return Region::NegativeKappa;
    if (p.kappa == 0.0) return Region::ZeroKappa;
    const double prod = p.kappa * p.theta;
    const double h2 = p.hbar * p.hbar;
    if (prod < h2) return Region::SubCritical;
    if (prod == h2) return Region::Critical;
    return Region::SuperCritical;
}

namespace {

Eigen::Matrix2d i_sigma2() {
    Eigen::Matrix2d m;
    m << 0.0, 1.0, -1.0, 0.0;
    return m;
}

}  // namespace

Eigen::Matrix4d symplectic_form() {
    Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
    g.block<2, 2>(0, 2) = Eigen::Matrix2d::Identity();
    g.block<2, 2>(2, 0) = -Eigen::Matrix2d::Identity();
    return g;
}

CommutatorMatrix commutator_matrix(const NCParams& p) {
    p.validate();
    Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
    g.block<2, 2>(0, 0) = (p.theta / p.hbar) * i_sigma2();
    g.block<2, 2>(0, 2) = Eigen::Matrix2d::Identity();
    g.block<2, 2>(2, 0) = -Eigen::Matrix2d::Identity();
    g.block<2, 2>(2, 2) = (p.kappa / p.hbar) * i_sigma2();
    const double h4 = std::pow(p.hbar, 4);
    return {g, h4 * g.determinant()};
}

Eigen::Matrix4d bopp_matrix(const NCParams& p) {
    const Region reg = classify_region(p);
    if (reg == Region::Critical) throw CriticalRegionError();
    const double r = p.ratio();
    if (reg != Region::SuperCritical) {
        const double lam = std::sqrt(0.5 * (1.0 + std::sqrt(1.0 - r)));
        Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
        a.block<2, 2>(0, 0) = lam * Eigen::Matrix2d::Identity();
        a.block<2, 2>(0, 2) = -(p.theta / (2.0 * p.hbar * lam)) * i_sigma2();
        a.block<2, 2>(2, 0) = (p.kappa / (2.0 * p.hbar * lam)) * i_sigma2();
        a.block<2, 2>(2, 2) = lam * Eigen::Matrix2d::Identity();
        return a;
    }
    const double gam = std::sqrt(p.theta * p.kappa / (2.0 * p.hbar * p.hbar)) *
                       std::sqrt(1.0 + std::sqrt(1.0 - 1.0 / r));
    Eigen::Matrix4d c = Eigen::Matrix4d::Zero();
    c(0, 0) = 1.0;
    c(1, 2) = std::sqrt(p.theta / p.kappa);
    c(2, 1) = std::sqrt(p.kappa / p.theta);
    c(3, 3) = 1.0;
    Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
    d.block<2, 2>(0, 0) = gam * Eigen::Matrix2d::Identity();
    d.block<2, 2>(0, 2) = -(p.theta / (2.0 * p.hbar * gam)) * i_sigma2();
    d.block<2, 2>(2, 0) = (p.kappa / (2.0 * p.hbar * gam)) * i_sigma2();
    d.block<2, 2>(2, 2) = gam * Eigen::Matrix2d::Identity();
    return std::pow(p.hbar * p.hbar / (p.theta * p.kappa), 0.25) * c * d;
}

}  // namespace ncqm
