#include "ncqm/irreps.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm {

IrrepLabel IrrepLabel::su2(int twice_j) {
    if (twice_j < 0) throw std::invalid_argument("su2 irrep needs 2j >= 0");
    return {Family::Su2, twice_j, +1};
}

IrrepLabel IrrepLabel::sl2(int twice_k, int s) {
    if (twice_k < 1) throw std::invalid_argument("sl2 irrep needs 2k >= 1");
    if (s != +1 && s != -1) throw std::invalid_argument("sl2 sign must be +-1");
    if (twice_k == 1) s = +1;  // l = 0: both signs coincide
    return {Family::Sl2, twice_k, s};
}

int IrrepLabel::l() const {
    if (family == Family::Su2) return -(twice_label + 1);
    return sign * (twice_label - 1);
}

bool IrrepLabel::admissible_for(Region r) const {
    if (r == Region::Critical) return false;
    return (r == Region::SuperCritical) == (family == Family::Su2);
}

std::string IrrepLabel::str() const {
    const char* name = family == Family::Su2 ? "j" : "k";
    std::string lbl = twice_label % 2 == 0 ? std::to_string(twice_label / 2)
                                           : std::to_string(twice_label) + "/2";
    return std::string(family == Family::Su2 ? "su2(" : "sl2(") + name + "=" + lbl +
           ";l=" + std::to_string(l()) + ")";
}

std::vector<IrrepLabel> admissible_irreps(Region region, double max_label) {
    if (region == Region::Critical) throw CriticalRegionError();
    std::vector<IrrepLabel> out;
    if (region == Region::SuperCritical) {
        for (int tj = 0; tj <= int(std::floor(2.0 * max_label + 1e-12)); ++tj)
            out.push_back(IrrepLabel::su2(tj));
        return out;
    }
    for (int tk = 1; tk <= int(std::floor(2.0 * max_label + 1e-12)); ++tk) {
        out.push_back(IrrepLabel::sl2(tk, +1));
        if (tk > 1) out.push_back(IrrepLabel::sl2(tk, -1));
    }
    return out;
}

GeneratorMatrices generator_matrices(const IrrepLabel& irrep, int truncation) {
    GeneratorMatrices g;
    if (irrep.family == IrrepLabel::Family::Su2) {
        const double j = irrep.label();
        g.dim = irrep.twice_label + 1;
        g.diag.resize(g.dim);
        g.raise.resize(g.dim - 1);
        for (int i = 0; i < g.dim; ++i) g.diag[i] = -j + i;
        for (int i = 0; i + 1 < g.dim; ++i) {
            const double m = -j + i;
            g.raise[i] = std::sqrt((j - m) * (j + m + 1.0));
        }
        return g;
    }
    if (truncation < 2) throw std::invalid_argument("sl2 generator matrices need truncation >= 2");
    const double k = irrep.label();
    g.dim = truncation;
    g.diag.resize(g.dim);
    g.raise.resize(g.dim - 1);
    for (int i = 0; i < g.dim; ++i) g.diag[i] = k + i;
    for (int i = 0; i + 1 < g.dim; ++i) {
        const double m = k + i;
        g.raise[i] = std::sqrt((m - k + 1.0) * (m + k));
    }
    return g;
}

MatrixC GeneratorMatrices::g0() const {
    MatrixC m = MatrixC::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) m(i, i) = diag[i];
    return m;
}

MatrixC GeneratorMatrices::g1() const {
    MatrixC m = MatrixC::Zero(dim, dim);
    for (int i = 0; i + 1 < dim; ++i) m(i + 1, i) = m(i, i + 1) = 0.5 * raise[i];
    return m;
}

MatrixC GeneratorMatrices::g2() const {
    MatrixC m = MatrixC::Zero(dim, dim);
    for (int i = 0; i + 1 < dim; ++i) {
        m(i + 1, i) = Complex(0.0, -0.5) * raise[i];
        m(i, i + 1) = Complex(0.0, +0.5) * raise[i];
    }
    return m;
}

double sl2_boost_angle(double a, double b) {
    if (!(std::abs(b) < std::abs(a))) throw NotBoostableError();
    return std::atanh(b / a);
}

double su2_rotation_angle(double a, double b) {
    if (a == 0.0) throw DegenerateAxisError();
    return std::atan(b / a);
}

}  // namespace ncqm
