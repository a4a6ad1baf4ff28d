#include "ncqm/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace ncqm {

namespace {

// Pade(13) numerator coefficients for exp (Higham 2005).
constexpr double kPade13[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

}  // namespace

MatrixC expm(const MatrixC& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("expm: square matrix required");
    const Eigen::Index n = a.rows();
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    int squarings = 0;
    const double theta13 = 5.371920351148152;
    if (norm > theta13) squarings = std::max(0, int(std::ceil(std::log2(norm / theta13))));
    const MatrixC as = a / std::pow(2.0, squarings);

    const MatrixC a2 = as * as;
    const MatrixC a4 = a2 * a2;
    const MatrixC a6 = a2 * a4;
    const MatrixC id = MatrixC::Identity(n, n);
    const MatrixC u = as * (a6 * (kPade13[13] * a6 + kPade13[11] * a4 + kPade13[9] * a2) +
                            kPade13[7] * a6 + kPade13[5] * a4 + kPade13[3] * a2 + kPade13[1] * id);
    const MatrixC v = a6 * (kPade13[12] * a6 + kPade13[10] * a4 + kPade13[8] * a2) +
                      kPade13[6] * a6 + kPade13[4] * a4 + kPade13[2] * a2 + kPade13[0] * id;
    MatrixC r = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

double hermiticity_defect(const MatrixC& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

TridiagonalEigen tridiagonal_eigen(const VectorR& diag, const VectorR& offdiag, bool with_vectors) {
    const Eigen::Index n = diag.size();
    if (n == 0) return {VectorR(), MatrixR()};
    if (offdiag.size() != n - 1 && !(n == 1 && offdiag.size() == 0))
        throw std::invalid_argument("tridiagonal_eigen: offdiag must have size n-1");
    Eigen::SelfAdjointEigenSolver<MatrixR> es;
    es.computeFromTridiagonal(diag, offdiag, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("tridiagonal eigensolver failed to converge");
    return {es.eigenvalues(), with_vectors ? es.eigenvectors() : MatrixR()};
}

}  // namespace ncqm
