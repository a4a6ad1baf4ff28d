#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace ncqm {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using MatrixR = Eigen::MatrixXd;
using VectorR = Eigen::VectorXd;

// Matrix exponential by scaling-and-squaring with a Pade(13) approximant.
// Intended for small dense matrices (verification paths).
MatrixC expm(const MatrixC& a);

// max |a_ij - conj(a_ji)|
double hermiticity_defect(const MatrixC& a);

struct TridiagonalEigen {
    VectorR values;    // ascending
    MatrixR vectors;   // column i belongs to values[i]
};

// Symmetric tridiagonal eigensolve (implicit QL/QR via Eigen).
TridiagonalEigen tridiagonal_eigen(const VectorR& diag, const VectorR& offdiag, bool with_vectors = true);

}  // namespace ncqm
