// Dense complex linear algebra for small multipartite systems: tensor
// products, partial trace/transpose, Hermitian eigensystems and entropy.
// Eigen carries the matrix arithmetic; everything here is a pure function
// over immutable values.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qutritlab/errors.hpp"

namespace qutritlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances shared by the state types.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

// Kronecker product with block ordering (i,j)x(k,l) -> (i*rows_b+k, j*cols_b+l).
// Basis flattening everywhere in this library follows the same rule:
// |i>|j> lives at row i*dim_b + j.
template <typename DerivedA, typename DerivedB>
Matrix tensor(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = Complex(a(i, j)) * b;
    return out;
}

// Trace-1 positive-semidefinite Hermitian matrix with declared subsystem
// dimensions. Construction validates all invariants and throws otherwise.
class DensityMatrix {
  public:
    DensityMatrix(Matrix m, std::vector<Eigen::Index> dims);

    const Matrix& matrix() const { return matrix_; }
    const std::vector<Eigen::Index>& dims() const { return dims_; }
    Eigen::Index dim() const { return matrix_.rows(); }

  private:
    Matrix matrix_;
    std::vector<Eigen::Index> dims_;
};

struct EigenSystem {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // orthonormal columns, column i pairs with eigenvalue i
};

// Eigendecomposition of a Hermitian matrix (symmetry checked to 1e-10).
// Deterministic for identical input.
EigenSystem hermitian_eigensystem(const Matrix& h);

// Transposition of one factor's indices of a bipartite state. The result is
// Hermitian with trace 1 but need not be positive.
Matrix partial_transpose(const DensityMatrix& rho, int subsystem);

// Reduced state over the kept factor of a bipartite state.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

// -sum lambda_i log2 lambda_i in bits, eigenvalues below 1e-12 treated as 0.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace qutritlab
