#include "qutritlab/matcore.hpp"

#include <cmath>
#include <numeric>

namespace qutritlab {

namespace {

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m, std::vector<Eigen::Index> dims)
    : matrix_(std::move(m)), dims_(std::move(dims)) {
    if (matrix_.rows() != matrix_.cols())
        throw NonSquareError("density matrix must be square");
    if (!matrix_.allFinite())
        throw InvalidStateError("density matrix has non-finite entries");
    Eigen::Index prod = 1;
    for (Eigen::Index d : dims_) prod *= d;
    if (dims_.empty() || prod != matrix_.rows())
        throw BadDimensionError("subsystem dimensions do not factor the matrix dimension");
    if (hermiticity_defect(matrix_) >= kHermitianTol)
        throw NotHermitianError("density matrix is not Hermitian within 1e-10");
    if (std::abs(matrix_.trace().real() - 1.0) >= kTraceTol ||
        std::abs(matrix_.trace().imag()) >= kTraceTol)
        throw InvalidStateError("density matrix trace is not 1 within 1e-10");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kPsdTol)
        throw InvalidStateError("density matrix has an eigenvalue below -1e-10");
}

EigenSystem hermitian_eigensystem(const Matrix& h) {
    if (h.rows() != h.cols())
        throw NonSquareError("eigensystem requires a square matrix");
    if (hermiticity_defect(h) >= kHermitianTol)
        throw NotHermitianError("matrix is not Hermitian within 1e-10");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix partial_transpose(const DensityMatrix& rho, int subsystem) {
    const auto& dims = rho.dims();
    if (dims.size() != 2)
        throw BadSubsystemError("partial transpose needs a bipartite state");
    if (subsystem != 0 && subsystem != 1)
        throw BadSubsystemError("subsystem index must be 0 or 1");
    const Eigen::Index da = dims[0], db = dims[1];
    const Matrix& m = rho.matrix();
    Matrix out(m.rows(), m.cols());
    for (Eigen::Index a = 0; a < da; ++a)
        for (Eigen::Index b = 0; b < db; ++b)
            for (Eigen::Index ap = 0; ap < da; ++ap)
                for (Eigen::Index bp = 0; bp < db; ++bp) {
                    const Eigen::Index row = a * db + b, col = ap * db + bp;
                    out(row, col) = subsystem == 0 ? m(ap * db + b, a * db + bp)
                                                   : m(a * db + bp, ap * db + b);
                }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
    const auto& dims = rho.dims();
    if (dims.size() != 2)
        throw BadSubsystemError("partial trace needs a bipartite state");
    if (keep != 0 && keep != 1)
        throw BadSubsystemError("kept subsystem index must be 0 or 1");
    const Eigen::Index da = dims[0], db = dims[1];
    const Matrix& m = rho.matrix();
    if (keep == 0) {
        Matrix out = Matrix::Zero(da, da);
        for (Eigen::Index a = 0; a < da; ++a)
            for (Eigen::Index ap = 0; ap < da; ++ap)
                for (Eigen::Index b = 0; b < db; ++b)
                    out(a, ap) += m(a * db + b, ap * db + b);
        return DensityMatrix(std::move(out), {da});
    }
    Matrix out = Matrix::Zero(db, db);
    for (Eigen::Index b = 0; b < db; ++b)
        for (Eigen::Index bp = 0; bp < db; ++bp)
            for (Eigen::Index a = 0; a < da; ++a)
                out(b, bp) += m(a * db + b, a * db + bp);
    return DensityMatrix(std::move(out), {db});
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (lambda > 1e-12) s -= lambda * std::log2(lambda);
    }
    return s;
}

}  // namespace qutritlab
