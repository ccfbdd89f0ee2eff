#include "qutritlab/filter.hpp"

#include <cmath>

namespace qutritlab {

FilteredState apply_filter(const DensityMatrix& rho, const Filter& a, double source_mu) {
    if (rho.dims() != std::vector<Eigen::Index>{3, 3})
        throw BadDimensionError("filtering needs a two-qutrit state");
    if (a.matrix.rows() != 3 || a.matrix.cols() != 3)
        throw BadDimensionError("filter must be 3x3");
    const Matrix identity = Matrix::Identity(3, 3);
    const double denom =
        (rho.matrix() * tensor(a.matrix * a.matrix.adjoint(), identity)).trace().real();
    if (denom <= 1e-14)
        throw ZeroSuccessProbabilityError("filter annihilates the state");
    Matrix filtered = tensor(a.matrix.adjoint(), identity) * rho.matrix() *
                      tensor(a.matrix, identity) / denom;
    return FilteredState{DensityMatrix(std::move(filtered), {3, 3}), source_mu, a, denom};
}

Filter filter_from_eigenvector(const PureState& v) {
    if (v.dim() != 9)
        throw BadDimensionError("filter eigenvector must live on two qutrits");
    Matrix m(3, 3);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) m(i, j) = v.amplitudes()(3 * i + j);
    Eigen::JacobiSVD<Matrix> svd(m);
    const bool deficient = svd.singularValues().minCoeff() < 1e-10;
    return Filter{std::move(m), FilterProvenance::from_eigenvector, deficient};
}

Filter literal_opt() {
    const double s3 = std::sqrt(3.0);
    const double s29 = std::sqrt(29.0);
    Matrix m(3, 3);
    m << s3 * (1.5 - s29 / 2.0), s3 * (-3.5 + s29 / 2.0), -s3,
         s3 * (3.5 - s29 / 2.0), s3 * (-1.5 + s29 / 2.0),  s3,
         s3 * (2.5 - s29 / 2.0), s3 * (-2.5 + s29 / 2.0),  0.0;
    return Filter{std::move(m), FilterProvenance::literal_opt, false};
}

namespace {

void require_nonopt_range(double mu, const char* what) {
    if (!(mu > nonoptimal_range_low()) || mu > 0.5)
        throw DomainError(std::string(what) +
                          ": mu outside the non-optimal filter range ((6+sqrt(2))/17, 1/2]");
}

}  // namespace

double literal_nonopt_ratio(double mu) {
    require_nonopt_range(mu, "printed filter ratio");
    const double mu2 = mu * mu;
    const double lam = std::sqrt(1.0 - 4.0 * mu2);
    const double rad = 1.0 - 18.0 * mu2 + 4.0 * lam * mu + 113.0 * mu2 * mu2 -
                       44.0 * mu2 * mu * lam - 1.0;
    if (rad < -1e-12)
        throw DomainError("printed filter ratio: radicand is negative");
    return (11.0 * mu2 - 2.0 * lam * mu + std::sqrt(std::max(rad, 0.0))) / (4.0 * mu2);
}

double eigenvector_filter_ratio(double mu) {
    require_nonopt_range(mu, "eigenvector filter ratio");
    const double mu2 = mu * mu;
    const double t2 = std::sqrt(1.0 - 4.0 * mu2) * mu;
    const double t1 =
        std::sqrt(1.0 - 18.0 * mu2 + 4.0 * t2 + 113.0 * mu2 * mu2 - 44.0 * mu2 * t2);
    return (11.0 * mu2 - 2.0 * t2 + t1 - 1.0) / (4.0 * mu2);
}

Filter literal_nonopt(double mu) {
    const double k = literal_nonopt_ratio(mu);
    Matrix m = Matrix::Constant(3, 3, Complex(-k, 0.0));
    m.diagonal().setConstant(Complex(1.0, 0.0));
    m *= std::sqrt(3.0);
    return Filter{std::move(m), FilterProvenance::literal_nonopt, false};
}

FilteredState distill_state(const DensityMatrix& rho, double source_mu) {
    const ReductionReport report = reduction_report(rho);
    if (!report.violated)
        throw NotDistillableError("state does not violate the reduction criterion");
    return apply_filter(rho, filter_from_eigenvector(report.min_eigenvector), source_mu);
}

FilteredState distill_pipeline(double mu, DistillMode mode) {
    const MachineParams params(mu);
    switch (mode) {
        case DistillMode::optimal:
            if (!params.is_optimal())
                throw DomainError("optimal distillation requires mu^2 = 1/8");
            break;
        case DistillMode::nonoptimal:
            require_nonopt_range(mu, "non-optimal distillation");
            break;
        case DistillMode::automatic:
            if (!params.is_optimal() && !(mu > nonoptimal_range_low() && mu <= 0.5))
                throw DomainError(
                    "no filter defined at this mu: outside the non-optimal range "
                    "((6+sqrt(2))/17, 1/2] and not at the optimal point mu^2 = 1/8");
            break;
    }
    return distill_state(output_state(params), mu);
}

}  // namespace qutritlab
