#include "qutritlab/cloner.hpp"

#include <cmath>

namespace qutritlab {

double optimal_mu() { return 1.0 / (2.0 * std::sqrt(2.0)); }

double nonoptimal_range_low() { return (6.0 + std::sqrt(2.0)) / 17.0; }

MachineParams::MachineParams(double mu) : mu_(mu) {
    if (!(mu > 0.0) || mu > 0.5)
        throw DomainError("machine parameter mu must lie in (0, 1/2]");
    lambda_ = std::sqrt(1.0 - 4.0 * mu * mu);
}

bool MachineParams::is_optimal() const { return std::abs(mu_ * mu_ - 0.125) < 1e-9; }

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0 || !amplitudes_.allFinite())
        throw InvalidStateError("pure state amplitudes must be finite and nonempty");
    if (std::abs(amplitudes_.norm() - 1.0) >= 1e-12)
        throw InvalidStateError("pure state must be normalized within 1e-12");
}

PureState PureState::basis(Eigen::Index dim, Eigen::Index k) {
    Vector v = Vector::Zero(dim);
    v(k) = 1.0;
    return PureState(std::move(v));
}

PureState PureState::balanced_qutrit() {
    Vector v = Vector::Constant(3, Complex(1.0 / std::sqrt(3.0), 0.0));
    return PureState(std::move(v));
}

// |i>_a |0>_b |X>_x  ->  lambda |i,i,X_i> + mu sum_{j != i} (|i,j> + |j,i>) |X_j>,
// extended linearly over the input amplitudes. Flattening is 9a + 3b + x.
PureState clone(const PureState& input, const MachineParams& params) {
    if (input.dim() != 3)
        throw BadDimensionError("cloner input must be a qutrit");
    const double lambda = params.lambda();
    const double mu = params.mu();
    Vector out = Vector::Zero(27);
    for (Eigen::Index i = 0; i < 3; ++i) {
        const Complex c = input.amplitudes()(i);
        if (c == Complex(0.0)) continue;
        out(9 * i + 3 * i + i) += c * lambda;
        for (Eigen::Index j = 0; j < 3; ++j) {
            if (j == i) continue;
            out(9 * i + 3 * j + j) += c * mu;
            out(9 * j + 3 * i + j) += c * mu;
        }
    }
    return PureState(std::move(out));
}

DensityMatrix output_state(const MachineParams& params) {
    const PureState psi = clone(PureState::balanced_qutrit(), params);
    // Columns of T index the machine register; rho_ab = T T^dag.
    Matrix t(9, 3);
    for (Eigen::Index ab = 0; ab < 9; ++ab)
        for (Eigen::Index x = 0; x < 3; ++x)
            t(ab, x) = psi.amplitudes()(3 * ab + x);
    return DensityMatrix(t * t.adjoint(), {3, 3});
}

Matrix output_state_literal(const MachineParams& params, IndexShiftModulus modulus) {
    const double mu = params.mu();
    const double lambda = params.lambda();
    const Eigen::Index mod = modulus == IndexShiftModulus::two ? 2 : 3;
    const auto ket = [](Eigen::Index i, Eigen::Index j) { return 3 * i + j; };
    Matrix r = Matrix::Zero(9, 9);
    for (Eigen::Index i = 0; i < 3; ++i)
        r(ket(i, i), ket(i, i)) += (1.0 - 4.0 * mu * mu) / 3.0;
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) {
            if (i == j) continue;
            r(ket(i, j), ket(i, j)) += 2.0 * mu * mu / 3.0;
            r(ket(i, j), ket(j, i)) += 2.0 * mu * mu / 3.0;
            r(ket(i, i), ket(i, j)) += lambda * mu / 3.0;
            r(ket(i, i), ket(j, i)) += lambda * mu / 3.0;
            r(ket(i, j), ket(i, i)) += lambda * mu / 3.0;
            r(ket(i, j), ket(j, j)) += lambda * mu / 3.0;
            const Eigen::Index ip = (i + 1) % mod, jp = (j + 1) % mod;
            r(ket(i, j), ket(i, jp)) += mu * mu / 3.0;
            r(ket(i, j), ket(jp, i)) += mu * mu / 3.0;
            r(ket(i, j), ket(ip, jp)) += mu * mu / 3.0;
            r(ket(i, j), ket(jp, ip)) += mu * mu / 3.0;
        }
    return r;
}

LiteralComparison compare_literal_output(const MachineParams& params) {
    const Matrix derived = output_state(params).matrix();
    const Matrix lit2 = output_state_literal(params, IndexShiftModulus::two);
    const Matrix lit3 = output_state_literal(params, IndexShiftModulus::three);
    return LiteralComparison{
        params.mu(),
        (derived - lit2).cwiseAbs().maxCoeff(),
        (derived - lit3).cwiseAbs().maxCoeff(),
        (lit2 - lit2.adjoint()).cwiseAbs().maxCoeff(),
        (lit3 - lit3.adjoint()).cwiseAbs().maxCoeff(),
        lit2.trace().real(),
        lit3.trace().real(),
    };
}

DensityMatrix reduced_b_literal(const MachineParams& params) {
    const double mu = params.mu();
    const double off = mu * (2.0 * params.lambda() + mu) / 3.0;
    Matrix r = Matrix::Constant(3, 3, Complex(off, 0.0));
    r.diagonal().setConstant(Complex(1.0 / 3.0, 0.0));
    return DensityMatrix(std::move(r), {3});
}

std::array<double, 3> output_state_spectrum(const MachineParams& params) {
    const double mu2 = params.mu() * params.mu();
    return {(1.0 + 4.0 * mu2) / 3.0, (1.0 - 2.0 * mu2) / 3.0, (1.0 - 2.0 * mu2) / 3.0};
}

std::array<double, 3> reduced_state_spectrum(const MachineParams& params) {
    const double c = params.mu() * (2.0 * params.lambda() + params.mu()) / 3.0;
    return {1.0 / 3.0 + 2.0 * c, 1.0 / 3.0 - c, 1.0 / 3.0 - c};
}

}  // namespace qutritlab
