#include "qutritlab/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace qutritlab {

namespace {

Complex cube_root_of_unity(int power) {
    const double angle = 2.0 * std::numbers::pi * power / 3.0;
    return Complex(std::cos(angle), std::sin(angle));
}

double checked_sqrt(double radicand, const char* what) {
    if (radicand < -1e-12)
        throw DomainError(std::string(what) + ": radicand is negative");
    return std::sqrt(std::max(radicand, 0.0));
}

void require_mu_range(double mu, double low, const char* what) {
    if (!(mu > low) || mu > 0.5)
        throw DomainError(std::string(what) + ": mu outside the valid range");
}

double t2_term(double mu) { return std::sqrt(1.0 - 4.0 * mu * mu) * mu; }

double t1_term(double mu) {
    const double mu2 = mu * mu;
    const double t2 = t2_term(mu);
    return checked_sqrt(1.0 - 18.0 * mu2 + 4.0 * t2 + 113.0 * mu2 * mu2 - 44.0 * mu2 * t2, "t1");
}

}  // namespace

MaxEntBasisState max_entangled_basis_state(int x, int y) {
    if (x < 0 || x > 2 || y < 0 || y > 2)
        throw BadDimensionError("basis labels x, y must lie in {0, 1, 2}");
    Vector v = Vector::Zero(9);
    for (int j = 0; j < 3; ++j)
        v(3 * j + (j + x) % 3) = cube_root_of_unity(j * y) / std::sqrt(3.0);
    return MaxEntBasisState{x, y, PureState(std::move(v))};
}

std::array<MaxEntBasisState, 9> max_entangled_basis() {
    return {max_entangled_basis_state(0, 0), max_entangled_basis_state(0, 1),
            max_entangled_basis_state(0, 2), max_entangled_basis_state(1, 0),
            max_entangled_basis_state(1, 1), max_entangled_basis_state(1, 2),
            max_entangled_basis_state(2, 0), max_entangled_basis_state(2, 1),
            max_entangled_basis_state(2, 2)};
}

double npt_min_eigenvalue(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(partial_transpose(rho, 0),
                                                 Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double closed_form_E1(double mu) {
    require_mu_range(mu, 0.0, "E1");
    const double mu2 = mu * mu;
    const double lam = std::sqrt(1.0 - 4.0 * mu2);
    const double rad = 1.0 + 24.0 * mu2 - 104.0 * mu2 * mu2 + 32.0 * lam * mu2 * mu;
    return (1.0 + 4.0 * mu2) / 6.0 - checked_sqrt(rad, "E1") / 6.0;
}

double closed_form_E2(double mu) {
    require_mu_range(mu, 0.0, "E2");
    const double mu2 = mu * mu;
    const double lam = std::sqrt(1.0 - 4.0 * mu2);
    const double rad = 1.0 - 6.0 * mu2 + 25.0 * mu2 * mu2 - 16.0 * lam * mu2 * mu;
    return (1.0 - 5.0 * mu2) / 6.0 - checked_sqrt(rad, "E2") / 6.0;
}

double fef_basis(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<Eigen::Index>{3, 3})
        throw BadDimensionError("fully entangled fraction needs a two-qutrit state");
    double best = 0.0;
    for (const auto& b : max_entangled_basis()) {
        const Complex overlap =
            (b.vector.amplitudes().adjoint() * rho.matrix() * b.vector.amplitudes())(0);
        best = std::max(best, overlap.real());
    }
    return best;
}

namespace {

// Random chart over U(3): a product of three complex Givens rotations and
// two residual phases, eight real parameters (U(3) modulo the global phase).
Matrix chart_unitary(const std::array<double, 8>& p) {
    const auto givens = [](int i, int j, double theta, double phase) {
        Matrix g = Matrix::Identity(3, 3);
        const double c = std::cos(theta), s = std::sin(theta);
        const Complex e(std::cos(phase), std::sin(phase));
        g(i, i) = c;
        g(j, j) = c;
        g(i, j) = -e * s;
        g(j, i) = std::conj(e) * s;
        return g;
    };
    Matrix d = Matrix::Identity(3, 3);
    d(1, 1) = Complex(std::cos(p[6]), std::sin(p[6]));
    d(2, 2) = Complex(std::cos(p[7]), std::sin(p[7]));
    return d * givens(0, 1, p[0], p[1]) * givens(0, 2, p[2], p[3]) * givens(1, 2, p[4], p[5]);
}

// <vec(U)| rho |vec(U)> / 3, the overlap of rho with (U x I)|phi_00>.
double orbit_overlap(const Matrix& rho, const Matrix& u) {
    Vector v(9);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) v(3 * i + j) = u(i, j);
    return (v.adjoint() * rho * v)(0).real() / 3.0;
}

// One-parameter subgroups spanning su(3) modulo the global phase: real and
// imaginary Givens generators on each index pair, plus two diagonal phases.
Matrix group_move(int direction, double t) {
    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    Matrix g = Matrix::Identity(3, 3);
    if (direction < 3) {
        const int i = pairs[direction][0], j = pairs[direction][1];
        g(i, i) = g(j, j) = std::cos(t);
        g(i, j) = -std::sin(t);
        g(j, i) = std::sin(t);
    } else if (direction < 6) {
        const int i = pairs[direction - 3][0], j = pairs[direction - 3][1];
        g(i, i) = g(j, j) = std::cos(t);
        g(i, j) = g(j, i) = Complex(0.0, std::sin(t));
    } else {
        g(direction - 5, direction - 5) = Complex(std::cos(t), std::sin(t));
    }
    return g;
}

// Corner unitaries reaching the nine basis states: (U_xy x I)|phi_00> = |phi_xy>.
Matrix corner_unitary(int x, int y) {
    Matrix u = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) u(i, (i + x) % 3) = cube_root_of_unity(i * y);
    return u;
}

}  // namespace

FefOptimizeResult fef_optimized(const DensityMatrix& rho, unsigned seed) {
    if (rho.dims() != std::vector<Eigen::Index>{3, 3})
        throw BadDimensionError("fully entangled fraction needs a two-qutrit state");
    constexpr int kRandomRestarts = 32;
    constexpr int kMaxIterations = 10000;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    std::vector<Matrix> starts;
    starts.reserve(9 + kRandomRestarts);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) starts.push_back(corner_unitary(x, y));
    for (int r = 0; r < kRandomRestarts; ++r) {
        std::array<double, 8> p{};
        for (double& v : p) v = angle(rng);
        starts.push_back(chart_unitary(p));
    }

    std::vector<double> results;
    results.reserve(starts.size());
    for (Matrix u : starts) {
        double value = orbit_overlap(rho.matrix(), u);
        double step = 0.5;
        int iterations = 0;
        while (step > 1e-12 && iterations < kMaxIterations) {
            bool improved = false;
            for (int dir = 0; dir < 8 && iterations < kMaxIterations; ++dir, ++iterations) {
                for (const double t : {step, -step}) {
                    const Matrix candidate = group_move(dir, t) * u;
                    const double overlap = orbit_overlap(rho.matrix(), candidate);
                    if (overlap > value + 1e-15) {
                        value = overlap;
                        u = candidate;
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        results.push_back(value);
    }
    const double best = *std::max_element(results.begin(), results.end());
    const int agreeing =
        static_cast<int>(std::count_if(results.begin(), results.end(),
                                       [best](double v) { return best - v < 1e-6; }));
    return FefOptimizeResult{best, agreeing, agreeing < 2};
}

double fef_filtered_closed_form(double mu) {
    require_mu_range(mu, nonoptimal_range_low(), "filtered-FEF closed form");
    const double mu2 = mu * mu;
    const double t2 = t2_term(mu);
    const double t1 = t1_term(mu);
    // k exactly as printed for the non-optimal filter: the trailing "-1"
    // sits inside the radical.
    const double k =
        (11.0 * mu2 - 2.0 * t2 + checked_sqrt(t1 * t1 - 1.0, "printed k")) / (4.0 * mu2);
    const double num =
        4.0 * (mu2 * (2.0 * (1.0 - t1) + mu2 * (22.0 * t1 - 31.0) +
                      t2 * (10.0 - 110.0 * mu2 - 6.0 * t1) + 198.0 * mu2 * mu2));
    const double den =
        3.0 * ((1.0 - k) + t2 * (6.0 - 68.0 * mu2 + 94.0 * mu2 * mu2 - 4.0 * t1 + 12.0 * t1 * mu2) +
               mu2 * (6.0 * t1 - 9.0 - 5.0 * mu2 + 23.0 * t1 * mu2));
    return num / den;
}

double closed_form_reduction_min_eigenvalue(double mu) {
    require_mu_range(mu, 0.0, "reduction eigenvalue closed form");
    return (1.0 - 3.0 * mu * mu) / 6.0 + t2_term(mu) / 3.0 - t1_term(mu) / 6.0;
}

ReductionReport reduction_report(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<Eigen::Index>{3, 3})
        throw BadDimensionError("reduction criterion needs a two-qutrit state");
    const DensityMatrix rho_a = partial_trace(rho, 0);
    Matrix op = tensor(rho_a.matrix(), Matrix::Identity(3, 3)) - rho.matrix();
    const EigenSystem sys = hermitian_eigensystem(op);
    Vector v = sys.eigenvectors.col(0);
    // Deterministic gauge: make the largest-magnitude coordinate (first on
    // ties) real positive.
    Eigen::Index pivot = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i)
        if (std::abs(v(i)) > std::abs(v(pivot)) + 1e-14) pivot = i;
    if (std::abs(v(pivot)) > 0.0) v *= std::conj(v(pivot)) / std::abs(v(pivot));
    const double min_eig = sys.eigenvalues(0);
    return ReductionReport{std::move(op), min_eig, PureState(std::move(v)),
                           min_eig < -1e-10};
}

}  // namespace qutritlab
