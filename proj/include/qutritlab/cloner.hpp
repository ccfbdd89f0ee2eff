// Buzek-Hillery universal cloning of qutrits: the tripartite output of the
// cloning transformation, the two-qutrit mixed state it induces for the
// balanced input, and literal transcriptions of the published matrices kept
// as cross-checks against the constructive route.
#pragma once

#include <array>

#include "qutritlab/matcore.hpp"

namespace qutritlab {

// Machine parameter landmarks. The cloner is defined for mu in (0, 1/2];
// mu^2 = 1/8 is the universal-optimal point, and (6+sqrt(2))/17 is the lower
// edge of the non-optimal filtering range.
double optimal_mu();
double nonoptimal_range_low();

// Cloner parameter mu in (0, 1/2] with lambda = sqrt(1 - 4 mu^2), so that
// lambda^2 + 4 mu^2 = 1.
class MachineParams {
  public:
    explicit MachineParams(double mu);
    static MachineParams optimal() { return MachineParams(optimal_mu()); }

    double mu() const { return mu_; }
    double lambda() const { return lambda_; }
    bool is_optimal() const;

  private:
    double mu_;
    double lambda_;
};

// Normalized pure state (norm checked to 1e-12).
class PureState {
  public:
    explicit PureState(Vector amplitudes);
    static PureState basis(Eigen::Index dim, Eigen::Index k);
    // (|0> + |1> + |2>)/sqrt(3), the canonical cloner input.
    static PureState balanced_qutrit();

    Eigen::Index dim() const { return amplitudes_.size(); }
    const Vector& amplitudes() const { return amplitudes_; }

  private:
    Vector amplitudes_;
};

// Linear extension of the cloning transformation over a qutrit input.
// Output lives on copy_a (x) copy_b (x) machine with flattening 9a + 3b + x;
// the machine states are the computational basis of a fresh 3-level register.
PureState clone(const PureState& input, const MachineParams& params);

// Two-qutrit output rho_ab: clone the balanced input and trace out the
// machine register. Valid DensityMatrix with dims {3, 3}.
DensityMatrix output_state(const MachineParams& params);

// Modular reading of the printed index-shift annotation in the published
// two-qutrit output matrix. The annotation says mod 2; qutrit indices
// suggest mod 3 (which is the only trace-preserving reading).
enum class IndexShiftModulus { two, three };

// The published two-qutrit output matrix transcribed literally. Returned as
// a raw matrix because the transcription is not Hermitian under either
// modular reading; compare_literal_output() quantifies the defects.
Matrix output_state_literal(const MachineParams& params,
                            IndexShiftModulus modulus = IndexShiftModulus::three);

struct LiteralComparison {
    double mu;
    double max_abs_diff_mod2;       // vs the constructive output_state
    double max_abs_diff_mod3;
    double hermiticity_defect_mod2;
    double hermiticity_defect_mod3;
    double trace_mod2;
    double trace_mod3;
};

LiteralComparison compare_literal_output(const MachineParams& params);

// The published closed form of the reduced single-copy state: 1/3 on the
// diagonal, mu(2 lambda + mu)/3 off the diagonal.
DensityMatrix reduced_b_literal(const MachineParams& params);

// Spectra of rho_ab and rho_b in closed form, used as independent oracles:
// rho_ab has eigenvalues {(1+4mu^2)/3, (1-2mu^2)/3 x2} (plus six zeros) and
// rho_b has {1/3 + 2c, 1/3 - c x2} with c = mu(2 lambda + mu)/3.
std::array<double, 3> output_state_spectrum(const MachineParams& params);
std::array<double, 3> reduced_state_spectrum(const MachineParams& params);

}  // namespace qutritlab
