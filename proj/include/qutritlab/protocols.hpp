// Protocol figures of merit: teleportation fidelity from the fully
// entangled fraction, dense-coding capacity from the entropy gap, and the
// combined usefulness verdict.
#pragma once

#include "qutritlab/matcore.hpp"

namespace qutritlab {

// A two-qutrit state is useful for teleportation when its FEF exceeds 1/3
// (strict), and for dense coding when S(rho_b) - S(rho_ab) > 0 (strict).
inline constexpr double kFefTeleportThreshold = 1.0 / 3.0;
double log2_three();

// f = (3 F + 1) / 4. DomainError when fef is outside [0, 1] beyond 1e-9.
double teleportation_fidelity(double fef);

// S(rho_b) - S(rho_ab) in bits, rho_b the reduced state of subsystem b.
double entropy_gap(const DensityMatrix& rho);

// chi = log2(3) + S(rho_b) - S(rho_ab) in bits.
double dense_coding_capacity(const DensityMatrix& rho);

struct ProtocolVerdict {
    double fef;                      // nine-state evaluator
    double teleportation_fidelity;   // (3 fef + 1) / 4
    bool useful_for_teleportation;   // fef > 1/3
    double entropy_gap;              // bits
    double capacity;                 // log2(3) + entropy_gap, bits
    bool useful_for_dense_coding;    // entropy_gap > 0
};

ProtocolVerdict verdict(const DensityMatrix& rho);

}  // namespace qutritlab
