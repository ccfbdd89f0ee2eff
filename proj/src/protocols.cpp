#include "qutritlab/protocols.hpp"

#include <cmath>

#include "qutritlab/entanglement.hpp"

namespace qutritlab {

double log2_three() { return std::log2(3.0); }

double teleportation_fidelity(double fef) {
    if (fef < -1e-9 || fef > 1.0 + 1e-9)
        throw DomainError("fully entangled fraction must lie in [0, 1]");
    return (3.0 * fef + 1.0) / 4.0;
}

double entropy_gap(const DensityMatrix& rho) {
    return von_neumann_entropy(partial_trace(rho, 1)) - von_neumann_entropy(rho);
}

double dense_coding_capacity(const DensityMatrix& rho) {
    return log2_three() + entropy_gap(rho);
}

ProtocolVerdict verdict(const DensityMatrix& rho) {
    const double fef = fef_basis(rho);
    const double gap = entropy_gap(rho);
    return ProtocolVerdict{
        fef,
        teleportation_fidelity(fef),
        fef > kFefTeleportThreshold,
        gap,
        log2_three() + gap,
        gap > 0.0,
    };
}

}  // namespace qutritlab
