// Human-readable single-mu report: machine parameters, NPT verdict,
// protocol verdict for the raw state and, on request, the filtered state.
#pragma once

#include <string>

namespace qutritlab {

// Requires mu in (0, 1/2]; throws DomainError otherwise.
std::string analyze_report(double mu, bool filtered);

}  // namespace qutritlab
