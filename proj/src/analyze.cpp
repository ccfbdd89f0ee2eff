#include "qutritlab/analyze.hpp"

#include "qutritlab/cloner.hpp"
#include "qutritlab/entanglement.hpp"
#include "qutritlab/filter.hpp"
#include "qutritlab/protocols.hpp"
#include "qutritlab/sweep.hpp"

namespace qutritlab {

namespace {

void append_verdict(std::string& out, const ProtocolVerdict& v) {
    out += "  FEF (nine-state)     = " + format_number(v.fef) + "\n";
    out += "  teleportation fid.   = " + format_number(v.teleportation_fidelity) +
           (v.useful_for_teleportation ? "  -> useful for teleportation (FEF > 1/3)\n"
                                       : "  -> not useful for teleportation (needs FEF > 1/3)\n");
    out += "  entropy gap          = " + format_number(v.entropy_gap) + " bits\n";
    out += "  dense-coding cap.    = " + format_number(v.capacity) +
           (v.useful_for_dense_coding ? " bits -> useful for dense coding (above log2(3))\n"
                                      : " bits -> not useful for dense coding (needs > log2(3))\n");
}

}  // namespace

std::string analyze_report(double mu, bool filtered) {
    const MachineParams params(mu);
    const DensityMatrix rho = output_state(params);
    const ReductionReport reduction = reduction_report(rho);
    const double min_pt = npt_min_eigenvalue(rho);

    std::string out;
    out += "machine parameters\n";
    out += "  mu      = " + format_number(params.mu()) + "\n";
    out += "  lambda  = " + format_number(params.lambda()) + "\n";
    out += std::string("  regime  = ") +
           (params.is_optimal() ? "optimal (mu^2 = 1/8)" : "non-optimal") + "\n";
    out += "\nraw two-qutrit output\n";
    out += "  min PT eigenvalue    = " + format_number(min_pt) +
           (min_pt < -1e-10 ? "  (NPT: entangled)\n" : "  (PPT)\n");
    out += "  closed forms         E1 = " + format_number(closed_form_E1(mu)) +
           ", E2 = " + format_number(closed_form_E2(mu)) + "\n";
    append_verdict(out, verdict(rho));
    out += "  reduction criterion  = ";
    out += reduction.violated
               ? "violated (min eigenvalue " + format_number(reduction.min_eigenvalue) +
                     ") -> distillable\n"
               : "satisfied\n";

    if (filtered) {
        out += "\nfiltered state (eigenvector filter on subsystem a)\n";
        const bool available =
            params.is_optimal() || (mu > nonoptimal_range_low() && mu <= 0.5);
        if (!available) {
            out += "  non-optimal filter unavailable at this mu: the filtering range is "
                   "((6+sqrt(2))/17, 1/2] ~ (" +
                   format_number(nonoptimal_range_low()) +
                   ", 0.5], plus the optimal point mu^2 = 1/8\n";
        } else {
            const FilteredState fs = distill_pipeline(mu);
            out += "  success probability  = " + format_number(fs.success_probability) + "\n";
            append_verdict(out, verdict(fs.state));
        }
    }
    return out;
}

}  // namespace qutritlab
