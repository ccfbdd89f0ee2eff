#include "qutritlab/paper_check.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "qutritlab/cloner.hpp"
#include "qutritlab/entanglement.hpp"
#include "qutritlab/filter.hpp"
#include "qutritlab/protocols.hpp"
#include "qutritlab/sweep.hpp"

namespace qutritlab {

const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::pass: return "PASS";
        case RowStatus::fail: return "FAIL";
        case RowStatus::advisory: return "ADVISORY";
    }
    return "?";
}

namespace {

ReproductionRow check(std::string name, double expected, double computed, double tolerance,
                      std::string source) {
    const bool pass = std::abs(expected - computed) <= tolerance;
    return ReproductionRow{std::move(name), expected,  computed,
                           tolerance,       std::move(source),
                           pass ? RowStatus::pass : RowStatus::fail};
}

ReproductionRow advisory(std::string name, double expected, double computed,
                         std::string source) {
    return ReproductionRow{std::move(name), expected, computed, 0.0, std::move(source),
                           RowStatus::advisory};
}

double nearest_pt_eigenvalue(const DensityMatrix& rho, double target) {
    const EigenSystem sys = hermitian_eigensystem(partial_transpose(rho, 0));
    double best = sys.eigenvalues(0);
    for (Eigen::Index i = 0; i < sys.eigenvalues.size(); ++i)
        if (std::abs(sys.eigenvalues(i) - target) < std::abs(best - target))
            best = sys.eigenvalues(i);
    return best;
}

}  // namespace

std::vector<ReproductionRow> paper_check_rows() {
    std::vector<ReproductionRow> rows;

    const MachineParams opt = MachineParams::optimal();
    const DensityMatrix rho_opt = output_state(opt);
    rows.push_back(check("FEF of the optimal output", 1.0 / 6.0, fef_basis(rho_opt), 1e-10,
                         "sec. 3"));
    rows.push_back(check("entropy gap of the optimal output [bits]", -0.43872,
                         entropy_gap(rho_opt), 1e-5, "sec. 3.1"));

    const FilteredState filtered_opt = distill_pipeline(optimal_mu(), DistillMode::optimal);
    const double fef_filtered = fef_basis(filtered_opt.state);
    rows.push_back(check("FEF of the filtered optimal state", 0.38789, fef_filtered, 1e-4,
                         "sec. 3.2"));
    rows.push_back(check("teleportation fidelity of the filtered optimal state", 0.5409,
                         teleportation_fidelity(fef_filtered), 1e-4, "eq. (15)"));
    rows.push_back(check("entropy gap of the filtered optimal state [bits]", -0.3327,
                         entropy_gap(filtered_opt.state), 1e-3, "sec. 3.2"));

    // The printed raw-state FEF formula 4 mu^2/3 is the nine-state maximum
    // only for mu^2 >= 1/8; checked where it genuinely holds, with the
    // sub-optimal mismatch reported as an advisory below.
    for (const double mu : {0.37, 0.45, 0.5})
        rows.push_back(check("FEF of the raw output = 4 mu^2/3 at mu = " + format_number(mu),
                             4.0 * mu * mu / 3.0, fef_basis(output_state(MachineParams(mu))),
                             1e-10, "sec. 4"));

    for (const double mu : {0.1, 0.25, 0.4}) {
        const DensityMatrix rho = output_state(MachineParams(mu));
        rows.push_back(check("E1 in the PT spectrum at mu = " + format_number(mu),
                             closed_form_E1(mu), nearest_pt_eigenvalue(rho, closed_form_E1(mu)),
                             1e-9, "eq. (5)"));
        rows.push_back(check("E2 in the PT spectrum at mu = " + format_number(mu),
                             closed_form_E2(mu), nearest_pt_eigenvalue(rho, closed_form_E2(mu)),
                             1e-9, "eq. (6)"));
    }

    // Advisory findings: known misprints in the published closed forms, each
    // adjudicated against the constructive (cloning-route / eigenvector)
    // computation. These never fail the run.
    const LiteralComparison lit = compare_literal_output(MachineParams(0.3));
    rows.push_back(advisory(
        "eq. (4) '(mod2)' index rule: neither the mod-2 nor the mod-3 reading reproduces "
        "the constructive state (shown: max entry deviation of the mod-3 reading at "
        "mu = 0.3, expected 0 for a faithful transcription); mod 3 preserves the trace (" +
            format_number(lit.trace_mod3) + ") while mod 2 does not (" +
            format_number(lit.trace_mod2) +
            "), and both readings are non-Hermitian (defect " +
            format_number(lit.hermiticity_defect_mod3) +
            "); verdict: the cloning-transformation route is authoritative",
        0.0, lit.max_abs_diff_mod3, "eq. (4)"));

    const double e_closed_045 = closed_form_reduction_min_eigenvalue(0.45);
    const double e_numeric_045 =
        reduction_report(output_state(MachineParams(0.45))).min_eigenvalue;
    rows.push_back(advisory(
        "sec. 4.1 eigenvalue E carries a stray 'd': reading d -> mu, "
        "E = (1-3mu^2)/6 + sqrt(1-4mu^2) mu/3 - t1/6 reproduces the minimal reduction "
        "eigenvalue exactly (shown at mu = 0.45); verdict: d is a misprint for mu",
        e_closed_045, e_numeric_045, "sec. 4.1"));

    const ReductionReport rep045 = reduction_report(output_state(MachineParams(0.45)));
    const Filter ev_filter = filter_from_eigenvector(rep045.min_eigenvector);
    const double k_from_eigenvector =
        (-ev_filter.matrix(0, 1) / ev_filter.matrix(0, 0)).real();
    rows.push_back(advisory(
        "eq. (16) k vs eq. (19) t1 radicand: the printed k (trailing '-1' inside the "
        "radical) is complex-valued for mu < 0.448931 and does not match the eigenvector "
        "filter where real (printed k(0.45) = " +
            format_number(literal_nonopt_ratio(0.45)) +
            "); moving the '-1' outside the radical, k = (11mu^2 - 2t2 + t1 - 1)/(4mu^2), "
            "matches the eigenvector filter across the whole range (shown at mu = 0.45); "
            "verdict: the '-1' belongs outside the radical and eq. (19)'s t1 is consistent "
            "with that reading",
        eigenvector_filter_ratio(0.45), k_from_eigenvector, "eq. (16) / eq. (19)"));

    const double fef_tau_045 = fef_basis(distill_pipeline(0.45).state);
    rows.push_back(advisory(
        "eq. (19) filtered-FEF closed form: evaluates negative on its whole domain "
        "(impossible for a fidelity) under the printed k, e.g. " +
            format_number(fef_filtered_closed_form(0.45)) +
            " at mu = 0.45 vs the numeric filtered FEF shown; verdict: the printed "
            "expression is garbled beyond the k misprint; the numeric pipeline value is "
            "authoritative",
        fef_tau_045, fef_filtered_closed_form(0.45), "eq. (19)"));

    rows.push_back(advisory(
        "sec. 4 raw-state FEF formula: the nine-state maximum is "
        "max((1-4mu^2)/3, 4mu^2/3); the printed 4mu^2/3 holds only for mu^2 >= 1/8 "
        "(shown at mu = 0.2: printed value vs nine-state maximum (1-4mu^2)/3 = 0.28); "
        "the conclusion F <= 1/3 survives either way",
        4.0 * 0.2 * 0.2 / 3.0, fef_basis(output_state(MachineParams(0.2))), "sec. 4"));

    rows.push_back(advisory(
        "fig. 1 fourth-quadrant claim: the raw entropy gap S(rho_b) - S(rho_ab) turns "
        "positive for mu > 0.4850713 (shown at mu = 0.5, expected < 0 per the claim); "
        "the raw state is dense-coding useful near mu = 1/2",
        0.0, entropy_gap(output_state(MachineParams(0.5))), "fig. 1 / sec. 4"));

    rows.push_back(advisory(
        "figs. 2-3 dense-coding range of the filtered state: S(tau_b) - S(tau_ab) > 0 "
        "only for mu > 0.4850713, not on the whole range ((6+sqrt(2))/17, 1/2] "
        "(shown at mu = 0.45, expected > 0 per the claim)",
        0.0, entropy_gap(distill_pipeline(0.45).state), "sec. 4.1 / fig. 3"));

    const double orbit_045 = fef_optimized(output_state(MachineParams(0.45))).value;
    rows.push_back(advisory(
        "nine-state vs full-orbit FEF: the orbit maximum agrees with the nine-state "
        "value on the optimal and filtered states but exceeds it on raw non-optimal "
        "states (shown at mu = 0.45: nine-state vs orbit, which crosses 1/3); the "
        "published figures are consistent with the nine-state evaluator",
        fef_basis(output_state(MachineParams(0.45))), orbit_045, "eq. (7)"));

    return rows;
}

bool all_non_advisory_pass(const std::vector<ReproductionRow>& rows) {
    for (const auto& r : rows)
        if (r.status == RowStatus::fail) return false;
    return true;
}

std::string paper_check_table(const std::vector<ReproductionRow>& rows) {
    std::string out;
    const auto pad = [](std::string s, size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    out += pad("status", 10) + pad("expected", 18) + pad("computed", 18) +
           pad("tolerance", 12) + pad("source", 22) + "name\n";
    for (const auto& r : rows) {
        out += pad(to_string(r.status), 10) + pad(format_number(r.expected), 18) +
               pad(format_number(r.computed), 18) +
               pad(r.status == RowStatus::advisory ? "-" : format_number(r.tolerance), 12) +
               pad(r.source, 22) + r.name + "\n";
    }
    size_t passed = 0, failed = 0, advisories = 0;
    for (const auto& r : rows) {
        if (r.status == RowStatus::pass) ++passed;
        else if (r.status == RowStatus::fail) ++failed;
        else ++advisories;
    }
    out += "\n" + std::to_string(passed) + " passed, " + std::to_string(failed) +
           " failed, " + std::to_string(advisories) + " advisory\n";
    return out;
}

std::string paper_check_json(const std::vector<ReproductionRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        obj["name"] = r.name;
        obj["expected"] = r.expected;
        obj["computed"] = r.computed;
        obj["tolerance"] = r.tolerance;
        obj["source"] = r.source;
        obj["status"] = to_string(r.status);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace qutritlab
