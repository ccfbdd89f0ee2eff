// Local filtering: filters built from reduction-criterion eigenvectors,
// the two published filter matrices, and the end-to-end distillation
// pipeline rho_ab(mu) -> reduction eigenvector -> filter -> filtered state.
#pragma once

#include <limits>

#include "qutritlab/entanglement.hpp"
#include "qutritlab/matcore.hpp"

namespace qutritlab {

enum class FilterProvenance { from_eigenvector, literal_opt, literal_nonopt };

// 3x3 operator applied to subsystem a. rank_deficient marks a singular
// coefficient matrix (non-fatal; the filtered state then loses rank).
struct Filter {
    Matrix matrix;
    FilterProvenance provenance;
    bool rank_deficient = false;
};

struct FilteredState {
    DensityMatrix state;
    double source_mu;  // NaN when the source state did not come from the cloner
    Filter filter_used;
    double success_probability;  // Tr(rho A A^dag (x) I)
};

// rho' = (A^dag (x) I) rho (A (x) I) / Tr(rho A A^dag (x) I), operator
// ordering exactly as in the filtering prescription. Invariant under
// rescaling A by any nonzero complex number.
FilteredState apply_filter(const DensityMatrix& rho, const Filter& a,
                           double source_mu = std::numeric_limits<double>::quiet_NaN());

// Reshape v = sum_ij M_ij |i>|j> into its coefficient matrix M and use M
// itself as the filter. With this convention the published optimal filter,
// reshaped, is an exact eigenvector of the reduction operator at the
// optimal point, which pins the convention among M, M*, M^T, M^dag.
Filter filter_from_eigenvector(const PureState& v);

// The published optimal-point filter, entries exactly as printed.
Filter literal_opt();

// The printed k of the non-optimal filter (the "-1" sits inside the square
// root as published). Real only for mu >= 0.448931 although the filter is
// claimed for the whole range ((6+sqrt(2))/17, 1/2].
double literal_nonopt_ratio(double mu);

// Ratio -offdiag/diag of the reduction eigenvector's coefficient matrix in
// closed form: k = (11 mu^2 - 2 t2 + t1 - 1) / (4 mu^2). This is the
// corrected reading of the printed k, with the "-1" outside the radical;
// it matches filter_from_eigenvector across the whole range.
double eigenvector_filter_ratio(double mu);

// The published non-optimal filter sqrt(3) (1,-k,-k; -k,1,-k; -k,-k,1)
// with k per the printed formula. DomainError outside
// ((6+sqrt(2))/17, 1/2] or where the printed radicand is negative.
Filter literal_nonopt(double mu);

// Eigenvector-route distillation of an arbitrary two-qutrit state.
// Throws NotDistillableError when the reduction criterion is not violated.
FilteredState distill_state(const DensityMatrix& rho,
                            double source_mu = std::numeric_limits<double>::quiet_NaN());

enum class DistillMode { optimal, nonoptimal, automatic };

// rho_ab(mu) -> reduction_report -> filter_from_eigenvector -> apply_filter.
// optimal requires mu^2 = 1/8, nonoptimal requires mu in ((6+sqrt(2))/17, 1/2],
// automatic picks whichever applies and refuses other mu.
FilteredState distill_pipeline(double mu, DistillMode mode = DistillMode::automatic);

}  // namespace qutritlab
