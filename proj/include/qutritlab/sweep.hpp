// Parameter sweeps over mu: one record of metrics per grid point, rendered
// as locale-independent CSV (and optionally as a minimal SVG). Byte-identical
// output for identical inputs.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qutritlab {

struct SweepRecord {
    double mu = 0;
    double lambda = 0;
    double e1 = 0;
    double e2 = 0;
    double min_pt_eig = 0;
    double fef_raw = 0;
    double fid_raw = 0;
    double entropy_gap_raw = 0;
    bool distillable = false;
    // Present exactly when mu lies in the non-optimal filter range or at the
    // optimal point (and filtering was requested).
    std::optional<double> fef_filtered;
    std::optional<double> fid_filtered;
    std::optional<double> entropy_gap_filtered;
    std::optional<double> capacity_filtered;
};

inline constexpr const char* kSweepCsvHeader =
    "mu,lambda,e1,e2,min_pt_eig,fef_raw,fid_raw,entropy_gap_raw,distillable,"
    "fef_filtered,fid_filtered,entropy_gap_filtered,capacity_filtered";

SweepRecord compute_sweep_record(double mu, bool include_filtered);

// `steps` records at uniformly spaced mu from mu_min to mu_max inclusive.
// Requires 0 < mu_min < mu_max <= 1/2 and steps >= 2.
std::vector<SweepRecord> sweep(double mu_min, double mu_max, int steps, bool include_filtered);

// Shortest-round-trip decimal rendering at 12 significant digits, always
// '.' as the decimal point.
std::string format_number(double v);

std::string sweep_to_csv(const std::vector<SweepRecord>& records);

// Self-contained SVG with one polyline per populated numeric column,
// each normalized to its own range.
std::string sweep_to_svg(const std::vector<SweepRecord>& records);

}  // namespace qutritlab
