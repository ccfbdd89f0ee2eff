#include "qutritlab/sweep.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "qutritlab/cloner.hpp"
#include "qutritlab/entanglement.hpp"
#include "qutritlab/filter.hpp"
#include "qutritlab/protocols.hpp"

namespace qutritlab {

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    std::array<char, 40> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

SweepRecord compute_sweep_record(double mu, bool include_filtered) {
    const MachineParams params(mu);
    const DensityMatrix rho = output_state(params);
    const ProtocolVerdict raw = verdict(rho);
    SweepRecord rec;
    rec.mu = mu;
    rec.lambda = params.lambda();
    rec.e1 = closed_form_E1(mu);
    rec.e2 = closed_form_E2(mu);
    rec.min_pt_eig = npt_min_eigenvalue(rho);
    rec.fef_raw = raw.fef;
    rec.fid_raw = raw.teleportation_fidelity;
    rec.entropy_gap_raw = raw.entropy_gap;
    rec.distillable = reduction_report(rho).violated;
    const bool filter_defined =
        params.is_optimal() || (mu > nonoptimal_range_low() && mu <= 0.5);
    if (include_filtered && filter_defined) {
        const FilteredState fs = distill_pipeline(mu);
        const ProtocolVerdict filtered = verdict(fs.state);
        rec.fef_filtered = filtered.fef;
        rec.fid_filtered = filtered.teleportation_fidelity;
        rec.entropy_gap_filtered = filtered.entropy_gap;
        rec.capacity_filtered = filtered.capacity;
    }
    return rec;
}

std::vector<SweepRecord> sweep(double mu_min, double mu_max, int steps, bool include_filtered) {
    if (!(mu_min > 0.0) || !(mu_min < mu_max) || mu_max > 0.5)
        throw DomainError("sweep range must satisfy 0 < mu_min < mu_max <= 1/2");
    if (steps < 2)
        throw DomainError("sweep needs at least 2 steps");
    std::vector<SweepRecord> records;
    records.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double mu = mu_min + (mu_max - mu_min) * i / (steps - 1);
        records.push_back(compute_sweep_record(mu, include_filtered));
    }
    return records;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_number(*v) : std::string();
    };
    for (const SweepRecord& r : records) {
        out += format_number(r.mu) + ',' + format_number(r.lambda) + ',' +
               format_number(r.e1) + ',' + format_number(r.e2) + ',' +
               format_number(r.min_pt_eig) + ',' + format_number(r.fef_raw) + ',' +
               format_number(r.fid_raw) + ',' + format_number(r.entropy_gap_raw) + ',' +
               (r.distillable ? "true" : "false") + ',' + opt(r.fef_filtered) + ',' +
               opt(r.fid_filtered) + ',' + opt(r.entropy_gap_filtered) + ',' +
               opt(r.capacity_filtered) + '\n';
    }
    return out;
}

namespace {

struct Curve {
    const char* name;
    const char* color;
    std::vector<double> mu;
    std::vector<double> value;
};

}  // namespace

std::string sweep_to_svg(const std::vector<SweepRecord>& records) {
    constexpr double kWidth = 720, kHeight = 480, kPad = 40;
    std::vector<Curve> curves = {
        {"e1", "#1f77b4", {}, {}},
        {"e2", "#ff7f0e", {}, {}},
        {"min_pt_eig", "#2ca02c", {}, {}},
        {"fef_raw", "#d62728", {}, {}},
        {"fid_raw", "#9467bd", {}, {}},
        {"entropy_gap_raw", "#8c564b", {}, {}},
        {"fef_filtered", "#e377c2", {}, {}},
        {"fid_filtered", "#7f7f7f", {}, {}},
        {"entropy_gap_filtered", "#bcbd22", {}, {}},
        {"capacity_filtered", "#17becf", {}, {}},
    };
    for (const SweepRecord& r : records) {
        const std::array<std::optional<double>, 10> vals = {
            r.e1,          r.e2,          r.min_pt_eig,
            r.fef_raw,     r.fid_raw,     r.entropy_gap_raw,
            r.fef_filtered, r.fid_filtered, r.entropy_gap_filtered,
            r.capacity_filtered};
        for (size_t c = 0; c < curves.size(); ++c) {
            if (!vals[c]) continue;
            curves[c].mu.push_back(r.mu);
            curves[c].value.push_back(*vals[c]);
        }
    }
    double mu_lo = records.front().mu, mu_hi = records.back().mu;
    if (mu_hi <= mu_lo) mu_hi = mu_lo + 1.0;
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                      format_number(kWidth) + " " + format_number(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    double legend_y = kPad;
    for (const Curve& c : curves) {
        if (c.mu.size() < 2) continue;
        double lo = c.value[0], hi = c.value[0];
        for (double v : c.value) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo < 1e-15) hi = lo + 1.0;
        std::string points;
        for (size_t i = 0; i < c.mu.size(); ++i) {
            const double px = kPad + (kWidth - 2 * kPad) * (c.mu[i] - mu_lo) / (mu_hi - mu_lo);
            const double py =
                kHeight - kPad - (kHeight - 2 * kPad) * (c.value[i] - lo) / (hi - lo);
            if (!points.empty()) points += ' ';
            points += format_number(px) + ',' + format_number(py);
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(c.color) +
               "\" stroke-width=\"1.5\" points=\"" + points + "\"><title>" + c.name +
               " (range " + format_number(lo) + " to " + format_number(hi) +
               ")</title></polyline>\n";
        svg += "<text x=\"" + format_number(kWidth - kPad - 170) + "\" y=\"" +
               format_number(legend_y) + "\" font-size=\"11\" fill=\"" + c.color + "\">" +
               c.name + "</text>\n";
        legend_y += 14;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace qutritlab
