// Reproduction harness: recomputes every published scalar this library
// covers, compares at pinned tolerances, and carries advisory findings for
// the known misprints in the published closed forms, each adjudicated
// against the constructive (cloning-transformation / eigenvector) route.
#pragma once

#include <string>
#include <vector>

namespace qutritlab {

enum class RowStatus { pass, fail, advisory };

struct ReproductionRow {
    std::string name;
    double expected = 0;
    double computed = 0;
    double tolerance = 0;
    std::string source;
    RowStatus status = RowStatus::fail;
};

const char* to_string(RowStatus s);

// All reproduction and advisory rows, in a fixed order.
std::vector<ReproductionRow> paper_check_rows();

bool all_non_advisory_pass(const std::vector<ReproductionRow>& rows);

// Fixed-width human-readable table with a PASS/FAIL/ADVISORY status column.
std::string paper_check_table(const std::vector<ReproductionRow>& rows);

// JSON array of objects with keys name, expected, computed, tolerance,
// source, status.
std::string paper_check_json(const std::vector<ReproductionRow>& rows);

}  // namespace qutritlab
