#pragma once

#include <string>
#include <vector>

namespace koenigs {

struct DemoRow {
    int size = 0;
    double error = 0;
    double extra = 0;
};

struct DemoResult {
    std::string name;
    std::vector<std::string> columns; ///< size, error, extra
    std::vector<DemoRow> rows;
    std::vector<std::string> notes;
};

/// Convergence runs: "halfplane" and "eta" fit by least squares over doubling budgets up to
/// `budget`; "strip" discretizes the truncated Laplace measure for n up to `n`; "logdomain"
/// runs the polynomial-in-alpha pipeline with up to `n` atoms.
DemoResult approx_demo(const std::string& name, int budget, int n);

} // namespace koenigs
