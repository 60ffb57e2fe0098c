#pragma once

#include "report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chamberlab::cli {

struct Common {
    bool timings = false;
};

Report run_counts(const Common& c, unsigned q, int d);
Report run_spectral(const Common& c, unsigned q, int n);
Report run_antidesigns(const Common& c, unsigned q, int n, const std::vector<std::string>& families, const std::string& csv_dir);

struct ClassifyOptions {
    unsigned q = 2;
    bool enumerate = false;
    std::uint64_t budget = 1'000'000'000;
    std::uint64_t clique_budget = 50'000'000;
    std::string resume;
    bool ratio_pruning = false;
    std::string export_dir;
};
Report run_classify(const Common& c, const ClassifyOptions& o);

struct SetOptions {
    unsigned q = 2;
    int d = 4;
    std::string file;
    std::string classical; // point | hyperplane
};
Report run_check_set(const Common& c, const SetOptions& o);

/// Writes the graph to `out` (stdout when empty); returns a summary report.
Report run_export_graph(const Common& c, unsigned q, int d, const std::string& format, const std::string& out);

Report run_export_spread(const Common& c, unsigned q, int n, const std::string& kind, const std::string& out);

} // namespace chamberlab::cli
