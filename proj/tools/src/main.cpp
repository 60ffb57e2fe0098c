#include "commands.hpp"

#include "chamberlab/error.hpp"
#include "chamberlab/parallel.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

namespace {

using namespace chamberlab;
using namespace chamberlab::cli;

// Exit codes: 0 every check passed, 1 a check failed, 2 bad input or a
// capacity limit, 3 a search ran out of budget.
int finish(const Report& r, bool human)
{
    if (human)
        r.print_human(std::cout);
    else
        std::cout << r.to_json().dump(2) << '\n';
    if (!r.all_pass()) return 1;
    return r.has_inconclusive() ? 3 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks on EKR sets of chambers in finite vector spaces"};
    app.set_version_flag("--version", CHAMBERLAB_VERSION);
    app.require_subcommand(1);

    bool human = false;
    unsigned threads = 0;
    Common common;
    app.add_flag("--human", human, "Print a readable summary instead of JSON");
    app.add_option("--threads", threads, "Cap on worker threads (0 = all cores)");
    app.add_flag("--timings", common.timings, "Add wall times to the report");

    std::function<Report()> run;

    unsigned q = 2;
    int d = 4, n = 2;

    auto* counts = app.add_subcommand("counts", "Chamber and subspace counts against brute force");
    counts->add_option("--q", q, "Field order")->required();
    counts->add_option("--d", d, "Ambient dimension")->required();
    counts->callback([&] { run = [&] { return run_counts(common, q, d); }; });

    auto* spectral = app.add_subcommand("spectral", "Smallest eigenvalue, its eigenspace and the ratio bound");
    spectral->add_option("--q", q, "Field order")->required();
    spectral->add_option("--n", n, "Half the ambient dimension")->required();
    spectral->callback([&] { run = [&] { return run_spectral(common, q, n); }; });

    std::vector<std::string> families;
    std::string csv_dir;
    auto* anti = app.add_subcommand("antidesigns", "Build antidesigns and check orthogonality, masses and intersections");
    anti->add_option("--q", q, "Field order")->required();
    anti->add_option("--n", n, "Half the ambient dimension")->required();
    anti->add_option("--families", families, "Comma-separated families (default: all that apply)")->delimiter(',');
    anti->add_option("--csv-dir", csv_dir, "Write each antidesign as CSV into this directory");
    anti->callback([&] { run = [&] { return run_antidesigns(common, q, n, families, csv_dir); }; });

    ClassifyOptions co;
    auto* classify = app.add_subcommand("classify", "Prove the independence number of Gamma_4(q) and optionally list all maximum cocliques");
    classify->add_option("--q", co.q, "Field order")->required();
    classify->add_flag("--enumerate", co.enumerate, "List every maximum coclique and classify it");
    classify->add_option("--budget", co.budget, "Search node budget");
    classify->add_option("--clique-budget", co.clique_budget, "Budget for listing maximum cliques of the bound");
    classify->add_option("--resume", co.resume, "Resume token from an inconclusive run");
    classify->add_flag("--ratio-pruning", co.ratio_pruning, "Prune partial sets that violate ratio tightness");
    classify->add_option("--export-dir", co.export_dir, "Write each maximum coclique found into this directory");
    classify->callback([&] { run = [&] { return run_classify(common, co); }; });

    SetOptions so;
    auto* check = app.add_subcommand("check-set", "Verify the structural properties of one EKR set");
    check->add_option("--q", so.q, "Field order")->required();
    check->add_option("--d", so.d, "Ambient dimension (even)");
    auto* file_opt = check->add_option("--file", so.file, "EKR set file to import")->check(CLI::ExistingFile);
    check->add_option("--classical", so.classical, "Use a classical set instead")
        ->check(CLI::IsMember({"point", "hyperplane"}))
        ->excludes(file_opt);
    check->callback([&] { run = [&] { return run_check_set(common, so); }; });

    std::string format = "dimacs", out;
    auto* graph = app.add_subcommand("export-graph", "Write the oppositeness graph");
    graph->add_option("--q", q, "Field order")->required();
    graph->add_option("--d", d, "Ambient dimension")->required();
    graph->add_option("--format", format, "dimacs or edges")->check(CLI::IsMember({"dimacs", "edges"}));
    graph->add_option("--out", out, "Output file (stdout when omitted; then no report is printed)");
    graph->callback([&] { run = [&] { return run_export_graph(common, q, d, format, out); }; });

    std::string kind = "field-extension";
    auto* spread = app.add_subcommand("export-spread", "Build a spread of n-subspaces of F_q^2n and write it");
    spread->add_option("--q", q, "Field order")->required();
    spread->add_option("--n", n, "Half the ambient dimension")->required();
    spread->add_option("--kind", kind, "field-extension or symplectic")->check(CLI::IsMember({"field-extension", "symplectic"}));
    spread->add_option("--out", out, "Output file");
    spread->callback([&] { run = [&] { return run_export_spread(common, q, n, kind, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    set_thread_limit(threads);
    try {
        const Report r = run();
        if (graph->parsed() && out.empty()) return r.all_pass() ? 0 : 1;
        return finish(r, human);
    } catch (const CapacityError& e) {
        std::cerr << "chamberlab: capacity: " << e.what() << '\n';
    } catch (const PreconditionError& e) {
        std::cerr << "chamberlab: invalid input: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "chamberlab: " << e.what() << '\n';
    }
    return 2;
}
