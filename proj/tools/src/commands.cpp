#include "commands.hpp"

#include "chamberlab/adjacency.hpp"
#include "chamberlab/antidesigns.hpp"
#include "chamberlab/counting.hpp"
#include "chamberlab/ekr.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/forms.hpp"
#include "chamberlab/json_util.hpp"
#include "chamberlab/search.hpp"
#include "chamberlab/spectral.hpp"
#include "chamberlab/spreads.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

namespace chamberlab::cli {

namespace {

using nlohmann::json;

json jv(const BigInt& v) { return json_value(v); }
json jv(const BigRational& v) { return json_value(v); }

UniversePtr universe(unsigned q, int d) { return ChamberUniverse::build(Field::of_order(q), d); }

const char* cache_reason = "universe exceeds the adjacency cache; pairwise checks need the cached graph";

std::unique_ptr<Adjacency> maybe_adjacency(const UniversePtr& u)
{
    if (u->size() > Adjacency::max_vertices) return nullptr;
    return std::make_unique<Adjacency>(u);
}

void brute(Report& r, const std::string& name, const std::string& anchor, const BruteCheck& b)
{
    if (b.cases == 0) {
        r.skip(name, "no cases in this universe");
        return;
    }
    r.check(name, anchor, 0, b.failures, {{"cases", b.cases}});
}

Subspace first_point(const Field& F, int d) { return Subspace::coordinate(F, d, {0}); }

Subspace first_hyperplane(const Field& F, int d)
{
    std::vector<Vec> rows;
    for (int i = 0; i + 1 < d; ++i) {
        Vec v(static_cast<std::size_t>(d), 0);
        v[static_cast<std::size_t>(i)] = 1;
        rows.push_back(v);
    }
    return Subspace::span(F, d, rows);
}

int require_even(int d)
{
    if (d < 2 || d % 2) throw PreconditionError("this command needs an even ambient dimension 2n >= 2");
    return d / 2;
}

std::string kind_name(const Classification& k)
{
    switch (k.kind) {
    case Classification::Kind::point: return "point";
    case Classification::Kind::hyperplane: return "hyperplane";
    case Classification::Kind::non_classical: break;
    }
    return "non-classical";
}

// Maximality of a classical set: its size against the formula, plus the
// pairwise coclique test when the graph is cached. Members of a classical set
// share a point in (or lie in a hyperplane through) C_n, so no two are
// opposite; the pairwise test re-derives that.
void classical_checks(Report& r, const EkrSet& f, const Adjacency* adj, const std::string& tag)
{
    const int n = f.universe().ambient_dim() / 2;
    r.check(tag + ".size", "maximum EKR size z_2n / (q^n + 1)", jv(max_ekr_size(n, f.universe().q())), f.size());
    if (adj)
        r.check(tag + ".coclique", "no two members opposite", true, f.is_coclique(adj));
    else
        r.skip(tag + ".coclique", cache_reason);
}

json search_json(const SearchResult& s)
{
    return {{"status", to_string(s.status)},
            {"nodes", s.nodes},
            {"clique_size", s.clique_size},
            {"clique_count", s.clique_count},
            {"cliques_complete", s.cliques_complete},
            {"root_bound", s.root_bound},
            {"resume_token", format_resume_token(s.resume_token)}};
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    return os;
}

} // namespace

Report run_counts(const Common& c, unsigned q, int d)
{
    Report r("counts", {{"q", q}, {"d", d}}, c.timings);
    const auto u = universe(q, d);
    r.check("z_d", "number of chambers z_d(q) = [d]_q / (q-1)^d", jv(chamber_count(d, q)), u->size());
    for (int s = 0; s <= d; ++s)
        r.check("subspaces.s=" + std::to_string(s), "number of s-subspaces is the Gaussian coefficient", jv(gaussian(d, s, q)), u->lattice().count(s));
    if (d % 2 == 0) {
        const int n = d / 2;
        r.check("z_2n.factorization", "z_2n = [2n choose n] z_n^2", jv(chamber_count(d, q)),
                jv(gaussian(d, n, q) * chamber_count(n, q) * chamber_count(n, q)));
    }
    r.timed("skew_subspaces", "b-subspaces meeting an a-subspace trivially: [d-a choose b] q^(ab)", [&] {
        const auto b = check_skew_counts(u->lattice());
        return std::pair<json, json>{json{{"failures", 0}, {"cases", b.cases}}, json{{"failures", b.failures}, {"cases", b.cases}}};
    });
    if (d >= 2)
        r.timed("flag_extensions", "chambers through a flag of type t_1 < ... < t_f", [&] {
            const auto b = check_flag_extensions(*u);
            return std::pair<json, json>{json{{"failures", 0}, {"cases", b.cases}}, json{{"failures", b.failures}, {"cases", b.cases}}};
        });
    else
        r.skip("flag_extensions", "no proper flags when d = 1");

    const auto adj = maybe_adjacency(u);
    if (!adj) {
        r.skip("opposite_chambers", cache_reason);
        r.skip("opposite_through_subspace", cache_reason);
        return r;
    }
    r.check("opposite_chambers.formula", "every chamber is opposite to q^(d choose 2) chambers", jv(opposite_count(d, q)),
            adj->regular_degree() ? json(*adj->regular_degree()) : json("irregular"));
    brute(r, "opposite_chambers", "every chamber is opposite to q^(d choose 2) chambers", check_opposite_counts(*adj));
    brute(r, "opposite_through_subspace", "opposite chambers through S: q^((s choose 2) + (d-s choose 2))", check_opposite_through(*adj));
    return r;
}

Report run_spectral(const Common& c, unsigned q, int n)
{
    Report r("spectral", {{"q", q}, {"n", n}}, c.timings);
    const auto u = universe(q, 2 * n);
    const auto adj = maybe_adjacency(u);
    const BigInt lambda = smallest_eigenvalue(n, q);
    r.section("formulas") = {{"lambda", jv(lambda)},
                             {"degree", jv(opposite_count(2 * n, q))},
                             {"eigenspace_dimension", jv(eigenspace_dimension_formula(n, q))},
                             {"alpha", jv(max_ekr_size(n, q))}};
    if (!adj) {
        for (const char* name : {"degree", "chi_eigenvectors", "eigenspace_dimension", "hoffman_bound"}) r.skip(name, cache_reason);
        return r;
    }
    r.check("degree", "the graph is regular of degree q^(n(2n-1))", jv(opposite_count(2 * n, q)),
            adj->regular_degree() ? json(*adj->regular_degree()) : json("irregular"));
    EigenCheck ec;
    r.timed("chi_eigenvectors", "A chi^i_P = -q^(2n(n-1)) chi^i_P for every i and P", [&] {
        ec = verify_chi_eigenvectors(*adj);
        return std::pair<json, json>{json{{"failures", 0}, {"vectors", n * u->lattice().point_count()}},
                                     json{{"failures", ec.failures}, {"vectors", ec.vectors}}};
    });
    r.timed("eigenspace_dimension", "dim span{chi^i_P} = n (q^2n - q) / (q - 1)",
            [&] { return std::pair<json, json>{jv(eigenspace_dimension_formula(n, q)), eigenspace_dimension(ChiFamily(u))}; });
    try {
        const auto cert = certify_spectrum(*adj);
        r.check("smallest_eigenvalue", "smallest eigenvalue -q^(2n(n-1))", jv(lambda), jv(cert.lambda()));
        r.check("hoffman_bound", "ratio bound N(-lambda)/(k-lambda) = z_2n / (q^n + 1)", jv(BigRational(max_ekr_size(n, q))), jv(hoffman_bound(cert)));
    } catch (const VerificationError& e) {
        r.skip("hoffman_bound", std::string("spectrum not certified: ") + e.what());
    }
    return r;
}

Report run_antidesigns(const Common& c, unsigned q, int n, const std::vector<std::string>& families, const std::string& csv_dir)
{
    Report r("antidesigns", {{"q", q}, {"n", n}, {"families", families}}, c.timings);
    const auto u = universe(q, 2 * n);
    const auto insts = standard_antidesigns(u, families);
    const auto adj = maybe_adjacency(u);
    const EkrSet sets[] = {EkrSet::classical_point(u, first_point(u->field(), 2 * n)),
                           EkrSet::classical_hyperplane(u, first_hyperplane(u->field(), 2 * n))};
    for (const auto& f : sets) classical_checks(r, f, adj.get(), to_string(f.provenance()));

    if (!csv_dir.empty()) std::filesystem::create_directories(csv_dir);
    auto& reports = r.section("families");
    reports = json::array();
    for (std::size_t k = 0; k < insts.size(); ++k) {
        const auto& in = insts[k];
        const std::string tag = in.family + "#" + std::to_string(k) + " " + in.parameters.dump();
        OrthogonalityReport orth;
        r.timed(tag + " orthogonality", "antidesign: orthogonal to every chi^i_P", [&] {
            orth = orthogonality_report(in.vector);
            return std::pair<json, json>{json{{"nonzero", 0}, {"checks_run", n * u->lattice().point_count()}},
                                         json{{"nonzero", orth.nonzero}, {"checks_run", orth.checks_run}}};
        });
        r.check(tag + " mass", "closed-form mass of the " + in.family + " antidesign", jv(in.expected_mass), jv(in.vector.total()));
        for (const auto& f : sets)
            r.check(tag + " vs " + to_string(f.provenance()), "<v, 1_F> = 1^T v / (q^n + 1) on a maximum EKR set", jv(in.expected_intersection),
                    jv(inner_product(in.vector, f.members())));
        reports.push_back(family_report(in, orth));
        if (!csv_dir.empty()) {
            auto os = open_out(csv_dir + "/" + in.family + "-" + std::to_string(k) + ".csv");
            write_csv(os, in.vector);
        }
    }
    return r;
}

Report run_classify(const Common& c, const ClassifyOptions& o)
{
    Report r("classify",
             {{"q", o.q},
              {"d", 4},
              {"enumerate", o.enumerate},
              {"budget", o.budget},
              {"clique_budget", o.clique_budget},
              {"ratio_pruning", o.ratio_pruning},
              {"resume", o.resume}},
             c.timings);
    const auto u = universe(o.q, 4);
    const Adjacency adj(u);
    const std::size_t alpha = static_cast<std::size_t>(max_ekr_size(2, o.q));
    const std::size_t ratio = static_cast<std::size_t>(-smallest_eigenvalue(2, o.q));

    const EkrSet fp = EkrSet::classical_point(u, first_point(u->field(), 4));
    const EkrSet fh = EkrSet::classical_hyperplane(u, first_hyperplane(u->field(), 4));
    for (const auto* f : {&fp, &fh}) {
        classical_checks(r, *f, &adj, to_string(f->provenance()));
        r.check(std::string(to_string(f->provenance())) + ".ratio_tight", "every outside vertex has -lambda neighbours in F", true, is_ratio_tight(*f, adj));
    }

    SearchOptions base;
    base.node_budget = o.budget;
    base.clique_budget = o.clique_budget;
    base.target = alpha;
    if (o.ratio_pruning) {
        if (!is_ratio_tight(fp, adj) || !is_ratio_tight(fh, adj)) throw VerificationError("ratio pruning requested but the classical sets are not ratio tight");
        base.ratio_degree = ratio;
    }

    SearchOptions prove = base;
    prove.mode = SearchMode::prove_alpha;
    if (!o.enumerate) prove.resume_from = parse_resume_token(o.resume);
    const auto t0 = std::chrono::steady_clock::now();
    const auto pr = max_coclique_search(adj, prove);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto& ps = r.section("prove_alpha");
    ps = search_json(pr);
    if (c.timings) ps["seconds"] = secs;
    if (pr.witness) ps["witness"] = pr.witness->indices();
    if (pr.status == SearchStatus::inconclusive) {
        // an exhausted budget settles nothing; it is reported, not failed
        r.inconclusive("alpha", search_json(pr));
        return r;
    }
    r.check("alpha", "no coclique larger than z_4 / (q^2 + 1)", "certified", to_string(pr.status));

    if (!o.enumerate) return r;
    SearchOptions en = base;
    en.mode = SearchMode::enumerate_maximum;
    en.resume_from = parse_resume_token(o.resume);
    const auto er = max_coclique_search(adj, en);
    auto& sec = r.section("enumerate_maximum");
    sec = search_json(er);
    json found = json::array();
    std::size_t classical = 0, meeting = 0;
    for (std::size_t k = 0; k < er.cocliques.size(); ++k) {
        const EkrSet f(u, er.cocliques[k], Provenance::search);
        const auto cls = classify(f);
        classical += cls.kind != Classification::Kind::non_classical;
        meeting += lines_pairwise_meet(f);
        found.push_back({{"index", k}, {"kind", kind_name(cls)}, {"witness", cls.witness ? cls.witness->to_string() : ""}});
        if (!o.export_dir.empty()) {
            std::filesystem::create_directories(o.export_dir);
            auto os = open_out(o.export_dir + "/max-" + std::to_string(k) + ".ekr");
            f.write(os);
        }
    }
    sec["sets"] = found;
    if (er.status == SearchStatus::inconclusive) {
        r.inconclusive("enumerate_maximum", search_json(er));
        return r;
    }
    r.check("maximum_sets.classical", "every maximum EKR set of chambers of F_q^4 is classical", er.cocliques.size(), classical);
    r.check("maximum_sets.lines_meet", "lines C_2 of the members pairwise meet", er.cocliques.size(), meeting);
    if (o.resume.empty())
        r.check("maximum_sets.count", "maximum sets: one per point and one per hyperplane", jv(2 * gaussian(4, 1, o.q)), er.cocliques.size());
    else
        r.skip("maximum_sets.count", "resumed run lists only the sets after the resume point");
    return r;
}

Report run_check_set(const Common& c, const SetOptions& o)
{
    const auto u = universe(o.q, o.d);
    const auto adj = maybe_adjacency(u);
    std::optional<EkrSet> f;
    if (!o.file.empty()) {
        std::ifstream is(o.file);
        if (!is) throw std::runtime_error("cannot open " + o.file);
        f = EkrSet::read(is, u);
    } else if (o.classical == "point") {
        f = EkrSet::classical_point(u, first_point(u->field(), o.d));
    } else if (o.classical == "hyperplane") {
        f = EkrSet::classical_hyperplane(u, first_hyperplane(u->field(), o.d));
    } else {
        throw PreconditionError("check-set needs --file or --classical point|hyperplane");
    }
    Report r("check-set", {{"q", o.q}, {"d", o.d}, {"source", o.file.empty() ? "classical-" + o.classical : o.file}}, c.timings);
    const int n = require_even(o.d);
    r.check("size", "maximum EKR size z_2n / (q^n + 1)", jv(max_ekr_size(n, o.q)), f->size());
    if (!adj) {
        // pairwise tests stream O(|F|^2) oppositeness checks above the cache
        for (const char* name : {"coclique", "ratio_tight", "intersections", "weights", "heavy"}) r.skip(name, cache_reason);
        return r;
    }
    r.check("coclique", "no two members opposite", true, f->is_coclique(adj.get()));
    if (!f->is_coclique(adj.get()) || BigInt(f->size()) != max_ekr_size(n, o.q)) return r;
    const auto cls = classify(*f);
    r.section("classification") = {{"kind", kind_name(cls)}, {"describe", cls.describe()}};
    r.check("ratio_tight", "every outside vertex has -lambda neighbours in F", true, is_ratio_tight(*f, *adj));

    for (const auto& chk : antidesign_intersections(*f, standard_antidesigns(u, {})))
        r.check("intersection " + chk.family + " " + chk.parameters.dump(), "<v, 1_F> = 1^T v / (q^n + 1) on a maximum EKR set", jv(chk.expected),
                jv(chk.actual));

    for (int s = 1; s < o.d; ++s) {
        const auto profs = weight_profiles(*f, s);
        std::size_t identity = 0, bound = 0;
        for (const auto& w : profs) {
            identity += w.identity_holds;
            bound += w.bound_holds;
        }
        const std::string at = "s=" + std::to_string(s);
        r.check("weights " + at + " identity", "y = w z_s z_{2n-s} - x w with w = q^(s(2n-s)-n)", profs.size(), identity);
        r.check("weights " + at + " bounds", "heavy: z = |F| - z_s z_{2n-s}; light: bounds on x and z", profs.size(), bound);
        const auto h = heavy_analysis(*f, s);
        r.check("heavy " + at, "heavy iff y = 0; heavy subspaces pairwise meet; count within the Gaussian bound",
                json{{"criterion", true}, {"pairwise_meet", true}, {"within_bound", true}},
                json{{"criterion", h.criterion_equivalence}, {"pairwise_meet", h.pairwise_meet}, {"within_bound", h.within_bound}},
                {{"heavy", h.heavy.size()}, {"bound", jv(h.bound)}});
    }
    if (o.d == 4) {
        const auto lw = line_weight_spectrum(*f);
        r.section("line_weights") = lw.spectrum();
        r.check("line_weights.allowed", "line weights lie in {0, 1, 2, q+1, 2q+1, (q+1)^2}", true, lw.spectrum_allowed);
        r.check("line_weights.full", "weight (q+1)^2 iff the line meets every member line", true, lw.full_weight_criterion);
        r.check("line_weights.pi_p_lines", "pi-lines pairwise meet and p-lines pairwise meet", true,
                lw.pi_lines_pairwise_meet && lw.p_lines_pairwise_meet);
        r.check("lines_meet", "lines C_2 of the members pairwise meet", true, lines_pairwise_meet(*f));
    }
    return r;
}

Report run_export_graph(const Common& c, unsigned q, int d, const std::string& format, const std::string& out)
{
    GraphFormat fmt;
    if (format == "dimacs")
        fmt = GraphFormat::dimacs;
    else if (format == "edges")
        fmt = GraphFormat::edge_list;
    else
        throw PreconditionError("unknown graph format '" + format + "' (dimacs or edges)");
    const auto u = universe(q, d);
    const auto adj = maybe_adjacency(u);
    Report r("export-graph", {{"q", q}, {"d", d}, {"format", format}, {"out", out}}, c.timings);
    if (out.empty()) {
        write_graph(std::cout, *u, fmt, adj.get());
        return r;
    }
    auto os = open_out(out);
    write_graph(os, *u, fmt, adj.get());
    r.check("vertices", "number of chambers z_d(q)", jv(chamber_count(d, q)), u->size());
    if (adj && d > 1)
        r.check("edges", "z_d q^(d choose 2) / 2 edges", jv(chamber_count(d, q) * opposite_count(d, q) / 2), adj->edge_count());
    return r;
}

Report run_export_spread(const Common& c, unsigned q, int n, const std::string& kind, const std::string& out)
{
    const auto F = Field::of_order(q);
    Spread s;
    if (kind == "field-extension")
        s = field_extension_spread(F, n);
    else if (kind == "symplectic")
        s = make_spread(enumerate_generators(FormSpec::standard_alternating(F, n)));
    else
        throw PreconditionError("unknown spread kind '" + kind + "' (field-extension or symplectic)");
    Report r("export-spread", {{"q", q}, {"n", n}, {"kind", kind}, {"out", out}}, c.timings);
    r.check("fold", "every point lies on the same number of members", s.fold, is_t_fold_spread(s.members).value_or(0));
    r.check("members", "t (q^n + 1) members", jv(BigInt(s.fold) * (ipow(q, n) + 1)), s.members.size());
    if (!out.empty()) {
        auto os = open_out(out);
        write_subspaces(os, s.members);
    }
    return r;
}

} // namespace chamberlab::cli
