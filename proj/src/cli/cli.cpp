#include "cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "shadowchi/budget.hpp"
#include "shadowchi/cayley.hpp"
#include "shadowchi/chi.hpp"
#include "shadowchi/errors.hpp"
#include "shadowchi/graph_io.hpp"
#include "shadowchi/grid.hpp"
#include "shadowchi/quotient.hpp"
#include "shadowchi/shift.hpp"
#include "shadowchi/two_ended.hpp"

namespace shadowchi::cli {

using nlohmann::json;

namespace {

struct Globals {
    long long budget_ms = 0;
    int jobs = 1;
    std::uint64_t seed = 1;
    bool json_out = false;
};

Budget make_budget(long long ms) { return ms > 0 ? Budget::milliseconds(ms) : Budget::from_environment(); }

// What a subcommand produced. `text` is the plain output; the rest forms the
// JSON run report.
struct Outcome {
    int code = kOk;
    json parameters = json::object();
    json results = json::object();
    json artifacts = json::object();
    std::string text;
};

MarkedGroupSpec group_from(const std::string& name, int k) {
    if (name == "delta") return MarkedGroupSpec::delta(k);
    if (name == "gamma") return MarkedGroupSpec::gamma(k);
    throw InputError("unknown group '" + name + "' (expected delta or gamma)");
}

Symmetry parse_symmetry(const std::string& s) {
    if (s == "none") return Symmetry::None;
    if (s == "pin-first") return Symmetry::PinFirst;
    if (s == "canonical") return Symmetry::Canonical;
    throw InputError("unknown symmetry '" + s + "' (expected none, pin-first or canonical)");
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw InputError("expected true or false, got '" + s + "'");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
}

std::string graph_text(const FiniteGraph& g, const std::string& format) {
    if (format == "json") return graph_to_json(g).dump() + "\n";
    if (format == "dimacs") {
        std::ostringstream s;
        write_dimacs(s, g);
        return s.str();
    }
    throw InputError("unknown format '" + format + "' (expected json or dimacs)");
}

json report_json(const VerificationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"index", v.index}, {"colors", v.colors}, {"reason", v.reason}});
    return {{"check", r.check},
            {"k", r.k},
            {"twisted", r.twisted},
            {"palette", r.palette},
            {"enumeration", r.enumeration},
            {"enumerated", r.enumerated},
            {"total", r.total},
            {"complete", r.complete},
            {"violation_count", r.violation_count},
            {"violations", std::move(violations)},
            {"passed", r.passed()}};
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream s;
    s << r.check << " k=" << r.k << (r.twisted ? " twisted" : "") << " palette=" << r.palette << " colorings=" << r.total
      << " (" << r.enumeration << ", visited " << r.enumerated << ") violations=" << r.violation_count;
    if (!r.complete) s << " INCOMPLETE";
    s << '\n';
    for (const auto& v : r.violations) s << "  #" << v.index << ": " << v.reason << '\n';
    return s.str();
}

int verdict(const VerificationReport& r) {
    if (r.violation_count > 0) return kViolated;
    return r.complete ? kOk : kUndecided;
}

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Infeasible: return "infeasible";
        case SearchStatus::Undecided: return "undecided";
    }
    return "?";
}

json chi_json(const ChiResult& r) {
    json j{{"status", r.exact() ? "exact" : (r.status == ChiStatus::Bounded ? "bounded" : "undecided")},
           {"lower", r.lower},
           {"upper", r.upper}};
    if (r.exact()) j["chi"] = r.value();
    return j;
}

std::string chi_text(const ChiResult& r) {
    if (r.exact()) return std::to_string(r.value());
    return std::to_string(r.lower) + ".." + std::to_string(r.upper);
}

json family_json(const SeparatorFamily& psi) {
    json members = json::array();
    for (const auto& m : psi.members) members.push_back(m.members());
    json edges = json::array();
    for (auto [i, j] : psi.t_edges) edges.push_back({i, j});
    return {{"members", std::move(members)}, {"t_edges", std::move(edges)}, {"t_degrees", psi.t_degrees()}};
}

// ---- subcommands ----

struct CayleyArgs {
    std::string group = "delta";
    int k = 3;
    long long lo = 0;
    long long hi = 0;
    int M = 0;
    std::string format = "json";
    std::string out;
};

Outcome do_cayley(const CayleyArgs& a) {
    Outcome o;
    auto spec = group_from(a.group, a.k);
    auto g = a.M > 0 ? cayley_quotient(spec, a.M) : cayley_window(spec, a.lo, a.hi);
    o.parameters = {{"group", a.group}, {"k", a.k}, {"format", a.format}};
    if (a.M > 0) o.parameters["M"] = a.M;
    else o.parameters["levels"] = {a.lo, a.hi};
    o.results = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    if (auto d = g.regular_degree()) o.results["regular_degree"] = *d;
    auto text = graph_text(g, a.format);
    if (a.out.empty()) {
        o.text = text;
    } else {
        write_text(a.out, text);
        o.artifacts["graph"] = a.out;
        o.text = "wrote " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                 " edges to " + a.out + "\n";
    }
    return o;
}

struct ChiArgs {
    std::string file;
    bool witness = false;
    std::string out;
};

Outcome do_chi(const ChiArgs& a, const Globals& g) {
    Outcome o;
    auto graph = load_graph(a.file);
    auto r = chromatic_number(graph, std::nullopt, make_budget(g.budget_ms));
    o.parameters = {{"graph", a.file}, {"vertices", graph.vertex_count()}, {"edges", graph.edge_count()}};
    o.results = chi_json(r);
    o.text = chi_text(r) + "\n";
    if (a.witness && r.witness) {
        auto w = coloring_to_json(*r.witness);
        o.results["witness"] = w;
        if (a.out.empty()) {
            o.text += w.dump() + "\n";
        } else {
            write_text(a.out, w.dump(2) + "\n");
            o.artifacts["witness"] = a.out;
        }
    }
    o.code = r.exact() ? kOk : kUndecided;
    return o;
}

struct VerifyArgs {
    int k = 3;
    std::string twisted;
    int palette = 0;
    std::string symmetry;
};

VerifyOptions verify_options(const VerifyArgs& a, const Globals& g) {
    VerifyOptions opt;
    if (a.palette > 0) opt.palette = a.palette;
    if (!a.symmetry.empty()) opt.symmetry = parse_symmetry(a.symmetry);
    opt.jobs = g.jobs;
    opt.budget = make_budget(g.budget_ms);
    return opt;
}

Outcome from_report(const VerificationReport& r, const VerifyArgs& a) {
    Outcome o;
    o.parameters = {{"k", a.k}};
    if (!a.twisted.empty()) o.parameters["twisted"] = r.twisted;
    if (a.palette > 0) o.parameters["palette"] = a.palette;
    if (!a.symmetry.empty()) o.parameters["symmetry"] = a.symmetry;
    o.results = report_json(r);
    o.text = report_text(r);
    o.code = verdict(r);
    return o;
}

struct TwoEndedArgs {
    std::string instance;
    std::string builtin;
    int blocks = 12;
    int k = 3;
    std::string mode;
    int window = 0;
    int cap = 0;
    int chi = 0;
    std::string out;
};

LineInstance two_ended_instance(const TwoEndedArgs& a) {
    if (a.instance.empty() == a.builtin.empty()) throw InputError("give exactly one of --instance and --builtin");
    if (!a.instance.empty()) {
        json j;
        try {
            j = json::parse(read_file(a.instance));
        } catch (const json::parse_error& e) {
            throw InputError(std::string("malformed instance JSON: ") + e.what());
        }
        auto inst = instance_from_json(j);
        return a.mode.empty() ? inst : inst.with_mode(parse_line_mode(a.mode));
    }
    auto mode = a.mode.empty() ? LineMode::Cycle : parse_line_mode(a.mode);
    if (a.builtin == "path") return path_line(a.blocks, mode);
    if (a.builtin == "ladder") return ladder_line(a.blocks, mode);
    if (a.builtin == "delta" || a.builtin == "gamma") return cayley_line(group_from(a.builtin, a.k), a.blocks, mode);
    throw InputError("unknown builtin '" + a.builtin + "' (expected path, ladder, delta or gamma)");
}

Outcome do_two_ended(const TwoEndedArgs& a, const Globals& g) {
    Outcome o;
    auto inst = two_ended_instance(a);
    if (a.chi > 0) inst = inst.with_chi(a.chi);
    TwoEndedParams params;
    if (a.window > 0) params.window_blocks = a.window;
    if (a.cap > 0) params.size_cap = a.cap;
    params.budget = make_budget(g.budget_ms);
    auto r = color_two_ended(inst, params);
    auto family = check_family(inst, r.psi);
    auto complement = check_complement_components(inst, r.psi);

    o.parameters = {{"mode", to_string(inst.mode())},
                    {"blocks", inst.block_count()},
                    {"window", params.window_blocks.value_or(2)},
                    {"cap", params.size_cap.value_or(2 * inst.max_block_size())}};
    if (!a.instance.empty()) o.parameters["instance"] = a.instance;
    else o.parameters["builtin"] = a.builtin;
    const int bound = 2 * r.chi - 1;
    o.results = {{"chi", r.chi},
                 {"bound", bound},
                 {"colors_used", r.colors_used},
                 {"proper", true},
                 {"psi", family_json(r.psi)},
                 {"family",
                  {{"members_divide", family.members_divide},
                   {"min_pairwise_distance", family.min_pairwise_distance},
                   {"distance_ok", family.distance_ok},
                   {"t_shape_ok", family.t_shape_ok}}},
                 {"complement",
                  {{"component_count", complement.component_count},
                   {"max_component_size", complement.max_component_size},
                   {"max_component_span", complement.max_component_span},
                   {"largest_gap", complement.largest_gap},
                   {"degenerate", complement.degenerate},
                   {"ok", complement.ok}}},
                 {"b_star_size", r.b_star.size()},
                 {"b_size", r.b.size()},
                 {"b_star_components", r.b_star_components},
                 {"complement_components", r.complement_components},
                 {"largest_complement_component", r.largest_complement_component}};
    auto coloring = coloring_to_json(r.coloring);
    if (a.out.empty()) {
        o.results["coloring"] = coloring;
    } else {
        write_text(a.out, coloring.dump() + "\n");
        o.artifacts["coloring"] = a.out;
    }
    std::ostringstream s;
    s << "palette " << r.colors_used << " <= " << bound << " (chi " << r.chi << "), psi " << r.psi.members.size()
      << " members, min distance " << family.min_pairwise_distance << ", t-degrees";
    for (int d : r.psi.t_degrees()) s << ' ' << d;
    s << ", complement components " << complement.component_count << " (largest gap " << complement.largest_gap
      << ")\n";
    if (a.out.empty() && !g.json_out) s << coloring.dump() << '\n';
    o.text = s.str();
    o.code = r.colors_used <= bound && family.ok() ? kOk : kViolated;
    return o;
}

struct ShiftArgs {
    int k = 0;
    std::string anchors;
    std::string mode;
    bool random = false;
    std::string out;
};

Outcome do_shift(const ShiftArgs& a, const Globals& g) {
    Outcome o;
    AnchoredTower tower;
    if (!a.anchors.empty()) {
        json j;
        try {
            j = json::parse(read_file(a.anchors));
        } catch (const json::parse_error& e) {
            throw InputError(std::string("malformed anchors JSON: ") + e.what());
        }
        tower = tower_from_json(j);
        if (a.k > 0) tower.k = a.k;
        if (!a.mode.empty()) tower.mode = parse_line_mode(a.mode);
        o.parameters["anchors"] = a.anchors;
    } else if (a.random) {
        const auto mode = a.mode.empty() ? LineMode::Segment : parse_line_mode(a.mode);
        tower = random_tower(a.k > 0 ? a.k : 3, g.seed, mode);
        o.parameters["seed"] = g.seed;
        o.parameters["tower"] = tower_to_json(tower);
    } else {
        throw InputError("give --anchors or --random");
    }
    o.parameters["k"] = tower.k;
    o.parameters["mode"] = to_string(tower.mode);
    auto c = color_tower(tower);
    o.results = {{"vertices", c.colors.size()},
                 {"palette", c.palette},
                 {"colors_used", c.colors_used()},
                 {"proper", true},
                 {"anchors", tower.anchors.size()}};
    auto coloring = coloring_to_json(c);
    if (a.out.empty()) {
        o.results["coloring"] = coloring;
    } else {
        write_text(a.out, coloring.dump() + "\n");
        o.artifacts["coloring"] = a.out;
    }
    std::ostringstream s;
    s << "proper coloring of " << c.colors.size() << " vertices with " << c.colors_used() << " colors (palette "
      << c.palette << ")\n";
    if (a.out.empty() && !g.json_out) s << coloring.dump() << '\n';
    o.text = s.str();
    return o;
}

struct QuotientArgs {
    std::string group = "delta";
    int k = 3;
    int M = 3;
    std::string format;
    std::string out;
};

Outcome do_quotient_chi(const QuotientArgs& a, const Globals& g) {
    Outcome o;
    auto spec = group_from(a.group, a.k);
    o.parameters = {{"group", a.group}, {"k", a.k}, {"M", a.M}};
    if (!a.format.empty()) {
        if (a.out.empty()) throw InputError("--export needs --out");
        write_text(a.out, graph_text(cayley_quotient(spec, a.M), a.format));
        o.artifacts["graph"] = a.out;
    }
    auto r = quotient_chi(spec, a.M, make_budget(g.budget_ms));
    o.results = chi_json(r);
    o.text = chi_text(r) + "\n";
    o.code = r.exact() ? kOk : kUndecided;
    return o;
}

struct AlternationArgs {
    int k = 3;
    int M = 3;
};

Outcome do_alternation(const AlternationArgs& a, const Globals& g) {
    Outcome o;
    auto r = verify_alternation_obstruction(a.k, a.M, make_budget(g.budget_ms));
    o.parameters = {{"k", a.k}, {"M", a.M}};
    o.results = {{"palette", r.palette},
                 {"solver", status_name(r.solver)},
                 {"solver_nodes", r.solver_nodes},
                 {"two_orbit", report_json(r.two_orbit)},
                 {"parity_obstruction", r.parity_obstruction},
                 {"passed", r.passed()}};
    std::ostringstream s;
    s << "no " << r.palette << "-coloring of the twisted quotient k=" << a.k << " M=" << a.M << ": solver "
      << status_name(r.solver) << " (" << r.solver_nodes << " nodes), two-orbit flips "
      << (r.two_orbit.passed() ? "verified" : "NOT verified") << ", parity obstruction "
      << (r.parity_obstruction ? "holds" : "absent") << '\n';
    o.text = s.str();
    o.code = r.passed() ? kOk : (r.undecided() ? kUndecided : kViolated);
    return o;
}

std::string join_argv(const std::vector<std::string>& argv) {
    std::string s;
    for (std::size_t i = 1; i < argv.size(); ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

}  // namespace

// ---- consolidated report ----

int ConsolidatedReport::exit_code() const {
    bool undecided = false;
    for (const auto& r : rows) {
        if (r.status == ReportRow::Status::Fail) return kViolated;
        if (r.status == ReportRow::Status::Undecided) undecided = true;
    }
    return undecided ? kUndecided : kOk;
}

namespace {

std::string status_word(ReportRow::Status s) {
    switch (s) {
        case ReportRow::Status::Pass: return "pass";
        case ReportRow::Status::Fail: return "FAIL";
        case ReportRow::Status::Undecided: return "undecided";
    }
    return "?";
}

}  // namespace

json ConsolidatedReport::to_json() const {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back(
            {{"row", r.name}, {"expected", r.expected}, {"observed", r.observed}, {"status", status_word(r.status)}});
    return {{"k", k}, {"rows", std::move(out)}};
}

std::string ConsolidatedReport::to_table() const {
    std::size_t w0 = 3, w1 = 8, w2 = 8;
    for (const auto& r : rows) {
        w0 = std::max(w0, r.name.size());
        w1 = std::max(w1, r.expected.size());
        w2 = std::max(w2, r.observed.size());
    }
    std::ostringstream s;
    s << std::left << std::setw(static_cast<int>(w0)) << "row" << "  " << std::setw(static_cast<int>(w1))
      << "expected" << "  " << std::setw(static_cast<int>(w2)) << "observed" << "  status\n";
    for (const auto& r : rows)
        s << std::setw(static_cast<int>(w0)) << r.name << "  " << std::setw(static_cast<int>(w1)) << r.expected
          << "  " << std::setw(static_cast<int>(w2)) << r.observed << "  " << status_word(r.status) << '\n';
    return s.str();
}

ConsolidatedReport build_report(const ReportOptions& options) {
    const int k = options.k;
    if (k < 3) throw InputError("k must be at least 3");
    ConsolidatedReport rep;
    rep.k = k;
    const Budget budget = make_budget(options.budget_ms);
    using S = ReportRow::Status;

    auto row = [&](std::string name, std::string expected, auto&& body) {
        ReportRow r{std::move(name), std::move(expected), "", S::Undecided};
        try {
            body(r);
        } catch (const BudgetExhausted&) {
            r.observed = "budget exhausted";
            r.status = S::Undecided;
        }
        rep.rows.push_back(std::move(r));
    };
    auto chi_row = [&](ReportRow& r, const ChiResult& c, auto&& accept) {
        r.observed = chi_text(c);
        r.status = c.exact() ? (accept(c.value()) ? S::Pass : S::Fail) : S::Undecided;
    };
    auto check_row = [&](ReportRow& r, const VerificationReport& v) {
        r.observed = std::to_string(v.violation_count) + " violations / " + std::to_string(v.total);
        r.status = v.violation_count > 0 ? S::Fail : (v.complete ? S::Pass : S::Undecided);
    };

    VerifyOptions vopt;
    vopt.jobs = options.jobs;
    vopt.budget = budget;
    const auto ks = std::to_string(k);

    row("chi(H)", ks, [&](ReportRow& r) {
        chi_row(r, chromatic_number(grid_graph(k), std::nullopt, budget), [&](int v) { return v == k; });
    });
    row("H dichotomy", "0 violations", [&](ReportRow& r) { check_row(r, verify_dichotomy(k, vopt)); });
    row("untwisted orientations equal", "0 violations",
        [&](ReportRow& r) { check_row(r, verify_invariance(k, false, vopt)); });
    row("twisted orientations opposite", "0 violations",
        [&](ReportRow& r) { check_row(r, verify_invariance(k, true, vopt)); });
    row("rigidity", "0 violations", [&](ReportRow& r) { check_row(r, verify_rigidity(k, vopt)); });
    row("Delta quotient chi (M=3)", ks, [&](ReportRow& r) {
        chi_row(r, quotient_chi(MarkedGroupSpec::delta(k), 3, budget), [&](int v) { return v == k; });
    });
    row("Gamma odd-quotient chi (M=3)", ">= " + std::to_string(2 * k - 1), [&](ReportRow& r) {
        chi_row(r, quotient_chi(MarkedGroupSpec::gamma(k), 3, budget), [&](int v) { return v >= 2 * k - 1; });
    });
    row("Gamma even-quotient chi (M=4)", ks, [&](ReportRow& r) {
        chi_row(r, quotient_chi(MarkedGroupSpec::gamma(k), 4, budget), [&](int v) { return v == k; });
    });
    row("two-ended palette (Gamma, 12 orbits)", "<= " + std::to_string(2 * k - 1), [&](ReportRow& r) {
        auto inst = cayley_line(MarkedGroupSpec::gamma(k), 12, LineMode::Cycle).with_chi(k);
        TwoEndedParams p;
        if (k > 3) {
            p.window_blocks = 1;
            p.size_cap = k * k;
        }
        p.budget = budget;
        auto res = color_two_ended(inst, p);
        r.observed = std::to_string(res.colors_used);
        r.status = res.colors_used <= 2 * k - 1 ? S::Pass : S::Fail;
    });
    row("tower palette (20 seeded towers)", "<= " + std::to_string(k + 1), [&](ReportRow& r) {
        int worst = 0;
        for (std::uint64_t i = 0; i < 20; ++i) {
            auto mode = i % 2 == 0 ? LineMode::Segment : LineMode::Cycle;
            worst = std::max(worst, color_tower(random_tower(k, options.seed * 1000 + i, mode)).colors_used());
        }
        r.observed = std::to_string(worst);
        r.status = worst <= k + 1 ? S::Pass : S::Fail;
    });
    return rep;
}

// ---- entry point ----

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite checks of chromatic constructions on Cayley graphs of Z_k^2 x Z extensions", "shadowchi"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--budget-ms", g.budget_ms, "wall-clock budget for exhaustive searches (default: $SHADOWCHI_BUDGET_MS)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--jobs", g.jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized inputs");
    app.add_flag("--json", g.json_out, "print a JSON run report");

    std::function<Outcome()> action;

    CayleyArgs ca;
    auto* cayley = app.add_subcommand("cayley", "export a Cayley graph window or quotient");
    cayley->add_option("--group", ca.group, "delta or gamma");
    cayley->add_option("--k", ca.k);
    cayley->add_option("--lo", ca.lo, "first level");
    cayley->add_option("--hi", ca.hi, "last level");
    cayley->add_option("--M", ca.M, "quotient period (overrides --lo/--hi)");
    cayley->add_option("--format", ca.format, "json or dimacs");
    cayley->add_option("--out", ca.out);
    cayley->callback([&] { action = [&] { return do_cayley(ca); }; });

    ChiArgs xa;
    auto* chi = app.add_subcommand("chi", "exact chromatic number of a JSON or DIMACS graph");
    chi->add_option("graph", xa.file)->required();
    chi->add_flag("--witness", xa.witness, "also print a witness coloring");
    chi->add_option("--out", xa.out, "write the witness here");
    chi->callback([&] { action = [&] { return do_chi(xa, g); }; });

    VerifyArgs da;
    auto* dich = app.add_subcommand("verify-dichotomy", "every (2k-2)-coloring of H is horizontal or vertical");
    dich->add_option("--k", da.k);
    dich->add_option("--palette", da.palette);
    dich->add_option("--symmetry", da.symmetry, "none, pin-first or canonical");
    dich->callback([&] { action = [&] { return from_report(verify_dichotomy(da.k, verify_options(da, g)), da); }; });

    VerifyArgs ia;
    auto* inv = app.add_subcommand("verify-invariance", "orientation of neighboring orbits");
    inv->add_option("--k", ia.k);
    inv->add_option("--twisted", ia.twisted, "true or false")->required();
    inv->add_option("--palette", ia.palette);
    inv->add_option("--symmetry", ia.symmetry, "none, pin-first or canonical");
    inv->callback([&] {
        action = [&] { return from_report(verify_invariance(ia.k, parse_bool(ia.twisted), verify_options(ia, g)), ia); };
    });

    VerifyArgs ra;
    auto* rig = app.add_subcommand("verify-rigidity", "k-colorings of two orbits are coordinate projections");
    rig->add_option("--k", ra.k);
    rig->callback([&] { action = [&] { return from_report(verify_rigidity(ra.k, verify_options(ra, g)), ra); }; });

    TwoEndedArgs ta;
    auto* two = app.add_subcommand("two-ended-color", "separator-based (2chi-1)-coloring");
    two->add_option("--instance", ta.instance, "line instance JSON");
    two->add_option("--builtin", ta.builtin, "path, ladder, delta or gamma");
    two->add_option("--blocks", ta.blocks, "blocks of a builtin instance");
    two->add_option("--k", ta.k, "k for the delta/gamma builtins");
    two->add_option("--mode", ta.mode, "cycle or segment");
    two->add_option("--window", ta.window, "separator window in blocks");
    two->add_option("--cap", ta.cap, "separator size cap");
    two->add_option("--chi", ta.chi, "known chromatic number");
    two->add_option("--out", ta.out, "write the coloring here");
    two->callback([&] { action = [&] { return do_two_ended(ta, g); }; });

    ShiftArgs sa;
    auto* shift = app.add_subcommand("shift-color", "(k+1)-coloring of an anchored tower");
    shift->add_option("--k", sa.k);
    shift->add_option("--anchors", sa.anchors, "anchored tower JSON");
    shift->add_flag("--random", sa.random, "random tower from --seed");
    shift->add_option("--mode", sa.mode, "cycle or segment");
    shift->add_option("--out", sa.out, "write the coloring here");
    shift->callback([&] { action = [&] { return do_shift(sa, g); }; });

    QuotientArgs qa;
    auto* quot = app.add_subcommand("quotient-chi", "exact chromatic number of a finite quotient");
    quot->add_option("--group", qa.group, "delta or gamma");
    quot->add_option("--k", qa.k);
    quot->add_option("--M", qa.M);
    quot->add_option("--export", qa.format, "also export the quotient: dimacs or json");
    quot->add_option("--out", qa.out, "export path");
    quot->callback([&] { action = [&] { return do_quotient_chi(qa, g); }; });

    AlternationArgs aa;
    auto* alt = app.add_subcommand("verify-alternation", "no (2k-2)-coloring of odd twisted quotients");
    alt->add_option("--k", aa.k);
    alt->add_option("--M", aa.M);
    alt->callback([&] { action = [&] { return do_alternation(aa, g); }; });

    int report_k = 3;
    auto* rep = app.add_subcommand("report", "consolidated table of chromatic values");
    rep->add_option("--k", report_k);
    rep->callback([&] {
        action = [&] {
            Outcome o;
            auto r = build_report({report_k, g.seed, g.budget_ms, g.jobs});
            o.parameters = {{"k", report_k}, {"seed", g.seed}};
            o.results = r.to_json();
            o.text = r.to_table();
            o.code = r.exit_code();
            return o;
        };
    });

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> cargs;
    for (const auto& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = action();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const BudgetExhausted& e) {
        err << "undecided: " << e.what() << '\n';
        return kUndecided;
    } catch (const InvariantViolation& e) {
        err << "violation: " << e.what() << '\n';
        return kViolated;
    }
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (g.json_out) {
        std::string command = argv.size() > 1 ? app.get_subcommands().front()->get_name() : "";
        json report{{"command", command},
                    {"argv", join_argv(argv)},
                    {"parameters", o.parameters},
                    {"results", o.results},
                    {"artifacts", o.artifacts},
                    {"timings", {{"wall_ms", ms}}},
                    {"exit_code", o.code}};
        out << report.dump(2) << '\n';
    } else {
        out << o.text;
    }
    return o.code;
}

}  // namespace shadowchi::cli
