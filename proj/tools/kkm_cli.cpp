#include "kkm/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace kkm;

struct CommonOpts {
    std::string input;
    std::string eps;
    unsigned long seed = 1;
    bool trace = false;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
    auto* in = cmd->add_option("input", o.input, "input JSON file");
    if (needs_input) in->required();
    cmd->add_option("--eps", o.eps, "target diameter as NUM/DEN");
    cmd->add_option("--seed", o.seed, "sampling seed");
    cmd->add_flag("--trace", o.trace, "log elimination steps as JSON lines");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
}

void emit(const CommonOpts& o, const json& j) {
    if (o.out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(o.out, j);
}

void emit_trace(const CommonOpts& o, const std::vector<TraceEntry>& entries,
                const PolytopeModel& P) {
    if (!o.trace) return;
    std::ostream* os = &std::cerr;
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out + ".trace.jsonl");
        os = &file;
    }
    for (const auto& e : entries) *os << trace_entry_to_json(e, P).dump() << "\n";
}

Rat pick_eps(const CommonOpts& o, const json& input, const Rat& fallback) {
    if (!o.eps.empty()) return rat_from_string(o.eps);
    if (input.contains("eps")) return rat_from_json(input["eps"]);
    return fallback;
}

AnchorTable anchors_from_input(const json& input, const PolytopeModel& P, int n) {
    if (!input.contains("anchors")) return default_anchors(P, n);
    AnchorTable a;
    for (const auto& row : input["anchors"]) {
        std::vector<RatPoint> pts;
        for (const auto& pj : row) pts.push_back(point_from_json(pj));
        a.y.push_back(std::move(pts));
    }
    if (a.y.size() != static_cast<std::size_t>(n) ||
        (n > 0 && a.y[0].size() != P.faces().size()))
        throw Error("anchors: need one point per color per face");
    return a;
}

int cmd_solve_kkm(const CommonOpts& o) {
    json input = load_json_file(o.input);
    PolytopeModel P = polytope_from_json(input.at("polytope"));
    OracleSpec spec = oracle_from_json(input.at("oracle"), P);
    AnchorTable anchors = anchors_from_input(input, P, spec.n);
    Rat eps = pick_eps(o, input, rat(1, 16));

    std::vector<TraceEntry> entries;
    SolveOptions opts;
    if (o.trace) opts.elimination.trace = &entries;
    try {
        SolveCertificate cert = solve(P, *spec.oracle, anchors, eps, opts);
        emit_trace(o, entries, P);
        emit(o, certificate_to_json(cert, P));
        return 0;
    } catch (const CoverViolation& v) {
        emit_trace(o, entries, P);
        emit(o, json{{"violation", violation_to_json(v.certificate, P)},
                     {"message", v.what()}});
        return 2;
    }
}

int cmd_pierce(const CommonOpts& o) {
    json input = load_json_file(o.input);
    PiercingInstance inst = piercing_instance_from_json(input.contains("instance")
                                                            ? input["instance"]
                                                            : input);
    PierceOptions opts;
    if (!o.eps.empty())
        opts.eps = rat_from_string(o.eps);
    else if (input.contains("eps"))
        opts.eps = rat_from_json(input["eps"]);
    std::vector<TraceEntry> entries;
    if (o.trace) opts.solve.elimination.trace = &entries;

    const bool sep = inst.variant == PiercingVariant::Separated && inst.d > 1;
    PolytopeModel P =
        sep ? PolytopeModel::simplex_product(inst.m, inst.d)
            : PolytopeModel::simplex(inst.variant == PiercingVariant::General ? inst.k : inst.m);
    try {
        ColorfulMatching M = pierce(inst, opts);
        emit_trace(o, entries, P);
        emit(o, matching_to_json(M, P));
        return 0;
    } catch (const HypothesisViolation& v) {
        json cover = json::array();
        for (const auto& r : v.piercing_set) cover.push_back(rat_to_json(r));
        emit(o, json{{"failing_colors", v.colors},
                     {"piercing_set", cover},
                     {"message", v.what()}});
        return 2;
    } catch (const CoverViolation& v) {
        emit_trace(o, entries, P);
        emit(o, json{{"violation", violation_to_json(v.certificate, P)},
                     {"message", v.what()}});
        return 2;
    }
}

int cmd_divide(const CommonOpts& o) {
    json input = load_json_file(o.input);
    CakeSpec spec = cake_spec_from_json(input);
    Rat eps = pick_eps(o, input, rat(1, 16));
    PolytopeModel P = PolytopeModel::simplex_product(spec.m, spec.d);
    DivideOptions opts;
    std::vector<TraceEntry> entries;
    if (o.trace) opts.solve.elimination.trace = &entries;
    try {
        Allocation a = divide(spec.player_ptrs(), spec.m, spec.d, eps, opts);
        emit_trace(o, entries, P);
        emit(o, allocation_to_json(a, P));
        return 0;
    } catch (const CoverViolation& v) {
        emit_trace(o, entries, P);
        emit(o, json{{"violation", violation_to_json(v.certificate, P)},
                     {"message", v.what()}});
        return 2;
    }
}

int cmd_hypergraph(const CommonOpts& o) {
    json input = load_json_file(o.input);
    Hypergraph H = hypergraph_from_json(input.contains("hypergraph") ? input["hypergraph"]
                                                                     : input);
    json report;
    report["nu"] = matching_number(H);
    report["tau"] = covering_number(H);
    auto [nustar, weights] = fractional_matching_number(H);
    report["nu_star"] = rat_to_json(nustar);
    json wj = json::array();
    for (const auto& w : weights) wj.push_back(rat_to_json(w));
    report["nu_star_weights"] = wj;
    const int d = std::max(2, H.rank());
    report["d"] = d;
    report["matching_lower_bound"] = rat_to_json(furedi_matching_bound(H, d));
    if (auto pfm = perfect_fractional_matching(H)) {
        report["perfect_fractional_matching"] = true;
        report["nu_star_lower_bound"] = rat_to_json(rank_lower_bound_nustar(H, d));
    } else {
        report["perfect_fractional_matching"] = false;
    }
    emit(o, report);
    return 0;
}

int cmd_check_cover(const CommonOpts& o) {
    json input = load_json_file(o.input);
    PolytopeModel P = polytope_from_json(input.at("polytope"));
    OracleSpec spec = oracle_from_json(input.at("oracle"), P);
    const int m = input.value("m", spec.n);
    const int samples = input.value("samples", 32);
    if (auto v = falsify_weak_cover(*spec.oracle, P, m, samples, o.seed)) {
        emit(o, json{{"violation", violation_to_json(*v, P)}});
        return 2;
    }
    emit(o, json{{"violation", nullptr}, {"samples", samples}, {"m", m}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colorful KKM solver: covers, piercing, and cake division"};
    app.require_subcommand(1);

    CommonOpts solve_o, pierce_o, divide_o, hyper_o, check_o;
    auto* c_solve = app.add_subcommand("solve-kkm", "run the cover solver on a polytope");
    add_common(c_solve, solve_o);
    auto* c_pierce = app.add_subcommand("pierce", "colorful d-interval piercing");
    add_common(c_pierce, pierce_o);
    auto* c_divide = app.add_subcommand("divide", "multi-cake fair division");
    add_common(c_divide, divide_o);
    auto* c_hyper = app.add_subcommand("hypergraph", "matching/covering numbers report");
    add_common(c_hyper, hyper_o);
    auto* c_check = app.add_subcommand("check-cover", "sample-based cover falsification");
    add_common(c_check, check_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_solve->parsed()) return cmd_solve_kkm(solve_o);
        if (c_pierce->parsed()) return cmd_pierce(pierce_o);
        if (c_divide->parsed()) return cmd_divide(divide_o);
        if (c_hyper->parsed()) return cmd_hypergraph(hyper_o);
        if (c_check->parsed()) return cmd_check_cover(check_o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
