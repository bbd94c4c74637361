#include "kkm/json_io.hpp"

#include <fstream>
#include <limits>

namespace kkm {

namespace {

json int_to_json(const Int& z) {
    if (z.fits_slong_p()) return static_cast<long>(z.get_si());
    return z.get_str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error("json: expected an integer or integer string");
}

}  // namespace

json rat_to_json(const Rat& r) {
    return json::array({int_to_json(r.get_num()), int_to_json(r.get_den())});
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer() || j.is_string()) return Rat(int_from_json(j));
    if (j.is_array() && j.size() == 2) {
        Rat r(int_from_json(j[0]), int_from_json(j[1]));
        if (r.get_den() == 0) throw Error("json: rational with zero denominator");
        r.canonicalize();
        return r;
    }
    throw Error("json: expected a rational as integer or [num, den]");
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Rat r(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        if (r.get_den() == 0) throw Error("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("cannot parse rational '" + s + "'");
    }
}

json point_to_json(const RatPoint& p) {
    json a = json::array();
    for (const auto& c : p.coords) a.push_back(rat_to_json(c));
    return a;
}

RatPoint point_from_json(const json& j) {
    if (!j.is_array()) throw Error("json: expected a coordinate array");
    RatPoint p;
    for (const auto& c : j) p.coords.push_back(rat_from_json(c));
    return p;
}

json polytope_to_json(const PolytopeModel& P) {
    json j;
    switch (P.kind()) {
        case PolytopeModel::Kind::Simplex:
            j["type"] = "simplex";
            j["k"] = P.simplex_order();
            break;
        case PolytopeModel::Kind::SimplexProduct:
            j["type"] = "simplex_product";
            j["m"] = P.product_m();
            j["d"] = P.product_d();
            break;
        case PolytopeModel::Kind::Explicit: {
            j["type"] = "explicit";
            json vs = json::array();
            for (const auto& v : P.vertices()) vs.push_back(point_to_json(v));
            j["vertices"] = vs;
            json fs = json::array();
            for (const auto& f : P.faces()) fs.push_back(f.vertex_ids);
            j["faces"] = fs;
            j["p"] = point_to_json(P.reference_point());
            break;
        }
    }
    return j;
}

PolytopeModel polytope_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "simplex") return PolytopeModel::simplex(j.at("k").get<int>());
    if (type == "simplex_product")
        return PolytopeModel::simplex_product(j.at("m").get<int>(), j.at("d").get<int>());
    if (type == "explicit") {
        std::vector<RatPoint> verts;
        for (const auto& v : j.at("vertices")) verts.push_back(point_from_json(v));
        std::vector<std::vector<int>> faces;
        for (const auto& f : j.at("faces")) faces.push_back(f.get<std::vector<int>>());
        return PolytopeModel::from_data(std::move(verts), std::move(faces),
                                        point_from_json(j.at("p")));
    }
    throw Error("json: unknown polytope type '" + type + "'");
}

json triangulation_to_json(const Triangulation& T) {
    json j;
    json vs = json::array();
    for (const auto& v : T.verts()) vs.push_back(point_to_json(v));
    j["vertices"] = vs;
    j["cells"] = T.maximal();
    return j;
}

namespace {

json face_to_json(FaceId tau, const PolytopeModel& P) {
    if (tau == kWholePolytope) return nullptr;
    return P.face(tau).vertex_ids;
}

}  // namespace

json certificate_to_json(const SolveCertificate& cert, const PolytopeModel& P) {
    json j;
    j["pi"] = cert.pi;
    json faces = json::array();
    for (FaceId t : cert.tau) faces.push_back(face_to_json(t, P));
    j["faces"] = faces;
    json ws = json::array();
    for (const auto& w : cert.witness) ws.push_back(point_to_json(w));
    j["witness"] = ws;
    json cs = json::array();
    for (const auto& c : cert.coeffs) cs.push_back(rat_to_json(c));
    j["coeffs"] = cs;
    j["eps"] = rat_to_json(cert.eps);
    return j;
}

json violation_to_json(const ViolationCertificate& v, const PolytopeModel& P) {
    json j;
    j["x"] = point_to_json(v.x);
    j["colors"] = v.colors;
    j["sigma"] = face_to_json(v.sigma, P);
    return j;
}

json trace_entry_to_json(const TraceEntry& e, const PolytopeModel& P) {
    json j;
    j["iteration"] = e.iteration;
    j["j"] = e.j;
    j["chosen_vertex"] = e.chosen_vertex;
    j["new_vertex"] = e.new_vertex;
    j["coords"] = point_to_json(e.new_coords);
    j["color"] = e.color;
    j["tau"] = face_to_json(e.tau, P);
    return j;
}

json hypergraph_to_json(const Hypergraph& H) {
    json j;
    j["vertices"] = H.n_vertices;
    j["edges"] = H.edges;
    if (H.parts) j["parts"] = *H.parts;
    return j;
}

Hypergraph hypergraph_from_json(const json& j) {
    Hypergraph H;
    H.n_vertices = j.at("vertices").get<int>();
    H.edges = j.at("edges").get<std::vector<std::vector<int>>>();
    if (j.contains("parts") && !j["parts"].is_null())
        H.parts = j["parts"].get<std::vector<std::vector<int>>>();
    H.validate();
    return H;
}

json piercing_instance_to_json(const PiercingInstance& inst) {
    json j;
    j["variant"] = inst.variant == PiercingVariant::General ? "general" : "separated";
    j["d"] = inst.d;
    if (inst.variant == PiercingVariant::General)
        j["k"] = inst.k;
    else
        j["m"] = inst.m;
    json fams = json::array();
    for (const auto& fam : inst.families) {
        json fj = json::array();
        for (const auto& f : fam) {
            json comps = json::array();
            for (const auto& [a, b] : f.comps)
                comps.push_back(json::array({rat_to_json(a), rat_to_json(b)}));
            fj.push_back(comps);
        }
        fams.push_back(fj);
    }
    j["families"] = fams;
    return j;
}

PiercingInstance piercing_instance_from_json(const json& j) {
    PiercingInstance inst;
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "general")
        inst.variant = PiercingVariant::General;
    else if (variant == "separated")
        inst.variant = PiercingVariant::Separated;
    else
        throw Error("json: unknown piercing variant '" + variant + "'");
    inst.d = j.at("d").get<int>();
    if (inst.variant == PiercingVariant::General)
        inst.k = j.at("k").get<int>();
    else
        inst.m = j.at("m").get<int>();
    for (const auto& fj : j.at("families")) {
        std::vector<DInterval> fam;
        for (const auto& mj : fj) {
            DInterval f;
            for (const auto& cj : mj) {
                if (!cj.is_array() || cj.size() != 2)
                    throw Error("json: interval component must be [a, b]");
                f.comps.emplace_back(rat_from_json(cj[0]), rat_from_json(cj[1]));
            }
            fam.push_back(std::move(f));
        }
        inst.families.push_back(std::move(fam));
    }
    inst.validate();
    return inst;
}

json matching_to_json(const ColorfulMatching& M, const PolytopeModel& P) {
    json j;
    json members = json::array();
    for (const auto& [fam, member] : M.members) members.push_back(json::array({fam, member}));
    j["members"] = members;
    j["certificate"] = certificate_to_json(M.certificate, P);
    return j;
}

std::vector<const PlayerOracle*> CakeSpec::player_ptrs() const {
    std::vector<const PlayerOracle*> out;
    for (const auto& p : players) out.push_back(p.get());
    return out;
}

CakeSpec cake_spec_from_json(const json& j) {
    CakeSpec spec;
    spec.m = j.at("m").get<int>();
    spec.d = j.at("d").get<int>();
    for (const auto& pj : j.at("players")) {
        const std::string model = pj.at("model").get<std::string>();
        if (model != "hungry_max")
            throw Error("json: unknown player model '" + model + "'");
        std::vector<std::vector<HungryMaxPlayer::Segment>> densities;
        for (const auto& cake : pj.at("densities")) {
            std::vector<HungryMaxPlayer::Segment> segs;
            for (const auto& sj : cake) {
                if (!sj.is_array() || sj.size() != 3)
                    throw Error("json: density segment must be [value, from, to]");
                segs.push_back({rat_from_json(sj[0]), rat_from_json(sj[1]), rat_from_json(sj[2])});
            }
            densities.push_back(std::move(segs));
        }
        spec.players.push_back(
            std::make_unique<HungryMaxPlayer>(spec.m, spec.d, std::move(densities)));
    }
    return spec;
}

json allocation_to_json(const Allocation& a, const PolytopeModel& P) {
    json j;
    json shares = json::array();
    for (const auto& [player, tuple] : a.shares)
        shares.push_back(json{{"player", player}, {"tuple", tuple}});
    j["shares"] = shares;
    json cuts = json::array();
    for (int t = 0; t < a.partition.d; ++t) {
        json c = json::array();
        for (const auto& r : a.partition.cuts(t)) c.push_back(rat_to_json(r));
        cuts.push_back(c);
    }
    j["partition"] = json{{"x", point_to_json(a.partition.x)}, {"cuts", cuts}};
    j["certificate"] = certificate_to_json(a.certificate, P);
    j["rounds"] = a.rounds;
    return j;
}

OracleSpec oracle_from_json(const json& j, const PolytopeModel& P) {
    OracleSpec spec;
    const std::string type = j.at("type").get<std::string>();
    if (type == "max_coord") {
        spec.n = j.at("n").get<int>();
        std::vector<int> empty_colors;
        if (j.contains("empty_colors")) empty_colors = j["empty_colors"].get<std::vector<int>>();
        std::vector<std::vector<Rat>> weights;
        if (j.contains("weights"))
            for (const auto& wj : j["weights"]) {
                std::vector<Rat> w;
                for (const auto& c : wj) w.push_back(rat_from_json(c));
                weights.push_back(std::move(w));
            }
        spec.oracle = std::make_unique<MaxCoordCover>(P, spec.n, std::move(empty_colors),
                                                      std::move(weights));
        return spec;
    }
    if (type == "intervals") {
        spec.instance = std::make_shared<PiercingInstance>(
            normalize(piercing_instance_from_json(j.at("instance"))));
        spec.n = spec.instance->colors();
        spec.oracle = spec.instance->variant == PiercingVariant::General
                          ? interval_cover_oracle(*spec.instance, P)
                          : separated_cover_oracle(*spec.instance, P);
        return spec;
    }
    if (type == "cake") {
        spec.cake = std::make_shared<CakeSpec>(cake_spec_from_json(j));
        spec.n = static_cast<int>(spec.cake->players.size());
        spec.oracle = preference_cover_oracle(spec.cake->player_ptrs(), P);
        return spec;
    }
    throw Error("json: unknown oracle type '" + type + "'");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace kkm
