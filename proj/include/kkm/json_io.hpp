#pragma once

#include "kkm/cake.hpp"
#include "kkm/cover.hpp"
#include "kkm/d_interval.hpp"
#include "kkm/hypergraph.hpp"
#include "kkm/solver.hpp"
#include "kkm/triangulation.hpp"

#include "json.hpp"

#include <memory>
#include <string>
#include <vector>

namespace kkm {

using nlohmann::json;

// Rationals travel as [numerator, denominator] pairs; plain integers are
// accepted on input. Values beyond int64 fall back to decimal strings.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);
Rat rat_from_string(const std::string& s);  // "NUM" or "NUM/DEN"

json point_to_json(const RatPoint& p);
RatPoint point_from_json(const json& j);

// { "type": "simplex", "k": … } | { "type": "simplex_product", "m": …, "d": … }
// | { "type": "explicit", "vertices": …, "faces": …, "p": … }
json polytope_to_json(const PolytopeModel& P);
PolytopeModel polytope_from_json(const json& j);

json triangulation_to_json(const Triangulation& T);

json certificate_to_json(const SolveCertificate& cert, const PolytopeModel& P);
json violation_to_json(const ViolationCertificate& v, const PolytopeModel& P);
json trace_entry_to_json(const TraceEntry& e, const PolytopeModel& P);

json hypergraph_to_json(const Hypergraph& H);
Hypergraph hypergraph_from_json(const json& j);

json piercing_instance_to_json(const PiercingInstance& inst);
PiercingInstance piercing_instance_from_json(const json& j);
json matching_to_json(const ColorfulMatching& M, const PolytopeModel& P);

struct CakeSpec {
    int m = 0, d = 0;
    std::vector<std::unique_ptr<PlayerOracle>> players;

    std::vector<const PlayerOracle*> player_ptrs() const;
};
CakeSpec cake_spec_from_json(const json& j);
json allocation_to_json(const Allocation& a, const PolytopeModel& P);

/// A cover oracle built from JSON, owning whatever data it closes over.
/// Kinds: "max_coord" (closest-vertex half-space cover, optional
/// "empty_colors" and per-color "weights"), "intervals" (inline piercing
/// instance under "instance"), "cake" (inline players under "players").
struct OracleSpec {
    int n = 0;
    std::unique_ptr<CoverOracle> oracle;
    // Keep-alives for data the oracle references.
    std::shared_ptr<PiercingInstance> instance;
    std::shared_ptr<CakeSpec> cake;
};
OracleSpec oracle_from_json(const json& j, const PolytopeModel& P);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace kkm
