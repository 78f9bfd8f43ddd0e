#include "fanol2/report.hpp"

#include "json.hpp"

namespace fanol2 {

namespace {

using ordered = nlohmann::ordered_json;

ordered key_values(const KeyValues& kv)
{
    ordered out = ordered::object();
    for (const auto& [k, v] : kv)
        out[k] = v;
    return out;
}

} // namespace

std::string to_json(const SearchReport& r, int indent)
{
    ordered j;
    j["objective"] = r.objective;
    j["optimum"] = to_string(r.optimum);
    j["witness"] = r.witness;
    j["nodes"] = r.nodes;
    j["complete"] = r.complete;
    j["params"] = key_values(r.params);
    j["details"] = key_values(r.details);
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j.dump(indent);
}

std::string to_json(const Lemma51Report& r, int indent)
{
    ordered j;
    j["ok"] = r.ok();
    j["states"] = r.states;
    j["k4_free"] = r.k4_free;
    j["max_size"] = r.max_size;
    j["histogram"] = r.histogram;
    j["size25_count"] = r.size25_count;
    j["size25_is_family"] = r.size25_is_family;
    j["violations"] = r.violations;
    j["sample23"] = r.sample23;
    j["sample23_saturated"] = r.sample23_saturated;
    j["first_violation"] = r.first_violation;
    j["complete"] = r.complete;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j.dump(indent);
}

std::string to_json(const S2Profile& r, int indent)
{
    ordered j;
    j["n"] = r.n;
    ordered rows = ordered::array();
    for (std::size_t m = 0; m < r.best.size(); ++m)
        rows.push_back({{"m", m},
                        {"best", to_string(r.best[m])},
                        {"family", to_string(r.family[m])},
                        {"witness_mask", r.witness[m]}});
    j["rows"] = rows;
    j["graphs"] = r.graphs;
    j["complete"] = r.complete;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j.dump(indent);
}

std::string to_json(const AesReport& r, int indent)
{
    ordered j;
    j["n"] = r.n;
    j["triangle_free"] = r.triangle_free;
    j["above_threshold"] = r.above_threshold;
    j["violations"] = r.violations;
    j["tight_nonbipartite"] = r.tight_nonbipartite;
    j["first_violation"] = r.first_violation;
    j["nodes"] = r.nodes;
    j["complete"] = r.complete;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j.dump(indent);
}

std::string to_json(const BipartiteScanReport& r, int indent)
{
    ordered j;
    j["n"] = r.n;
    j["max_norm"] = to_string(r.max_norm);
    j["closed_form"] = to_string(r.closed_form);
    j["maximizers"] = r.maximizers;
    j["all_isomorphic_to_bn"] = r.all_isomorphic_to_bn;
    j["graphs"] = r.graphs;
    j["complete"] = r.complete;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j.dump(indent);
}

} // namespace fanol2
