#include "fanol2/fanol2.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "fanol2/bounds.hpp"
#include "fanol2/detect.hpp"
#include "fanol2/error.hpp"
#include "fanol2/report.hpp"
#include "fanol2/search.hpp"
#include "fanol2/textio.hpp"
#include "fanol2/verify.hpp"
#include "json.hpp"

struct fl2_object {
    fanol2::AnyGraph graph;
};

namespace {

thread_local std::string last_error;

fl2_status status_of(fanol2::ErrorCode code)
{
    switch (code) {
    case fanol2::ErrorCode::InvalidArgument:
        return FL2_ERR_INVALID_ARGUMENT;
    case fanol2::ErrorCode::OutOfRange:
        return FL2_ERR_OUT_OF_RANGE;
    case fanol2::ErrorCode::Parse:
        return FL2_ERR_PARSE;
    case fanol2::ErrorCode::Capacity:
        return FL2_ERR_CAPACITY;
    case fanol2::ErrorCode::Io:
        return FL2_ERR_IO;
    case fanol2::ErrorCode::Internal:
        return FL2_ERR_INTERNAL;
    }
    return FL2_ERR_INTERNAL;
}

fl2_status set_error(fl2_status s, const std::string& what)
{
    last_error = what;
    return s;
}

template <class F>
fl2_status guard(F&& body)
{
    try {
        last_error.clear();
        body();
        return FL2_OK;
    } catch (const fanol2::Error& e) {
        return set_error(status_of(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return set_error(FL2_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return set_error(FL2_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(FL2_ERR_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char* what)
{
    if (!ok)
        fanol2::fail(fanol2::ErrorCode::InvalidArgument, what);
}

const fanol2::Uniform3Graph& as_3graph(const fl2_object* obj, const char* what)
{
    const auto* h = std::get_if<fanol2::Uniform3Graph>(&obj->graph);
    if (h == nullptr)
        fanol2::fail(fanol2::ErrorCode::InvalidArgument, std::string(what) + " needs a 3graph");
    return *h;
}

std::string join(const std::vector<fanol2::Vertex>& vs)
{
    std::string s;
    for (auto v : vs)
        s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

fanol2::SearchReport aes_as_search(std::size_t n, const fanol2::SearchConfig& config)
{
    const fanol2::AesReport a = fanol2::aes_scan(n, config);
    fanol2::SearchReport r;
    r.objective = "aes";
    r.optimum = a.violations;
    r.witness = a.first_violation;
    r.nodes = a.nodes;
    r.elapsed_seconds = a.elapsed_seconds;
    r.complete = a.complete;
    r.params = {{"n", std::to_string(n)},
                {"workers", std::to_string(fanol2::resolve_workers(config))},
                {"seed", std::to_string(config.seed)},
                {"budget_seconds", std::to_string(config.budget_seconds)}};
    r.details = {{"triangle_free", std::to_string(a.triangle_free)},
                 {"above_threshold", std::to_string(a.above_threshold)},
                 {"tight_nonbipartite", std::to_string(a.tight_nonbipartite)}};
    return r;
}

} // namespace

extern "C" {

const char* fl2_version(void)
{
    return "0.1.0";
}

const char* fl2_last_error(void)
{
    return last_error.c_str();
}

void fl2_string_free(char* s)
{
    std::free(s);
}

fl2_status fl2_object_parse(const char* text, fl2_object** out)
{
    return guard([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new fl2_object{fanol2::parse_any(text)};
    });
}

fl2_status fl2_object_read(const char* path, fl2_object** out)
{
    return guard([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = new fl2_object{fanol2::parse_any(fanol2::read_text_file(path))};
    });
}

void fl2_object_free(fl2_object* obj)
{
    delete obj;
}

fl2_status fl2_object_kind(const fl2_object* obj, fl2_kind* out)
{
    return guard([&] {
        require(obj != nullptr && out != nullptr, "null argument");
        *out = static_cast<fl2_kind>(obj->graph.index());
    });
}

fl2_status fl2_object_to_text(const fl2_object* obj, char** out)
{
    return guard([&] {
        require(obj != nullptr && out != nullptr, "null argument");
        *out = dup(fanol2::format_any(obj->graph));
    });
}

fl2_status fl2_object_stats(const fl2_object* obj, char** out_json)
{
    return guard([&] {
        require(obj != nullptr && out_json != nullptr, "null argument");
        nlohmann::ordered_json j;
        std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, fanol2::Uniform3Graph>) {
                    j["kind"] = "3graph";
                    j["n"] = g.vertex_count();
                    j["size"] = g.edge_count();
                    std::size_t dmin = g.vertex_count() == 0 ? 0 : g.degree(0);
                    for (fanol2::Vertex v = 0; v < g.vertex_count(); ++v)
                        dmin = std::min(dmin, g.degree(v));
                    j["min_degree"] = dmin;
                    j["l2_norm"] = fanol2::to_string(fanol2::lp_norm(g, 2));
                } else if constexpr (std::is_same_v<T, fanol2::SimpleGraph>) {
                    j["kind"] = "graph";
                    j["n"] = g.vertex_count();
                    j["size"] = g.edge_count();
                    j["min_degree"] = g.min_degree();
                    j["l2_norm"] = fanol2::to_string(fanol2::lp_norm(g, 2));
                } else {
                    j["kind"] = "mgraph";
                    j["n"] = g.vertex_count();
                    j["layers"] = g.layer_count();
                    j["size"] = g.size();
                    j["min_degree"] = g.min_degree();
                }
            },
            obj->graph);
        *out_json = dup(j.dump(2));
    });
}

fl2_status fl2_norm(const fl2_object* obj, unsigned p, char** out)
{
    return guard([&] {
        require(obj != nullptr && out != nullptr, "null argument");
        require(p >= 1, "p must be positive");
        if (const auto* h = std::get_if<fanol2::Uniform3Graph>(&obj->graph))
            *out = dup(fanol2::to_string(fanol2::lp_norm(*h, p)));
        else if (const auto* g = std::get_if<fanol2::SimpleGraph>(&obj->graph))
            *out = dup(fanol2::to_string(fanol2::lp_norm(*g, p)));
        else
            fanol2::fail(fanol2::ErrorCode::InvalidArgument, "norms are defined for 3graph and graph files");
    });
}

fl2_status fl2_norm_real(const fl2_object* obj, double p, double* out)
{
    return guard([&] {
        require(obj != nullptr && out != nullptr, "null argument");
        require(std::isfinite(p) && p > 0, "p must be a positive real");
        if (const auto* h = std::get_if<fanol2::Uniform3Graph>(&obj->graph))
            *out = fanol2::lp_norm_real(*h, p);
        else if (const auto* g = std::get_if<fanol2::SimpleGraph>(&obj->graph))
            *out = fanol2::lp_norm_real(*g, p);
        else
            fanol2::fail(fanol2::ErrorCode::InvalidArgument, "norms are defined for 3graph and graph files");
    });
}

fl2_status fl2_l2_summary(const fl2_object* obj, char** out_json)
{
    return guard([&] {
        require(obj != nullptr && out_json != nullptr, "null argument");
        const auto& h = as_3graph(obj, "the l2 degree summary");
        nlohmann::ordered_json j;
        j["norm_l2"] = fanol2::to_string(fanol2::lp_norm(h, 2));
        j["s2_stars"] = fanol2::to_string(fanol2::count_stars(h, 2));
        nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
        for (fanol2::Vertex v = 0; v < h.vertex_count(); ++v)
            degrees.push_back(fanol2::to_string(fanol2::lp_norm_degree(h, v, 2)));
        j["l2_degrees"] = degrees;
        *out_json = dup(j.dump(2));
    });
}

fl2_status fl2_check(const fl2_object* obj, const char* pattern, int* found, char** witness)
{
    return guard([&] {
        require(obj != nullptr && pattern != nullptr && found != nullptr && witness != nullptr, "null argument");
        *witness = nullptr;
        const std::string name = pattern;
        if (name == "k4multi") {
            const auto* mg = std::get_if<fanol2::MMultigraph>(&obj->graph);
            if (mg == nullptr)
                fanol2::fail(fanol2::ErrorCode::InvalidArgument, "pattern k4multi needs an mgraph file");
            const auto w = fanol2::find_k4(*mg);
            *found = w.has_value();
            if (w)
                *witness = dup("layers " + std::to_string(w->layers[0]) + " " + std::to_string(w->layers[1]) + " " +
                               std::to_string(w->layers[2]) + " vertices " +
                               join({w->vertices.begin(), w->vertices.end()}));
            return;
        }
        if (name != "fano" && name != "k53" && name != "bipartite3")
            fanol2::fail(fanol2::ErrorCode::InvalidArgument, "unknown pattern '" + name + "'");
        const auto* h = std::get_if<fanol2::Uniform3Graph>(&obj->graph);
        if (h == nullptr)
            fanol2::fail(fanol2::ErrorCode::InvalidArgument, "pattern " + name + " needs a 3graph file");
        if (name == "bipartite3") {
            const auto parts = fanol2::find_bipartition3(*h);
            *found = !parts.has_value();
            if (parts)
                *witness = dup("part1 " + join(parts->part1) + " | part2 " + join(parts->part2));
            return;
        }
        const auto emb = fanol2::find_embedding(*h, name == "fano" ? fanol2::Pattern3::fano() : fanol2::Pattern3::k53());
        *found = emb.has_value();
        if (emb)
            *witness = dup("embedding " + join(*emb));
    });
}

fl2_status fl2_generate(const char* construction, const uint64_t* params, size_t count, fl2_object** out)
{
    return guard([&] {
        require(construction != nullptr && out != nullptr && (count == 0 || params != nullptr), "null argument");
        const std::string name = construction;
        auto need = [&](std::size_t k) {
            if (count != k)
                fanol2::fail(fanol2::ErrorCode::InvalidArgument,
                             name + " takes " + std::to_string(k) + " parameter" + (k == 1 ? "" : "s"));
        };
        auto arg = [&](std::size_t i) {
            if (params[i] > 4096)
                fanol2::fail(fanol2::ErrorCode::Capacity, "parameters are limited to 4096");
            return static_cast<std::size_t>(params[i]);
        };
        fanol2::AnyGraph g;
        if (name == "bn") {
            need(1);
            g = fanol2::balanced_bipartite3(arg(0));
        } else if (name == "kn3") {
            need(1);
            g = fanol2::complete3(arg(0));
        } else if (name == "cnk") {
            need(2);
            g = fanol2::clique_plus_isolated(arg(0), arg(1));
        } else if (name == "snk") {
            need(2);
            g = fanol2::complement_construction(arg(0), arg(1));
        } else if (name == "shat") {
            need(3);
            g = fanol2::shat(arg(0), arg(1), arg(2));
        } else if (name == "mg-bipartite") {
            need(1);
            g = fanol2::bipartite_construction_5(arg(0));
        } else if (name == "mg-turan") {
            need(1);
            g = fanol2::turan_layers_5(arg(0));
        } else {
            fanol2::fail(fanol2::ErrorCode::InvalidArgument, "unknown construction '" + name + "'");
        }
        *out = new fl2_object{std::move(g)};
    });
}

fl2_status fl2_search(const char* request_json, char** out_json)
{
    return guard([&] {
        require(request_json != nullptr && out_json != nullptr, "null argument");
        const auto req = nlohmann::json::parse(request_json);
        const std::string objective = req.at("objective").get<std::string>();
        const std::int64_t n_signed = req.at("n").get<std::int64_t>();
        if (n_signed < 0)
            fanol2::fail(fanol2::ErrorCode::OutOfRange, "n must be non-negative");
        const auto n = static_cast<std::size_t>(n_signed);
        fanol2::SearchConfig config;
        config.workers = req.value("workers", 0u);
        config.seed = req.value("seed", std::uint64_t{1});
        config.budget_seconds = req.value("budget", 0.0);
        if (config.budget_seconds < 0)
            fanol2::fail(fanol2::ErrorCode::OutOfRange, "budget must be non-negative");

        fanol2::SearchReport r;
        if (objective == "k4multi") {
            const auto engine = fanol2::multigraph_engine_from_string(req.value("engine", std::string("bnb")));
            r = fanol2::max_k4free_multigraph(n, req.value("m", 5u), engine, config);
        } else if (objective == "ak-s2") {
            if (!req.contains("m"))
                fanol2::fail(fanol2::ErrorCode::InvalidArgument, "ak-s2 needs m, the edge count");
            r = fanol2::max_s2_graph(n, req.at("m").get<std::size_t>(), config);
        } else if (objective == "aes") {
            r = aes_as_search(n, config);
        } else if (objective == "fano-l2") {
            r = fanol2::max_l2_fano_free(n, config);
        } else if (objective == "bipartite-l2") {
            r = fanol2::bipartite_l2_scan(n, config);
        } else {
            fanol2::fail(fanol2::ErrorCode::InvalidArgument, "unknown objective '" + objective + "'");
        }
        *out_json = dup(fanol2::to_json(r));
    });
}

fl2_status fl2_verify(const char* suite, uint64_t seed, unsigned workers, double budget_seconds, int* passed,
                      char** out_text, char** out_json)
{
    return guard([&] {
        require(suite != nullptr && passed != nullptr, "null argument");
        require(std::isfinite(budget_seconds) && budget_seconds >= 0, "budget must be non-negative");
        fanol2::VerifyConfig config;
        config.seed = seed;
        config.workers = workers;
        config.budget_seconds = budget_seconds;
        const fanol2::VerifyReport r = fanol2::run_verify(fanol2::suite_from_string(suite), config);
        *passed = r.ok();
        if (out_text != nullptr)
            *out_text = dup(fanol2::format_verify_text(r));
        if (out_json != nullptr)
            *out_json = dup(fanol2::to_json(r));
    });
}

fl2_status fl2_bounds_table(const char* table, double step, char** out_csv)
{
    return guard([&] {
        require(table != nullptr && out_csv != nullptr, "null argument");
        *out_csv = dup(fanol2::bound_table_csv(fanol2::bound_table_from_string(table), step));
    });
}

} // extern "C"
