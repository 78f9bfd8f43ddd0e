// Command-line front end. Talks to the library only through the C API.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fanol2/fanol2.h"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

struct ApiError {
    fl2_status status;
    std::string message;
};

void check(fl2_status s)
{
    if (s != FL2_OK)
        throw ApiError{s, fl2_last_error()};
}

struct ObjectDeleter {
    void operator()(fl2_object* o) const { fl2_object_free(o); }
};
using Object = std::unique_ptr<fl2_object, ObjectDeleter>;

std::string take(char* s)
{
    std::string out = s == nullptr ? "" : s;
    fl2_string_free(s);
    return out;
}

Object read_object(const std::string& path)
{
    fl2_object* raw = nullptr;
    check(fl2_object_read(path.c_str(), &raw));
    return Object(raw);
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw ApiError{FL2_ERR_IO, "cannot write '" + path + "'"};
}

int run_norm(const std::string& file, double p)
{
    const Object obj = read_object(file);
    if (p == std::floor(p) && p >= 1 && p <= 64) {
        char* s = nullptr;
        check(fl2_norm(obj.get(), static_cast<unsigned>(p), &s));
        std::cout << "norm_p" << static_cast<unsigned>(p) << " " << take(s) << "\n";
    } else {
        double value = 0;
        check(fl2_norm_real(obj.get(), p, &value));
        std::cout << "norm_p" << p << " " << std::setprecision(12) << value << "\n";
    }
    fl2_kind kind{};
    check(fl2_object_kind(obj.get(), &kind));
    if (p == 2 && kind == FL2_KIND_3GRAPH) {
        char* s = nullptr;
        check(fl2_l2_summary(obj.get(), &s));
        const auto j = nlohmann::json::parse(take(s));
        std::cout << "s2_stars " << j["s2_stars"].get<std::string>() << "\n";
        const auto& deg = j["l2_degrees"];
        if (!deg.empty()) {
            // Degrees are decimal strings; compare by length then lexicographically.
            auto less = [](const std::string& a, const std::string& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
            };
            std::size_t lo = 0, hi = 0;
            for (std::size_t v = 1; v < deg.size(); ++v) {
                if (less(deg[v].get<std::string>(), deg[lo].get<std::string>()))
                    lo = v;
                if (less(deg[hi].get<std::string>(), deg[v].get<std::string>()))
                    hi = v;
            }
            std::cout << "l2_degree_min " << deg[lo].get<std::string>() << " (vertex " << lo << ")\n"
                      << "l2_degree_max " << deg[hi].get<std::string>() << " (vertex " << hi << ")\n";
        }
    }
    return kOk;
}

int run_check(const std::string& file, const std::string& pattern)
{
    const Object obj = read_object(file);
    int found = 0;
    char* witness = nullptr;
    check(fl2_check(obj.get(), pattern.c_str(), &found, &witness));
    const std::string w = take(witness);
    if (pattern == "bipartite3")
        std::cout << (found ? "not bipartite" : "bipartite") << "\n";
    else
        std::cout << (found ? "found" : "absent") << "\n";
    if (!w.empty())
        std::cout << w << "\n";
    return found ? kFound : kOk;
}

int run_gen(const std::string& construction, const std::vector<std::uint64_t>& params, const std::string& out)
{
    fl2_object* raw = nullptr;
    check(fl2_generate(construction.c_str(), params.data(), params.size(), &raw));
    const Object obj(raw);
    char* text = nullptr;
    check(fl2_object_to_text(obj.get(), &text));
    const std::string body = take(text);
    if (out.empty())
        std::cout << body;
    else
        write_file(out, body);
    char* stats = nullptr;
    check(fl2_object_stats(obj.get(), &stats));
    const auto j = nlohmann::ordered_json::parse(take(stats));
    for (const auto& [k, v] : j.items())
        (out.empty() ? std::cerr : std::cout) << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return kOk;
}

int run_verify(const std::string& suite, double budget, unsigned workers, std::uint64_t seed, const std::string& out)
{
    int passed = 0;
    char* text = nullptr;
    char* json = nullptr;
    check(fl2_verify(suite.c_str(), seed, workers, budget, &passed, &text, &json));
    std::cout << take(text);
    const std::string body = take(json);
    if (!out.empty())
        write_file(out, body + "\n");
    return passed ? kOk : kFound;
}

int run_search(const nlohmann::json& request, const std::string& out)
{
    char* json = nullptr;
    check(fl2_search(request.dump().c_str(), &json));
    const std::string body = take(json);
    const auto j = nlohmann::ordered_json::parse(body);
    std::cout << "objective " << j["objective"].get<std::string>() << "\n"
              << "optimum " << j["optimum"].get<std::string>() << "\n"
              << "complete " << (j["complete"].get<bool>() ? "true" : "false") << "\n"
              << "nodes " << j["nodes"].get<std::uint64_t>() << "\n";
    for (const auto& [k, v] : j["details"].items())
        std::cout << k << " " << v.get<std::string>() << "\n";
    if (!out.empty())
        write_file(out, body + "\n");
    return kOk;
}

int run_bounds(const std::string& table, double step, const std::string& out)
{
    char* csv = nullptr;
    check(fl2_bounds_table(table.c_str(), step, &csv));
    const std::string body = take(csv);
    if (out.empty())
        std::cout << body;
    else
        write_file(out, body);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verification workbench for l2-norm Turan problems of the Fano plane"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fl2_version()));

    std::string file, pattern, construction, suite = "all", objective, engine = "bnb", out, table = "ak";
    std::vector<std::uint64_t> params;
    double p = 2, budget = 0, step = 0.01;
    unsigned workers = 0;
    std::uint64_t seed = 1;
    std::int64_t n = 0, m = -1;

    auto* norm = app.add_subcommand("norm", "Print the l_p norm of a 3graph or graph file");
    norm->add_option("file", file, "Input file")->required();
    norm->add_option("--p", p, "Exponent (positive real)")->check(CLI::PositiveNumber);

    auto* chk = app.add_subcommand("check", "Look for a pattern; exit 1 when found");
    chk->add_option("file", file, "Input file")->required();
    chk->add_option("--pattern", pattern, "fano | k53 | k4multi | bipartite3")
        ->required()
        ->check(CLI::IsMember({"fano", "k53", "k4multi", "bipartite3"}));

    auto* gen = app.add_subcommand("gen", "Write a construction in the matching text format");
    gen->add_option("--construction", construction, "bn | kn3 | cnk | snk | shat | mg-bipartite | mg-turan")
        ->required()
        ->check(CLI::IsMember({"bn", "kn3", "cnk", "snk", "shat", "mg-bipartite", "mg-turan"}));
    gen->add_option("--params", params, "Integer parameters")->required()->delimiter(',');
    gen->add_option("--out", out, "Output file (standard output when omitted)");

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", suite, "identities | lemma51 | roots | constructions | oracles | all")
        ->check(CLI::IsMember({"identities", "lemma51", "roots", "constructions", "oracles", "all"}));
    ver->add_option("--budget", budget, "Wall-clock budget in seconds (0 = unlimited)")->check(CLI::NonNegativeNumber);
    ver->add_option("--workers", workers, "Worker threads (0 = all cores)");
    ver->add_option("--seed", seed, "Random seed");
    ver->add_option("--out", out, "JSON report path");

    auto* srch = app.add_subcommand("search", "Run an exhaustive or branch-and-bound oracle");
    srch->add_option("--objective", objective, "k4multi | ak-s2 | aes | fano-l2 | bipartite-l2")
        ->required()
        ->check(CLI::IsMember({"k4multi", "ak-s2", "aes", "fano-l2", "bipartite-l2"}));
    srch->add_option("--n", n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
    srch->add_option("--m", m, "Layer count (k4multi) or edge count (ak-s2)")->check(CLI::NonNegativeNumber);
    srch->add_option("--engine", engine, "exhaustive | bnb")->check(CLI::IsMember({"exhaustive", "bnb"}));
    srch->add_option("--budget", budget, "Wall-clock budget in seconds (0 = unlimited)")->check(CLI::NonNegativeNumber);
    srch->add_option("--workers", workers, "Worker threads (0 = all cores)");
    srch->add_option("--seed", seed, "Random seed");
    srch->add_option("--out", out, "JSON report path");

    auto* bnd = app.add_subcommand("bounds", "Tabulate a bound function as CSV");
    bnd->add_option("--table", table, "ak | prop23 | f")->check(CLI::IsMember({"ak", "prop23", "f"}));
    bnd->add_option("--grid,--step", step, "Grid step in (0, 1/2]");
    bnd->add_option("--out", out, "CSV path (standard output when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*norm)
            return run_norm(file, p);
        if (*chk)
            return run_check(file, pattern);
        if (*gen)
            return run_gen(construction, params, out);
        if (*ver)
            return run_verify(suite, budget, workers, seed, out);
        if (*srch) {
            nlohmann::json req = {{"objective", objective}, {"n", n},         {"engine", engine},
                                  {"budget", budget},       {"workers", workers}, {"seed", seed}};
            if (m >= 0)
                req["m"] = m;
            return run_search(req, out);
        }
        if (*bnd)
            return run_bounds(table, step, out);
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kUsage;
    }
    return kUsage;
}
