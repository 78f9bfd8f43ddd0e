#include "fanol2/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "fanol2/bounds.hpp"
#include "fanol2/detect.hpp"
#include "fanol2/error.hpp"
#include "fanol2/hypercore.hpp"
#include "fanol2/multigraph.hpp"
#include "fanol2/search.hpp"
#include "fanol2/textio.hpp"
#include "json.hpp"
#include "search_util.hpp"

namespace fanol2 {

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Skipped:
        return "skipped";
    }
    return "?";
}

const char* to_string(Suite s)
{
    switch (s) {
    case Suite::Identities:
        return "identities";
    case Suite::Lemma51:
        return "lemma51";
    case Suite::Roots:
        return "roots";
    case Suite::Constructions:
        return "constructions";
    case Suite::Oracles:
        return "oracles";
    case Suite::All:
        return "all";
    }
    return "?";
}

Suite suite_from_string(const std::string& name)
{
    for (Suite s : {Suite::Identities, Suite::Lemma51, Suite::Roots, Suite::Constructions, Suite::Oracles, Suite::All})
        if (name == to_string(s))
            return s;
    fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

std::size_t VerifyReport::count(CheckStatus s) const
{
    std::size_t c = 0;
    for (const Check& ch : checks)
        c += ch.status == s;
    return c;
}

namespace {

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string fraction(std::uint64_t good, std::uint64_t total)
{
    return std::to_string(good) + "/" + std::to_string(total);
}

class Runner {
public:
    Runner(const VerifyConfig& config, detail::Deadline& deadline, std::vector<Check>& out)
        : config_(config), deadline_(deadline), out_(out)
    {
    }

    void exact(const std::string& id, bool ok, std::string measured, std::string expected, std::string note = {})
    {
        out_.push_back({id, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(measured), std::move(expected),
                        "exact", std::move(note)});
    }

    void near(const std::string& id, double measured, double expected, double tol)
    {
        const bool ok = std::isfinite(measured) && std::abs(measured - expected) <= tol;
        out_.push_back({id, ok ? CheckStatus::Pass : CheckStatus::Fail, fmt(measured), fmt(expected), fmt(tol), {}});
    }

    void skip(const std::string& id, std::string reason)
    {
        out_.push_back({id, CheckStatus::Skipped, {}, {}, {}, std::move(reason)});
    }

    /// Runs `body`, turning a thrown library error into a failed check.
    void guarded(const std::string& id, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            out_.push_back({id, CheckStatus::Fail, {}, {}, "exact", std::string("error: ") + e.what()});
        }
    }

    SearchConfig search_config(double fallback_budget = 0) const
    {
        SearchConfig c;
        c.workers = config_.workers;
        c.seed = config_.seed;
        c.budget_seconds = remaining();
        if (c.budget_seconds == 0)
            c.budget_seconds = fallback_budget;
        return c;
    }

    /// Seconds left, 0 when unlimited.
    double remaining() const
    {
        if (config_.budget_seconds <= 0)
            return 0;
        return std::max(1e-3, config_.budget_seconds - deadline_.elapsed());
    }

    bool out_of_budget() { return config_.budget_seconds > 0 && deadline_.elapsed() >= config_.budget_seconds; }

    const VerifyConfig& config() const { return config_; }

private:
    const VerifyConfig& config_;
    detail::Deadline& deadline_;
    std::vector<Check>& out_;
};

// --- roots --------------------------------------------------------------------

void suite_roots(Runner& run)
{
    run.guarded("decimal", [&] {
        for (const NamedDecimal& d : reference_decimals())
            run.near("decimal." + d.id, d.measured, d.expected, 5e-6);
    });
    // For n = 2k, min d_2(B_n) = 10k^3 - 39k^2/2 + 19k/2, so the degree ratio
    // sits 39/(8n) - O(1/n^2) below 5/4.
    for (std::uint64_t n : {100u, 1000u, 10000u}) {
        const DensityStats s = extremal_density_stats(n);
        run.near("density.norm_ratio_n" + std::to_string(n), s.norm_ratio, 5.0 / 16.0, 1.2 / n);
        run.near("density.degree_ratio_n" + std::to_string(n), s.degree_ratio, 5.0 / 4.0, 5.0 / n);
        const BigInt k = n / 2;
        const BigInt closed = (20 * k * k * k - 39 * k * k + 19 * k) / 2;
        run.exact("density.min_degree_closed_form_n" + std::to_string(n), s.min_l2_degree == closed,
                  to_string(s.min_l2_degree), to_string(closed));
    }
}

// --- identities ---------------------------------------------------------------

Uniform3Graph random_3graph(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution keep(p);
    std::vector<Triple> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (keep(rng))
                    edges.push_back({a, b, c});
    return Uniform3Graph(n, edges);
}

struct Participation {
    std::uint64_t max_edge = 0;
    std::uint64_t max_vertex = 0;
    std::uint64_t max_pair = 0;
};

// Copies of S_2 are unordered pairs of edges meeting in exactly two vertices.
Participation s2_participation(const Uniform3Graph& h)
{
    const std::size_t n = h.vertex_count();
    const auto edges = h.edges();
    std::vector<std::uint64_t> per_edge(edges.size(), 0), per_vertex(n, 0), per_pair(n * n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const std::array<Vertex, 3> e{edges[i].a, edges[i].b, edges[i].c};
            const std::array<Vertex, 3> f{edges[j].a, edges[j].b, edges[j].c};
            std::set<Vertex> span(e.begin(), e.end());
            span.insert(f.begin(), f.end());
            if (span.size() != 4)
                continue;
            ++per_edge[i];
            ++per_edge[j];
            for (Vertex v : span)
                ++per_vertex[v];
            for (Vertex u : span)
                for (Vertex v : span)
                    if (u < v)
                        ++per_pair[u * n + v];
        }
    Participation p;
    for (auto x : per_edge)
        p.max_edge = std::max(p.max_edge, x);
    for (auto x : per_vertex)
        p.max_vertex = std::max(p.max_vertex, x);
    for (auto x : per_pair)
        p.max_pair = std::max(p.max_pair, x);
    return p;
}

void suite_identities(Runner& run)
{
    constexpr std::uint64_t kInstances = 500;
    std::mt19937_64 rng(run.config().seed);
    std::uniform_int_distribution<std::size_t> pick_n(3, 12);
    std::uniform_real_distribution<double> pick_p(0.05, 0.95);

    std::uint64_t norm_stars = 0, degree_forms = 0, degree_sum = 0, deletion = 0;
    std::uint64_t part_edge = 0, part_vertex = 0, part_pair = 0, stirling = 0, stirling_total = 0;
    const StirlingTable table(5);

    for (std::uint64_t t = 0; t < kInstances; ++t) {
        const std::size_t n = pick_n(rng);
        const Uniform3Graph h = random_3graph(rng, n, pick_p(rng));
        const BigInt norm = lp_norm(h, 2);
        const BigInt size = h.edge_count();

        norm_stars += norm == 2 * count_stars(h, 2) + 3 * size;

        bool forms = true;
        BigInt sum = 0;
        for (Vertex v = 0; v < n; ++v) {
            const BigInt definitional = norm - lp_norm(h.without_vertex(v), 2);
            const BigInt expanded = l2_degree_expanded(h, v);
            const BigInt via_stars = 2 * star_degree(h, v) + 3 * BigInt(h.degree(v));
            forms = forms && definitional == expanded && expanded == via_stars &&
                    lp_norm_degree(h, v, 2) == definitional;
            sum += definitional;
        }
        degree_forms += forms;
        degree_sum += sum == 4 * norm - 3 * size;

        std::bernoulli_distribution keep(0.6);
        std::vector<Triple> kept;
        for (const Triple& e : h.edges())
            if (keep(rng))
                kept.push_back(e);
        const Uniform3Graph sub(n, kept);
        deletion += norm - lp_norm(sub, 2) <= BigInt(6 * n) * (h.edge_count() - sub.edge_count());

        const Participation p = s2_participation(h);
        part_edge += p.max_edge <= 3 * (n - 3);
        part_vertex += BigInt(p.max_vertex) <= 24 * binomial(n - 1, 3);
        part_pair += BigInt(p.max_pair) <= 24 * binomial(n - 2, 2);

        if (n <= 10) {
            ++stirling_total;
            bool ok = true;
            for (unsigned q = 1; q <= 5; ++q) {
                const NormStarConversion c = norm_star_conversion(h, q, table);
                ok = ok && c.stars_from_norms == count_stars(h, q) && c.norm_from_stars == lp_norm(h, q);
            }
            stirling += ok;
        }
    }

    const std::string all = fraction(kInstances, kInstances);
    run.exact("identity.norm_equals_stars", norm_stars == kInstances, fraction(norm_stars, kInstances), all);
    run.exact("identity.l2_degree_forms_agree", degree_forms == kInstances, fraction(degree_forms, kInstances), all);
    run.exact("identity.l2_degree_sum", degree_sum == kInstances, fraction(degree_sum, kInstances), all);
    run.exact("identity.deletion_bound", deletion == kInstances, fraction(deletion, kInstances), all);
    run.exact("identity.edge_participation", part_edge == kInstances, fraction(part_edge, kInstances), all);
    run.exact("identity.vertex_participation", part_vertex == kInstances, fraction(part_vertex, kInstances), all);
    run.exact("identity.pair_participation", part_pair == kInstances, fraction(part_pair, kInstances), all);
    run.exact("identity.stirling_round_trip", stirling == stirling_total, fraction(stirling, stirling_total),
              fraction(stirling_total, stirling_total));

    const RationalReport rr = rational_identity_checks();
    for (const RationalCheck& c : rr.checks)
        run.exact("rational." + c.id, c.ok, c.detail, "holds");
    run.exact("rational.first_m_from_which_all", rr.first_m_from_which_all <= 30,
              std::to_string(rr.first_m_from_which_all), "<= 30");
}

// --- constructions ------------------------------------------------------------

bool multigraph_degree_at_least(const MMultigraph& mg, const std::vector<Vertex>& core, const Rational& beta)
{
    if (core.empty())
        return true;
    const MMultigraph sub = mg.induced(core);
    const BigInt lhs = BigInt(sub.min_degree()) * denominator(beta);
    const BigInt rhs = numerator(beta) * BigInt(core.size());
    return lhs >= rhs;
}

void suite_constructions(Runner& run)
{
    bool closed = true;
    for (std::size_t n = 3; n <= 40; ++n)
        closed = closed && bn_l2_closed(n) == lp_norm(balanced_bipartite3(n), 2);
    run.exact("bn.closed_form_3_to_40", closed, closed ? "all equal" : "mismatch", "all equal");
    run.exact("bn.norm_n4", lp_norm(balanced_bipartite3(4), 2) == 24, to_string(lp_norm(balanced_bipartite3(4), 2)),
              "24");
    run.exact("bn.norm_n5", lp_norm(balanced_bipartite3(5), 2) == 75, to_string(lp_norm(balanced_bipartite3(5), 2)),
              "75");

    bool bip_ok = true, tur_ok = true;
    for (std::size_t n = 3; n <= 10; ++n) {
        const MMultigraph b = bipartite_construction_5(n);
        const MMultigraph t = turan_layers_5(n);
        bip_ok = bip_ok && !contains_k4(b) && b.size() == 2 * (n * (n - 1) / 2) + 3 * (n * n / 4);
        tur_ok = tur_ok && !contains_k4(t) && t.size() == 5 * (n * n / 3);
    }
    run.exact("mg.bipartite_construction_k4free_size", bip_ok, bip_ok ? "3 <= n <= 10 ok" : "mismatch",
              "3 <= n <= 10 ok");
    run.exact("mg.turan_layers_k4free_size", tur_ok, tur_ok ? "3 <= n <= 10 ok" : "mismatch", "3 <= n <= 10 ok");
    const auto b12 = bipartite_construction_5(12).size(), t12 = turan_layers_5(12).size();
    run.exact("mg.sizes_tie_n12", b12 == 240 && t12 == 240, std::to_string(b12) + " vs " + std::to_string(t12),
              "240 vs 240");
    const auto b13 = bipartite_construction_5(13).size(), t13 = turan_layers_5(13).size();
    run.exact("mg.bipartite_leads_n13", b13 == 282 && t13 == 280, std::to_string(b13) + " vs " + std::to_string(t13),
              "282 vs 280");

    bool fano_free = true;
    for (std::size_t n = 3; n <= 12; ++n)
        fano_free = fano_free && !contains_fano(balanced_bipartite3(n));
    run.exact("fano.absent_from_bn_n_le_12", fano_free, fano_free ? "absent" : "found", "absent");
    run.exact("fano.present_in_k7", contains_fano(complete3(7)), contains_fano(complete3(7)) ? "found" : "absent",
              "found");

    bool links = true;
    for (std::size_t n = 3; n <= 10; ++n) {
        const Uniform3Graph h = balanced_bipartite3(n);
        links = links && !find_link_k4_violation(h);
        for (Vertex v = 0; v < n; ++v)
            links = links && link_matching_check(h, v);
    }
    run.exact("links.validators_on_bn_n_le_10", links, links ? "hold" : "violated", "hold");

    // Peeling on random sub-multigraphs of the bipartite construction.
    std::mt19937_64 rng(run.config().seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> pick_keep(0.55, 1.0);
    std::uniform_int_distribution<int> pick_beta(2, 13);
    std::uint64_t degree_ok = 0, applicable = 0, size_ok = 0;
    constexpr std::uint64_t kSamples = 100;
    for (std::uint64_t i = 0; i < kSamples; ++i) {
        const std::size_t n = 10 + i % 7;
        const MMultigraph full = bipartite_construction_5(n);
        std::bernoulli_distribution keep(pick_keep(rng));
        MMultigraph::Builder b(n, 5);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                ColorSet c = 0;
                for (unsigned l = 1; l <= 5; ++l)
                    if ((full.colors(u, v) & layer_bit(l)) && keep(rng))
                        c |= layer_bit(l);
                b.set_colors(u, v, c);
            }
        const MMultigraph mg = std::move(b).build();
        const Rational beta(pick_beta(rng), 4);
        const auto core = extract_dense_core(mg, beta);
        degree_ok += multigraph_degree_at_least(mg, core, beta);
        const Rational size(BigInt(mg.size()));
        if (size >= beta * Rational(BigInt(n) * (n + 1), 2) && !contains_k4(mg)) {
            ++applicable;
            size_ok += lemma34_size_ok(core.size(), size, n, beta);
        }
    }
    run.exact("peeling.core_min_degree", degree_ok == kSamples, fraction(degree_ok, kSamples),
              fraction(kSamples, kSamples));
    run.exact("peeling.core_size_bound", size_ok == applicable && applicable > 0, fraction(size_ok, applicable),
              fraction(applicable, applicable), "instances meeting the size hypothesis");
}

// --- lemma51 ------------------------------------------------------------------

void suite_lemma51(Runner& run)
{
    const SearchConfig sc = run.search_config();
    run.guarded("four_vertex.scan", [&] {
        const Lemma51Report r = verify_lemma51(sc);
        if (!r.complete) {
            run.skip("four_vertex.scan", "budget exhausted during the 32^6 scan");
            return;
        }
        run.exact("four_vertex.max_size", r.max_size == 25, std::to_string(r.max_size), "25");
        run.exact("four_vertex.size25_is_saturated_family", r.size25_is_family && r.size25_count == 96,
                  std::to_string(r.size25_count), "96");
        static const char* clause[5] = {"disjoint_light_matching", "size_at_most_25", "size_23_saturated",
                                        "size_22_full_pair", "pair_sum_disjoint"};
        for (int c = 0; c < 5; ++c)
            run.exact(std::string("four_vertex.") + clause[c], r.violations[c] == 0,
                      std::to_string(r.violations[c]) + " violations", "0 violations");
    });
    run.guarded("four_layer.max", [&] {
        const SearchReport r = max_k4free_multigraph(4, 4, MultigraphEngine::Exhaustive, sc);
        if (!r.complete)
            return run.skip("four_layer.max", "budget exhausted");
        run.exact("four_layer.max", r.optimum == 20, to_string(r.optimum), "20");
    });
    run.guarded("engines.agree_n4", [&] {
        bool agree = true;
        std::string measured;
        for (unsigned m = 1; m <= 4; ++m) {
            const auto ex = max_k4free_multigraph(4, m, MultigraphEngine::Exhaustive, sc);
            const auto bb = max_k4free_multigraph(4, m, MultigraphEngine::BranchAndBound, sc);
            agree = agree && ex.optimum == bb.optimum && ex.complete && bb.complete;
            measured += (measured.empty() ? "" : ",") + to_string(bb.optimum);
        }
        run.exact("engines.agree_n4", agree, measured, "exhaustive = branch and bound for m = 1..4");
    });
}

// --- oracles ------------------------------------------------------------------

void suite_oracles(Runner& run)
{
    for (std::size_t n : {4u, 5u, 6u})
        run.guarded("bipartite.extremal_n" + std::to_string(n), [&] {
            const BipartiteScanReport r = bipartite_l2_full_scan(n, run.search_config());
            if (!r.complete)
                return run.skip("bipartite.extremal_n" + std::to_string(n), "budget exhausted");
            run.exact("bipartite.extremal_n" + std::to_string(n), r.max_norm == r.closed_form && r.all_isomorphic_to_bn,
                      to_string(r.max_norm) + (r.all_isomorphic_to_bn ? " (all maximizers ~ B_n)" : " (other maximizer)"),
                      to_string(r.closed_form) + " (all maximizers ~ B_n)");
        });

    run.guarded("ak.profile_n7", [&] {
        const S2Profile p = s2_profile(7, run.search_config());
        if (!p.complete)
            return run.skip("ak.profile_n7", "budget exhausted");
        std::size_t match = 0, bound_ok = 0;
        for (std::size_t m = 0; m < p.best.size(); ++m) {
            match += p.best[m] == p.family[m];
            const double density = to_double(p.best[m]) / 343.0;
            bound_ok += ak_s2_bound(static_cast<double>(m) / 49.0).value >= density - 2.0 / 7.0;
        }
        run.exact("ak.profile_n7", match == p.best.size(), fraction(match, p.best.size()),
                  fraction(p.best.size(), p.best.size()));
        run.exact("ak.asymptotic_bound_n7", bound_ok == p.best.size(), fraction(bound_ok, p.best.size()),
                  fraction(p.best.size(), p.best.size()));
    });

    run.guarded("aes.n_le_7", [&] {
        std::uint64_t violations = 0, above = 0;
        bool complete = true;
        for (std::size_t n = 1; n <= 7; ++n) {
            const AesReport r = aes_scan(n, run.search_config());
            violations += r.violations;
            above += r.above_threshold;
            complete = complete && r.complete;
        }
        if (!complete)
            return run.skip("aes.n_le_7", "budget exhausted");
        run.exact("aes.n_le_7", violations == 0, std::to_string(violations) + " violations",
                  "0 violations", std::to_string(above) + " graphs above the threshold");
    });

    bool witnesses_ok = true;
    auto validate = [&](const SearchReport& r) {
        const Uniform3Graph h = parse_3graph(r.witness);
        bool ok = !contains_fano(h) && lp_norm(h, 2) == r.optimum && !find_link_k4_violation(h);
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            ok = ok && link_matching_check(h, v);
        witnesses_ok = witnesses_ok && ok;
    };
    for (std::size_t n : {5u, 6u})
        run.guarded("fano_free.max_n" + std::to_string(n), [&] {
            const SearchReport r = max_l2_fano_free(n, run.search_config());
            validate(r);
            const BigInt expected = lp_norm(complete3(n), 2);
            run.exact("fano_free.max_n" + std::to_string(n), r.optimum == expected, to_string(r.optimum),
                      to_string(expected));
        });
    run.guarded("fano_free.max_n7", [&] {
        const SearchReport r = max_l2_fano_free(7, run.search_config(600));
        if (!r.complete)
            return run.skip("fano_free.max_n7", "budget exhausted; best so far " + to_string(r.optimum));
        validate(r);
        const BigInt b7 = bn_l2_closed(7);
        run.exact("fano_free.max_n7", r.optimum > b7, to_string(r.optimum), "> " + to_string(b7),
                  "exact optimum of the branch and bound");
    });
    run.exact("links.validators_on_fano_free_witnesses", witnesses_ok, witnesses_ok ? "hold" : "violated", "hold");

    // Stretch: five vertices, five layers.
    if (run.out_of_budget()) {
        run.skip("five_vertex.max", "no budget left for the stretch search");
        return;
    }
    run.guarded("five_vertex.max", [&] {
        const SearchReport r = max_k4free_multigraph(5, 5, MultigraphEngine::BranchAndBound, run.search_config());
        if (!r.complete)
            return run.skip("five_vertex.max", "budget exceeded after " + fmt(r.elapsed_seconds) + " s");
        run.exact("five_vertex.max", r.optimum == 40, to_string(r.optimum), "40");
    });
}

} // namespace

VerifyReport run_verify(Suite suite, const VerifyConfig& config)
{
    VerifyReport report;
    report.suite = to_string(suite);
    report.config = config;
    detail::Deadline deadline(config.budget_seconds);
    Runner run(report.config, deadline, report.checks);

    const std::map<Suite, std::function<void(Runner&)>> bodies = {
        {Suite::Roots, suite_roots},
        {Suite::Identities, suite_identities},
        {Suite::Constructions, suite_constructions},
        {Suite::Oracles, suite_oracles},
        {Suite::Lemma51, suite_lemma51},
    };
    if (suite == Suite::All) {
        for (Suite s : {Suite::Roots, Suite::Identities, Suite::Constructions, Suite::Oracles, Suite::Lemma51}) {
            if (run.out_of_budget())
                run.skip(std::string("suite.") + to_string(s), "budget exhausted before the suite started");
            else
                run.guarded(std::string("suite.") + to_string(s), [&] { bodies.at(s)(run); });
        }
    } else {
        run.guarded(std::string("suite.") + to_string(suite), [&] { bodies.at(suite)(run); });
    }
    report.elapsed_seconds = deadline.elapsed();
    return report;
}

std::string format_verify_text(const VerifyReport& r)
{
    std::string out = "suite " + r.suite + "  seed " + std::to_string(r.config.seed) + "  workers " +
                      std::to_string(r.config.workers) + "  budget " + fmt(r.config.budget_seconds) + "\n";
    for (const Check& c : r.checks) {
        std::string status = to_string(c.status);
        for (char& ch : status)
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out += status + "  " + c.id;
        if (c.status != CheckStatus::Skipped)
            out += "  measured " + c.measured + "  expected " + c.expected + "  tol " + c.tolerance;
        if (!c.note.empty())
            out += "  (" + c.note + ")";
        out += "\n";
    }
    out += "totals: " + std::to_string(r.count(CheckStatus::Pass)) + " pass, " +
           std::to_string(r.count(CheckStatus::Fail)) + " fail, " + std::to_string(r.count(CheckStatus::Skipped)) +
           " skipped\n";
    return out;
}

std::string to_json(const VerifyReport& r, int indent)
{
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["status"] = r.ok() ? "pass" : "fail";
    j["config"] = {{"seed", r.config.seed}, {"workers", r.config.workers}, {"budget_seconds", r.config.budget_seconds}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : r.checks)
        checks.push_back({{"id", c.id},
                          {"status", to_string(c.status)},
                          {"measured", c.measured},
                          {"expected", c.expected},
                          {"tolerance", c.tolerance},
                          {"note", c.note}});
    j["checks"] = checks;
    j["totals"] = {{"pass", r.count(CheckStatus::Pass)},
                   {"fail", r.count(CheckStatus::Fail)},
                   {"skipped", r.count(CheckStatus::Skipped)}};
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j.dump(indent);
}

} // namespace fanol2
