// Acceptance run: one PASS/FAIL/SKIP line per criterion. Tolerances and time
// limits are pinned here. The exit status is nonzero when a criterion fails,
// except for the entries in kKnownUnattainable, whose reason is printed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "fanol2/bounds.hpp"
#include "fanol2/detect.hpp"
#include "fanol2/error.hpp"
#include "fanol2/search.hpp"
#include "fanol2/textio.hpp"
#include "oracles.hpp"

using namespace fanol2;

namespace {

constexpr double kDecimalTol = 5e-6;
constexpr double kNormRatioTol = 1.2;  // times 1/n
constexpr double kDegreeRatioTol = 3.0; // times 1/n
constexpr double kAkSlack = 2.0;        // times 1/n
constexpr std::uint64_t kSeed = 20241015;

// The o(1) term in the minimum l2-degree of B_n is -39/(8n) + O(1/n^2), so a
// 3/n envelope cannot hold for any large n.
const std::map<int, const char*> kKnownUnattainable = {
    {10, "min l2-degree ratio of B_n deviates from 5/4 by 39/(8n) - O(1/n^2), which exceeds 3/n"},
};

enum class Outcome { Pass, Fail, Skip };

struct Result {
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Result verdict(bool ok, std::string detail)
{
    return {ok ? Outcome::Pass : Outcome::Fail, std::move(detail)};
}

SearchConfig config(double budget = 0)
{
    SearchConfig c;
    c.seed = kSeed;
    c.budget_seconds = budget;
    return c;
}

BigInt stars_by_degrees(const SimpleGraph& g)
{
    BigInt s = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::uint64_t d = g.degree(v);
        s += BigInt(d * (d == 0 ? 0 : d - 1) / 2);
    }
    return s;
}

std::size_t floor_sq_over(std::size_t n, std::size_t k) { return n * n / k; }

// --- criteria -----------------------------------------------------------------

Result c1_lemma51()
{
    const auto t0 = std::chrono::steady_clock::now();
    const Lemma51Report r = verify_lemma51(config());
    const double t = seconds_since(t0);
    bool none_above = true;
    for (std::size_t s = 26; s < r.histogram.size(); ++s)
        none_above = none_above && r.histogram[s] == 0;
    std::uint64_t violations = 0;
    for (auto v : r.violations)
        violations += v;
    const bool ok = r.complete && r.max_size == 25 && none_above && violations == 0 && r.size25_is_family &&
                    r.size25_count == saturated_family_4().size() && r.sample23_saturated && t <= 900;
    return verdict(ok, "max " + std::to_string(r.max_size) + ", size-25 " + std::to_string(r.size25_count) +
                           ", clause violations " + std::to_string(violations) + ", " + std::to_string(t) + " s");
}

Result c2_four_layers()
{
    const auto t0 = std::chrono::steady_clock::now();
    const SearchReport r = max_k4free_multigraph(4, 4, MultigraphEngine::Exhaustive, config());
    const double t = seconds_since(t0);
    const MMultigraph w = parse_mgraph(r.witness);
    const bool ok = r.complete && r.optimum == 20 && !oracle::contains_k4_brute(w) && w.size() == 20 && t <= 60;
    return verdict(ok, "optimum " + to_string(r.optimum) + ", " + std::to_string(t) + " s");
}

Result c3_five_vertices()
{
    const SearchReport r = max_k4free_multigraph(5, 5, MultigraphEngine::BranchAndBound, config(600));
    if (!r.complete)
        return {Outcome::Skip, "budget of 600 s exhausted, best so far " + to_string(r.optimum)};
    const MMultigraph w = parse_mgraph(r.witness);
    const bool ok = r.optimum == 40 && w.size() == 40 && !oracle::contains_k4_brute(w);
    return verdict(ok, "optimum " + to_string(r.optimum) + ", nodes " + std::to_string(r.nodes));
}

Result c4_constructions()
{
    bool ok = true;
    for (std::size_t n = 3; n <= 10; ++n) {
        const MMultigraph b = bipartite_construction_5(n);
        const MMultigraph t = turan_layers_5(n);
        ok = ok && !oracle::contains_k4_brute(b) && !oracle::contains_k4_brute(t);
        ok = ok && b.size() == n * (n - 1) + 3 * floor_sq_over(n, 4);
        ok = ok && t.size() == 5 * floor_sq_over(n, 3);
    }
    const std::size_t b12 = bipartite_construction_5(12).size(), t12 = turan_layers_5(12).size();
    const std::size_t b13 = bipartite_construction_5(13).size(), t13 = turan_layers_5(13).size();
    ok = ok && b12 == 240 && t12 == 240 && b13 == 282 && t13 == 280;
    for (std::size_t n = 14; n <= 40; ++n)
        ok = ok && bipartite_construction_5(n).size() > turan_layers_5(n).size();
    return verdict(ok, "n=12: " + std::to_string(b12) + " vs " + std::to_string(t12) + ", n=13: " +
                           std::to_string(b13) + " vs " + std::to_string(t13));
}

Result c5_closed_form()
{
    bool ok = bn_l2_closed(4) == 24 && bn_l2_closed(5) == 75;
    for (std::size_t n = 3; n <= 40; ++n)
        ok = ok && bn_l2_closed(n) == oracle::norm(balanced_bipartite3(n), 2);
    return verdict(ok, "B4 " + to_string(bn_l2_closed(4)) + ", B5 " + to_string(bn_l2_closed(5)) + ", n = 3..40");
}

Result c6_bipartite_extremality()
{
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t n = 4; n <= 6; ++n) {
        const BipartiteScanReport r = bipartite_l2_full_scan(n, config());
        ok = ok && r.complete && r.max_norm == bn_l2_closed(n) && r.all_isomorphic_to_bn;
        detail += "n=" + std::to_string(n) + ": " + to_string(r.max_norm) + " (" + std::to_string(r.maximizers) +
                  " maximizers) ";
    }
    const double t = seconds_since(t0);
    return verdict(ok && t <= 600, detail + std::to_string(t) + " s");
}

Result c7_identities()
{
    oracle::Rng rng(kSeed);
    std::uint64_t good = 0;
    const std::uint64_t total = 500;
    for (std::uint64_t i = 0; i < total; ++i) {
        const std::size_t n = rng.between(3, 12);
        const Uniform3Graph h = oracle::random_3graph(rng, n, rng.between(5, 95));
        const BigInt size = h.edge_count();
        const BigInt norm = oracle::norm(h, 2);
        const auto copies = oracle::s2_copies(h);
        bool ok = lp_norm(h, 2) == norm && norm == 2 * BigInt(copies.size()) + 3 * size;

        BigInt sum = 0;
        for (Vertex v = 0; v < n; ++v) {
            const BigInt d2 = norm - oracle::norm(oracle::delete_vertex(h, v), 2);
            ok = ok && lp_norm_degree(h, v, 2) == d2 && l2_degree_expanded(h, v) == d2;
            sum += d2;
        }
        ok = ok && sum == 4 * norm - 3 * size;

        std::vector<Triple> kept;
        for (const Triple& e : h.edges())
            if (rng.chance(2, 3))
                kept.push_back(e);
        const Uniform3Graph sub(n, kept);
        ok = ok && norm - oracle::norm(sub, 2) <= BigInt(6 * n) * (size - BigInt(kept.size()));

        // Participation of edges, vertices and pairs in copies of S_2.
        const auto edges = h.edges();
        std::vector<std::uint64_t> per_edge(edges.size(), 0), per_vertex(n, 0);
        std::map<std::pair<Vertex, Vertex>, std::uint64_t> per_pair;
        for (auto [a, b] : copies) {
            ++per_edge[a];
            ++per_edge[b];
            std::set<Vertex> span{edges[a].a, edges[a].b, edges[a].c, edges[b].a, edges[b].b, edges[b].c};
            for (Vertex u : span) {
                ++per_vertex[u];
                for (Vertex w : span)
                    if (u < w)
                        ++per_pair[{u, w}];
            }
        }
        for (auto c : per_edge)
            ok = ok && c <= 3 * (n - 3);
        for (auto c : per_vertex)
            ok = ok && BigInt(c) <= 24 * binomial(n - 1, 3);
        for (const auto& [pair, c] : per_pair)
            ok = ok && BigInt(c) <= 24 * binomial(n - 2, 2);
        good += ok;
    }
    return verdict(good == total, std::to_string(good) + "/" + std::to_string(total) + " instances, seed " +
                                      std::to_string(kSeed));
}

Result c8_decimals()
{
    const double r253 = claim_radical(253.0 / 730.0);
    const std::pair<double, double> pairs[] = {
        {f_inverse(1.25), 0.342067},
        {solve_claim_equation(ClaimEquation::LinearBranch), 0.346707},
        {solve_claim_equation(ClaimEquation::Claim32), 0.344635},
        {solve_claim_equation(ClaimEquation::Claim33), 0.346577},
        {solve_claim_equation(ClaimEquation::Claim34), 0.346665},
        {alpha1_asymptotic(61.0 / 177.0), 0.225024},
        {alpha1_asymptotic(235.0 / 687.0), 0.171997},
        {alpha2_asymptotic(61.0 / 177.0), 0.337536},
        {alpha2_asymptotic(61.0 / 176.0), 0.387402},
        {5.0 / 13.0 * r253, 0.322526},
        {0.5 * r253, 0.419284},
    };
    double worst = 0;
    for (auto [measured, expected] : pairs)
        worst = std::max(worst, std::abs(measured - expected));
    char buf[64];
    std::snprintf(buf, sizeof buf, "11 values, worst deviation %.2e", worst);
    return verdict(worst <= kDecimalTol, buf);
}

Result c9_rationals()
{
    const Rational lhs = 2 * Rational(253, 730) + 3 * Rational(321, 926) + Rational(3, 17) * Rational(253, 730);
    bool ok = lhs == Rational(5154779, 2872915) && lhs > Rational(61, 34);
    // Cross-multiplied integer form of the comparison.
    ok = ok && BigInt(5154779) * 34 > BigInt(61) * 2872915;
    std::uint64_t bad = 0;
    for (std::uint64_t m = 30; m <= 1000000; ++m) {
        const std::uint64_t step = 2 * (m - 1) + 3 * (m / 2);
        bad += !(13 * step > 44 * m);
        if (m % 1000 == 0)
            ok = ok && g_of(m) - g_of(m - 1) == BigInt(step);
    }
    const RationalReport r = rational_identity_checks();
    ok = ok && bad == 0 && r.ok();
    return verdict(ok, "fraction identity exact, step inequality fails for " + std::to_string(bad) +
                           " m in [30, 10^6], holds from m = " + std::to_string(r.first_m_from_which_all));
}

Result c10_density()
{
    bool ok = true;
    std::string detail;
    for (std::uint64_t n : {100u, 1000u, 10000u}) {
        const DensityStats s = extremal_density_stats(n);
        const double dn = std::abs(s.norm_ratio - 5.0 / 16.0);
        const double dd = std::abs(s.degree_ratio - 5.0 / 4.0);
        ok = ok && dn <= kNormRatioTol / n && dd <= kDegreeRatioTol / n;
        char buf[160];
        std::snprintf(buf, sizeof buf, "n=%llu norm dev %.3e (tol %.1e), degree dev %.3e (tol %.1e); ",
                      static_cast<unsigned long long>(n), dn, kNormRatioTol / n, dd, kDegreeRatioTol / n);
        detail += buf;
    }
    return verdict(ok, detail);
}

Result c11_ak()
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = 7;
    const S2Profile p = s2_profile(n, config());
    bool ok = p.complete && p.best.size() == 22;
    double worst_gap = -1;
    for (std::size_t m = 0; ok && m <= 21; ++m) {
        const BigInt fam = std::max(stars_by_degrees(quasi_star(n, m)), stars_by_degrees(quasi_complete(n, m)));
        ok = ok && p.best[m] == fam && stars_by_degrees(graph_from_mask(n, p.witness[m])) == fam;
        const double density = static_cast<double>(p.best[m]) / (n * n * n);
        const double bound = ak_s2_bound(static_cast<double>(m) / (n * n)).value;
        worst_gap = std::max(worst_gap, density - bound);
        ok = ok && bound >= density - kAkSlack / n;
    }
    const double t = seconds_since(t0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "m = 0..21 match, max density - bound %.4f, %.2f s", worst_gap, t);
    return verdict(ok && t <= 1200, buf);
}

// Independent scan: every labelled graph, triangle test and bipartiteness by
// two-colouring enumeration.
std::uint64_t aes_violations_brute(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::uint64_t violations = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::uint32_t> adj(n, 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) {
                adj[pairs[i].first] |= 1u << pairs[i].second;
                adj[pairs[i].second] |= 1u << pairs[i].first;
            }
        bool above = true;
        for (Vertex v = 0; v < n; ++v)
            above = above && 5 * static_cast<std::size_t>(std::popcount(adj[v])) > 2 * n;
        if (!above)
            continue;
        bool triangle = false;
        for (std::size_t i = 0; i < pairs.size() && !triangle; ++i)
            if (mask >> i & 1)
                triangle = (adj[pairs[i].first] & adj[pairs[i].second]) != 0;
        if (triangle)
            continue;
        bool bipartite = false;
        for (std::uint32_t side = 0; side < (1u << n) && !bipartite; ++side) {
            bool proper = true;
            for (std::size_t i = 0; i < pairs.size() && proper; ++i)
                if (mask >> i & 1)
                    proper = (side >> pairs[i].first & 1) != (side >> pairs[i].second & 1);
            bipartite = proper;
        }
        violations += !bipartite;
    }
    return violations;
}

Result c12_aes()
{
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::uint64_t total = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        const AesReport r = aes_scan(n, config());
        ok = ok && r.complete && r.violations == 0 && aes_violations_brute(n) == 0;
        total += r.above_threshold;
    }
    const double t = seconds_since(t0);
    return verdict(ok && t <= 600, std::to_string(total) + " triangle-free graphs above the threshold for n <= 7, 0 "
                                                           "non-bipartite, " +
                                       std::to_string(t) + " s");
}

Result c13_peeling()
{
    oracle::Rng rng(kSeed);
    std::uint64_t min_degree_ok = 0, size_applicable = 0, size_ok = 0;
    const std::uint64_t total = 100;
    for (std::uint64_t i = 0; i < total; ++i) {
        const std::size_t n = 10 + i % 7;
        const MMultigraph base = bipartite_construction_5(n);
        const std::uint64_t keep = rng.between(55, 100);
        MMultigraph::Builder b(n, 5);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                ColorSet c = 0;
                for (unsigned l = 1; l <= 5; ++l)
                    if ((base.colors(u, v) & layer_bit(l)) && rng.chance(keep, 100))
                        c |= layer_bit(l);
                b.set_colors(u, v, c);
            }
        const MMultigraph mg = std::move(b).build();
        const Rational beta(static_cast<long long>(rng.between(2, 13)), 4);
        const auto core = extract_dense_core(mg, beta);

        std::uint64_t min_deg = ~std::uint64_t{0};
        for (Vertex v : core) {
            std::uint64_t d = 0;
            for (Vertex u : core)
                if (u != v)
                    d += mg.multiplicity(u, v);
            min_deg = std::min(min_deg, d);
        }
        min_degree_ok += core.empty() || Rational(min_deg) >= beta * Rational(core.size());

        if (Rational(mg.size()) >= beta * Rational(n * (n + 1) / 2) && !oracle::contains_k4_brute(mg)) {
            ++size_applicable;
            size_ok += lemma34_size_ok(core.size(), Rational(mg.size()), n, beta);
        }
    }
    return verdict(min_degree_ok == total && size_ok == size_applicable,
                   "min degree " + std::to_string(min_degree_ok) + "/" + std::to_string(total) + ", size bound " +
                       std::to_string(size_ok) + "/" + std::to_string(size_applicable) + " applicable");
}

Result c14_fano()
{
    bool ok = true;
    for (std::size_t n = 3; n <= 12; ++n) {
        const Uniform3Graph b = balanced_bipartite3(n);
        ok = ok && !contains_fano(b) && oracle::is_bipartite_by_enumeration(b);
        if (n <= 10)
            ok = ok && !oracle::contains_by_injection(b, fano_plane());
    }
    ok = ok && contains_fano(complete3(7)) && oracle::contains_by_injection(complete3(7), fano_plane());
    const BigInt f5 = max_l2_fano_free(5, config()).optimum;
    const BigInt f6 = max_l2_fano_free(6, config()).optimum;
    ok = ok && f5 == 90 && f6 == 240 && f5 == oracle::norm(complete3(5), 2) && f6 == oracle::norm(complete3(6), 2);
    return verdict(ok, "B_n free for n <= 12, K7 contains, ex(5) " + to_string(f5) + ", ex(6) " + to_string(f6));
}

bool validators_hold(const Uniform3Graph& h)
{
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (!link_matching_check(h, v))
            return false;
    return !find_link_k4_violation(h).has_value();
}

Result c15_validators()
{
    bool ok = true;
    for (std::size_t n = 3; n <= 10; ++n)
        ok = ok && validators_hold(balanced_bipartite3(n));
    std::string detail = "B_n n <= 10";
    for (std::size_t n = 5; n <= 7; ++n) {
        const SearchReport r = max_l2_fano_free(n, config(600));
        const Uniform3Graph w = parse_3graph(r.witness);
        ok = ok && r.complete && !oracle::contains_by_injection(w, fano_plane()) && validators_hold(w);
        detail += ", fano-l2 witness n=" + std::to_string(n) + " (norm " + to_string(r.optimum) + ")";
    }
    return verdict(ok, detail);
}

} // namespace

int main()
{
    const std::pair<int, std::function<Result()>> criteria[] = {
        {1, c1_lemma51},         {2, c2_four_layers}, {3, c3_five_vertices}, {4, c4_constructions},
        {5, c5_closed_form},     {6, c6_bipartite_extremality},               {7, c7_identities},
        {8, c8_decimals},        {9, c9_rationals},   {10, c10_density},      {11, c11_ak},
        {12, c12_aes},           {13, c13_peeling},   {14, c14_fano},         {15, c15_validators},
    };
    const char* names[] = {"",
                           "four-vertex 5-multigraph verification",
                           "four-layer maximum on four vertices",
                           "five-vertex 5-multigraph maximum (stretch)",
                           "multigraph constructions",
                           "closed form for ||B_n||_2",
                           "bipartite extremality",
                           "norm identity suite",
                           "decimal constants",
                           "exact rational checks",
                           "extremal density envelopes",
                           "S2 maxima on seven vertices",
                           "triangle-free minimum degree scan",
                           "peeling contract",
                           "Fano containment basics",
                           "link validators"};

    int unexpected = 0;
    for (const auto& [k, run] : criteria) {
        Result r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r = {Outcome::Fail, std::string("error: ") + e.what()};
        }
        const char* tag = r.outcome == Outcome::Pass ? "PASS" : r.outcome == Outcome::Fail ? "FAIL" : "SKIP";
        std::printf("%s %2d %s: %s\n", tag, k, names[k], r.detail.c_str());
        if (r.outcome == Outcome::Fail) {
            const auto known = kKnownUnattainable.find(k);
            if (known != kKnownUnattainable.end())
                std::printf("     known unattainable: %s\n", known->second);
            else
                ++unexpected;
        }
        std::fflush(stdout);
    }
    std::printf("%d unexpected failure(s)\n", unexpected);
    return unexpected == 0 ? 0 : 1;
}
