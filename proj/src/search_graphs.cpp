#include <algorithm>
#include <bit>
#include <string>

#include "fanol2/error.hpp"
#include "fanol2/search.hpp"
#include "fanol2/textio.hpp"
#include "search_util.hpp"

namespace fanol2 {

namespace {

std::vector<Pair> pair_order(std::size_t n)
{
    std::vector<Pair> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    return pairs;
}

void check_graph_scan(std::size_t n, const SearchConfig& config, const char* what)
{
    if (n > 8)
        fail(ErrorCode::Capacity, std::string(what) + " supports n <= 8");
    if (n == 8 && config.budget_seconds <= 0)
        fail(ErrorCode::Capacity, std::string(what) + " at n = 8 requires a positive --budget");
}

bool is_bipartite_graph(std::size_t n, const std::vector<std::uint32_t>& adj)
{
    std::vector<int> color(n, -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != -1)
            continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (std::uint32_t bits = adj[u]; bits != 0; bits &= bits - 1) {
                const Vertex w = static_cast<Vertex>(std::countr_zero(bits));
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

SimpleGraph graph_from_mask(std::size_t n, std::uint64_t mask)
{
    const auto pairs = pair_order(n);
    if (pairs.size() < 64 && (mask >> pairs.size()) != 0)
        fail(ErrorCode::OutOfRange, "adjacency mask has bits beyond C(n,2)");
    SimpleGraph::Builder b(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1)
            b.add_edge(pairs[i].u, pairs[i].v);
    return std::move(b).build();
}

// --- two-edge stars -----------------------------------------------------------

S2Profile s2_profile(std::size_t n, const SearchConfig& config)
{
    check_graph_scan(n, config, "s2 profile");
    const auto pairs = pair_order(n);
    const std::size_t bits = pairs.size();
    const std::size_t top = bits >= 12 ? 6 : 0;
    const std::size_t low = bits - top;
    const std::size_t tasks = std::size_t{1} << top;
    detail::Deadline deadline(config.budget_seconds);

    struct Task {
        std::vector<std::int64_t> best;
        std::vector<std::uint64_t> witness;
        std::uint64_t graphs = 0;
        bool complete = true;
    };
    std::vector<Task> results(tasks);

    detail::parallel_for(tasks, resolve_workers(config), [&](std::size_t t) {
        Task& r = results[t];
        r.best.assign(bits + 1, -1);
        r.witness.assign(bits + 1, 0);
        std::vector<int> deg(n, 0);
        std::int64_t stars = 0;
        std::size_t edges = 0;
        auto toggle = [&](std::size_t i, bool on) {
            const Pair& p = pairs[i];
            if (on) {
                stars += deg[p.u] + deg[p.v];
                ++deg[p.u];
                ++deg[p.v];
                ++edges;
            } else {
                --deg[p.u];
                --deg[p.v];
                stars -= deg[p.u] + deg[p.v];
                --edges;
            }
        };
        const std::uint64_t prefix = static_cast<std::uint64_t>(t) << low;
        for (std::size_t i = 0; i < top; ++i)
            if (t >> i & 1)
                toggle(low + i, true);
        auto record = [&](std::uint64_t mask) {
            ++r.graphs;
            if (stars > r.best[edges] || (stars == r.best[edges] && mask < r.witness[edges])) {
                r.best[edges] = stars;
                r.witness[edges] = mask;
            }
        };
        std::uint64_t gray = 0;
        record(prefix);
        const std::uint64_t count = std::uint64_t{1} << low;
        for (std::uint64_t k = 1; k < count; ++k) {
            if ((k & 0xFFFFF) == 0 && deadline.expired()) {
                r.complete = false;
                return;
            }
            const std::size_t flip = static_cast<std::size_t>(std::countr_zero(k));
            gray ^= std::uint64_t{1} << flip;
            toggle(flip, (gray >> flip & 1) != 0);
            record(prefix | gray);
        }
    });

    S2Profile profile;
    profile.n = n;
    std::vector<std::int64_t> best(bits + 1, -1);
    profile.witness.assign(bits + 1, 0);
    for (const Task& r : results) {
        profile.graphs += r.graphs;
        profile.complete = profile.complete && r.complete;
        for (std::size_t m = 0; m <= bits; ++m)
            if (r.best[m] > best[m] || (r.best[m] == best[m] && r.best[m] >= 0 && r.witness[m] < profile.witness[m])) {
                best[m] = r.best[m];
                profile.witness[m] = r.witness[m];
            }
    }
    for (std::size_t m = 0; m <= bits; ++m) {
        profile.best.push_back(best[m]);
        profile.family.push_back(
            std::max(count_stars(quasi_star(n, m), 2), count_stars(quasi_complete(n, m), 2)));
    }
    profile.elapsed_seconds = deadline.elapsed();
    return profile;
}

SearchReport max_s2_graph(std::size_t n, std::size_t m_edges, const SearchConfig& config)
{
    if (m_edges > n * (n - 1) / 2)
        fail(ErrorCode::OutOfRange, "edge count exceeds C(n,2)");
    const S2Profile profile = s2_profile(n, config);
    SearchReport r;
    r.objective = "ak-s2";
    r.optimum = profile.best[m_edges];
    r.witness = format_graph(graph_from_mask(n, profile.witness[m_edges]));
    r.nodes = profile.graphs;
    r.elapsed_seconds = profile.elapsed_seconds;
    r.complete = profile.complete;
    r.params = {{"n", std::to_string(n)},
                {"m", std::to_string(m_edges)},
                {"workers", std::to_string(resolve_workers(config))},
                {"seed", std::to_string(config.seed)},
                {"budget_seconds", std::to_string(config.budget_seconds)}};
    r.details = {{"family_max", to_string(profile.family[m_edges])},
                 {"matches_family", profile.family[m_edges] == profile.best[m_edges] ? "true" : "false"}};
    return r;
}

// --- Andrasfai-Erdos-Sos ------------------------------------------------------

namespace {

class AesSearch {
public:
    AesSearch(std::size_t n, detail::Deadline& deadline)
        : n_(n), pairs_(pair_order(n)), deadline_(deadline), adj_(n, 0)
    {
    }

    AesReport run_from(std::uint64_t prefix, std::size_t fixed)
    {
        AesReport r;
        for (std::size_t i = 0; i < fixed; ++i)
            if (prefix >> i & 1) {
                const Pair& p = pairs_[i];
                if (adj_[p.u] & adj_[p.v])
                    return r;
                adj_[p.u] |= 1u << p.v;
                adj_[p.v] |= 1u << p.u;
            }
        dfs(fixed, r);
        return r;
    }

private:
    void dfs(std::size_t i, AesReport& r)
    {
        if (!r.complete)
            return;
        if ((++r.nodes & 0xFFFF) == 0 && deadline_.expired()) {
            r.complete = false;
            return;
        }
        if (i == pairs_.size()) {
            leaf(r);
            return;
        }
        dfs(i + 1, r);
        const Pair& p = pairs_[i];
        if ((adj_[p.u] & adj_[p.v]) == 0) {
            adj_[p.u] |= 1u << p.v;
            adj_[p.v] |= 1u << p.u;
            dfs(i + 1, r);
            adj_[p.u] &= ~(1u << p.v);
            adj_[p.v] &= ~(1u << p.u);
        }
    }

    void leaf(AesReport& r)
    {
        ++r.triangle_free;
        int delta = static_cast<int>(n_);
        for (Vertex v = 0; v < n_; ++v)
            delta = std::min(delta, std::popcount(adj_[v]));
        const bool above = 5 * delta > 2 * static_cast<int>(n_);
        const bool tight = delta == static_cast<int>(2 * n_ / 5);
        if (!above && !tight)
            return;
        const bool bipartite = is_bipartite_graph(n_, adj_);
        if (above) {
            ++r.above_threshold;
            if (!bipartite) {
                ++r.violations;
                if (r.first_violation.empty())
                    r.first_violation = format_graph(current());
            }
        }
        if (tight && !bipartite)
            ++r.tight_nonbipartite;
    }

    SimpleGraph current() const
    {
        SimpleGraph::Builder b(n_);
        for (const Pair& p : pairs_)
            if (adj_[p.u] >> p.v & 1)
                b.add_edge(p.u, p.v);
        return std::move(b).build();
    }

    std::size_t n_;
    std::vector<Pair> pairs_;
    detail::Deadline& deadline_;
    std::vector<std::uint32_t> adj_;
};

} // namespace

AesReport aes_scan(std::size_t n, const SearchConfig& config)
{
    check_graph_scan(n, config, "aes scan");
    detail::Deadline deadline(config.budget_seconds);
    const std::size_t pairs = n * (n - 1) / 2;
    const std::size_t fixed = std::min<std::size_t>(pairs, 6);
    const std::size_t tasks = std::size_t{1} << fixed;
    std::vector<AesReport> results(tasks);
    detail::parallel_for(tasks, resolve_workers(config),
                         [&](std::size_t t) { results[t] = AesSearch(n, deadline).run_from(t, fixed); });

    AesReport report;
    report.n = n;
    for (const AesReport& r : results) {
        report.triangle_free += r.triangle_free;
        report.above_threshold += r.above_threshold;
        report.violations += r.violations;
        report.tight_nonbipartite += r.tight_nonbipartite;
        report.nodes += r.nodes;
        report.complete = report.complete && r.complete;
        if (report.first_violation.empty())
            report.first_violation = r.first_violation;
    }
    report.elapsed_seconds = deadline.elapsed();
    return report;
}

} // namespace fanol2
