#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "fanol2/detect.hpp"
#include "fanol2/error.hpp"
#include "fanol2/search.hpp"
#include "fanol2/textio.hpp"
#include "search_util.hpp"

namespace fanol2 {

namespace {

std::vector<Triple> triple_order(std::size_t n)
{
    std::vector<Triple> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                out.push_back({a, b, c});
    return out;
}

// index[a*64 + b*8 + c] for a < b < c < 8.
std::vector<int> triple_index_table(std::size_t n)
{
    std::vector<int> idx(512, -1);
    const auto triples = triple_order(n);
    for (std::size_t i = 0; i < triples.size(); ++i)
        idx[triples[i].a * 64 + triples[i].b * 8 + triples[i].c] = static_cast<int>(i);
    return idx;
}

Uniform3Graph graph_from_triple_mask(std::size_t n, std::uint64_t mask)
{
    const auto triples = triple_order(n);
    std::vector<Triple> edges;
    for (std::size_t i = 0; i < triples.size(); ++i)
        if (mask >> i & 1)
            edges.push_back(triples[i]);
    return Uniform3Graph(n, edges);
}

KeyValues base_params(std::size_t n, const SearchConfig& config, unsigned workers)
{
    return {{"n", std::to_string(n)},
            {"workers", std::to_string(workers)},
            {"seed", std::to_string(config.seed)},
            {"budget_seconds", std::to_string(config.budget_seconds)}};
}

} // namespace

std::uint64_t triple_mask(const Uniform3Graph& h)
{
    if (h.vertex_count() > 8)
        fail(ErrorCode::Capacity, "triple masks support n <= 8");
    const auto idx = triple_index_table(h.vertex_count());
    std::uint64_t mask = 0;
    for (const Triple& t : h.edges())
        mask |= std::uint64_t{1} << idx[t.a * 64 + t.b * 8 + t.c];
    return mask;
}

std::uint64_t canonical_triple_mask(std::size_t n, std::uint64_t mask)
{
    if (n > 8)
        fail(ErrorCode::Capacity, "canonical forms support n <= 8");
    const auto triples = triple_order(n);
    const auto idx = triple_index_table(n);
    std::vector<Triple> present;
    for (std::size_t i = 0; i < triples.size(); ++i)
        if (mask >> i & 1)
            present.push_back(triples[i]);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        for (const Triple& t : present) {
            const Triple u = make_triple(perm[t.a], perm[t.b], perm[t.c]);
            m |= std::uint64_t{1} << idx[u.a * 64 + u.b * 8 + u.c];
        }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// --- Fano-free l2 maximum -----------------------------------------------------

namespace {

class FanoFreeBnb {
public:
    FanoFreeBnb(detail::Deadline& deadline) : deadline_(deadline), triples_(triple_order(7))
    {
        // Pair index for u < v < 7.
        for (Vertex u = 0, k = 0; u < 7; ++u)
            for (Vertex v = u + 1; v < 7; ++v, ++k)
                pair_index_[u * 7 + v] = static_cast<int>(k);
        for (std::size_t i = 0; i < triples_.size(); ++i) {
            const Triple& t = triples_[i];
            triple_pairs_[i] = {pair_index_[t.a * 7 + t.b], pair_index_[t.a * 7 + t.c], pair_index_[t.b * 7 + t.c]};
        }
        // The 30 labelled Fano planes on 7 points.
        const Uniform3Graph fano = fano_plane();
        std::set<std::uint64_t> copies;
        std::vector<Vertex> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        do
            copies.insert(triple_mask(fano.relabeled(perm)));
        while (std::next_permutation(perm.begin(), perm.end()));
        copies_.assign(copies.begin(), copies.end());
        for (std::size_t c = 0; c < copies_.size(); ++c)
            for (std::size_t i = 0; i < triples_.size(); ++i)
                if (copies_[c] >> i & 1)
                    triple_copies_[i].push_back(c);
    }

    std::size_t copy_count() const { return copies_.size(); }

    struct Result {
        std::int64_t best = 0;
        std::uint64_t mask = 0;
        bool improved = false;
        std::uint64_t nodes = 0;
        bool complete = true;
    };

    Result run(std::int64_t incumbent)
    {
        best_ = incumbent;
        cur_.fill(0);
        all_.fill(5); // every pair of K_7^3 has codegree 5
        copy_hits_.assign(copies_.size(), 0);
        dfs(0, 0);
        Result r;
        r.best = best_;
        r.mask = best_mask_;
        r.improved = improved_;
        r.nodes = nodes_;
        r.complete = !stopped_;
        return r;
    }

private:
    static std::int64_t squares(const std::array<int, 21>& cd)
    {
        std::int64_t s = 0;
        for (int d : cd)
            s += static_cast<std::int64_t>(d) * d;
        return s;
    }

    void dfs(std::size_t i, std::uint64_t mask)
    {
        if (stopped_)
            return;
        if ((++nodes_ & 0xFFFF) == 0 && deadline_.expired()) {
            stopped_ = true;
            return;
        }
        const std::int64_t current = squares(cur_);
        if (i == triples_.size()) {
            if (current > best_) {
                best_ = current;
                best_mask_ = mask;
                improved_ = true;
            }
            return;
        }
        // Adding edges never lowers the norm, so current + undecided bounds
        // every completion; the second bound is 6n per remaining edge.
        const std::int64_t bound =
            std::min(squares(all_), current + 6 * 7 * static_cast<std::int64_t>(triples_.size() - i));
        if (bound <= best_)
            return;

        bool closes = false;
        for (std::size_t c : triple_copies_[i])
            if (copy_hits_[c] == 6)
                closes = true;
        if (!closes) {
            for (std::size_t c : triple_copies_[i])
                ++copy_hits_[c];
            for (int p : triple_pairs_[i])
                ++cur_[p];
            dfs(i + 1, mask | std::uint64_t{1} << i);
            for (int p : triple_pairs_[i])
                --cur_[p];
            for (std::size_t c : triple_copies_[i])
                --copy_hits_[c];
        }
        for (int p : triple_pairs_[i])
            --all_[p];
        dfs(i + 1, mask);
        for (int p : triple_pairs_[i])
            ++all_[p];
    }

    detail::Deadline& deadline_;
    std::vector<Triple> triples_;
    std::array<int, 49> pair_index_{};
    std::array<std::array<int, 3>, 35> triple_pairs_{};
    std::array<std::vector<std::size_t>, 35> triple_copies_{};
    std::vector<std::uint64_t> copies_;
    std::array<int, 21> cur_{};
    std::array<int, 21> all_{};
    std::vector<int> copy_hits_;
    std::int64_t best_ = 0;
    std::uint64_t best_mask_ = 0;
    bool improved_ = false;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

} // namespace

SearchReport max_l2_fano_free(std::size_t n, const SearchConfig& config)
{
    SearchReport r;
    r.objective = "fano-l2";
    r.params = base_params(n, config, 1);
    detail::Deadline deadline(config.budget_seconds);
    if (n <= 6) {
        // The Fano plane needs seven vertices.
        const Uniform3Graph k = complete3(n);
        r.optimum = lp_norm(k, 2);
        r.witness = format_3graph(k);
        r.nodes = 1;
        r.elapsed_seconds = deadline.elapsed();
        return r;
    }
    if (n != 7)
        fail(ErrorCode::Capacity, "fano-l2 search supports n <= 7");
    if (config.budget_seconds <= 0)
        fail(ErrorCode::Capacity, "fano-l2 search at n = 7 requires a positive --budget");

    const Uniform3Graph incumbent = balanced_bipartite3(7);
    FanoFreeBnb bnb(deadline);
    const auto res = bnb.run(static_cast<std::int64_t>(lp_norm(incumbent, 2)));
    const Uniform3Graph witness = res.improved ? graph_from_triple_mask(7, res.mask) : incumbent;
    r.optimum = lp_norm(witness, 2);
    r.witness = format_3graph(witness);
    r.nodes = res.nodes;
    r.complete = res.complete;
    r.details = {{"fano_copies", std::to_string(bnb.copy_count())},
                 {"incumbent", to_string(lp_norm(incumbent, 2))},
                 {"witness_edges", std::to_string(witness.edge_count())}};
    r.elapsed_seconds = deadline.elapsed();
    return r;
}

// --- bipartite extremality ----------------------------------------------------

BipartiteScanReport bipartite_l2_full_scan(std::size_t n, const SearchConfig& config)
{
    if (n < 3 || n > 6)
        fail(ErrorCode::Capacity, "the full bipartite scan supports 3 <= n <= 6");
    detail::Deadline deadline(config.budget_seconds);
    const auto triples = triple_order(n);
    std::array<int, 64> pair_index{};
    for (Vertex u = 0, k = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++k)
            pair_index[u * 8 + v] = static_cast<int>(k);

    BipartiteScanReport report;
    report.n = n;
    report.closed_form = bn_l2_closed(n);
    std::int64_t best = -1;
    std::set<std::uint64_t> maximizers;

    // Vertex 0 stays in the first part; swapping parts gives the same graphs.
    for (std::uint32_t part = 1; part < (1u << n) - 1; part += 2) {
        std::vector<std::size_t> crossing;
        for (std::size_t i = 0; i < triples.size(); ++i) {
            const Triple& t = triples[i];
            const int in = (part >> t.a & 1) + (part >> t.b & 1) + (part >> t.c & 1);
            if (in == 1 || in == 2)
                crossing.push_back(i);
        }
        std::vector<std::array<int, 3>> tp;
        for (std::size_t i : crossing) {
            const Triple& t = triples[i];
            tp.push_back({pair_index[t.a * 8 + t.b], pair_index[t.a * 8 + t.c], pair_index[t.b * 8 + t.c]});
        }
        std::array<int, 15> cd{};
        std::int64_t norm = 0;
        std::uint64_t mask = 0;
        auto consider = [&] {
            ++report.graphs;
            if (norm > best) {
                best = norm;
                maximizers.clear();
            }
            if (norm == best)
                maximizers.insert(mask);
        };
        consider();
        const std::uint64_t count = std::uint64_t{1} << crossing.size();
        std::uint64_t gray = 0;
        for (std::uint64_t k = 1; k < count; ++k) {
            if ((k & 0xFFFF) == 0 && deadline.expired()) {
                report.complete = false;
                break;
            }
            const std::size_t flip = static_cast<std::size_t>(std::countr_zero(k));
            gray ^= std::uint64_t{1} << flip;
            const bool on = (gray >> flip & 1) != 0;
            for (int p : tp[flip]) {
                if (on) {
                    norm += 2 * cd[p] + 1;
                    ++cd[p];
                } else {
                    --cd[p];
                    norm -= 2 * cd[p] + 1;
                }
            }
            mask ^= std::uint64_t{1} << crossing[flip];
            consider();
        }
        if (!report.complete)
            break;
    }

    report.max_norm = best;
    report.maximizers = maximizers.size();
    const std::uint64_t target = canonical_triple_mask(n, triple_mask(balanced_bipartite3(n)));
    report.all_isomorphic_to_bn = !maximizers.empty() &&
                                  std::all_of(maximizers.begin(), maximizers.end(), [&](std::uint64_t m) {
                                      return canonical_triple_mask(n, m) == target;
                                  });
    report.elapsed_seconds = deadline.elapsed();
    return report;
}

CompleteBipartiteScan complete_bipartite_scan(std::size_t n)
{
    if (n < 2 || n > 40)
        fail(ErrorCode::Capacity, "the complete bipartite scan supports 2 <= n <= 40");
    CompleteBipartiteScan scan;
    scan.n = n;
    scan.closed_matches = true;
    BigInt best_norm = -1;
    BigInt best_stars = -1;
    for (std::size_t a = 1; a < n; ++a) {
        const Uniform3Graph h = bipartite3(a, n - a);
        const BigInt norm = lp_norm(h, 2);
        const BigInt stars = count_stars(h, 2);
        if (norm != bipartite3_l2_closed(a, n - a))
            scan.closed_matches = false;
        if (norm > best_norm) {
            best_norm = norm;
            scan.argmax_norm.clear();
        }
        if (norm == best_norm)
            scan.argmax_norm.push_back(a);
        if (stars > best_stars) {
            best_stars = stars;
            scan.argmax_stars.clear();
        }
        if (stars == best_stars)
            scan.argmax_stars.push_back(a);
    }
    return scan;
}

SearchReport bipartite_l2_scan(std::size_t n, const SearchConfig& config)
{
    SearchReport r;
    r.objective = "bipartite-l2";
    r.params = base_params(n, config, 1);
    detail::Stopwatch clock;
    auto join = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (std::size_t x : v)
            s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    const CompleteBipartiteScan scan = complete_bipartite_scan(n);
    r.details = {{"argmax_part_norm", join(scan.argmax_norm)},
                 {"argmax_part_stars", join(scan.argmax_stars)},
                 {"closed_form_matches", scan.closed_matches ? "true" : "false"}};
    r.witness = format_3graph(balanced_bipartite3(n));
    if (n >= 3 && n <= 6) {
        const BipartiteScanReport full = bipartite_l2_full_scan(n, config);
        r.optimum = full.max_norm;
        r.nodes = full.graphs;
        r.complete = full.complete;
        r.details.push_back({"scope", "all bipartite 3-graphs"});
        r.details.push_back({"closed_form", to_string(full.closed_form)});
        r.details.push_back({"maximizers", std::to_string(full.maximizers)});
        r.details.push_back({"all_isomorphic_to_bn", full.all_isomorphic_to_bn ? "true" : "false"});
    } else {
        r.optimum = bipartite3_l2_closed((n + 1) / 2, n / 2);
        r.nodes = n - 1;
        r.details.push_back({"scope", "complete bipartite 3-graphs"});
    }
    r.elapsed_seconds = clock.seconds();
    return r;
}

} // namespace fanol2
