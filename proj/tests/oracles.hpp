#pragma once

// Brute-force reference implementations and seeded generators used by the
// tests. Nothing here calls into the code paths it is compared against.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fanol2/hypercore.hpp"
#include "fanol2/multigraph.hpp"

namespace oracle {

using fanol2::BigInt;
using fanol2::ColorSet;
using fanol2::Triple;
using fanol2::Vertex;

/// SplitMix64; fixed so every platform sees the same instances.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

private:
    std::uint64_t state_;
};

inline std::vector<Triple> all_triples(std::size_t n)
{
    std::vector<Triple> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                out.push_back({a, b, c});
    return out;
}

inline fanol2::Uniform3Graph random_3graph(Rng& rng, std::size_t n, std::uint64_t percent)
{
    std::vector<Triple> edges;
    for (const Triple& t : all_triples(n))
        if (rng.chance(percent, 100))
            edges.push_back(t);
    return fanol2::Uniform3Graph(n, edges);
}

inline fanol2::MMultigraph random_multigraph(Rng& rng, std::size_t n, unsigned m, std::uint64_t percent)
{
    fanol2::MMultigraph::Builder b(n, m);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            ColorSet c = 0;
            for (unsigned l = 1; l <= m; ++l)
                if (rng.chance(percent, 100))
                    c |= fanol2::layer_bit(l);
            b.set_colors(u, v, c);
        }
    return std::move(b).build();
}

/// Codegree of every pair, counted from the edge list.
inline std::map<std::pair<Vertex, Vertex>, std::uint64_t> codegrees(const fanol2::Uniform3Graph& h)
{
    std::map<std::pair<Vertex, Vertex>, std::uint64_t> d;
    for (const Triple& e : h.edges()) {
        ++d[{e.a, e.b}];
        ++d[{e.a, e.c}];
        ++d[{e.b, e.c}];
    }
    return d;
}

inline BigInt norm(const fanol2::Uniform3Graph& h, unsigned p)
{
    BigInt s = 0;
    for (const auto& [pair, d] : codegrees(h)) {
        BigInt term = 1;
        for (unsigned i = 0; i < p; ++i)
            term *= d;
        s += term;
    }
    return s;
}

/// The 3-graph with vertex v's edges removed (v stays as an isolated vertex).
inline fanol2::Uniform3Graph delete_vertex(const fanol2::Uniform3Graph& h, Vertex v)
{
    std::vector<Triple> kept;
    for (const Triple& e : h.edges())
        if (e.a != v && e.b != v && e.c != v)
            kept.push_back(e);
    return fanol2::Uniform3Graph(h.vertex_count(), kept);
}

/// Unordered pairs of edges sharing exactly two vertices.
inline std::vector<std::pair<std::size_t, std::size_t>> s2_copies(const fanol2::Uniform3Graph& h)
{
    const auto edges = h.edges();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const std::set<Vertex> a{edges[i].a, edges[i].b, edges[i].c};
            int shared = 0;
            for (Vertex x : {edges[j].a, edges[j].b, edges[j].c})
                shared += a.count(x) ? 1 : 0;
            if (shared == 2)
                out.emplace_back(i, j);
        }
    return out;
}

/// Every injection of the pattern's vertices into the host.
inline bool contains_by_injection(const fanol2::Uniform3Graph& host, const fanol2::Uniform3Graph& pattern)
{
    const std::size_t n = host.vertex_count(), k = pattern.vertex_count();
    if (k > n)
        return false;
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    // Choose a k-subset, then try all orderings of it.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<Vertex> image;
        for (Vertex v = 0; v < n; ++v)
            if (pick[v])
                image.push_back(v);
        do {
            bool ok = true;
            for (const Triple& e : pattern.edges())
                if (!host.has_edge(image[e.a], image[e.b], image[e.c])) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(image.begin(), image.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

inline bool is_bipartite_by_enumeration(const fanol2::Uniform3Graph& h)
{
    const std::size_t n = h.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const Triple& e : h.edges()) {
            const int in = static_cast<int>((mask >> e.a & 1) + (mask >> e.b & 1) + (mask >> e.c & 1));
            if (in == 0 || in == 3) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

/// K4 in an m-multigraph: four vertices and three distinct layers, one per
/// perfect matching, each layer containing both pairs of its matching.
inline bool contains_k4_brute(const fanol2::MMultigraph& mg)
{
    const std::size_t n = mg.vertex_count();
    const unsigned m = mg.layer_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    const std::array<ColorSet, 3> match = {mg.colors(a, b) & mg.colors(c, d),
                                                           mg.colors(a, c) & mg.colors(b, d),
                                                           mg.colors(a, d) & mg.colors(b, c)};
                    for (unsigned i = 1; i <= m; ++i)
                        for (unsigned j = 1; j <= m; ++j)
                            for (unsigned k = 1; k <= m; ++k)
                                if (i != j && j != k && i != k && (match[0] >> (i - 1) & 1) &&
                                    (match[1] >> (j - 1) & 1) && (match[2] >> (k - 1) & 1))
                                    return true;
                }
    return false;
}

/// Nice or good partitions by trying every bipartition and layer relabelling.
inline bool has_partition_brute(const fanol2::MMultigraph& mg, bool good)
{
    const std::size_t n = mg.vertex_count();
    std::array<unsigned, 5> perm = {1, 2, 3, 4, 5};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::sort(perm.begin(), perm.end());
        do {
            // perm[r] is the original layer that plays role r + 1.
            auto has = [&](Vertex u, Vertex v, unsigned role) {
                return (mg.colors(u, v) >> (perm[role - 1] - 1) & 1) != 0;
            };
            bool ok = true;
            for (Vertex u = 0; u < n && ok; ++u)
                for (Vertex v = u + 1; v < n && ok; ++v) {
                    const bool in2_u = mask >> u & 1, in2_v = mask >> v & 1;
                    if (!in2_u && !in2_v)
                        ok = !has(u, v, 3) && !has(u, v, 4) && !has(u, v, 5);
                    else if (in2_u && in2_v)
                        ok = !has(u, v, 1) && !has(u, v, 2) && (good ? !has(u, v, 5) : mg.multiplicity(u, v) <= 2);
                }
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

/// Peeling by recomputing every degree from scratch at each step.
inline std::vector<Vertex> peel(const fanol2::MMultigraph& mg, std::uint64_t num, std::uint64_t den)
{
    std::vector<Vertex> alive(mg.vertex_count());
    std::iota(alive.begin(), alive.end(), 0);
    while (!alive.empty()) {
        std::size_t worst = 0;
        std::uint64_t worst_deg = ~std::uint64_t{0};
        for (std::size_t i = 0; i < alive.size(); ++i) {
            std::uint64_t d = 0;
            for (Vertex u : alive)
                if (u != alive[i])
                    d += mg.multiplicity(alive[i], u);
            if (d < worst_deg) {
                worst_deg = d;
                worst = i;
            }
        }
        if (worst_deg * den >= num * alive.size())
            break;
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(worst));
    }
    return alive;
}

} // namespace oracle
