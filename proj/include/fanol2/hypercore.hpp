#pragma once

// Simple graphs and 3-uniform hypergraphs with exact norm/star/degree calculus.
//
// Vertices are dense 0-based indices. Both graph types are immutable once
// built; every derived quantity (codegrees, degrees) is computed eagerly at
// construction, so values can be shared freely between threads.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fanol2/bigint.hpp"

namespace fanol2 {

using Vertex = std::uint32_t;

/// Unordered pair, stored with u < v.
struct Pair {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Unordered triple, stored with a < b < c.
struct Triple {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Normalises the order; throws InvalidArgument on repeated vertices.
Pair make_pair(Vertex x, Vertex y);
Triple make_triple(Vertex x, Vertex y, Vertex z);

class SimpleGraph {
public:
    class Builder {
    public:
        explicit Builder(std::size_t n);

        /// Idempotent. Throws on loops or out-of-range endpoints.
        Builder& add_edge(Vertex u, Vertex v);
        bool has_edge(Vertex u, Vertex v) const;
        SimpleGraph build() &&;

    private:
        std::size_t n_;
        std::size_t words_;
        std::vector<std::uint64_t> bits_;
    };

    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n);
    /// Rejects loops, out-of-range endpoints and duplicate pairs.
    SimpleGraph(std::size_t n, std::span<const Pair> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool has_edge(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::size_t min_degree() const;
    std::vector<Pair> edges() const;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::span<const std::uint64_t> row(Vertex v) const;
    SimpleGraph complement() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    SimpleGraph(std::size_t n, std::vector<std::uint64_t> bits);

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> degrees_;
};

class Uniform3Graph {
public:
    Uniform3Graph() = default;
    explicit Uniform3Graph(std::size_t n);
    /// Edges may be given in any vertex order; duplicates and degenerate
    /// triples are rejected.
    Uniform3Graph(std::size_t n, std::span<const Triple> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Triple> edges() const noexcept { return edges_; }

    bool has_edge(Vertex x, Vertex y, Vertex z) const;
    /// Number of edges containing {u, v}; zero when u == v.
    std::uint32_t codegree(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    /// Bit row of the vertices w with {u, v, w} an edge.
    std::span<const std::uint64_t> common_neighbors(Vertex u, Vertex v) const;

    /// Same vertex set with every edge through v dropped (v becomes isolated).
    Uniform3Graph without_vertex(Vertex v) const;
    /// Relabels vertex i to perm[i].
    Uniform3Graph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const Uniform3Graph& a, const Uniform3Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void index();
    std::size_t pair_slot(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Triple> edges_;
    std::vector<std::uint32_t> codegree_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::uint64_t> third_;
};

// --- calculus -------------------------------------------------------------

std::vector<Pair> shadow(const Uniform3Graph& h);
SimpleGraph link(const Uniform3Graph& h, Vertex v);

/// Sum over shadow pairs of codegree^p, exact. Throws for p == 0.
BigInt lp_norm(const Uniform3Graph& h, unsigned p);
/// Real exponent, p >= 1.
double lp_norm_real(const Uniform3Graph& h, double p);
/// For graphs the shadow is the vertex set: sum of degree^p.
BigInt lp_norm(const SimpleGraph& g, unsigned p);
double lp_norm_real(const SimpleGraph& g, double p);

/// ||H||_p - ||H - v||_p, evaluated pair by pair without building H - v.
BigInt lp_norm_degree(const Uniform3Graph& h, Vertex v, unsigned p);
double lp_norm_degree_real(const Uniform3Graph& h, Vertex v, double p);

/// Link-sum form of the l2-norm degree:
/// sum_u d(uv)^2 + 2 sum_{e in L(v)} d(e) - d(v).
BigInt l2_degree_expanded(const Uniform3Graph& h, Vertex v);

/// N(S_k^3, H) = sum over shadow pairs of C(d(e), k).
BigInt count_stars(const Uniform3Graph& h, unsigned k);
/// N(S_k, G) = sum over vertices of C(d(v), k).
BigInt count_stars(const SimpleGraph& g, unsigned k);

/// Number of two-edge stars (pairs of edges sharing two vertices) that
/// contain v, counted directly from codegrees.
BigInt star_degree(const Uniform3Graph& h, Vertex v);

class StirlingTable {
public:
    explicit StirlingTable(unsigned max_p);

    unsigned max_p() const noexcept { return max_p_; }
    /// Signed Stirling numbers of the first kind s(p, i).
    const BigInt& first_kind(unsigned p, unsigned i) const;
    /// Stirling numbers of the second kind S(p, i).
    const BigInt& second_kind(unsigned p, unsigned i) const;

private:
    unsigned max_p_;
    std::vector<BigInt> first_;
    std::vector<BigInt> second_;
};

struct NormStarConversion {
    BigInt stars_from_norms; ///< N(S_p^3) rebuilt from ||H||_1..||H||_p
    BigInt norm_from_stars;  ///< ||H||_p rebuilt from N(S_1^3)..N(S_p^3)
};

/// Throws Capacity when p exceeds the table.
NormStarConversion norm_star_conversion(const Uniform3Graph& h, unsigned p, const StirlingTable& table);

/// Closed form for the l2-norm of the balanced complete bipartite 3-graph,
/// evaluated in exact rationals and checked integral.
BigInt bn_l2_closed(std::size_t n);
/// ||.||_2 of the complete bipartite 3-graph with parts a and b.
BigInt bipartite3_l2_closed(std::size_t a, std::size_t b);

BigInt binomial(std::uint64_t n, std::uint64_t k);

// --- constructions --------------------------------------------------------

Uniform3Graph complete3(std::size_t n);
/// Every triple meeting both parts; part one is {0, ..., a-1}.
Uniform3Graph bipartite3(std::size_t a, std::size_t b);
/// Parts of sizes ceil(n/2) and floor(n/2).
Uniform3Graph balanced_bipartite3(std::size_t n);
/// Edges {0,1,2},{2,3,4},{4,5,0},{0,6,3},{1,6,4},{2,6,5},{1,3,5}.
Uniform3Graph fano_plane();

SimpleGraph complete_graph(std::size_t n);
/// C(n,k): a clique on {0..k-1} plus n-k isolated vertices.
SimpleGraph clique_plus_isolated(std::size_t n, std::size_t k);
/// S(n,k): the complement of C(n,k).
SimpleGraph complement_construction(std::size_t n, std::size_t k);
/// S^(n,k,l): S(k+l, k) plus n-k-l isolated vertices.
SimpleGraph shat(std::size_t n, std::size_t k, std::size_t l);
SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b);
/// Largest clique with C(k,2) <= m edges, then one vertex joined to the
/// first m - C(k,2) clique vertices.
SimpleGraph quasi_complete(std::size_t n, std::size_t m);
/// Complement of quasi_complete(n, C(n,2) - m).
SimpleGraph quasi_star(std::size_t n, std::size_t m);

} // namespace fanol2
