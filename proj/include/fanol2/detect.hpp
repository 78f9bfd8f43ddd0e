#pragma once

// Embedding search for fixed 3-graph patterns, bipartiteness of 3-graphs and
// the two link-based necessary conditions for Fano-freeness.

#include <array>
#include <optional>
#include <vector>

#include "fanol2/hypercore.hpp"

namespace fanol2 {

class Pattern3 {
public:
    explicit Pattern3(Uniform3Graph graph);

    static Pattern3 fano();
    static Pattern3 k53();

    const Uniform3Graph& graph() const noexcept { return graph_; }
    std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
    /// Branching order: each step maximises closed edges, then codegree
    /// contacts with already placed vertices, then degree; lowest index last.
    const std::vector<Vertex>& order() const noexcept { return order_; }

private:
    Uniform3Graph graph_;
    std::vector<Vertex> order_;
};

/// embedding[p] is the host image of pattern vertex p.
using Embedding = std::vector<Vertex>;

/// Injective edge-preserving map, or absent. Host candidates are tried in
/// ascending order, so the result is the first one in branching order.
std::optional<Embedding> find_embedding(const Uniform3Graph& host, const Pattern3& pattern);
bool is_embedding(const Uniform3Graph& host, const Pattern3& pattern, const Embedding& phi);

bool contains_fano(const Uniform3Graph& host);
bool contains_k53(const Uniform3Graph& host);

struct Bipartition {
    std::vector<Vertex> part1;
    std::vector<Vertex> part2;
};

constexpr std::size_t kDefaultBipartiteCap = 30;

/// Branches on vertices in index order with unit propagation (an edge with
/// two ends on one side forces its third vertex across). Vertex 0 is pinned
/// to part1. Throws Capacity above the cap.
std::optional<Bipartition> find_bipartition3(const Uniform3Graph& h, std::size_t cap = kDefaultBipartiteCap);
bool is_bipartite3(const Uniform3Graph& h, std::size_t cap = kDefaultBipartiteCap);
bool is_bipartition_of(const Uniform3Graph& h, const Bipartition& parts);

/// Three pairwise disjoint link edges of v whose eight transversal triples
/// are all edges of H.
struct MatchingViolation {
    Vertex v = 0;
    std::array<Pair, 3> matching{};
};

/// Absent when the condition holds at v.
std::optional<MatchingViolation> find_link_matching_violation(const Uniform3Graph& h, Vertex v);
bool link_matching_check(const Uniform3Graph& h, Vertex v);

/// First edge uvw (in edge order) whose link 3-multigraph contains the
/// K4 pattern.
std::optional<Triple> find_link_k4_violation(const Uniform3Graph& h);

} // namespace fanol2
