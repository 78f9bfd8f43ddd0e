#pragma once

// m-multigraphs: an m-tuple of graphs on a common vertex set, stored as one
// colour bitmask per unordered pair. Layer i (1-based) is bit i-1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fanol2/bigint.hpp"
#include "fanol2/hypercore.hpp"

namespace fanol2 {

using ColorSet = std::uint32_t;

constexpr unsigned kMaxLayers = 32;

constexpr ColorSet layer_bit(unsigned layer) { return ColorSet{1} << (layer - 1); }

constexpr ColorSet full_colors(unsigned m) { return m >= 32 ? ~ColorSet{0} : (ColorSet{1} << m) - 1; }

class MMultigraph {
public:
    class Builder {
    public:
        Builder(std::size_t n, unsigned m);

        /// Replaces the colour set of {u, v}.
        Builder& set_colors(Vertex u, Vertex v, ColorSet colors);
        Builder& add_color(Vertex u, Vertex v, unsigned layer);
        MMultigraph build() &&;

    private:
        std::size_t n_;
        unsigned m_;
        std::vector<ColorSet> colors_;
    };

    MMultigraph() = default;
    MMultigraph(std::size_t n, unsigned m);
    /// Layer i of the result is layers[i-1]; all layers share one vertex count.
    static MMultigraph from_layers(std::span<const SimpleGraph> layers);

    std::size_t vertex_count() const noexcept { return n_; }
    unsigned layer_count() const noexcept { return m_; }

    ColorSet colors(Vertex u, Vertex v) const;
    unsigned multiplicity(Vertex u, Vertex v) const;
    /// Sum of multiplicities over all pairs.
    std::size_t size() const noexcept { return size_; }
    std::size_t degree(Vertex v) const;
    std::size_t min_degree() const;
    SimpleGraph layer(unsigned layer) const;

    /// Induced on the listed vertices, relabelled 0..k-1 in list order.
    MMultigraph induced(std::span<const Vertex> vertices) const;
    MMultigraph with_colors(Vertex u, Vertex v, ColorSet colors) const;
    /// Layer-wise containment: colors(uv) is a subset of other.colors(uv).
    bool is_subgraph_of(const MMultigraph& other) const;

    friend bool operator==(const MMultigraph&, const MMultigraph&) = default;

private:
    MMultigraph(std::size_t n, unsigned m, std::vector<ColorSet> colors);
    std::size_t slot(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

    std::size_t n_ = 0;
    unsigned m_ = 0;
    std::vector<ColorSet> colors_;
    std::vector<std::uint32_t> degree_;
    std::size_t size_ = 0;
};

/// A copy of K4 made of three layers and four vertices (a, b, c, d):
/// layers[0] holds ab and cd, layers[1] holds ac and bd, layers[2] holds ad and bc.
struct K4Witness {
    std::array<unsigned, 3> layers{};
    std::array<Vertex, 4> vertices{};
};

/// True iff three pairwise distinct layers can be picked, one from each set.
bool has_distinct_representatives(ColorSet a, ColorSet b, ColorSet c);

/// Layer triples (ascending) outer, vertex 4-sets (lexicographic) inner; the
/// first hit is returned. Multigraphs with fewer than three layers never
/// contain the pattern.
std::optional<K4Witness> find_k4(const MMultigraph& mg);
bool contains_k4(const MMultigraph& mg);

/// Checks a witness against raw colour sets.
bool is_k4_witness(const MMultigraph& mg, const K4Witness& w);

/// Layers 1,2 = clique(V1) + K[V1,V2]; layers 3,4 = clique(V2) + K[V1,V2];
/// layer 5 = K[V1,V2], with V1 the first ceil(n/2) vertices.
MMultigraph bipartite_construction_5(std::size_t n);
/// Five copies of the balanced complete 3-partite graph.
MMultigraph turan_layers_5(std::size_t n);

enum class PartitionKind { Nice, Good };

struct PartitionCertificate {
    std::vector<Vertex> part1;
    std::vector<Vertex> part2;
    /// layer_permutation[r] is the original layer that plays role r+1.
    std::array<unsigned, 5> layer_permutation{};
    PartitionKind kind = PartitionKind::Nice;
};

/// Re-derives the defining emptiness and multiplicity conditions from the
/// raw colour sets.
bool is_certificate_valid(const MMultigraph& mg, const PartitionCertificate& cert);

constexpr std::size_t kDefaultPartitionCap = 24;

/// Exhaustive over bipartitions and all 5! layer permutations. Requires
/// m = 5; throws Capacity above the vertex cap.
std::optional<PartitionCertificate> find_nice_partition(const MMultigraph& mg,
                                                        std::size_t cap = kDefaultPartitionCap);
std::optional<PartitionCertificate> find_good_partition(const MMultigraph& mg,
                                                        std::size_t cap = kDefaultPartitionCap);

/// All 96 labelled saturated 5-multigraphs on {0,1,2,3}.
std::vector<MMultigraph> saturated_family_4();
bool is_subgraph_of_saturated(const MMultigraph& mg4);

/// {mu(xy), mu(xz), mu(yz)} sorted descending.
std::array<unsigned, 3> triple_type(const MMultigraph& mg, Vertex x, Vertex y, Vertex z);
/// First triple (lexicographic) whose three multiplicities are all >= 3.
std::optional<std::array<Vertex, 3>> find_heavy_triple(const MMultigraph& mg);
bool has_heavy_triple(const MMultigraph& mg);

/// Repeatedly deletes a minimum-degree vertex (lowest index on ties) while
/// the current minimum degree is below beta times the current vertex count.
/// Requires m = 5 and 0 <= beta <= 7/2. Returned vertices are ascending.
std::vector<Vertex> extract_dense_core(const MMultigraph& mg, const Rational& beta);

/// The multigraph whose layers are the links of the given vertices.
MMultigraph link_multigraph(const Uniform3Graph& h, std::span<const Vertex> vertices);

} // namespace fanol2
