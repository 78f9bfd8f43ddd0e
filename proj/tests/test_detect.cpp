#include "doctest.h"

#include "fanol2/detect.hpp"
#include "fanol2/error.hpp"
#include "oracles.hpp"

using namespace fanol2;

namespace {

std::vector<Vertex> random_permutation(oracle::Rng& rng, std::size_t n)
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n; i > 1; --i)
        std::swap(p[i - 1], p[rng.between(0, i - 1)]);
    return p;
}

// Vertex 0 with link matching 12, 34, 56 and all eight transversal triples.
Uniform3Graph matching_violator()
{
    std::vector<Triple> edges = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}};
    for (Vertex x : {1, 2})
        for (Vertex y : {3, 4})
            for (Vertex z : {5, 6})
                edges.push_back({x, y, z});
    return Uniform3Graph(7, edges);
}

} // namespace

TEST_CASE("Fano and K5 patterns")
{
    const Pattern3 fano = Pattern3::fano();
    CHECK(fano.vertex_count() == 7);
    CHECK(fano.graph().edge_count() == 7);
    for (Vertex v = 0; v < 7; ++v)
        CHECK(fano.graph().degree(v) == 3);
    CHECK(shadow(fano.graph()).size() == 21);

    const auto self = find_embedding(fano_plane(), fano);
    REQUIRE(self.has_value());
    CHECK(is_embedding(fano_plane(), fano, *self));
    CHECK(contains_fano(complete3(7)));
    CHECK(contains_k53(complete3(5)));
    CHECK_FALSE(contains_k53(complete3(4)));
    CHECK_FALSE(contains_fano(complete3(6)));
    for (std::size_t n = 3; n <= 12; ++n) {
        CHECK_FALSE(contains_fano(balanced_bipartite3(n)));
        CHECK_FALSE(contains_k53(balanced_bipartite3(n)));
    }
}

TEST_CASE("bipartiteness")
{
    const auto parts = find_bipartition3(balanced_bipartite3(9));
    REQUIRE(parts.has_value());
    CHECK(is_bipartition_of(balanced_bipartite3(9), *parts));
    CHECK_FALSE(is_bipartite3(complete3(7)));
    CHECK_FALSE(is_bipartite3(fano_plane()));
    const Triple e{0, 1, 2};
    CHECK(is_bipartite3(Uniform3Graph(3, std::span<const Triple>(&e, 1))));
    CHECK(is_bipartite3(Uniform3Graph(0)));
    CHECK_THROWS_AS(is_bipartite3(Uniform3Graph(31)), Error);
}

TEST_CASE("link matching condition")
{
    for (Vertex v = 0; v < 8; ++v)
        CHECK(link_matching_check(balanced_bipartite3(8), v));
    for (Vertex v = 0; v < 5; ++v)
        CHECK(link_matching_check(complete3(5), v));
    const Uniform3Graph bad = matching_violator();
    const auto w = find_link_matching_violation(bad, 0);
    REQUIRE(w.has_value());
    CHECK(w->v == 0);
    CHECK_FALSE(link_matching_check(bad, 0));
    CHECK(contains_fano(bad));
    CHECK_THROWS_AS(link_matching_check(bad, 7), Error);
    CHECK_FALSE(find_link_k4_violation(balanced_bipartite3(8)).has_value());
    CHECK(find_link_k4_violation(complete3(7)).has_value());
}

TEST_CASE("property: Fano detection agrees with injection enumeration")
{
    oracle::Rng rng(777);
    const Pattern3 fano = Pattern3::fano();
    for (int i = 0; i < 80; ++i) {
        const std::size_t n = rng.between(6, 8);
        // Dense hosts so both answers occur.
        Uniform3Graph h = oracle::random_3graph(rng, n, rng.between(45, 90));
        if (i % 4 == 0) {
            std::vector<Triple> edges(h.edges().begin(), h.edges().end());
            const auto p = random_permutation(rng, n);
            const Uniform3Graph f = fano_plane();
            for (const Triple& e : f.edges())
                if (n >= 7)
                    edges.push_back(make_triple(p[e.a], p[e.b], p[e.c]));
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
            h = Uniform3Graph(n, edges);
        }
        const bool found = contains_fano(h);
        if (n <= 7)
            CHECK(found == oracle::contains_by_injection(h, fano_plane()));
        if (auto phi = find_embedding(h, fano))
            CHECK(is_embedding(h, fano, *phi));
        CHECK(contains_fano(h.relabeled(random_permutation(rng, n))) == found);
        CHECK(contains_k53(h) == oracle::contains_by_injection(h, complete3(5)));

        // Adding an edge never destroys a copy.
        std::vector<Triple> more(h.edges().begin(), h.edges().end());
        for (const Triple& t : oracle::all_triples(n))
            if (!h.has_edge(t.a, t.b, t.c)) {
                more.push_back(t);
                break;
            }
        std::sort(more.begin(), more.end());
        CHECK((!found || contains_fano(Uniform3Graph(n, more))));

        // Fano-free hosts satisfy the link condition everywhere.
        if (!found)
            for (Vertex v = 0; v < n; ++v)
                CHECK(link_matching_check(h, v));
    }
}

TEST_CASE("property: bipartiteness agrees with enumeration")
{
    oracle::Rng rng(1234);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = rng.between(3, 10);
        const Uniform3Graph h = oracle::random_3graph(rng, n, rng.between(5, 60));
        const auto parts = find_bipartition3(h);
        CHECK(parts.has_value() == oracle::is_bipartite_by_enumeration(h));
        if (parts) {
            CHECK(is_bipartition_of(h, *parts));
            CHECK(std::find(parts->part1.begin(), parts->part1.end(), 0) != parts->part1.end());
            CHECK_FALSE(contains_fano(h));
        }
    }
}
