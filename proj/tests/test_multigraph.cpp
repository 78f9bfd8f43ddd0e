#include "doctest.h"

#include "fanol2/error.hpp"
#include "fanol2/multigraph.hpp"
#include "oracles.hpp"

using namespace fanol2;

namespace {

MMultigraph k4_itself()
{
    MMultigraph::Builder b(4, 3);
    b.add_color(0, 1, 1).add_color(2, 3, 1);
    b.add_color(0, 2, 2).add_color(1, 3, 2);
    b.add_color(0, 3, 3).add_color(1, 2, 3);
    return std::move(b).build();
}

MMultigraph full_multigraph(std::size_t n, unsigned m)
{
    MMultigraph::Builder b(n, m);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.set_colors(u, v, full_colors(m));
    return std::move(b).build();
}

} // namespace

TEST_CASE("basic bookkeeping")
{
    const MMultigraph mg = k4_itself();
    CHECK(mg.size() == 6);
    CHECK(mg.degree(0) == 3);
    CHECK(mg.min_degree() == 3);
    CHECK(mg.multiplicity(1, 0) == 1);
    CHECK(mg.layer(1).edge_count() == 2);
    CHECK(MMultigraph::from_layers(std::vector<SimpleGraph>{mg.layer(1), mg.layer(2), mg.layer(3)}) == mg);
    CHECK_THROWS_AS(MMultigraph::Builder(3, 2).set_colors(0, 1, 4), Error);
    CHECK_THROWS_AS(MMultigraph::Builder(3, 2).set_colors(1, 1, 1), Error);
}

TEST_CASE("K4 detection")
{
    const MMultigraph k4 = k4_itself();
    const auto w = find_k4(k4);
    REQUIRE(w.has_value());
    CHECK(is_k4_witness(k4, *w));
    CHECK_FALSE(contains_k4(full_multigraph(4, 2)));
    CHECK_FALSE(contains_k4(MMultigraph(6, 5)));
    for (std::size_t n = 3; n <= 10; ++n) {
        CHECK_FALSE(contains_k4(turan_layers_5(n)));
        CHECK_FALSE(contains_k4(bipartite_construction_5(n)));
    }
    CHECK(contains_k4(full_multigraph(4, 3)));
}

TEST_CASE("constructions")
{
    CHECK(bipartite_construction_5(4).size() == 24);
    CHECK(bipartite_construction_5(13).size() == 282);
    CHECK(turan_layers_5(4).size() == 25);
    CHECK(turan_layers_5(3).size() == 15);
    CHECK(turan_layers_5(12).size() == 240);
    CHECK(bipartite_construction_5(12).size() == 240);
    for (std::size_t n = 2; n <= 16; ++n) {
        std::size_t mu_sum = 0;
        const MMultigraph mg = bipartite_construction_5(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                mu_sum += mg.multiplicity(u, v);
        CHECK(mu_sum == mg.size());
        CHECK(mg.size() == 2 * (n * (n - 1) / 2) + 3 * (n * n / 4));
    }
    CHECK_THROWS_AS(bipartite_construction_5(1), Error);
    CHECK_THROWS_AS(turan_layers_5(2), Error);
}

TEST_CASE("partitions")
{
    const MMultigraph b8 = bipartite_construction_5(8);
    const auto good = find_good_partition(b8);
    REQUIRE(good.has_value());
    CHECK(is_certificate_valid(b8, *good));
    CHECK(good->part1.size() + good->part2.size() == 8);
    CHECK(find_nice_partition(b8).has_value());
    CHECK_FALSE(find_good_partition(turan_layers_5(8)).has_value());
    CHECK_THROWS_AS(find_good_partition(MMultigraph(25, 5)), Error);
    CHECK_THROWS_AS(find_nice_partition(MMultigraph(4, 4)), Error);
}

TEST_CASE("saturated family")
{
    const auto family = saturated_family_4();
    CHECK(family.size() == 96);
    for (const MMultigraph& g : family) {
        CHECK(g.size() == 25);
        CHECK_FALSE(contains_k4(g));
        CHECK(is_subgraph_of_saturated(g));
    }
    CHECK_FALSE(is_subgraph_of_saturated(full_multigraph(4, 5)));
    // A member whose light pair gets the empty set has a pair of multiplicity 5 opposite.
    bool extreme = false;
    for (const MMultigraph& g : family)
        for (auto [a, b, c, d] : {std::array<Vertex, 4>{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}})
            extreme = extreme || (g.multiplicity(a, b) == 0 && g.multiplicity(c, d) == 5);
    CHECK(extreme);
    CHECK_THROWS_AS(is_subgraph_of_saturated(MMultigraph(5, 5)), Error);
}

TEST_CASE("triple types and heavy triples")
{
    const MMultigraph b6 = bipartite_construction_5(6);
    CHECK(triple_type(b6, 0, 1, 2) == std::array<unsigned, 3>{2, 2, 2});
    CHECK(triple_type(b6, 0, 1, 3) == std::array<unsigned, 3>{5, 5, 2});
    CHECK(triple_type(MMultigraph(3, 5), 0, 1, 2) == std::array<unsigned, 3>{0, 0, 0});
    CHECK_THROWS_AS(triple_type(b6, 0, 0, 1), Error);
    for (std::size_t n = 2; n <= 12; ++n)
        CHECK_FALSE(has_heavy_triple(bipartite_construction_5(n)));
    CHECK(has_heavy_triple(full_multigraph(3, 5)));
    CHECK(find_heavy_triple(full_multigraph(3, 5)) == std::array<Vertex, 3>{0, 1, 2});
}

TEST_CASE("dense core")
{
    const MMultigraph b10 = bipartite_construction_5(10);
    const auto core = extract_dense_core(b10, Rational(3));
    REQUIRE_FALSE(core.empty());
    CHECK(b10.induced(core).min_degree() >= 3 * core.size());
    CHECK(extract_dense_core(MMultigraph(6, 5), Rational(1)).empty());
    CHECK(extract_dense_core(b10, Rational(0)).size() == 10);
    CHECK_THROWS_AS(extract_dense_core(b10, Rational(4)), Error);
    CHECK_THROWS_AS(extract_dense_core(MMultigraph(4, 4), Rational(1)), Error);
}

TEST_CASE("property: K4 detection agrees with brute force and is monotone")
{
    oracle::Rng rng(4242);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = rng.between(4, 7);
        const unsigned m = static_cast<unsigned>(rng.between(3, 6));
        MMultigraph mg = oracle::random_multigraph(rng, n, m, rng.between(5, 45));
        bool seen = false;
        // Add colours one at a time; once a K4 appears it never disappears.
        for (int step = 0; step < 12; ++step) {
            const bool has = contains_k4(mg);
            CHECK(has == oracle::contains_k4_brute(mg));
            if (auto w = find_k4(mg))
                CHECK(is_k4_witness(mg, *w));
            CHECK((!seen || has));
            seen = has;
            const Vertex u = static_cast<Vertex>(rng.between(0, n - 2));
            const Vertex v = static_cast<Vertex>(rng.between(u + 1, n - 1));
            mg = mg.with_colors(u, v, mg.colors(u, v) | layer_bit(static_cast<unsigned>(rng.between(1, m))));
        }
    }
}

TEST_CASE("property: partition finders agree with exhaustive search")
{
    oracle::Rng rng(515);
    const MMultigraph base = bipartite_construction_5(6);
    for (int i = 0; i < 60; ++i) {
        // Random sub-multigraphs of the construction plus a few stray colours.
        MMultigraph::Builder b(6, 5);
        for (Vertex u = 0; u < 6; ++u)
            for (Vertex v = u + 1; v < 6; ++v) {
                ColorSet c = 0;
                for (unsigned l = 1; l <= 5; ++l)
                    if ((base.colors(u, v) & layer_bit(l)) ? rng.chance(3, 4) : rng.chance(1, 12))
                        c |= layer_bit(l);
                b.set_colors(u, v, c);
            }
        const MMultigraph mg = std::move(b).build();
        const auto nice = find_nice_partition(mg);
        const auto good = find_good_partition(mg);
        CHECK(nice.has_value() == oracle::has_partition_brute(mg, false));
        CHECK(good.has_value() == oracle::has_partition_brute(mg, true));
        if (nice)
            CHECK(is_certificate_valid(mg, *nice));
        if (good) {
            CHECK(is_certificate_valid(mg, *good));
            CHECK(nice.has_value());
        }
        // Nice partition and no K4 bound the size.
        if (nice && !contains_k4(mg))
            CHECK(mg.size() <= 2 * 15 + 3 * 9);
    }
}

TEST_CASE("property: saturated criterion agrees with a family scan")
{
    oracle::Rng rng(8080);
    const auto family = saturated_family_4();
    for (int i = 0; i < 400; ++i) {
        const MMultigraph mg = oracle::random_multigraph(rng, 4, 5, rng.between(40, 95));
        bool scan = false;
        for (const MMultigraph& f : family)
            scan = scan || mg.is_subgraph_of(f);
        CHECK(is_subgraph_of_saturated(mg) == scan);
    }
}

TEST_CASE("property: peeling matches a from-scratch reference")
{
    oracle::Rng rng(31337);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = rng.between(5, 14);
        const MMultigraph mg = oracle::random_multigraph(rng, n, 5, rng.between(10, 90));
        const std::uint64_t num = rng.between(0, 14);
        const auto core = extract_dense_core(mg, Rational(num, 4));
        CHECK(core == oracle::peel(mg, num, 4));
        if (!core.empty())
            CHECK(mg.induced(core).min_degree() * 4 >= num * core.size());
    }
}
