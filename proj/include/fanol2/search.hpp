#pragma once

// Exhaustive and branch-and-bound oracles. Every engine splits its outer loop
// into tasks whose results are reduced in task order, so optima, witnesses
// and node counts do not depend on the worker count.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fanol2/bigint.hpp"
#include "fanol2/hypercore.hpp"
#include "fanol2/multigraph.hpp"

namespace fanol2 {

struct SearchConfig {
    /// 0 selects the available hardware parallelism.
    unsigned workers = 0;
    std::uint64_t seed = 1;
    /// Wall-clock budget in seconds; 0 means unlimited.
    double budget_seconds = 0;
};

unsigned resolve_workers(const SearchConfig& config);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct SearchReport {
    std::string objective;
    BigInt optimum;
    /// Serialized in the matching text format.
    std::string witness;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0;
    /// False when the budget ran out; optimum is then the best found so far.
    bool complete = true;
    KeyValues params;
    KeyValues details;
};

enum class MultigraphEngine { Exhaustive, BranchAndBound };

const char* to_string(MultigraphEngine e);
MultigraphEngine multigraph_engine_from_string(const std::string& name);

/// Maximum size of a K4-free m-multigraph on n vertices.
/// Exhaustive: n = 4, 1 <= m <= 5, all (2^m)^6 colourings.
/// Branch and bound: n in {4, 5}, 1 <= m <= 5, incumbent m copies of the
/// Turan graph, colour symmetry fixes the first pair to {1..k}.
SearchReport max_k4free_multigraph(std::size_t n, unsigned m, MultigraphEngine engine, const SearchConfig& config);

struct Lemma51Report {
    std::uint64_t states = 0;
    std::uint64_t k4_free = 0;
    unsigned max_size = 0;
    /// histogram[s] = number of K4-free colourings of size s.
    std::array<std::uint64_t, 31> histogram{};
    std::uint64_t size25_count = 0;
    /// The size-25 colourings are exactly the saturated family.
    bool size25_is_family = false;
    /// Violations of clauses (i) through (v), in order.
    std::array<std::uint64_t, 5> violations{};
    /// First size-23 colouring in scan order, with its saturation verdict.
    std::string sample23;
    bool sample23_saturated = false;
    std::string first_violation;
    double elapsed_seconds = 0;
    bool complete = true;

    bool ok() const;
};

/// All 32^6 colourings of the six pairs of a 4-vertex 5-multigraph.
Lemma51Report verify_lemma51(const SearchConfig& config);

struct S2Profile {
    std::size_t n = 0;
    /// best[m] = max N(S_2) over n-vertex graphs with m edges.
    std::vector<BigInt> best;
    /// Smallest adjacency mask attaining best[m] (pair order (0,1),(0,2),...).
    std::vector<std::uint64_t> witness;
    /// max(N(S_2, quasi_star(n,m)), N(S_2, quasi_complete(n,m))).
    std::vector<BigInt> family;
    std::uint64_t graphs = 0;
    double elapsed_seconds = 0;
    bool complete = true;
};

/// n <= 7 always; n = 8 only with a positive budget.
S2Profile s2_profile(std::size_t n, const SearchConfig& config);
SearchReport max_s2_graph(std::size_t n, std::size_t m_edges, const SearchConfig& config);
SimpleGraph graph_from_mask(std::size_t n, std::uint64_t mask);

struct AesReport {
    std::size_t n = 0;
    std::uint64_t triangle_free = 0;
    /// Triangle-free with 5 delta > 2n.
    std::uint64_t above_threshold = 0;
    std::uint64_t violations = 0;
    /// Triangle-free, non-bipartite, delta = floor(2n/5).
    std::uint64_t tight_nonbipartite = 0;
    std::string first_violation;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0;
    bool complete = true;
};

/// Enumerates labelled triangle-free graphs by adding pairs in order.
/// n <= 7 always; n = 8 only with a positive budget.
AesReport aes_scan(std::size_t n, const SearchConfig& config);

/// n <= 6: K_n^3. n = 7: branch and bound over the 35 triples against the
/// 30 labelled Fano planes.
SearchReport max_l2_fano_free(std::size_t n, const SearchConfig& config);

struct BipartiteScanReport {
    std::size_t n = 0;
    BigInt max_norm;
    BigInt closed_form;
    /// Distinct labelled edge sets attaining the maximum.
    std::size_t maximizers = 0;
    bool all_isomorphic_to_bn = false;
    std::uint64_t graphs = 0;
    double elapsed_seconds = 0;
    bool complete = true;
};

/// Every bipartition and every subset of its crossing triples; n <= 6.
BipartiteScanReport bipartite_l2_full_scan(std::size_t n, const SearchConfig& config);

struct CompleteBipartiteScan {
    std::size_t n = 0;
    /// Part sizes a in 1..n-1 attaining the maximum.
    std::vector<std::size_t> argmax_norm;
    std::vector<std::size_t> argmax_stars;
    /// Direct norms equal the closed form for every a.
    bool closed_matches = false;
};

/// Complete bipartite 3-graphs only; n <= 40.
CompleteBipartiteScan complete_bipartite_scan(std::size_t n);

/// Full scan for n <= 6, complete-bipartite scan otherwise.
SearchReport bipartite_l2_scan(std::size_t n, const SearchConfig& config);

/// Smallest vertex-relabelled triple mask over all n! permutations; n <= 8.
std::uint64_t canonical_triple_mask(std::size_t n, std::uint64_t mask);
std::uint64_t triple_mask(const Uniform3Graph& h);

} // namespace fanol2
