#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "fanol2/error.hpp"
#include "fanol2/search.hpp"
#include "fanol2/textio.hpp"
#include "search_util.hpp"

namespace fanol2 {

namespace {

// sdr[(a << 10) | (b << 5) | c] for 5-bit colour sets.
const std::vector<std::uint8_t>& sdr_table()
{
    static const std::vector<std::uint8_t> table = [] {
        std::vector<std::uint8_t> t(32 * 32 * 32);
        for (ColorSet a = 0; a < 32; ++a)
            for (ColorSet b = 0; b < 32; ++b)
                for (ColorSet c = 0; c < 32; ++c)
                    t[(a << 10) | (b << 5) | c] = has_distinct_representatives(a, b, c) ? 1 : 0;
        return t;
    }();
    return table;
}

inline bool sdr(const std::vector<std::uint8_t>& t, ColorSet a, ColorSet b, ColorSet c)
{
    return t[(a << 10) | (b << 5) | c] != 0;
}

// Pair order on four vertices: 01, 02, 03, 12, 13, 23.
constexpr std::array<std::array<Vertex, 2>, 6> kPairs4{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

MMultigraph multigraph4(const std::array<ColorSet, 6>& c, unsigned m)
{
    MMultigraph::Builder b(4, m);
    for (std::size_t i = 0; i < 6; ++i)
        b.set_colors(kPairs4[i][0], kPairs4[i][1], c[i]);
    return std::move(b).build();
}

std::uint32_t encode4(const std::array<ColorSet, 6>& c)
{
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < 6; ++i)
        code |= c[i] << (5 * i);
    return code;
}

void check_m(unsigned m)
{
    if (m == 0 || m > 5)
        fail(ErrorCode::Capacity, "multigraph search supports 1 <= m <= 5, got m=" + std::to_string(m));
}

SearchReport base_report(const std::string& objective, std::size_t n, unsigned m, MultigraphEngine engine,
                         const SearchConfig& config, unsigned workers)
{
    SearchReport r;
    r.objective = objective;
    r.params = {{"n", std::to_string(n)},
                {"m", std::to_string(m)},
                {"engine", to_string(engine)},
                {"workers", std::to_string(workers)},
                {"seed", std::to_string(config.seed)},
                {"budget_seconds", std::to_string(config.budget_seconds)}};
    return r;
}

// --- exhaustive, n = 4 --------------------------------------------------------

struct Best4 {
    int size = -1;
    std::array<ColorSet, 6> colors{};
    std::uint64_t nodes = 0;
    bool complete = true;
};

SearchReport exhaustive4(unsigned m, const SearchConfig& config)
{
    const unsigned workers = resolve_workers(config);
    SearchReport report = base_report("k4multi", 4, m, MultigraphEngine::Exhaustive, config, workers);
    const auto& table = sdr_table();
    const ColorSet limit = ColorSet{1} << m;
    detail::Deadline deadline(config.budget_seconds);
    std::vector<Best4> results(limit);

    detail::parallel_for(limit, workers, [&](std::size_t task) {
        Best4& best = results[task];
        const ColorSet c01 = static_cast<ColorSet>(task);
        const int p01 = std::popcount(c01);
        for (ColorSet c02 = 0; c02 < limit; ++c02) {
            if (deadline.expired()) {
                best.complete = false;
                return;
            }
            for (ColorSet c03 = 0; c03 < limit; ++c03)
                for (ColorSet c12 = 0; c12 < limit; ++c12) {
                    const ColorSet i3 = c03 & c12;
                    const int head = p01 + std::popcount(c02) + std::popcount(c03) + std::popcount(c12);
                    for (ColorSet c13 = 0; c13 < limit; ++c13) {
                        const ColorSet i2 = c02 & c13;
                        const int head2 = head + std::popcount(c13);
                        for (ColorSet c23 = 0; c23 < limit; ++c23) {
                            ++best.nodes;
                            const int size = head2 + std::popcount(c23);
                            if (size <= best.size)
                                continue;
                            if (sdr(table, c01 & c23, i2, i3))
                                continue;
                            best.size = size;
                            best.colors = {c01, c02, c03, c12, c13, c23};
                        }
                    }
                }
        }
    });

    std::size_t winner = 0;
    for (std::size_t t = 0; t < results.size(); ++t) {
        report.nodes += results[t].nodes;
        report.complete = report.complete && results[t].complete;
        if (results[t].size > results[winner].size)
            winner = t;
    }
    report.optimum = results[winner].size;
    report.witness = format_mgraph(multigraph4(results[winner].colors, m));
    report.elapsed_seconds = deadline.elapsed();
    return report;
}

// --- branch and bound, n in {4, 5} --------------------------------------------

struct Quad {
    // Pair indices grouped by matching: (ab, cd), (ac, bd), (ad, bc).
    std::array<int, 6> pairs{};
};

class MultigraphBnb {
public:
    MultigraphBnb(std::size_t n, unsigned m, int quad_cap, int incumbent)
        : n_(n), m_(m), quad_cap_(quad_cap), incumbent_(incumbent), table_(sdr_table())
    {
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u)
                pairs_.push_back({u, v});
        auto index = [&](Vertex a, Vertex b) {
            if (a > b)
                std::swap(a, b);
            for (std::size_t i = 0; i < pairs_.size(); ++i)
                if (pairs_[i].u == a && pairs_[i].v == b)
                    return static_cast<int>(i);
            return -1;
        };
        completes_.resize(pairs_.size());
        pair_quads_.resize(pairs_.size());
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c)
                    for (Vertex d = c + 1; d < n; ++d) {
                        Quad q;
                        q.pairs = {index(a, b), index(c, d), index(a, c), index(b, d), index(a, d), index(b, c)};
                        const int last = *std::max_element(q.pairs.begin(), q.pairs.end());
                        completes_[last].push_back(quads_.size());
                        for (int p : q.pairs)
                            pair_quads_[p].push_back(quads_.size());
                        quads_.push_back(q);
                    }
        const ColorSet limit = ColorSet{1} << m;
        for (ColorSet c = 0; c < limit; ++c)
            order_.push_back(c);
        std::stable_sort(order_.begin(), order_.end(),
                         [](ColorSet x, ColorSet y) { return std::popcount(x) > std::popcount(y); });
        // Colour permutations act on solutions, so the first pair may be
        // fixed to {1..k}.
        for (unsigned k = m + 1; k-- > 0;)
            pinned_.push_back(full_colors(k));
    }

    std::size_t task_count() const { return pinned_.size() * order_.size(); }
    std::size_t pair_count() const { return pairs_.size(); }
    const std::vector<Pair>& pairs() const { return pairs_; }

    struct Result {
        int best = -1;
        std::vector<ColorSet> colors;
        std::uint64_t nodes = 0;
        bool complete = true;
    };

    Result run_task(std::size_t task, detail::Deadline& deadline) const
    {
        State s(*this);
        s.best = incumbent_;
        s.deadline = &deadline;
        const ColorSet first = pinned_[task / order_.size()];
        const ColorSet second = order_[task % order_.size()];
        ++s.nodes;
        if (assign(s, 0, first) && assign(s, 1, second) && bound(s, 2) > s.best)
            dfs(s, 2);
        Result r;
        r.nodes = s.nodes;
        r.complete = !s.stopped;
        if (s.found) {
            r.best = s.best;
            r.colors = s.best_colors;
        }
        return r;
    }

private:
    struct State {
        explicit State(const MultigraphBnb& p)
            : colors(p.pairs_.size(), 0), quad_sum(p.quads_.size(), 0), quad_free(p.quads_.size(), 6)
        {
        }
        std::vector<ColorSet> colors;
        std::vector<int> quad_sum;
        std::vector<int> quad_free;
        int size = 0;
        int best = 0;
        bool found = false;
        std::vector<ColorSet> best_colors;
        std::uint64_t nodes = 0;
        bool stopped = false;
        detail::Deadline* deadline = nullptr;
    };

    // Places colour set c on pair pos; false when a completed 4-set carries K4.
    bool assign(State& s, std::size_t pos, ColorSet c) const
    {
        s.colors[pos] = c;
        const int k = std::popcount(c);
        s.size += k;
        for (std::size_t q : pair_quads_[pos]) {
            s.quad_sum[q] += k;
            s.quad_free[q] -= 1;
        }
        for (std::size_t qi : completes_[pos]) {
            const Quad& q = quads_[qi];
            const auto& c_ = s.colors;
            if (sdr(table_, c_[q.pairs[0]] & c_[q.pairs[1]], c_[q.pairs[2]] & c_[q.pairs[3]],
                    c_[q.pairs[4]] & c_[q.pairs[5]])) {
                unassign(s, pos);
                return false;
            }
        }
        return true;
    }

    void unassign(State& s, std::size_t pos) const
    {
        const int k = std::popcount(s.colors[pos]);
        s.size -= k;
        for (std::size_t q : pair_quads_[pos]) {
            s.quad_sum[q] -= k;
            s.quad_free[q] += 1;
        }
        s.colors[pos] = 0;
    }

    // Upper bound on the final size with pairs [0, next) assigned.
    int bound(const State& s, std::size_t next) const
    {
        int simple = s.size + static_cast<int>(m_ * (pairs_.size() - next));
        if (quad_cap_ < 0)
            return simple;
        // Each pair lies in n-2 choose 2 four-sets, and every four-set is
        // K4-free, hence carries at most quad_cap.
        int total = 0;
        for (std::size_t q = 0; q < quads_.size(); ++q)
            total += std::min(quad_cap_, s.quad_sum[q] + static_cast<int>(m_) * s.quad_free[q]);
        const int per_pair = static_cast<int>((n_ - 2) * (n_ - 3) / 2);
        return std::min(simple, total / per_pair);
    }

    void dfs(State& s, std::size_t pos) const
    {
        if (s.stopped)
            return;
        if ((++s.nodes & 0xFFF) == 0 && s.deadline->expired()) {
            s.stopped = true;
            return;
        }
        if (pos == pairs_.size()) {
            if (s.size > s.best) {
                s.best = s.size;
                s.found = true;
                s.best_colors = s.colors;
            }
            return;
        }
        for (ColorSet c : order_) {
            if (!assign(s, pos, c))
                continue;
            if (bound(s, pos + 1) > s.best)
                dfs(s, pos + 1);
            unassign(s, pos);
            if (s.stopped)
                return;
        }
    }

    std::size_t n_;
    unsigned m_;
    int quad_cap_;
    int incumbent_;
    const std::vector<std::uint8_t>& table_;
    std::vector<Pair> pairs_;
    std::vector<Quad> quads_;
    std::vector<std::vector<std::size_t>> completes_;
    std::vector<std::vector<std::size_t>> pair_quads_;
    std::vector<ColorSet> order_;
    std::vector<ColorSet> pinned_;
};

SearchReport branch_and_bound(std::size_t n, unsigned m, const SearchConfig& config)
{
    const unsigned workers = resolve_workers(config);
    SearchReport report = base_report("k4multi", n, m, MultigraphEngine::BranchAndBound, config, workers);
    detail::Stopwatch clock;

    int quad_cap = -1;
    if (n == 5) {
        SearchConfig inner = config;
        inner.budget_seconds = 0;
        const SearchReport four = branch_and_bound(4, m, inner);
        quad_cap = static_cast<int>(four.optimum);
        report.details.push_back({"four_vertex_cap", std::to_string(quad_cap)});
        report.nodes += four.nodes;
    }

    // m copies of the Turan graph T(n,3) never carry the pattern: all three
    // matchings would have to lie in one K4-free graph.
    const MMultigraph incumbent = [&] {
        std::vector<SimpleGraph> layers;
        const MMultigraph t = turan_layers_5(n);
        for (unsigned i = 0; i < m; ++i)
            layers.push_back(t.layer(1));
        return MMultigraph::from_layers(layers);
    }();
    const int start = static_cast<int>(incumbent.size());
    report.details.push_back({"incumbent", std::to_string(start)});

    const MultigraphBnb bnb(n, m, quad_cap, start);
    detail::Deadline deadline(config.budget_seconds > 0 ? std::max(0.0, config.budget_seconds - clock.seconds())
                                                        : 0.0);
    std::vector<MultigraphBnb::Result> results(bnb.task_count());
    detail::parallel_for(results.size(), workers,
                         [&](std::size_t t) { results[t] = bnb.run_task(t, deadline); });

    int best = start;
    const MultigraphBnb::Result* winner = nullptr;
    for (const auto& r : results) {
        report.nodes += r.nodes;
        report.complete = report.complete && r.complete;
        if (r.best > best) {
            best = r.best;
            winner = &r;
        }
    }
    report.optimum = best;
    if (winner) {
        MMultigraph::Builder b(n, m);
        for (std::size_t i = 0; i < bnb.pair_count(); ++i)
            b.set_colors(bnb.pairs()[i].u, bnb.pairs()[i].v, winner->colors[i]);
        report.witness = format_mgraph(std::move(b).build());
    } else {
        report.witness = format_mgraph(incumbent);
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

} // namespace

const char* to_string(MultigraphEngine e)
{
    return e == MultigraphEngine::Exhaustive ? "exhaustive" : "bnb";
}

MultigraphEngine multigraph_engine_from_string(const std::string& name)
{
    if (name == "exhaustive")
        return MultigraphEngine::Exhaustive;
    if (name == "bnb")
        return MultigraphEngine::BranchAndBound;
    fail(ErrorCode::InvalidArgument, "unknown engine '" + name + "'");
}

unsigned resolve_workers(const SearchConfig& config)
{
    if (config.workers > 0)
        return config.workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

SearchReport max_k4free_multigraph(std::size_t n, unsigned m, MultigraphEngine engine, const SearchConfig& config)
{
    check_m(m);
    if (engine == MultigraphEngine::Exhaustive) {
        if (n != 4)
            fail(ErrorCode::Capacity, "the exhaustive multigraph engine requires n = 4");
        return exhaustive4(m, config);
    }
    if (n != 4 && n != 5)
        fail(ErrorCode::Capacity, "the branch-and-bound multigraph engine supports n in {4, 5}");
    return branch_and_bound(n, m, config);
}

// --- four-vertex scan ----------------------------------------------------------

bool Lemma51Report::ok() const
{
    return complete && max_size <= 25 && size25_is_family && sample23_saturated &&
           std::all_of(violations.begin(), violations.end(), [](std::uint64_t v) { return v == 0; });
}

namespace {

struct Lemma51Task {
    std::uint64_t states = 0;
    std::uint64_t k4_free = 0;
    std::array<std::uint64_t, 31> histogram{};
    std::vector<std::uint32_t> size25;
    std::array<std::uint64_t, 5> violations{};
    bool have23 = false;
    std::array<ColorSet, 6> sample23{};
    bool have_violation = false;
    std::array<ColorSet, 6> violation{};
    int violation_clause = 0;
    bool complete = true;
};

// Clause checks for one K4-free colouring; returns a bitmask of failed
// clauses (bit 0 = clause (i), ..., bit 4 = clause (v)).
unsigned lemma51_failures(const std::array<ColorSet, 6>& c, int size)
{
    const std::array<ColorSet, 3> meet{c[0] & c[5], c[1] & c[4], c[2] & c[3]};
    const std::array<int, 3> sum{std::popcount(c[0]) + std::popcount(c[5]), std::popcount(c[1]) + std::popcount(c[4]),
                                 std::popcount(c[2]) + std::popcount(c[3])};
    unsigned failed = 0;
    // Any matching with the smallest sum may play the role of {wz, xy}.
    for (int light = 0; light < 3; ++light) {
        const int o1 = sum[(light + 1) % 3];
        const int o2 = sum[(light + 2) % 3];
        if (sum[light] > o1 || sum[light] > o2)
            continue;
        const int hi = std::max(o1, o2);
        const int lo = std::min(o1, o2);
        if (hi >= 8 && lo >= 7 && meet[light] != 0)
            failed |= 1u;
        if (hi + lo >= 17 && meet[light] != 0)
            failed |= 1u << 4;
    }
    if (size > 25)
        failed |= 1u << 1;
    if (size >= 23 && meet[0] != 0 && meet[1] != 0 && meet[2] != 0)
        failed |= 1u << 2;
    if (size >= 22 && std::none_of(c.begin(), c.end(), [](ColorSet x) { return x == 31; }))
        failed |= 1u << 3;
    return failed;
}

} // namespace

Lemma51Report verify_lemma51(const SearchConfig& config)
{
    const unsigned workers = resolve_workers(config);
    const auto& table = sdr_table();
    detail::Deadline deadline(config.budget_seconds);
    std::vector<Lemma51Task> tasks(32);

    detail::parallel_for(32, workers, [&](std::size_t t) {
        Lemma51Task& r = tasks[t];
        const ColorSet c01 = static_cast<ColorSet>(t);
        for (ColorSet c02 = 0; c02 < 32; ++c02) {
            if (deadline.expired()) {
                r.complete = false;
                return;
            }
            for (ColorSet c03 = 0; c03 < 32; ++c03)
                for (ColorSet c12 = 0; c12 < 32; ++c12) {
                    const ColorSet i3 = c03 & c12;
                    const int head = std::popcount(c01) + std::popcount(c02) + std::popcount(c03) + std::popcount(c12);
                    for (ColorSet c13 = 0; c13 < 32; ++c13) {
                        const ColorSet i2 = c02 & c13;
                        const int head2 = head + std::popcount(c13);
                        for (ColorSet c23 = 0; c23 < 32; ++c23) {
                            const ColorSet i1 = c01 & c23;
                            if (sdr(table, i1, i2, i3))
                                continue;
                            const int size = head2 + std::popcount(c23);
                            ++r.k4_free;
                            ++r.histogram[size];
                            const std::array<ColorSet, 6> c{c01, c02, c03, c12, c13, c23};
                            if (size == 25)
                                r.size25.push_back(encode4(c));
                            if (size == 23 && !r.have23) {
                                r.have23 = true;
                                r.sample23 = c;
                            }
                            if (size < 15)
                                continue; // no clause can fire below 15
                            if (const unsigned failed = lemma51_failures(c, size); failed != 0) {
                                for (int k = 0; k < 5; ++k)
                                    if (failed & (1u << k))
                                        ++r.violations[k];
                                if (!r.have_violation) {
                                    r.have_violation = true;
                                    r.violation = c;
                                    r.violation_clause = std::countr_zero(failed) + 1;
                                }
                            }
                        }
                    }
                }
            r.states += 32u * 32u * 32u * 32u;
        }
    });

    Lemma51Report report;
    std::vector<std::uint32_t> found25;
    for (const Lemma51Task& t : tasks) {
        report.states += t.states;
        report.k4_free += t.k4_free;
        for (std::size_t s = 0; s < t.histogram.size(); ++s)
            report.histogram[s] += t.histogram[s];
        for (int k = 0; k < 5; ++k)
            report.violations[k] += t.violations[k];
        found25.insert(found25.end(), t.size25.begin(), t.size25.end());
        report.complete = report.complete && t.complete;
        if (t.have23 && report.sample23.empty()) {
            const MMultigraph mg = multigraph4(t.sample23, 5);
            report.sample23 = format_mgraph(mg);
            report.sample23_saturated = is_subgraph_of_saturated(mg);
        }
        if (t.have_violation && report.first_violation.empty())
            report.first_violation = "clause " + std::to_string(t.violation_clause) + ": " +
                                     format_mgraph(multigraph4(t.violation, 5));
    }
    for (std::size_t s = 0; s < report.histogram.size(); ++s)
        if (report.histogram[s] > 0)
            report.max_size = static_cast<unsigned>(s);
    report.size25_count = found25.size();

    std::set<std::uint32_t> family;
    for (const MMultigraph& mg : saturated_family_4()) {
        std::array<ColorSet, 6> c{};
        for (std::size_t i = 0; i < 6; ++i)
            c[i] = mg.colors(kPairs4[i][0], kPairs4[i][1]);
        family.insert(encode4(c));
    }
    std::sort(found25.begin(), found25.end());
    report.size25_is_family = std::set<std::uint32_t>(found25.begin(), found25.end()) == family &&
                              found25.size() == family.size();
    report.elapsed_seconds = deadline.elapsed();
    return report;
}

} // namespace fanol2
