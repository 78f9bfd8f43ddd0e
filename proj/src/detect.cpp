#include "fanol2/detect.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fanol2/error.hpp"
#include "fanol2/multigraph.hpp"

namespace fanol2 {

// --- patterns -----------------------------------------------------------------

Pattern3::Pattern3(Uniform3Graph graph) : graph_(std::move(graph))
{
    const std::size_t k = graph_.vertex_count();
    std::vector<bool> placed(k, false);
    for (std::size_t step = 0; step < k; ++step) {
        Vertex best = 0;
        bool have = false;
        std::array<std::size_t, 3> best_key{};
        for (Vertex p = 0; p < k; ++p) {
            if (placed[p])
                continue;
            std::size_t closed = 0;
            std::size_t contacts = 0;
            for (const Triple& t : graph_.edges()) {
                const std::array<Vertex, 3> vs{t.a, t.b, t.c};
                if (std::find(vs.begin(), vs.end(), p) == vs.end())
                    continue;
                std::size_t others = 0;
                for (Vertex x : vs)
                    if (x != p && placed[x])
                        ++others;
                if (others == 2)
                    ++closed;
            }
            for (Vertex q = 0; q < k; ++q)
                if (placed[q] && graph_.codegree(p, q) > 0)
                    ++contacts;
            const std::array<std::size_t, 3> key{closed, contacts, graph_.degree(p)};
            if (!have || key > best_key) {
                best = p;
                best_key = key;
                have = true;
            }
        }
        placed[best] = true;
        order_.push_back(best);
    }
}

Pattern3 Pattern3::fano()
{
    return Pattern3(fano_plane());
}

Pattern3 Pattern3::k53()
{
    return Pattern3(complete3(5));
}

// --- embedding search ---------------------------------------------------------

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Uniform3Graph& host, const Pattern3& pattern)
        : host_(host), pattern_(pattern), k_(pattern.vertex_count()), words_((host.vertex_count() + 63) / 64),
          image_(k_, 0), used_(host.vertex_count(), false)
    {
        const auto& order = pattern.order();
        const auto& pg = pattern.graph();
        closing_.resize(k_);
        contacts_.resize(k_);
        for (std::size_t i = 0; i < k_; ++i) {
            const Vertex p = order[i];
            for (std::size_t a = 0; a < i; ++a) {
                if (const auto cd = pg.codegree(p, order[a]); cd > 0)
                    contacts_[i].push_back({a, cd});
                for (std::size_t b = a + 1; b < i; ++b)
                    if (pg.has_edge(p, order[a], order[b]))
                        closing_[i].push_back({a, b});
            }
        }
    }

    std::optional<Embedding> run()
    {
        if (k_ > host_.vertex_count())
            return std::nullopt;
        if (!extend(0))
            return std::nullopt;
        Embedding phi(k_);
        for (std::size_t i = 0; i < k_; ++i)
            phi[pattern_.order()[i]] = image_[i];
        return phi;
    }

private:
    bool extend(std::size_t i)
    {
        if (i == k_)
            return true;
        const Vertex p = pattern_.order()[i];
        const std::size_t need_degree = pattern_.graph().degree(p);
        const std::size_t n = host_.vertex_count();

        std::vector<std::uint64_t> cand(words_, ~std::uint64_t{0});
        if (n % 64 != 0)
            cand.back() = (std::uint64_t{1} << (n % 64)) - 1;
        for (const auto& [a, b] : closing_[i]) {
            const auto row = host_.common_neighbors(image_[a], image_[b]);
            for (std::size_t w = 0; w < words_; ++w)
                cand[w] &= row[w];
        }
        for (std::size_t w = 0; w < words_; ++w) {
            for (std::uint64_t bits = cand[w]; bits != 0; bits &= bits - 1) {
                const Vertex h = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
                if (used_[h] || host_.degree(h) < need_degree)
                    continue;
                bool ok = true;
                for (const auto& [a, cd] : contacts_[i])
                    if (host_.codegree(h, image_[a]) < cd) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                image_[i] = h;
                used_[h] = true;
                if (extend(i + 1))
                    return true;
                used_[h] = false;
            }
        }
        return false;
    }

    const Uniform3Graph& host_;
    const Pattern3& pattern_;
    std::size_t k_;
    std::size_t words_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> closing_;
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> contacts_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
};

} // namespace

std::optional<Embedding> find_embedding(const Uniform3Graph& host, const Pattern3& pattern)
{
    return EmbeddingSearch(host, pattern).run();
}

bool is_embedding(const Uniform3Graph& host, const Pattern3& pattern, const Embedding& phi)
{
    if (phi.size() != pattern.vertex_count())
        return false;
    std::vector<bool> seen(host.vertex_count(), false);
    for (Vertex h : phi) {
        if (h >= host.vertex_count() || seen[h])
            return false;
        seen[h] = true;
    }
    for (const Triple& t : pattern.graph().edges())
        if (!host.has_edge(phi[t.a], phi[t.b], phi[t.c]))
            return false;
    return true;
}

bool contains_fano(const Uniform3Graph& host)
{
    static const Pattern3 pattern = Pattern3::fano();
    return find_embedding(host, pattern).has_value();
}

bool contains_k53(const Uniform3Graph& host)
{
    static const Pattern3 pattern = Pattern3::k53();
    return find_embedding(host, pattern).has_value();
}

// --- bipartiteness ------------------------------------------------------------

namespace {

class BipartiteSearch {
public:
    explicit BipartiteSearch(const Uniform3Graph& h) : h_(h), side_(h.vertex_count(), -1), incident_(h.vertex_count())
    {
        const auto edges = h.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            incident_[edges[i].a].push_back(i);
            incident_[edges[i].b].push_back(i);
            incident_[edges[i].c].push_back(i);
        }
    }

    std::optional<Bipartition> run()
    {
        if (h_.vertex_count() == 0)
            return Bipartition{};
        if (!branch(0, true))
            return std::nullopt;
        Bipartition out;
        for (Vertex v = 0; v < h_.vertex_count(); ++v)
            (side_[v] == 0 ? out.part1 : out.part2).push_back(v);
        return out;
    }

private:
    bool branch(Vertex v, bool pinned)
    {
        while (v < h_.vertex_count() && side_[v] != -1)
            ++v;
        if (v == h_.vertex_count())
            return true;
        for (int s = 0; s < (pinned ? 1 : 2); ++s) {
            const std::size_t mark = trail_.size();
            if (assign(v, s) && branch(v + 1, false))
                return true;
            undo(mark);
        }
        return false;
    }

    bool assign(Vertex v, int s)
    {
        std::vector<Vertex> queue{v};
        set(v, s);
        while (!queue.empty()) {
            const Vertex x = queue.back();
            queue.pop_back();
            for (std::size_t ei : incident_[x]) {
                const Triple& t = h_.edges()[ei];
                const std::array<Vertex, 3> vs{t.a, t.b, t.c};
                int count[2] = {0, 0};
                Vertex free = 0;
                int free_count = 0;
                for (Vertex y : vs) {
                    if (side_[y] == -1) {
                        free = y;
                        ++free_count;
                    } else {
                        ++count[side_[y]];
                    }
                }
                if (count[0] == 3 || count[1] == 3)
                    return false;
                if (free_count == 1 && (count[0] == 2 || count[1] == 2)) {
                    set(free, count[0] == 2 ? 1 : 0);
                    queue.push_back(free);
                }
            }
        }
        return true;
    }

    void set(Vertex v, int s)
    {
        side_[v] = static_cast<signed char>(s);
        trail_.push_back(v);
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            side_[trail_.back()] = -1;
            trail_.pop_back();
        }
    }

    const Uniform3Graph& h_;
    std::vector<signed char> side_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<Vertex> trail_;
};

} // namespace

std::optional<Bipartition> find_bipartition3(const Uniform3Graph& h, std::size_t cap)
{
    if (h.vertex_count() > cap)
        fail(ErrorCode::Capacity, "bipartiteness search capped at n=" + std::to_string(cap) + ", got n=" +
                                      std::to_string(h.vertex_count()));
    return BipartiteSearch(h).run();
}

bool is_bipartite3(const Uniform3Graph& h, std::size_t cap)
{
    return find_bipartition3(h, cap).has_value();
}

bool is_bipartition_of(const Uniform3Graph& h, const Bipartition& parts)
{
    std::vector<int> side(h.vertex_count(), -1);
    for (Vertex v : parts.part1) {
        if (v >= h.vertex_count() || side[v] != -1)
            return false;
        side[v] = 0;
    }
    for (Vertex v : parts.part2) {
        if (v >= h.vertex_count() || side[v] != -1)
            return false;
        side[v] = 1;
    }
    if (std::find(side.begin(), side.end(), -1) != side.end())
        return false;
    for (const Triple& t : h.edges())
        if (side[t.a] == side[t.b] && side[t.b] == side[t.c])
            return false;
    return true;
}

// --- link conditions ----------------------------------------------------------

std::optional<MatchingViolation> find_link_matching_violation(const Uniform3Graph& h, Vertex v)
{
    const std::vector<Pair> edges = link(h, v).edges();
    auto disjoint = [](const Pair& x, const Pair& y) { return x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v; };
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!disjoint(edges[i], edges[j]))
                continue;
            for (std::size_t k = j + 1; k < edges.size(); ++k) {
                if (!disjoint(edges[i], edges[k]) || !disjoint(edges[j], edges[k]))
                    continue;
                const Pair& a = edges[i];
                const Pair& b = edges[j];
                const Pair& c = edges[k];
                bool all = true;
                for (Vertex x : {a.u, a.v})
                    for (Vertex y : {b.u, b.v})
                        for (Vertex z : {c.u, c.v})
                            all = all && h.has_edge(x, y, z);
                if (all)
                    return MatchingViolation{v, {a, b, c}};
            }
        }
    return std::nullopt;
}

bool link_matching_check(const Uniform3Graph& h, Vertex v)
{
    return !find_link_matching_violation(h, v).has_value();
}

std::optional<Triple> find_link_k4_violation(const Uniform3Graph& h)
{
    for (const Triple& t : h.edges()) {
        const std::array<Vertex, 3> vs{t.a, t.b, t.c};
        if (contains_k4(link_multigraph(h, vs)))
            return t;
    }
    return std::nullopt;
}

} // namespace fanol2
