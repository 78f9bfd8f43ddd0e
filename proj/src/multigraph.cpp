#include "fanol2/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "fanol2/error.hpp"

namespace fanol2 {

namespace {

void check_vertex(std::size_t n, Vertex v)
{
    if (v >= n)
        fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

void check_pair(std::size_t n, Vertex u, Vertex v)
{
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v)
        fail(ErrorCode::InvalidArgument, "pair with repeated vertex " + std::to_string(u));
}

void check_layers(unsigned m)
{
    if (m == 0 || m > kMaxLayers)
        fail(ErrorCode::InvalidArgument, "layer count must be in 1..32, got " + std::to_string(m));
}

// The three perfect matchings of {0,1,2,3}, as pairs of pairs.
constexpr std::array<std::array<std::array<Vertex, 2>, 2>, 3> kMatchings4{{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

} // namespace

// --- MMultigraph --------------------------------------------------------------

MMultigraph::Builder::Builder(std::size_t n, unsigned m) : n_(n), m_(m), colors_(n * n, 0)
{
    check_layers(m);
}

MMultigraph::Builder& MMultigraph::Builder::set_colors(Vertex u, Vertex v, ColorSet colors)
{
    check_pair(n_, u, v);
    if ((colors & ~full_colors(m_)) != 0)
        fail(ErrorCode::OutOfRange, "colour set uses a layer above m=" + std::to_string(m_));
    colors_[static_cast<std::size_t>(u) * n_ + v] = colors;
    colors_[static_cast<std::size_t>(v) * n_ + u] = colors;
    return *this;
}

MMultigraph::Builder& MMultigraph::Builder::add_color(Vertex u, Vertex v, unsigned layer)
{
    if (layer == 0 || layer > m_)
        fail(ErrorCode::OutOfRange, "layer " + std::to_string(layer) + " out of range for m=" + std::to_string(m_));
    check_pair(n_, u, v);
    return set_colors(u, v, colors_[static_cast<std::size_t>(u) * n_ + v] | layer_bit(layer));
}

MMultigraph MMultigraph::Builder::build() &&
{
    return MMultigraph(n_, m_, std::move(colors_));
}

MMultigraph::MMultigraph(std::size_t n, unsigned m) : MMultigraph(n, m, std::vector<ColorSet>(n * n, 0)) {}

MMultigraph::MMultigraph(std::size_t n, unsigned m, std::vector<ColorSet> colors)
    : n_(n), m_(m), colors_(std::move(colors)), degree_(n, 0)
{
    check_layers(m);
    for (Vertex u = 0; u < n_; ++u) {
        std::uint32_t d = 0;
        for (Vertex v = 0; v < n_; ++v)
            d += static_cast<std::uint32_t>(std::popcount(colors_[slot(u, v)]));
        degree_[u] = d;
        size_ += d;
    }
    size_ /= 2;
}

MMultigraph MMultigraph::from_layers(std::span<const SimpleGraph> layers)
{
    if (layers.empty())
        fail(ErrorCode::InvalidArgument, "from_layers needs at least one layer");
    const std::size_t n = layers.front().vertex_count();
    Builder b(n, static_cast<unsigned>(layers.size()));
    for (unsigned i = 0; i < layers.size(); ++i) {
        if (layers[i].vertex_count() != n)
            fail(ErrorCode::InvalidArgument, "layers disagree on vertex count");
        for (const Pair& e : layers[i].edges())
            b.add_color(e.u, e.v, i + 1);
    }
    return std::move(b).build();
}

ColorSet MMultigraph::colors(Vertex u, Vertex v) const
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    return colors_[slot(u, v)];
}

unsigned MMultigraph::multiplicity(Vertex u, Vertex v) const
{
    return static_cast<unsigned>(std::popcount(colors(u, v)));
}

std::size_t MMultigraph::degree(Vertex v) const
{
    check_vertex(n_, v);
    return degree_[v];
}

std::size_t MMultigraph::min_degree() const
{
    if (n_ == 0)
        return 0;
    return *std::min_element(degree_.begin(), degree_.end());
}

SimpleGraph MMultigraph::layer(unsigned layer) const
{
    if (layer == 0 || layer > m_)
        fail(ErrorCode::OutOfRange, "layer " + std::to_string(layer) + " out of range for m=" + std::to_string(m_));
    SimpleGraph::Builder b(n_);
    const ColorSet bit = layer_bit(layer);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (colors_[slot(u, v)] & bit)
                b.add_edge(u, v);
    return std::move(b).build();
}

MMultigraph MMultigraph::induced(std::span<const Vertex> vertices) const
{
    Builder b(vertices.size(), m_);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(n_, vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j])
                fail(ErrorCode::InvalidArgument, "induced: repeated vertex " + std::to_string(vertices[i]));
            b.set_colors(static_cast<Vertex>(i), static_cast<Vertex>(j), colors_[slot(vertices[i], vertices[j])]);
        }
    }
    return std::move(b).build();
}

MMultigraph MMultigraph::with_colors(Vertex u, Vertex v, ColorSet colors) const
{
    check_pair(n_, u, v);
    if ((colors & ~full_colors(m_)) != 0)
        fail(ErrorCode::OutOfRange, "colour set uses a layer above m=" + std::to_string(m_));
    std::vector<ColorSet> next = colors_;
    next[slot(u, v)] = colors;
    next[slot(v, u)] = colors;
    return MMultigraph(n_, m_, std::move(next));
}

bool MMultigraph::is_subgraph_of(const MMultigraph& other) const
{
    if (n_ != other.n_ || m_ > other.m_)
        return false;
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if ((colors_[i] & ~other.colors_[i]) != 0)
            return false;
    return true;
}

// --- K4 pattern ---------------------------------------------------------------

bool has_distinct_representatives(ColorSet a, ColorSet b, ColorSet c)
{
    for (ColorSet ra = a; ra != 0; ra &= ra - 1) {
        const ColorSet i = ra & (~ra + 1);
        for (ColorSet rb = b & ~i; rb != 0; rb &= rb - 1) {
            const ColorSet j = rb & (~rb + 1);
            if ((c & ~(i | j)) != 0)
                return true;
        }
    }
    return false;
}

bool is_k4_witness(const MMultigraph& mg, const K4Witness& w)
{
    const auto& [a, b, c, d] = w.vertices;
    const std::array<Vertex, 4> vs{a, b, c, d};
    for (std::size_t i = 0; i < 4; ++i) {
        if (vs[i] >= mg.vertex_count())
            return false;
        for (std::size_t j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j])
                return false;
    }
    const auto& [l1, l2, l3] = w.layers;
    if (l1 == l2 || l1 == l3 || l2 == l3)
        return false;
    for (unsigned l : w.layers)
        if (l == 0 || l > mg.layer_count())
            return false;
    auto in = [&](Vertex x, Vertex y, unsigned l) { return (mg.colors(x, y) & layer_bit(l)) != 0; };
    return in(a, b, l1) && in(c, d, l1) && in(a, c, l2) && in(b, d, l2) && in(a, d, l3) && in(b, c, l3);
}

std::optional<K4Witness> find_k4(const MMultigraph& mg)
{
    const std::size_t n = mg.vertex_count();
    const unsigned m = mg.layer_count();
    if (m < 3 || n < 4)
        return std::nullopt;

    // Per 4-set the colour intersections of the three matchings, computed once.
    struct Quad {
        std::array<Vertex, 4> v;
        std::array<ColorSet, 3> meet;
    };
    std::vector<Quad> quads;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    const std::array<ColorSet, 3> meet{mg.colors(a, b) & mg.colors(c, d),
                                                       mg.colors(a, c) & mg.colors(b, d),
                                                       mg.colors(a, d) & mg.colors(b, c)};
                    if (has_distinct_representatives(meet[0], meet[1], meet[2]))
                        quads.push_back({{a, b, c, d}, meet});
                }
    if (quads.empty())
        return std::nullopt;

    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = i + 1; j <= m; ++j)
            for (unsigned k = j + 1; k <= m; ++k) {
                std::array<unsigned, 3> perm{i, j, k};
                for (const Quad& q : quads) {
                    std::array<unsigned, 3> p = perm;
                    do {
                        if ((q.meet[0] & layer_bit(p[0])) && (q.meet[1] & layer_bit(p[1])) &&
                            (q.meet[2] & layer_bit(p[2])))
                            return K4Witness{p, q.v};
                    } while (std::next_permutation(p.begin(), p.end()));
                }
            }
    return std::nullopt;
}

bool contains_k4(const MMultigraph& mg)
{
    return find_k4(mg).has_value();
}

// --- constructions ------------------------------------------------------------

MMultigraph bipartite_construction_5(std::size_t n)
{
    if (n < 2)
        fail(ErrorCode::InvalidArgument, "bipartite_construction_5 requires n >= 2");
    const std::size_t a = (n + 1) / 2;
    const ColorSet inside1 = layer_bit(1) | layer_bit(2);
    const ColorSet inside2 = layer_bit(3) | layer_bit(4);
    MMultigraph::Builder b(n, 5);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const bool u1 = u < a;
            const bool v1 = v < a;
            b.set_colors(u, v, u1 != v1 ? full_colors(5) : (u1 ? inside1 : inside2));
        }
    return std::move(b).build();
}

MMultigraph turan_layers_5(std::size_t n)
{
    if (n < 3)
        fail(ErrorCode::InvalidArgument, "turan_layers_5 requires n >= 3");
    MMultigraph::Builder b(n, 5);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (u % 3 != v % 3)
                b.set_colors(u, v, full_colors(5));
    return std::move(b).build();
}

// --- nice / good partitions ---------------------------------------------------

namespace {

// Layers (as role-ordered 1-based indices) that must avoid V1 / V2.
struct RoleMasks {
    ColorSet avoid1 = 0;
    ColorSet avoid2 = 0;
};

RoleMasks role_masks(const std::array<unsigned, 5>& perm, PartitionKind kind)
{
    RoleMasks r;
    r.avoid2 = layer_bit(perm[0]) | layer_bit(perm[1]);
    r.avoid1 = layer_bit(perm[2]) | layer_bit(perm[3]) | layer_bit(perm[4]);
    if (kind == PartitionKind::Good)
        r.avoid2 |= layer_bit(perm[4]);
    return r;
}

std::vector<std::array<unsigned, 5>> all_layer_permutations()
{
    std::vector<std::array<unsigned, 5>> out;
    std::array<unsigned, 5> p{1, 2, 3, 4, 5};
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// For every (layers used inside V1, layers used inside V2) the index of the
// first compatible permutation, or -1.
std::array<int, 32 * 32> feasibility_table(PartitionKind kind, const std::vector<std::array<unsigned, 5>>& perms)
{
    std::array<int, 32 * 32> table{};
    table.fill(-1);
    for (ColorSet e1 = 0; e1 < 32; ++e1)
        for (ColorSet e2 = 0; e2 < 32; ++e2)
            for (std::size_t p = 0; p < perms.size(); ++p) {
                const RoleMasks r = role_masks(perms[p], kind);
                if ((e1 & r.avoid1) == 0 && (e2 & r.avoid2) == 0) {
                    table[e1 * 32 + e2] = static_cast<int>(p);
                    break;
                }
            }
    return table;
}

class PartitionSearch {
public:
    PartitionSearch(const MMultigraph& mg, PartitionKind kind)
        : mg_(mg), kind_(kind), perms_(all_layer_permutations()), table_(feasibility_table(kind, perms_)),
          side_(mg.vertex_count(), 0)
    {
    }

    std::optional<PartitionCertificate> run()
    {
        const std::size_t n = mg_.vertex_count();
        if (n == 0) {
            PartitionCertificate cert;
            cert.kind = kind_;
            cert.layer_permutation = perms_[static_cast<std::size_t>(table_[0])];
            return cert;
        }
        // A good partition survives swapping the sides together with the roles
        // {1,2} <-> {3,4}, so vertex 0 may be pinned to V1. Nice partitions are
        // not symmetric under that swap (the multiplicity cap lives in V2).
        const int first_sides = kind_ == PartitionKind::Good ? 1 : 2;
        for (int s = 0; s < first_sides; ++s)
            if (dfs(0, s, 0, 0))
                return certificate();
        return std::nullopt;
    }

private:
    // Places vertex v on side s (0 = V1, 1 = V2) and continues.
    bool dfs(Vertex v, int s, ColorSet e1, ColorSet e2)
    {
        ColorSet touch = 0;
        for (Vertex u = 0; u < v; ++u) {
            if (side_[u] != s)
                continue;
            const ColorSet c = mg_.colors(u, v);
            if (s == 1 && kind_ == PartitionKind::Nice && std::popcount(c) > 2)
                return false;
            touch |= c;
        }
        if (s == 0)
            e1 |= touch;
        else
            e2 |= touch;
        if (table_[e1 * 32 + e2] < 0)
            return false;
        side_[v] = static_cast<char>(s);
        if (v + 1 == mg_.vertex_count()) {
            perm_index_ = table_[e1 * 32 + e2];
            return true;
        }
        return dfs(v + 1, 0, e1, e2) || dfs(v + 1, 1, e1, e2);
    }

    PartitionCertificate certificate() const
    {
        PartitionCertificate cert;
        cert.kind = kind_;
        cert.layer_permutation = perms_[static_cast<std::size_t>(perm_index_)];
        for (Vertex v = 0; v < mg_.vertex_count(); ++v)
            (side_[v] == 0 ? cert.part1 : cert.part2).push_back(v);
        return cert;
    }

    const MMultigraph& mg_;
    PartitionKind kind_;
    std::vector<std::array<unsigned, 5>> perms_;
    std::array<int, 32 * 32> table_;
    std::vector<char> side_;
    int perm_index_ = -1;
};

std::optional<PartitionCertificate> find_partition(const MMultigraph& mg, std::size_t cap, PartitionKind kind)
{
    if (mg.layer_count() != 5)
        fail(ErrorCode::InvalidArgument, "partition search requires m = 5");
    if (mg.vertex_count() > cap)
        fail(ErrorCode::Capacity, "partition search capped at n=" + std::to_string(cap) + ", got n=" +
                                      std::to_string(mg.vertex_count()));
    auto cert = PartitionSearch(mg, kind).run();
    if (cert && !is_certificate_valid(mg, *cert))
        fail(ErrorCode::Internal, "partition search produced an invalid certificate");
    return cert;
}

} // namespace

bool is_certificate_valid(const MMultigraph& mg, const PartitionCertificate& cert)
{
    if (mg.layer_count() != 5)
        return false;
    const std::size_t n = mg.vertex_count();
    std::vector<int> side(n, -1);
    for (Vertex v : cert.part1) {
        if (v >= n || side[v] != -1)
            return false;
        side[v] = 0;
    }
    for (Vertex v : cert.part2) {
        if (v >= n || side[v] != -1)
            return false;
        side[v] = 1;
    }
    if (std::find(side.begin(), side.end(), -1) != side.end())
        return false;
    std::array<unsigned, 5> sorted = cert.layer_permutation;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<unsigned, 5>{1, 2, 3, 4, 5})
        return false;

    const RoleMasks r = role_masks(cert.layer_permutation, cert.kind);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (side[u] != side[v])
                continue;
            const ColorSet c = mg.colors(u, v);
            if (side[u] == 0 && (c & r.avoid1) != 0)
                return false;
            if (side[u] == 1) {
                if ((c & r.avoid2) != 0)
                    return false;
                if (cert.kind == PartitionKind::Nice && std::popcount(c) > 2)
                    return false;
            }
        }
    return true;
}

std::optional<PartitionCertificate> find_nice_partition(const MMultigraph& mg, std::size_t cap)
{
    return find_partition(mg, cap, PartitionKind::Nice);
}

std::optional<PartitionCertificate> find_good_partition(const MMultigraph& mg, std::size_t cap)
{
    return find_partition(mg, cap, PartitionKind::Good);
}

// --- saturated family ---------------------------------------------------------

std::vector<MMultigraph> saturated_family_4()
{
    std::vector<MMultigraph> out;
    out.reserve(96);
    const ColorSet full = full_colors(5);
    for (const auto& light : kMatchings4)
        for (ColorSet s = 0; s <= full; ++s) {
            MMultigraph::Builder b(4, 5);
            for (Vertex u = 0; u < 4; ++u)
                for (Vertex v = u + 1; v < 4; ++v)
                    b.set_colors(u, v, full);
            b.set_colors(light[0][0], light[0][1], s);
            b.set_colors(light[1][0], light[1][1], full & ~s);
            out.push_back(std::move(b).build());
        }
    return out;
}

bool is_subgraph_of_saturated(const MMultigraph& mg4)
{
    if (mg4.vertex_count() != 4 || mg4.layer_count() != 5)
        fail(ErrorCode::InvalidArgument, "is_subgraph_of_saturated expects a 5-multigraph on 4 vertices");
    // Containment in some member means some matching can serve as the light
    // pair, i.e. its two colour sets are disjoint.
    for (const auto& light : kMatchings4)
        if ((mg4.colors(light[0][0], light[0][1]) & mg4.colors(light[1][0], light[1][1])) == 0)
            return true;
    return false;
}

// --- triples ------------------------------------------------------------------

std::array<unsigned, 3> triple_type(const MMultigraph& mg, Vertex x, Vertex y, Vertex z)
{
    if (x == y || x == z || y == z)
        fail(ErrorCode::InvalidArgument, "triple_type needs three distinct vertices");
    std::array<unsigned, 3> t{mg.multiplicity(x, y), mg.multiplicity(x, z), mg.multiplicity(y, z)};
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}

std::optional<std::array<Vertex, 3>> find_heavy_triple(const MMultigraph& mg)
{
    const std::size_t n = mg.vertex_count();
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            if (mg.multiplicity(x, y) < 3)
                continue;
            for (Vertex z = y + 1; z < n; ++z)
                if (mg.multiplicity(x, z) >= 3 && mg.multiplicity(y, z) >= 3)
                    return std::array<Vertex, 3>{x, y, z};
        }
    return std::nullopt;
}

bool has_heavy_triple(const MMultigraph& mg)
{
    return find_heavy_triple(mg).has_value();
}

// --- peeling ------------------------------------------------------------------

std::vector<Vertex> extract_dense_core(const MMultigraph& mg, const Rational& beta)
{
    if (mg.layer_count() != 5)
        fail(ErrorCode::InvalidArgument, "extract_dense_core requires m = 5");
    if (beta < 0 || beta > Rational(7, 2))
        fail(ErrorCode::OutOfRange, "beta must lie in [0, 7/2]");
    const BigInt num = boost::multiprecision::numerator(beta);
    const BigInt den = boost::multiprecision::denominator(beta);

    const std::size_t n = mg.vertex_count();
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = mg.degree(v);

    std::size_t k = n;
    while (k > 0) {
        Vertex victim = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && (!found || deg[v] < deg[victim])) {
                victim = v;
                found = true;
            }
        if (BigInt(deg[victim]) * den >= num * k)
            break;
        alive[victim] = false;
        --k;
        for (Vertex u = 0; u < n; ++u)
            if (alive[u])
                deg[u] -= mg.multiplicity(u, victim);
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            out.push_back(v);
    return out;
}

MMultigraph link_multigraph(const Uniform3Graph& h, std::span<const Vertex> vertices)
{
    std::vector<SimpleGraph> layers;
    layers.reserve(vertices.size());
    for (Vertex v : vertices)
        layers.push_back(link(h, v));
    return MMultigraph::from_layers(layers);
}

} // namespace fanol2
