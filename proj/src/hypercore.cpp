#include "fanol2/hypercore.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fanol2/error.hpp"

namespace fanol2 {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_vertex(std::size_t n, Vertex v)
{
    if (v >= n)
        fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

BigInt power(std::uint64_t base, unsigned p)
{
    BigInt result = 1;
    BigInt b = base;
    for (unsigned i = 0; i < p; ++i)
        result *= b;
    return result;
}

} // namespace

Pair make_pair(Vertex x, Vertex y)
{
    if (x == y)
        fail(ErrorCode::InvalidArgument, "pair with repeated vertex " + std::to_string(x));
    return x < y ? Pair{x, y} : Pair{y, x};
}

Triple make_triple(Vertex x, Vertex y, Vertex z)
{
    if (x == y || x == z || y == z)
        fail(ErrorCode::InvalidArgument, "triple with repeated vertex");
    if (x > y)
        std::swap(x, y);
    if (y > z)
        std::swap(y, z);
    if (x > y)
        std::swap(x, y);
    return {x, y, z};
}

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// --- SimpleGraph ------------------------------------------------------------

SimpleGraph::Builder::Builder(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

SimpleGraph::Builder& SimpleGraph::Builder::add_edge(Vertex u, Vertex v)
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v)
        fail(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    return *this;
}

bool SimpleGraph::Builder::has_edge(Vertex u, Vertex v) const
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

SimpleGraph SimpleGraph::Builder::build() && { return SimpleGraph(n_, std::move(bits_)); }

SimpleGraph::SimpleGraph(std::size_t n) : SimpleGraph(n, std::vector<std::uint64_t>(n * words_for(n), 0)) {}

SimpleGraph::SimpleGraph(std::size_t n, std::span<const Pair> edges)
{
    Builder builder(n);
    for (const Pair& e : edges) {
        if (e.u != e.v && builder.has_edge(e.u, e.v))
            fail(ErrorCode::InvalidArgument,
                 "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        builder.add_edge(e.u, e.v);
    }
    *this = std::move(builder).build();
}

SimpleGraph::SimpleGraph(std::size_t n, std::vector<std::uint64_t> bits)
    : n_(n), words_(words_for(n)), bits_(std::move(bits)), degrees_(n, 0)
{
    std::size_t total = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        std::uint32_t d = 0;
        for (std::size_t w = 0; w < words_; ++w)
            d += static_cast<std::uint32_t>(std::popcount(bits_[v * words_ + w]));
        degrees_[v] = d;
        total += d;
    }
    edge_count_ = total / 2;
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t SimpleGraph::degree(Vertex v) const
{
    check_vertex(n_, v);
    return degrees_[v];
}

std::size_t SimpleGraph::min_degree() const
{
    if (n_ == 0)
        return 0;
    return *std::min_element(degrees_.begin(), degrees_.end());
}

std::vector<Pair> SimpleGraph::edges() const
{
    std::vector<Pair> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if ((bits_[u * words_ + v / 64] >> (v % 64)) & 1U)
                out.push_back({u, v});
    return out;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const
{
    check_vertex(n_, v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
        if ((bits_[v * words_ + u / 64] >> (u % 64)) & 1U)
            out.push_back(u);
    return out;
}

std::span<const std::uint64_t> SimpleGraph::row(Vertex v) const
{
    check_vertex(n_, v);
    return {bits_.data() + v * words_, words_};
}

SimpleGraph SimpleGraph::complement() const
{
    std::vector<std::uint64_t> bits(bits_.size(), 0);
    for (std::size_t v = 0; v < n_; ++v) {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t mask = ~std::uint64_t{0};
            if (w == words_ - 1 && n_ % 64 != 0)
                mask = (std::uint64_t{1} << (n_ % 64)) - 1;
            bits[v * words_ + w] = ~bits_[v * words_ + w] & mask;
        }
        bits[v * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
    return SimpleGraph(n_, std::move(bits));
}

// --- Uniform3Graph ----------------------------------------------------------

Uniform3Graph::Uniform3Graph(std::size_t n) : n_(n) { index(); }

Uniform3Graph::Uniform3Graph(std::size_t n, std::span<const Triple> edges) : n_(n)
{
    edges_.reserve(edges.size());
    for (const Triple& t : edges) {
        check_vertex(n, t.a);
        check_vertex(n, t.b);
        check_vertex(n, t.c);
        edges_.push_back(make_triple(t.a, t.b, t.c));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        fail(ErrorCode::InvalidArgument, "duplicate edge {" + std::to_string(dup->a) + "," + std::to_string(dup->b) +
                                             "," + std::to_string(dup->c) + "}");
    index();
}

void Uniform3Graph::index()
{
    words_ = words_for(n_);
    codegree_.assign(n_ * n_, 0);
    degree_.assign(n_, 0);
    third_.assign(n_ * n_ * words_, 0);
    auto mark = [&](Vertex u, Vertex v, Vertex w) {
        ++codegree_[pair_slot(u, v)];
        ++codegree_[pair_slot(v, u)];
        third_[pair_slot(u, v) * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
        third_[pair_slot(v, u) * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    };
    for (const Triple& t : edges_) {
        mark(t.a, t.b, t.c);
        mark(t.a, t.c, t.b);
        mark(t.b, t.c, t.a);
        ++degree_[t.a];
        ++degree_[t.b];
        ++degree_[t.c];
    }
}

bool Uniform3Graph::has_edge(Vertex x, Vertex y, Vertex z) const
{
    check_vertex(n_, x);
    check_vertex(n_, y);
    check_vertex(n_, z);
    if (x == y || x == z || y == z)
        return false;
    return (third_[pair_slot(x, y) * words_ + z / 64] >> (z % 64)) & 1U;
}

std::uint32_t Uniform3Graph::codegree(Vertex u, Vertex v) const
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    return codegree_[pair_slot(u, v)];
}

std::size_t Uniform3Graph::degree(Vertex v) const
{
    check_vertex(n_, v);
    return degree_[v];
}

std::span<const std::uint64_t> Uniform3Graph::common_neighbors(Vertex u, Vertex v) const
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    return {third_.data() + pair_slot(u, v) * words_, words_};
}

Uniform3Graph Uniform3Graph::without_vertex(Vertex v) const
{
    check_vertex(n_, v);
    std::vector<Triple> kept;
    kept.reserve(edges_.size());
    for (const Triple& t : edges_)
        if (t.a != v && t.b != v && t.c != v)
            kept.push_back(t);
    return Uniform3Graph(n_, kept);
}

Uniform3Graph Uniform3Graph::relabeled(std::span<const Vertex> perm) const
{
    if (perm.size() != n_)
        fail(ErrorCode::InvalidArgument, "relabeling has wrong length");
    std::vector<Triple> mapped;
    mapped.reserve(edges_.size());
    for (const Triple& t : edges_)
        mapped.push_back(make_triple(perm[t.a], perm[t.b], perm[t.c]));
    return Uniform3Graph(n_, mapped);
}

// --- calculus ---------------------------------------------------------------

std::vector<Pair> shadow(const Uniform3Graph& h)
{
    std::vector<Pair> out;
    const auto n = static_cast<Vertex>(h.vertex_count());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (h.codegree(u, v) > 0)
                out.push_back({u, v});
    return out;
}

SimpleGraph link(const Uniform3Graph& h, Vertex v)
{
    SimpleGraph::Builder builder(h.vertex_count());
    builder.has_edge(v, v); // range check
    for (const Triple& t : h.edges()) {
        if (t.a == v)
            builder.add_edge(t.b, t.c);
        else if (t.b == v)
            builder.add_edge(t.a, t.c);
        else if (t.c == v)
            builder.add_edge(t.a, t.b);
    }
    return std::move(builder).build();
}

BigInt lp_norm(const Uniform3Graph& h, unsigned p)
{
    if (p == 0)
        fail(ErrorCode::InvalidArgument, "lp_norm requires p >= 1");
    BigInt total = 0;
    for (const Pair& e : shadow(h))
        total += power(h.codegree(e.u, e.v), p);
    return total;
}

double lp_norm_real(const Uniform3Graph& h, double p)
{
    if (!(p >= 1.0))
        fail(ErrorCode::InvalidArgument, "lp_norm requires p >= 1");
    double total = 0.0;
    for (const Pair& e : shadow(h))
        total += std::pow(static_cast<double>(h.codegree(e.u, e.v)), p);
    return total;
}

BigInt lp_norm(const SimpleGraph& g, unsigned p)
{
    if (p == 0)
        fail(ErrorCode::InvalidArgument, "lp_norm requires p >= 1");
    BigInt total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        total += power(g.degree(v), p);
    return total;
}

double lp_norm_real(const SimpleGraph& g, double p)
{
    if (!(p >= 1.0))
        fail(ErrorCode::InvalidArgument, "lp_norm requires p >= 1");
    double total = 0.0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        total += std::pow(static_cast<double>(g.degree(v)), p);
    return total;
}

BigInt lp_norm_degree(const Uniform3Graph& h, Vertex v, unsigned p)
{
    if (p == 0)
        fail(ErrorCode::InvalidArgument, "lp_norm_degree requires p >= 1");
    const auto n = static_cast<Vertex>(h.vertex_count());
    if (v >= n)
        fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
    // Pairs through v vanish entirely; pairs in the link lose exactly one.
    BigInt diff = 0;
    for (Vertex u = 0; u < n; ++u)
        if (u != v)
            diff += power(h.codegree(u, v), p);
    for (const Triple& t : h.edges()) {
        Vertex a = 0;
        Vertex b = 0;
        if (t.a == v) {
            a = t.b;
            b = t.c;
        } else if (t.b == v) {
            a = t.a;
            b = t.c;
        } else if (t.c == v) {
            a = t.a;
            b = t.b;
        } else {
            continue;
        }
        const std::uint32_t d = h.codegree(a, b);
        diff += power(d, p) - power(d - 1, p);
    }
    return diff;
}

double lp_norm_degree_real(const Uniform3Graph& h, Vertex v, double p)
{
    if (!(p >= 1.0))
        fail(ErrorCode::InvalidArgument, "lp_norm_degree requires p >= 1");
    const auto n = static_cast<Vertex>(h.vertex_count());
    if (v >= n)
        fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
    double diff = 0.0;
    for (Vertex u = 0; u < n; ++u)
        if (u != v)
            diff += std::pow(static_cast<double>(h.codegree(u, v)), p);
    for (const Pair& e : link(h, v).edges()) {
        const double d = h.codegree(e.u, e.v);
        diff += std::pow(d, p) - std::pow(d - 1.0, p);
    }
    return diff;
}

BigInt l2_degree_expanded(const Uniform3Graph& h, Vertex v)
{
    const SimpleGraph l = link(h, v);
    BigInt squares = 0;
    for (Vertex u = 0; u < h.vertex_count(); ++u) {
        if (u == v)
            continue;
        const std::uint64_t d = h.codegree(u, v);
        squares += d * d;
    }
    BigInt link_sum = 0;
    for (const Pair& e : l.edges())
        link_sum += h.codegree(e.u, e.v);
    return squares + 2 * link_sum - BigInt(h.degree(v));
}

BigInt count_stars(const Uniform3Graph& h, unsigned k)
{
    if (k == 0)
        fail(ErrorCode::InvalidArgument, "count_stars requires k >= 1");
    BigInt total = 0;
    for (const Pair& e : shadow(h))
        total += binomial(h.codegree(e.u, e.v), k);
    return total;
}

BigInt count_stars(const SimpleGraph& g, unsigned k)
{
    if (k == 0)
        fail(ErrorCode::InvalidArgument, "count_stars requires k >= 1");
    BigInt total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        total += binomial(g.degree(v), k);
    return total;
}

BigInt star_degree(const Uniform3Graph& h, Vertex v)
{
    const auto n = static_cast<Vertex>(h.vertex_count());
    if (v >= n)
        fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
    // v in the shared pair, or v a leaf of one edge whose other pair is shared.
    BigInt total = 0;
    for (Vertex u = 0; u < n; ++u)
        if (u != v)
            total += binomial(h.codegree(u, v), 2);
    for (const Triple& t : h.edges()) {
        if (t.a == v)
            total += h.codegree(t.b, t.c) - 1;
        else if (t.b == v)
            total += h.codegree(t.a, t.c) - 1;
        else if (t.c == v)
            total += h.codegree(t.a, t.b) - 1;
    }
    return total;
}

StirlingTable::StirlingTable(unsigned max_p)
    : max_p_(max_p), first_((max_p + 1) * (max_p + 1), 0), second_((max_p + 1) * (max_p + 1), 0)
{
    const unsigned w = max_p + 1;
    first_[0] = 1;
    second_[0] = 1;
    for (unsigned p = 1; p <= max_p; ++p) {
        for (unsigned i = 1; i <= p; ++i) {
            first_[p * w + i] = first_[(p - 1) * w + i - 1] - BigInt(p - 1) * first_[(p - 1) * w + i];
            second_[p * w + i] = second_[(p - 1) * w + i - 1] + BigInt(i) * second_[(p - 1) * w + i];
        }
    }
}

const BigInt& StirlingTable::first_kind(unsigned p, unsigned i) const
{
    if (p > max_p_ || i > max_p_)
        fail(ErrorCode::Capacity, "Stirling table too small");
    return first_[p * (max_p_ + 1) + i];
}

const BigInt& StirlingTable::second_kind(unsigned p, unsigned i) const
{
    if (p > max_p_ || i > max_p_)
        fail(ErrorCode::Capacity, "Stirling table too small");
    return second_[p * (max_p_ + 1) + i];
}

NormStarConversion norm_star_conversion(const Uniform3Graph& h, unsigned p, const StirlingTable& table)
{
    if (p == 0)
        fail(ErrorCode::InvalidArgument, "conversion requires p >= 1");
    if (p > table.max_p())
        fail(ErrorCode::Capacity, "Stirling table holds p <= " + std::to_string(table.max_p()));
    BigInt factorial = 1;
    BigInt weighted_norms = 0;
    BigInt norm = 0;
    BigInt i_factorial = 1;
    for (unsigned i = 1; i <= p; ++i) {
        factorial *= i;
        i_factorial *= i;
        weighted_norms += table.first_kind(p, i) * lp_norm(h, i);
        norm += table.second_kind(p, i) * i_factorial * count_stars(h, i);
    }
    if (weighted_norms % factorial != 0)
        fail(ErrorCode::Internal, "first-kind expansion not divisible by p!");
    return {weighted_norms / factorial, norm};
}

BigInt bn_l2_closed(std::size_t n)
{
    if (n < 3)
        fail(ErrorCode::InvalidArgument, "bn_l2_closed requires n >= 3");
    const Rational q = Rational(BigInt(n) * n / 4);
    const Rational m = Rational(BigInt(n) - 2);
    const Rational value = q * m * m + q * q - Rational(BigInt(n), BigInt(2)) * q;
    if (boost::multiprecision::denominator(value) != 1)
        fail(ErrorCode::Internal, "closed form for B_n is not integral at n=" + std::to_string(n));
    return boost::multiprecision::numerator(value);
}

BigInt bipartite3_l2_closed(std::size_t a, std::size_t b)
{
    const BigInt n = BigInt(a) + b;
    return binomial(a, 2) * b * b + binomial(b, 2) * a * a + BigInt(a) * b * (n - 2) * (n - 2);
}

// --- constructions ----------------------------------------------------------

Uniform3Graph complete3(std::size_t n)
{
    std::vector<Triple> edges;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            for (Vertex z = y + 1; z < n; ++z)
                edges.push_back({x, y, z});
    return Uniform3Graph(n, edges);
}

Uniform3Graph bipartite3(std::size_t a, std::size_t b)
{
    const std::size_t n = a + b;
    std::vector<Triple> edges;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            for (Vertex z = y + 1; z < n; ++z) {
                const int low = (x < a) + (y < a) + (z < a);
                if (low != 0 && low != 3)
                    edges.push_back({x, y, z});
            }
    return Uniform3Graph(n, edges);
}

Uniform3Graph balanced_bipartite3(std::size_t n) { return bipartite3((n + 1) / 2, n / 2); }

Uniform3Graph fano_plane()
{
    const std::vector<Triple> edges = {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 3, 6},
                                       {1, 4, 6}, {2, 5, 6}, {1, 3, 5}};
    return Uniform3Graph(7, edges);
}

SimpleGraph complete_graph(std::size_t n) { return clique_plus_isolated(n, n); }

SimpleGraph clique_plus_isolated(std::size_t n, std::size_t k)
{
    if (k > n)
        fail(ErrorCode::InvalidArgument, "C(n,k) requires k <= n");
    SimpleGraph::Builder builder(n);
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v)
            builder.add_edge(u, v);
    return std::move(builder).build();
}

SimpleGraph complement_construction(std::size_t n, std::size_t k) { return clique_plus_isolated(n, k).complement(); }

SimpleGraph shat(std::size_t n, std::size_t k, std::size_t l)
{
    if (k + l > n)
        fail(ErrorCode::InvalidArgument, "S^(n,k,l) requires k + l <= n");
    SimpleGraph::Builder builder(n);
    for (Vertex u = 0; u < k + l; ++u)
        for (Vertex v = std::max<Vertex>(u + 1, static_cast<Vertex>(k)); v < k + l; ++v)
            builder.add_edge(u, v);
    return std::move(builder).build();
}

SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    SimpleGraph::Builder builder(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = static_cast<Vertex>(a); v < a + b; ++v)
            builder.add_edge(u, v);
    return std::move(builder).build();
}

SimpleGraph quasi_complete(std::size_t n, std::size_t m)
{
    const std::size_t all = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (m > all)
        fail(ErrorCode::InvalidArgument, "quasi_complete requires m <= C(n,2)");
    std::size_t k = 0;
    while (k < n && (k + 1) * k / 2 <= m)
        ++k;
    const std::size_t rest = m - k * (k - (k > 0 ? 1 : 0)) / 2;
    SimpleGraph::Builder builder(n);
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v)
            builder.add_edge(u, v);
    for (Vertex u = 0; u < rest; ++u)
        builder.add_edge(u, static_cast<Vertex>(k));
    return std::move(builder).build();
}

SimpleGraph quasi_star(std::size_t n, std::size_t m)
{
    const std::size_t all = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (m > all)
        fail(ErrorCode::InvalidArgument, "quasi_star requires m <= C(n,2)");
    return quasi_complete(n, all - m).complement();
}

} // namespace fanol2
