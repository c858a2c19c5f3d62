#include <doob/errors.hpp>
#include <doob/graph.hpp>

#include <ostream>

namespace doob {

auto ShVertex::from_index(int i) -> ShVertex
{
    if (i < 0 || i >= 16)
        throw InvalidArgument("Shrikhande vertex index " + std::to_string(i) + " out of range");
    return ShVertex{i / 4, i % 4};
}

auto K4Vertex::from_pair(int a, int b) -> K4Vertex
{
    if (a < 0 || a > 1 || b < 0 || b > 1)
        throw InvalidArgument("K4 pair coordinates must be 0 or 1");
    return K4Vertex{2 * a + b};
}

DoobParams::DoobParams(int m, int n) :
    m(m),
    n(n)
{
    if (m < 0 || n < 0)
        throw InvalidArgument("D(m,n) needs m, n >= 0");
    if (m + n == 0)
        throw InvalidArgument("D(0,0) is empty: need m + n >= 1");
    if (diameter() > 31)
        throw GuardExceeded("D(" + std::to_string(m) + "," + std::to_string(n) + ") is too large to index");
}

auto DoobParams::vertex_count() const -> std::size_t
{
    return std::size_t{1} << (2 * diameter());
}

auto DoobParams::mds_size() const -> std::size_t
{
    return std::size_t{1} << (2 * (diameter() - 1));
}

auto to_string(const DoobParams & p) -> std::string
{
    return "D(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

auto encode_vertex(const DoobVertex & v, const DoobParams & params) -> VertexIndex
{
    if (v.sh.size() != std::size_t(params.m) || v.k.size() != std::size_t(params.n))
        throw InvalidArgument("vertex shape does not match " + to_string(params));

    std::uint64_t result = 0;
    for (auto & s : v.sh) {
        if (s.a < 0 || s.a > 3 || s.b < 0 || s.b > 3)
            throw InvalidArgument("Shrikhande coordinate out of range");
        result = result * 16 + std::uint64_t(s.index());
    }
    for (auto & k : v.k) {
        if (k.v < 0 || k.v > 3)
            throw InvalidArgument("K4 coordinate out of range");
        result = result * 4 + std::uint64_t(k.v);
    }
    return VertexIndex(result);
}

auto decode_vertex(VertexIndex i, const DoobParams & params) -> DoobVertex
{
    if (i >= params.vertex_count())
        throw InvalidArgument("vertex index " + std::to_string(i) + " out of range for " + to_string(params));

    DoobVertex result;
    result.sh.resize(params.m);
    result.k.resize(params.n);
    std::uint64_t rest = i;
    for (int j = params.n - 1; j >= 0; --j) {
        result.k[j] = K4Vertex{int(rest % 4)};
        rest /= 4;
    }
    for (int j = params.m - 1; j >= 0; --j) {
        result.sh[j] = ShVertex::from_index(int(rest % 16));
        rest /= 16;
    }
    return result;
}

Graph::Graph(std::size_t vertex_count, std::optional<DoobParams> params) :
    _params(params)
{
    if (vertex_count == 0)
        throw InvalidArgument("graph must have at least one vertex");
    if (vertex_count > max_vertex_count)
        throw GuardExceeded("graph with " + std::to_string(vertex_count) + " vertices exceeds the bound of "
                + std::to_string(max_vertex_count));
    _adjacency.assign(vertex_count, VertexSet(vertex_count));
}

void Graph::add_edge(VertexIndex u, VertexIndex v)
{
    if (u == v)
        throw InvalidArgument("self-loops are not allowed");
    _adjacency.at(u).set(v);
    _adjacency.at(v).set(u);
}

auto Graph::edge_count() const -> std::size_t
{
    std::size_t total = 0;
    for (auto & row : _adjacency)
        total += row.count();
    return total / 2;
}

auto Graph::regular_degree() const -> std::optional<std::size_t>
{
    auto d = degree(0);
    for (VertexIndex v = 1; v < size(); ++v)
        if (degree(v) != d)
            return std::nullopt;
    return d;
}

auto Graph::common_neighbour_count(VertexIndex u, VertexIndex v) const -> std::size_t
{
    return (_adjacency[u] & _adjacency[v]).count();
}

auto operator<<(std::ostream & s, const Graph & g) -> std::ostream &
{
    if (g.params())
        s << to_string(*g.params()) << ": ";
    s << g.size() << " vertices, " << g.edge_count() << " edges, ";
    if (auto d = g.regular_degree())
        s << *d << "-regular";
    else
        s << "irregular";
    return s;
}

auto build_shrikhande() -> Graph
{
    static constexpr int connection[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};

    Graph result(16, DoobParams{1, 0});
    for (int i = 0; i < 16; ++i) {
        auto u = ShVertex::from_index(i);
        for (auto & d : connection) {
            ShVertex w{(u.a + d[0]) % 4, (u.b + d[1]) % 4};
            result.add_edge(VertexIndex(i), VertexIndex(w.index()));
        }
    }
    return result;
}

auto build_complete(int q) -> Graph
{
    if (q < 2)
        throw InvalidArgument("complete graph needs order q >= 2, got " + std::to_string(q));

    Graph result(std::size_t(q), q == 4 ? std::optional{DoobParams{0, 1}} : std::nullopt);
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            result.add_edge(VertexIndex(u), VertexIndex(v));
    return result;
}

auto cartesian_product(const Graph & g, const Graph & h) -> Graph
{
    std::optional<DoobParams> params;
    if (g.params() && h.params())
        params = DoobParams{g.params()->m + h.params()->m, g.params()->n + h.params()->n};

    Graph result(g.size() * h.size(), params);
    auto hs = VertexIndex(h.size());
    for (VertexIndex u = 0; u < g.size(); ++u)
        for (VertexIndex v = 0; v < h.size(); ++v) {
            auto self = u * hs + v;
            for (auto w = h.neighbours(v).find_first(); w != VertexSet::npos; w = h.neighbours(v).find_next(w))
                if (w > v)
                    result.add_edge(self, u * hs + VertexIndex(w));
            for (auto w = g.neighbours(u).find_first(); w != VertexSet::npos; w = g.neighbours(u).find_next(w))
                if (w > u)
                    result.add_edge(self, VertexIndex(w) * hs + v);
        }
    return result;
}

auto build_doob(const DoobParams & params) -> Graph
{
    if (params.m + params.n == 0)
        throw InvalidArgument("D(0,0) is empty: need m + n >= 1");
    if (params.vertex_count() > max_vertex_count)
        throw GuardExceeded(to_string(params) + " has " + std::to_string(params.vertex_count())
                + " vertices, above the bound of " + std::to_string(max_vertex_count));

    std::optional<Graph> result;
    auto sh = build_shrikhande();
    auto k4 = build_complete(4);
    for (int i = 0; i < params.m; ++i)
        result = result ? cartesian_product(*result, sh) : sh;
    for (int i = 0; i < params.n; ++i)
        result = result ? cartesian_product(*result, k4) : k4;
    return *result;
}

}
