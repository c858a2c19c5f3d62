#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace doob {

using VertexIndex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Largest graph the library will materialize.
inline constexpr std::size_t max_vertex_count = 4096;

/// A Shrikhande vertex, an element (a, b) of Z4 x Z4.
struct ShVertex {
    int a = 0;
    int b = 0;

    constexpr auto index() const -> int { return 4 * a + b; }
    static auto from_index(int i) -> ShVertex;

    auto operator<=>(const ShVertex &) const = default;
};

/// A K4 vertex v in {0,1,2,3}, viewed as the pair (v div 2, v mod 2).
struct K4Vertex {
    int v = 0;

    constexpr auto high() const -> int { return v / 2; }
    constexpr auto low() const -> int { return v % 2; }
    static auto from_pair(int a, int b) -> K4Vertex;

    auto operator<=>(const K4Vertex &) const = default;
};

struct DoobParams {
    int m = 0;
    int n = 0;

    DoobParams() = default;
    DoobParams(int m, int n);

    /// 2m + n, the diameter of D(m,n).
    auto diameter() const -> int { return 2 * m + n; }
    auto vertex_count() const -> std::size_t;
    /// 4^(2m+n-1), the independence number.
    auto mds_size() const -> std::size_t;

    auto operator<=>(const DoobParams &) const = default;
};

auto to_string(const DoobParams &) -> std::string;

struct DoobVertex {
    std::vector<ShVertex> sh;
    std::vector<K4Vertex> k;

    auto operator<=>(const DoobVertex &) const = default;
};

/// Mixed radix: Sh coordinates as base-16 digits, then K4 coordinates as
/// base-4 digits, most significant first.
auto encode_vertex(const DoobVertex & v, const DoobParams & params) -> VertexIndex;
auto decode_vertex(VertexIndex i, const DoobParams & params) -> DoobVertex;

class Graph {
public:
    explicit Graph(std::size_t vertex_count, std::optional<DoobParams> params = std::nullopt);

    auto size() const -> std::size_t { return _adjacency.size(); }
    auto params() const -> const std::optional<DoobParams> & { return _params; }

    void add_edge(VertexIndex u, VertexIndex v);
    auto adjacent(VertexIndex u, VertexIndex v) const -> bool { return _adjacency[u].test(v); }
    auto neighbours(VertexIndex u) const -> const VertexSet & { return _adjacency[u]; }
    auto degree(VertexIndex u) const -> std::size_t { return _adjacency[u].count(); }
    auto edge_count() const -> std::size_t;

    /// Common degree if every vertex has the same degree.
    auto regular_degree() const -> std::optional<std::size_t>;
    auto common_neighbour_count(VertexIndex u, VertexIndex v) const -> std::size_t;

private:
    std::vector<VertexSet> _adjacency;
    std::optional<DoobParams> _params;
};

auto operator<<(std::ostream &, const Graph &) -> std::ostream &;

/// Cayley graph on Z4^2 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
auto build_shrikhande() -> Graph;
auto build_complete(int q) -> Graph;

/// Vertex (u, v) has index u * h.size() + v.
auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

auto build_doob(const DoobParams & params) -> Graph;

}
