#pragma once

#include <doob/code.hpp>
#include <doob/graph.hpp>

#include <optional>
#include <span>
#include <vector>

namespace doob {

struct VertexPermutation {
    std::vector<VertexIndex> image;

    static auto identity(std::size_t size) -> VertexPermutation;

    auto operator()(VertexIndex v) const -> VertexIndex { return image[v]; }
    auto is_bijection() const -> bool;
    auto inverse() const -> VertexPermutation;
    auto is_automorphism_of(const Graph & g) const -> bool;

    auto operator<=>(const VertexPermutation &) const = default;
};

/// Apply `first`, then `second`.
auto compose(const VertexPermutation & first, const VertexPermutation & second) -> VertexPermutation;

/// Every group element reachable from the generators, sorted.
auto group_closure(std::span<const VertexPermutation> generators, std::size_t degree) -> std::vector<VertexPermutation>;

inline constexpr std::size_t max_listed_group_order = 10'000;

struct AutomorphismGroup {
    std::uint64_t order = 0;
    std::vector<VertexPermutation> generators;
    /// Every element, sorted, when order <= max_listed_group_order.
    std::vector<VertexPermutation> elements;
};

/// Full automorphism group of a graph with at most 64 vertices, by
/// individualisation and neighbour-count refinement.
auto automorphism_group(const Graph & g) -> AutomorphismGroup;

/// An isomorphism g -> h, if one exists (at most 64 vertices each).
auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<VertexPermutation>;

/// Automorphisms of D(m,n) generated by automorphisms of single factors and
/// by swapping neighbouring factors of the same kind. For products other than
/// D(1,0), D(0,1) and D(0,2) this need not be the whole automorphism group.
auto product_automorphism_generators(const DoobParams & params) -> std::vector<VertexPermutation>;

struct OrbitPartition {
    /// Code indices per orbit, each class sorted, classes ordered by least index.
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> sizes;

    auto sorted_sizes() const -> std::vector<std::size_t>;
};

/// Orbits of the code list under the group generated by `group`. Throws
/// ConsistencyError if some permutation maps a listed code to an unlisted one.
auto orbits_of_codes(std::span<const Code> codes, std::span<const VertexPermutation> group) -> OrbitPartition;

}
