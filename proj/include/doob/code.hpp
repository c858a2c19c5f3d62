#pragma once

#include <doob/graph.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace doob {

/// A set of vertices of D(m,n), kept sorted by index so that equal codes
/// have equal representations.
class Code {
public:
    Code() = default;
    /// Sorts the members; throws on duplicates or out-of-range indices.
    Code(DoobParams params, std::vector<VertexIndex> members);

    static auto from_vertices(DoobParams params, std::span<const DoobVertex> vertices) -> Code;

    auto params() const -> const DoobParams & { return _params; }
    auto members() const -> const std::vector<VertexIndex> & { return _members; }
    auto size() const -> std::size_t { return _members.size(); }
    auto empty() const -> bool { return _members.empty(); }
    auto contains(VertexIndex v) const -> bool;

    auto operator<=>(const Code &) const = default;

private:
    DoobParams _params;
    std::vector<VertexIndex> _members;
};

using AdjacentPair = std::pair<VertexIndex, VertexIndex>;

struct IndependenceCheck {
    bool independent = true;
    std::optional<AdjacentPair> witness;
};

struct MdsCertificate {
    bool independent = false;
    std::size_t cardinality = 0;
    std::size_t target_cardinality = 0;
    bool is_mds = false;
    std::optional<AdjacentPair> witness;
};

/// The witness, if any, is the least adjacent pair in index order.
auto is_independent(const Code & code, const Graph & graph) -> IndependenceCheck;
auto verify_mds(const Code & code, const Graph & graph) -> MdsCertificate;

/// Shrikhande values v such that inserting v at Sh coordinate `sh_position`
/// of `fixed` (a vertex of D(m-1,n)) gives a member of `code`. Sorted.
auto fiber(const Code & code, int sh_position, const DoobVertex & fixed) -> std::vector<ShVertex>;

/// Same as fiber() but as a 16-bit mask indexed by ShVertex::index().
auto fiber_mask(const Code & code, int sh_position, const DoobVertex & fixed) -> std::uint16_t;

auto intersects(const Code & a, const Code & b) -> bool;

using BoolMatrix = std::vector<std::vector<bool>>;

auto intersection_pattern(std::span<const Code> codes) -> BoolMatrix;

}
