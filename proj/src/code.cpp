#include <doob/code.hpp>
#include <doob/errors.hpp>

#include <algorithm>

namespace doob {

Code::Code(DoobParams params, std::vector<VertexIndex> members) :
    _params(params),
    _members(std::move(members))
{
    std::sort(_members.begin(), _members.end());
    if (std::adjacent_find(_members.begin(), _members.end()) != _members.end())
        throw InvalidArgument("code has a duplicate member");
    if (! _members.empty() && _members.back() >= _params.vertex_count())
        throw InvalidArgument("code member out of range for " + to_string(_params));
}

auto Code::from_vertices(DoobParams params, std::span<const DoobVertex> vertices) -> Code
{
    std::vector<VertexIndex> members;
    members.reserve(vertices.size());
    for (auto & v : vertices)
        members.push_back(encode_vertex(v, params));
    return Code{params, std::move(members)};
}

auto Code::contains(VertexIndex v) const -> bool
{
    return std::binary_search(_members.begin(), _members.end(), v);
}

namespace {
    void check_params(const Code & code, const Graph & graph)
    {
        if (graph.params() ? *graph.params() != code.params() : graph.size() != code.params().vertex_count())
            throw ParameterMismatch("code for " + to_string(code.params()) + " checked against a different graph");
    }
}

auto is_independent(const Code & code, const Graph & graph) -> IndependenceCheck
{
    check_params(code, graph);

    VertexSet in_code(graph.size());
    for (auto v : code.members())
        in_code.set(v);

    for (auto u : code.members()) {
        auto hits = graph.neighbours(u) & in_code;
        if (auto w = hits.find_next(u); w != VertexSet::npos)
            return IndependenceCheck{false, AdjacentPair{u, VertexIndex(w)}};
    }
    return IndependenceCheck{};
}

auto verify_mds(const Code & code, const Graph & graph) -> MdsCertificate
{
    auto check = is_independent(code, graph);
    MdsCertificate result;
    result.independent = check.independent;
    result.witness = check.witness;
    result.cardinality = code.size();
    result.target_cardinality = code.params().mds_size();
    result.is_mds = result.independent && result.cardinality == result.target_cardinality;
    return result;
}

auto fiber_mask(const Code & code, int sh_position, const DoobVertex & fixed) -> std::uint16_t
{
    auto & p = code.params();
    if (sh_position < 0 || sh_position >= p.m)
        throw InvalidArgument("Sh position " + std::to_string(sh_position) + " out of range for " + to_string(p));
    if (fixed.sh.size() != std::size_t(p.m - 1) || fixed.k.size() != std::size_t(p.n))
        throw InvalidArgument("fixed coordinates do not match " + to_string(p) + " minus one Sh coordinate");

    DoobVertex full = fixed;
    full.sh.insert(full.sh.begin() + sh_position, ShVertex{});
    std::uint16_t result = 0;
    for (int i = 0; i < 16; ++i) {
        full.sh[sh_position] = ShVertex::from_index(i);
        if (code.contains(encode_vertex(full, p)))
            result |= std::uint16_t(1u << i);
    }
    return result;
}

auto fiber(const Code & code, int sh_position, const DoobVertex & fixed) -> std::vector<ShVertex>
{
    auto mask = fiber_mask(code, sh_position, fixed);
    std::vector<ShVertex> result;
    for (int i = 0; i < 16; ++i)
        if (mask & (1u << i))
            result.push_back(ShVertex::from_index(i));
    return result;
}

auto intersects(const Code & a, const Code & b) -> bool
{
    auto i = a.members().begin(), j = b.members().begin();
    while (i != a.members().end() && j != b.members().end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

auto intersection_pattern(std::span<const Code> codes) -> BoolMatrix
{
    BoolMatrix result(codes.size(), std::vector<bool>(codes.size(), false));
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (codes[i].params() != codes[0].params())
            throw ParameterMismatch("intersection pattern over codes with different parameters");
        for (std::size_t j = i; j < codes.size(); ++j)
            result[i][j] = result[j][i] = intersects(codes[i], codes[j]);
    }
    return result;
}

}
