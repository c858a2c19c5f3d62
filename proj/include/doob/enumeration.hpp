#pragma once

#include <doob/code.hpp>
#include <doob/graph.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

namespace doob {

struct EnumerationOptions {
    bool materialize = true;
    /// Worker threads; results do not depend on this.
    unsigned jobs = 1;
};

struct EnumerationResult {
    DoobParams params;
    /// Sorted lexicographically on the member lists; empty when not materialized.
    std::vector<Code> codes;
    std::uint64_t count = 0;
    std::chrono::duration<double> elapsed{};
};

/// All independent sets of exactly `target` vertices, in lexicographic
/// order of their sorted member lists.
void for_each_independent_set(const Graph & graph, std::size_t target,
        const std::function<void (const std::vector<VertexIndex> &)> & visit);

/// Every maximum independent set (MDS code) of D(m,n).
///
/// D(1,0) and D(0,1) are searched directly. Otherwise the last coordinate is
/// split off: a code M of D(m,n) is the same thing as a choice, for every
/// vertex u of the remaining graph, of the fiber {t : (u,t) in M}, which must
/// be an MDS code of the last factor (a single K4 value, or one of the 16
/// Shrikhande codes), with fibers over adjacent u disjoint. The search assigns
/// fibers in vertex order with forward checking on the neighbours' domains.
///
/// Throws GuardExceeded above max_vertex_count vertices.
auto enumerate_mds(const DoobParams & params, const EnumerationOptions & options = {}) -> EnumerationResult;

/// Count-only variant of enumerate_mds; memory does not grow with the count.
auto count_mds(const DoobParams & params, unsigned jobs = 1) -> std::uint64_t;

}
