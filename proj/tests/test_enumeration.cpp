#include "oracles.hpp"

#include <doob/enumeration.hpp>
#include <doob/errors.hpp>

#include <doctest.h>

using namespace doob;

namespace {
    auto member_lists(const std::vector<Code> & codes) -> std::vector<std::vector<std::uint32_t>>
    {
        std::vector<std::vector<std::uint32_t>> result;
        for (auto & c : codes)
            result.emplace_back(c.members().begin(), c.members().end());
        return result;
    }
}

TEST_CASE("census of small cases")
{
    CHECK(enumerate_mds(DoobParams{0, 1}).count == 4);
    CHECK(enumerate_mds(DoobParams{0, 2}).count == 24);
    CHECK(enumerate_mds(DoobParams{1, 0}).count == 16);
    CHECK(count_mds(DoobParams{0, 1}) == 4);
    CHECK(count_mds(DoobParams{0, 2}) == 24);
    CHECK(count_mds(DoobParams{1, 0}) == 16);
}

TEST_CASE("MDS(0,3) are the latin squares of order 4")
{
    auto latin = oracle::latin_squares_of_order_4();
    CHECK(latin == 576);
    CHECK(count_mds(DoobParams{0, 3}) == latin);
}

TEST_CASE("enumeration agrees with the naive oracle up to 64 vertices")
{
    for (auto p : {DoobParams{0, 1}, DoobParams{0, 2}, DoobParams{1, 0}, DoobParams{0, 3}, DoobParams{1, 1}}) {
        CAPTURE(to_string(p));
        auto expected = oracle::independent_sets(oracle::adjacency_matrix(p.m, p.n), p.mds_size());
        auto got = enumerate_mds(p);
        CHECK(got.count == got.codes.size());
        CHECK(member_lists(got.codes) == expected);
    }
}

TEST_CASE("MDS(1,1) by slice composition")
{
    auto sh = member_lists(enumerate_mds(DoobParams{1, 0}).codes);
    auto composed = oracle::compose_slices(sh);
    CHECK(composed.size() == 240);
    CHECK(member_lists(enumerate_mds(DoobParams{1, 1}).codes) == composed);

    auto k2 = member_lists(enumerate_mds(DoobParams{0, 2}).codes);
    CHECK(member_lists(enumerate_mds(DoobParams{0, 3}).codes) == oracle::compose_slices(k2));
}

TEST_CASE("larger desk-scale counts by slice composition")
{
    // Each D(m,n+1) count equals the number of ordered disjoint 4-tuples of D(m,n) codes.
    auto d11 = member_lists(enumerate_mds(DoobParams{1, 1}).codes);
    CHECK(count_mds(DoobParams{1, 2}) == oracle::compose_slices(d11).size());
    auto d03 = member_lists(enumerate_mds(DoobParams{0, 3}).codes);
    CHECK(count_mds(DoobParams{0, 4}) == oracle::compose_slices(d03).size());
}

TEST_CASE("every enumerated code verifies")
{
    for (auto p : {DoobParams{0, 3}, DoobParams{1, 1}, DoobParams{2, 0}}) {
        auto graph = build_doob(p);
        auto result = enumerate_mds(p);
        for (auto & c : result.codes)
            REQUIRE(verify_mds(c, graph).is_mds);
        CHECK(std::is_sorted(result.codes.begin(), result.codes.end()));
        CHECK(std::adjacent_find(result.codes.begin(), result.codes.end()) == result.codes.end());
    }
}

TEST_CASE("output does not depend on the number of workers")
{
    for (auto p : {DoobParams{1, 1}, DoobParams{2, 0}, DoobParams{0, 3}}) {
        auto one = enumerate_mds(p, {true, 1});
        auto four = enumerate_mds(p, {true, 4});
        CHECK(one.codes == four.codes);
        CHECK(count_mds(p, 1) == count_mds(p, 3));
    }
}

TEST_CASE("count-only does not materialize")
{
    auto r = enumerate_mds(DoobParams{2, 0}, {false, 1});
    CHECK(r.codes.empty());
    CHECK(r.count == 5856);
}

TEST_CASE("size guard")
{
    CHECK_THROWS_AS(enumerate_mds(DoobParams{3, 1}), GuardExceeded);
    CHECK_THROWS_AS(count_mds(DoobParams{0, 7}), GuardExceeded);
}

TEST_CASE("independent sets of a small graph")
{
    // Path 0-1-2: independent pairs are just {0,2}.
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    std::vector<std::vector<VertexIndex>> seen;
    for_each_independent_set(path, 2, [&](const std::vector<VertexIndex> & s) { seen.push_back(s); });
    CHECK(seen == std::vector<std::vector<VertexIndex>>{{0, 2}});
}
