#include <doob/enumeration.hpp>
#include <doob/errors.hpp>
#include <doob/parity.hpp>
#include <doob/xi_kappa.hpp>

#include <doctest.h>

#include <set>

using namespace doob;

namespace {
    auto xi() -> const XiTable &
    {
        static const XiTable table = derive_xi();
        return table;
    }
}

TEST_CASE("xi preserves the intersection pattern")
{
    auto & t = xi();
    REQUIRE(t.domain.size() == 16);
    REQUIRE(t.image.size() == 16);
    CHECK(intersection_pattern(t.domain) == intersection_pattern(t.image));

    auto k2 = enumerate_mds(DoobParams{0, 2}).codes;
    std::set<Code> images(t.image.begin(), t.image.end());
    CHECK(images.size() == 16);
    for (auto & c : t.image)
        CHECK(std::find(k2.begin(), k2.end(), c) != k2.end());
    CHECK(t.domain == enumerate_mds(DoobParams{1, 0}).codes);
}

TEST_CASE("xi is deterministic")
{
    auto again = derive_xi();
    CHECK(again.domain == xi().domain);
    CHECK(again.image == xi().image);
}

TEST_CASE("xi lookup by fiber mask")
{
    for (std::size_t i = 0; i < 16; ++i) {
        std::uint16_t mask = 0;
        for (auto v : xi().domain[i].members())
            mask |= std::uint16_t(1u << v);
        CHECK(xi().lookup(mask) == i);
    }
    CHECK(! xi().lookup(0b111));
}

TEST_CASE("derive_xi fails when no injection exists")
{
    auto sh = enumerate_mds(DoobParams{1, 0}).codes;
    auto k2 = enumerate_mds(DoobParams{0, 2}).codes;
    k2.resize(8);
    CHECK_THROWS_AS(derive_xi(sh, k2), ConsistencyError);
    CHECK_THROWS_AS(derive_xi(k2, sh), ParameterMismatch);
}

TEST_CASE("intersection property check")
{
    auto report = check_lemma1_property(xi());
    CHECK(report.pass);
    CHECK(report.entries_checked == 136);
    CHECK(report.violations.empty());

    // Swap two images whose intersection rows differ.
    auto pattern = intersection_pattern(xi().domain);
    std::size_t a = 0, b = 1;
    while (pattern[a] == pattern[b])
        ++b;
    auto broken = xi();
    std::swap(broken.image[a], broken.image[b]);
    auto bad = check_lemma1_property(broken);
    CHECK(! bad.pass);
    REQUIRE(! bad.violations.empty());
    auto [i, j] = bad.violations.front();
    CHECK(intersects(broken.domain[i], broken.domain[j]) != intersects(broken.image[i], broken.image[j]));

    for (std::size_t k = 0; k < 16; ++k) {
        CHECK(intersects(xi().domain[k], xi().domain[k]));
        CHECK(intersects(xi().image[k], xi().image[k]));
    }
}

TEST_CASE("kappa on D(1,0) is xi itself")
{
    for (std::size_t i = 0; i < 16; ++i) {
        auto image = apply_kappa(xi().domain[i], xi());
        CHECK(image == xi().image[i]);
        CHECK(apply_kappa_iterated(xi().domain[i], xi()) == image);
    }
}

TEST_CASE("kappa maps MDS(1,1) injectively into MDS(0,3)")
{
    auto codes = enumerate_mds(DoobParams{1, 1}).codes;
    auto target = build_doob(DoobParams{0, 3});
    std::set<Code> images;
    for (auto & c : codes) {
        auto image = apply_kappa(c, xi());
        CHECK(image.params() == DoobParams{0, 3});
        CHECK(image.size() == c.size());
        REQUIRE(verify_mds(image, target).is_mds);
        images.insert(image);
    }
    CHECK(images.size() == codes.size());
    CHECK(codes.size() <= 576);
}

TEST_CASE("kappa places the new coordinates before the old K4 coordinates")
{
    // Code in D(1,1) whose K4 slice t is the Sh code xi().domain[s(t)].
    auto sh = build_shrikhande();
    auto codes = enumerate_mds(DoobParams{1, 1}).codes;
    auto & c = codes[17];
    auto image = apply_kappa(c, xi());
    for (int y = 0; y < 4; ++y) {
        auto mask = fiber_mask(c, 0, DoobVertex{{}, {K4Vertex{y}}});
        auto which = *xi().lookup(mask);
        for (auto z : xi().image[which].members()) {
            DoobVertex v{{}, {K4Vertex{int(z / 4)}, K4Vertex{int(z % 4)}, K4Vertex{y}}};
            CHECK(image.contains(encode_vertex(v, image.params())));
        }
    }
}

TEST_CASE("iterated kappa on D(2,0)")
{
    auto codes = enumerate_mds(DoobParams{2, 0}).codes;
    auto target = build_doob(DoobParams{0, 4});
    std::set<Code> images;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        auto image = apply_kappa_iterated(codes[i], xi());
        if (i % 50 == 0) {
            REQUIRE(verify_mds(image, target).is_mds);
            CHECK(image == apply_kappa(apply_kappa(codes[i], xi()), xi()));
        }
        images.insert(image);
    }
    CHECK(images.size() == codes.size());
}

TEST_CASE("iterated kappa with m = 0 is the identity")
{
    auto codes = enumerate_mds(DoobParams{0, 2}).codes;
    CHECK(apply_kappa_iterated(codes[3], xi()) == codes[3]);
    CHECK(apply_kappa_iterated(codes[3], xi(), std::vector<int>{}) == codes[3]);
}

namespace {
    /// kappa^2 on a code of D(2,0), written out from the fiber definition.
    /// `second_first` consumes coordinate 1 first. Result index is z0 * 16 + z1
    /// where zi is the K4^2 pair that replaced Sh coordinate i.
    auto kappa_squared_by_formula(const Code & m, const XiTable & t, bool second_first) -> std::vector<VertexIndex>
    {
        auto xi_of = [&](std::uint16_t mask) -> const Code & { return t.image[*t.lookup(mask)]; };
        auto in_m = [&](int x0, int x1) { return m.contains(VertexIndex(x0 * 16 + x1)); };

        std::vector<VertexIndex> result;
        for (int outer = 0; outer < 16; ++outer) {
            // Fiber over the coordinate consumed second, for this value of the first pair.
            std::uint16_t s = 0;
            for (int x = 0; x < 16; ++x) {
                std::uint16_t inner = 0;
                for (int y = 0; y < 16; ++y)
                    if (second_first ? in_m(x, y) : in_m(y, x))
                        inner |= std::uint16_t(1u << y);
                if (xi_of(inner).contains(VertexIndex(outer)))
                    s |= std::uint16_t(1u << x);
            }
            for (auto z : xi_of(s).members())
                result.push_back(second_first ? z * 16 + VertexIndex(outer) : VertexIndex(outer) * 16 + z);
        }
        std::sort(result.begin(), result.end());
        return result;
    }
}

TEST_CASE("order of coordinates in iterated kappa")
{
    auto codes = enumerate_mds(DoobParams{2, 0}).codes;
    std::size_t witnesses = 0;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        auto last_first = apply_kappa_iterated(codes[i], xi(), std::vector{1, 0});
        auto first_first = apply_kappa_iterated(codes[i], xi(), std::vector{0, 1});
        if (i % 13 == 0) {
            CHECK(last_first.members() == kappa_squared_by_formula(codes[i], xi(), true));
            CHECK(first_first.members() == kappa_squared_by_formula(codes[i], xi(), false));
        }
        witnesses += last_first != first_first;
    }
    // Both orders always agree on D(2,0) with the canonical xi (exhaustive).
    CHECK(witnesses == 0);
}

TEST_CASE("kappa input validation")
{
    Code not_mds{DoobParams{1, 0}, {0, 2}};
    CHECK_THROWS_AS(apply_kappa(not_mds, xi()), InvalidArgument);
    CHECK_THROWS_AS(apply_kappa(Code{DoobParams{0, 2}, {0, 5, 10, 15}}, xi()), InvalidArgument);

    auto codes = enumerate_mds(DoobParams{2, 0}).codes;
    CHECK_THROWS_AS(apply_kappa_iterated(codes[0], xi(), std::vector{0, 0}), InvalidArgument);
    CHECK_THROWS_AS(apply_kappa_iterated(codes[0], xi(), std::vector{0}), InvalidArgument);

    auto partial = xi();
    partial.domain.resize(1);
    partial.image.resize(1);
    std::optional<Code> miss;
    for (auto & c : enumerate_mds(DoobParams{1, 0}).codes)
        if (c != partial.domain[0])
            miss = c;
    CHECK_THROWS_AS(apply_kappa(*miss, partial), ConsistencyError);
}

TEST_CASE("coordinate permutation")
{
    DoobParams p{0, 2};
    Code c{p, {encode_vertex(DoobVertex{{}, {K4Vertex{1}, K4Vertex{2}}}, p)}};
    auto swapped = permute_k4_coordinates(c, std::vector{1, 0});
    CHECK(swapped.members() == std::vector<VertexIndex>{encode_vertex(DoobVertex{{}, {K4Vertex{2}, K4Vertex{1}}}, p)});
    CHECK_THROWS_AS(permute_k4_coordinates(c, std::vector{0, 0}), InvalidArgument);
}
