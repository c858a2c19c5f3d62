#include <doob/errors.hpp>
#include <doob/symmetry.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace doob {

auto VertexPermutation::identity(std::size_t size) -> VertexPermutation
{
    VertexPermutation result;
    result.image.resize(size);
    std::iota(result.image.begin(), result.image.end(), 0);
    return result;
}

auto VertexPermutation::is_bijection() const -> bool
{
    std::vector<bool> seen(image.size(), false);
    for (auto v : image) {
        if (v >= image.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

auto VertexPermutation::inverse() const -> VertexPermutation
{
    VertexPermutation result;
    result.image.resize(image.size());
    for (VertexIndex v = 0; v < image.size(); ++v)
        result.image[image[v]] = v;
    return result;
}

auto VertexPermutation::is_automorphism_of(const Graph & g) const -> bool
{
    if (image.size() != g.size() || ! is_bijection())
        return false;
    for (VertexIndex u = 0; u < g.size(); ++u)
        for (VertexIndex v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v) != g.adjacent(image[u], image[v]))
                return false;
    return true;
}

auto compose(const VertexPermutation & first, const VertexPermutation & second) -> VertexPermutation
{
    VertexPermutation result;
    result.image.resize(first.image.size());
    for (VertexIndex v = 0; v < first.image.size(); ++v)
        result.image[v] = second.image[first.image[v]];
    return result;
}

auto group_closure(std::span<const VertexPermutation> generators, std::size_t degree) -> std::vector<VertexPermutation>
{
    std::set<VertexPermutation> seen{VertexPermutation::identity(degree)};
    std::deque<VertexPermutation> queue{VertexPermutation::identity(degree)};
    while (! queue.empty()) {
        auto p = std::move(queue.front());
        queue.pop_front();
        for (auto & g : generators) {
            auto q = compose(p, g);
            if (seen.insert(q).second)
                queue.push_back(std::move(q));
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {
    using Partition = std::vector<std::vector<VertexIndex>>;
    using Trace = std::vector<std::size_t>;

    /// Splits cells by neighbour counts into splitter cells until stable.
    /// The trace records every split so that two runs can be compared.
    void refine(const Graph & g, Partition & p, Trace & trace)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < p.size() && ! changed; ++s) {
                VertexSet splitter(g.size());
                for (auto v : p[s])
                    splitter.set(v);

                for (std::size_t c = 0; c < p.size() && ! changed; ++c) {
                    if (p[c].size() == 1)
                        continue;
                    std::map<std::size_t, std::vector<VertexIndex>> by_count;
                    for (auto v : p[c])
                        by_count[(g.neighbours(v) & splitter).count()].push_back(v);
                    if (by_count.size() == 1)
                        continue;

                    trace.insert(trace.end(), {s, c, by_count.size()});
                    Partition replacement;
                    for (auto & [count, cell] : by_count) {
                        trace.insert(trace.end(), {count, cell.size()});
                        replacement.push_back(std::move(cell));
                    }
                    p.erase(p.begin() + c);
                    p.insert(p.begin() + c, replacement.begin(), replacement.end());
                    changed = true;
                }
            }
        }
    }

    auto initial_partition(const Graph & g, Trace & trace) -> Partition
    {
        std::map<std::size_t, std::vector<VertexIndex>> by_degree;
        for (VertexIndex v = 0; v < g.size(); ++v)
            by_degree[g.degree(v)].push_back(v);
        Partition result;
        for (auto & [d, cell] : by_degree) {
            trace.insert(trace.end(), {d, cell.size()});
            result.push_back(std::move(cell));
        }
        refine(g, result, trace);
        return result;
    }

    auto individualise(Partition p, std::size_t cell, VertexIndex v) -> Partition
    {
        auto & c = p[cell];
        c.erase(std::find(c.begin(), c.end(), v));
        p.insert(p.begin() + cell, std::vector<VertexIndex>{v});
        return p;
    }

    auto same_shape(const Partition & a, const Partition & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].size() != b[i].size())
                return false;
        return true;
    }

    /// Maps the left graph's partition onto the right graph's. Left choices
    /// are fixed, right choices range over the whole target cell, so every
    /// isomorphism is reached at exactly one leaf.
    template <typename Found>
    auto pair_search(const Graph & left, const Graph & right, const Partition & pl, const Partition & pr,
            Found & found) -> bool
    {
        auto cell = std::size_t(-1);
        for (std::size_t i = 0; i < pl.size(); ++i)
            if (pl[i].size() > 1 && (cell == std::size_t(-1) || pl[i].size() < pl[cell].size()))
                cell = i;

        if (cell == std::size_t(-1)) {
            VertexPermutation map;
            map.image.resize(left.size());
            for (std::size_t i = 0; i < pl.size(); ++i)
                map.image[pl[i][0]] = pr[i][0];
            for (VertexIndex u = 0; u < left.size(); ++u)
                for (VertexIndex v = u + 1; v < left.size(); ++v)
                    if (left.adjacent(u, v) != right.adjacent(map.image[u], map.image[v]))
                        return false;
            return found(std::move(map));
        }

        auto v = pl[cell][0];
        for (auto w : pr[cell]) {
            Trace tl, tr;
            auto ql = individualise(pl, cell, v);
            auto qr = individualise(pr, cell, w);
            refine(left, ql, tl);
            refine(right, qr, tr);
            if (tl != tr || ! same_shape(ql, qr))
                continue;
            if (pair_search(left, right, ql, qr, found))
                return true;
        }
        return false;
    }

    void check_search_guard(const Graph & g)
    {
        if (g.size() > 64)
            throw GuardExceeded("automorphism search is limited to graphs with at most 64 vertices");
    }
}

auto automorphism_group(const Graph & g) -> AutomorphismGroup
{
    check_search_guard(g);

    Trace trace;
    auto start = initial_partition(g, trace);
    std::vector<VertexPermutation> all;
    auto collect = [&](VertexPermutation p) {
        all.push_back(std::move(p));
        return false;
    };
    pair_search(g, g, start, start, collect);
    std::sort(all.begin(), all.end());

    AutomorphismGroup result;
    result.order = all.size();

    std::set<VertexPermutation> generated{VertexPermutation::identity(g.size())};
    for (auto & p : all) {
        if (generated.contains(p))
            continue;
        result.generators.push_back(p);
        auto closure = group_closure(result.generators, g.size());
        generated = std::set<VertexPermutation>(closure.begin(), closure.end());
    }
    if (generated.size() != all.size())
        throw ConsistencyError("automorphisms found do not form a group");

    if (all.size() <= max_listed_group_order)
        result.elements = std::move(all);
    return result;
}

auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<VertexPermutation>
{
    check_search_guard(g);
    check_search_guard(h);
    if (g.size() != h.size())
        return std::nullopt;

    Trace tg, th;
    auto pg = initial_partition(g, tg);
    auto ph = initial_partition(h, th);
    if (tg != th || ! same_shape(pg, ph))
        return std::nullopt;

    std::optional<VertexPermutation> result;
    auto keep = [&](VertexPermutation p) {
        result = std::move(p);
        return true;
    };
    pair_search(g, h, pg, ph, keep);
    return result;
}

auto product_automorphism_generators(const DoobParams & params) -> std::vector<VertexPermutation>
{
    auto total = params.vertex_count();
    auto sh_group = automorphism_group(build_shrikhande());
    auto k4_group = automorphism_group(build_complete(4));

    auto lift = [&](auto && transform) {
        VertexPermutation p;
        p.image.resize(total);
        for (VertexIndex i = 0; i < total; ++i) {
            auto v = decode_vertex(i, params);
            transform(v);
            p.image[i] = encode_vertex(v, params);
        }
        return p;
    };

    std::vector<VertexPermutation> result;
    for (int c = 0; c < params.m; ++c)
        for (auto & g : sh_group.generators)
            result.push_back(lift([&](DoobVertex & v) { v.sh[c] = ShVertex::from_index(int(g(v.sh[c].index()))); }));
    for (int c = 0; c < params.n; ++c)
        for (auto & g : k4_group.generators)
            result.push_back(lift([&](DoobVertex & v) { v.k[c] = K4Vertex{int(g(v.k[c].v))}; }));
    for (int c = 0; c + 1 < params.m; ++c)
        result.push_back(lift([&](DoobVertex & v) { std::swap(v.sh[c], v.sh[c + 1]); }));
    for (int c = 0; c + 1 < params.n; ++c)
        result.push_back(lift([&](DoobVertex & v) { std::swap(v.k[c], v.k[c + 1]); }));
    return result;
}

auto OrbitPartition::sorted_sizes() const -> std::vector<std::size_t>
{
    auto result = sizes;
    std::sort(result.begin(), result.end());
    return result;
}

auto orbits_of_codes(std::span<const Code> codes, std::span<const VertexPermutation> group) -> OrbitPartition
{
    std::map<std::vector<VertexIndex>, std::size_t> index_of;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (codes[i].params() != codes[0].params())
            throw ParameterMismatch("orbit computation over codes with different parameters");
        index_of.emplace(codes[i].members(), i);
    }

    std::vector<std::size_t> parent(codes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    for (auto & p : group) {
        for (std::size_t i = 0; i < codes.size(); ++i) {
            if (p.image.size() != codes[i].params().vertex_count())
                throw ParameterMismatch("permutation degree does not match the code parameters");
            std::vector<VertexIndex> moved;
            moved.reserve(codes[i].size());
            for (auto v : codes[i].members())
                moved.push_back(p(v));
            std::sort(moved.begin(), moved.end());
            auto it = index_of.find(moved);
            if (it == index_of.end())
                throw ConsistencyError("a group element maps code " + std::to_string(i) + " outside the list");
            auto a = find(i), b = find(it->second);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    }

    OrbitPartition result;
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        auto root = find(i);
        auto [it, fresh] = class_of_root.emplace(root, result.classes.size());
        if (fresh)
            result.classes.emplace_back();
        result.classes[it->second].push_back(i);
    }
    for (auto & c : result.classes)
        result.sizes.push_back(c.size());
    return result;
}

}
