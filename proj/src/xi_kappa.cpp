#include <doob/enumeration.hpp>
#include <doob/errors.hpp>
#include <doob/xi_kappa.hpp>

#include <algorithm>
#include <numeric>

namespace doob {

namespace {
    auto sh_mask(const Code & code) -> std::uint16_t
    {
        std::uint16_t result = 0;
        for (auto v : code.members())
            result |= std::uint16_t(1u << v);
        return result;
    }

    struct XiSearch {
        const BoolMatrix & from;
        const BoolMatrix & to;
        std::vector<std::size_t> assignment;
        std::vector<bool> used;

        auto extend(std::size_t i) -> bool
        {
            if (i == from.size())
                return true;
            for (std::size_t t = 0; t < to.size(); ++t) {
                if (used[t])
                    continue;
                bool ok = from[i][i] == to[t][t];
                for (std::size_t j = 0; ok && j < i; ++j)
                    ok = from[i][j] == to[t][assignment[j]];
                if (! ok)
                    continue;
                used[t] = true;
                assignment.push_back(t);
                if (extend(i + 1))
                    return true;
                assignment.pop_back();
                used[t] = false;
            }
            return false;
        }
    };
}

auto XiTable::lookup(std::uint16_t mask) const -> std::optional<std::size_t>
{
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (sh_mask(domain[i]) == mask)
            return i;
    return std::nullopt;
}

auto derive_xi(std::span<const Code> sh_codes, std::span<const Code> k4_square_codes) -> XiTable
{
    for (auto & c : sh_codes)
        if (c.params() != DoobParams{1, 0})
            throw ParameterMismatch("xi domain must consist of codes in D(1,0)");
    for (auto & c : k4_square_codes)
        if (c.params() != DoobParams{0, 2})
            throw ParameterMismatch("xi codomain must consist of codes in D(0,2)");

    auto from = intersection_pattern(sh_codes);
    auto to = intersection_pattern(k4_square_codes);
    XiSearch search{from, to, {}, std::vector<bool>(k4_square_codes.size(), false)};
    if (! search.extend(0))
        throw ConsistencyError("no intersection-preserving injection from the Sh codes into the K4^2 codes exists");

    XiTable result;
    result.domain.assign(sh_codes.begin(), sh_codes.end());
    for (auto t : search.assignment)
        result.image.push_back(k4_square_codes[t]);
    return result;
}

auto derive_xi() -> XiTable
{
    auto sh = enumerate_mds(DoobParams{1, 0});
    auto k4 = enumerate_mds(DoobParams{0, 2});
    return derive_xi(sh.codes, k4.codes);
}

auto check_lemma1_property(const XiTable & xi) -> Lemma1Report
{
    Lemma1Report report;
    for (std::size_t i = 0; i < xi.domain.size(); ++i)
        for (std::size_t j = i; j < xi.domain.size(); ++j) {
            ++report.entries_checked;
            if (intersects(xi.domain[i], xi.domain[j]) != intersects(xi.image[i], xi.image[j]))
                report.violations.emplace_back(i, j);
        }
    report.pass = report.violations.empty();
    return report;
}

auto apply_kappa_at(const Code & code, const XiTable & xi, int sh_position) -> Code
{
    auto & in = code.params();
    if (in.m < 1 || sh_position < 0 || sh_position >= in.m)
        throw InvalidArgument("kappa needs a Sh coordinate at position " + std::to_string(sh_position)
                + " in " + to_string(in));
    if (auto cert = verify_mds(code, build_doob(in)); ! cert.is_mds)
        throw InvalidArgument("kappa is only defined on MDS codes");

    DoobParams out{in.m - 1, in.n + 2};
    std::vector<VertexIndex> members;
    members.reserve(code.size());

    auto fixed_count = in.m - 1 + in.n > 0 ? DoobParams{in.m - 1, in.n}.vertex_count() : 1;
    for (std::size_t f = 0; f < fixed_count; ++f) {
        DoobVertex fixed;
        if (in.m - 1 + in.n > 0)
            fixed = decode_vertex(VertexIndex(f), DoobParams{in.m - 1, in.n});

        auto which = xi.lookup(fiber_mask(code, sh_position, fixed));
        if (! which)
            throw ConsistencyError("a fiber of an MDS code is not a Shrikhande MDS code");

        DoobVertex target;
        target.sh = fixed.sh;
        for (auto z : xi.image[*which].members()) {
            target.k = {K4Vertex{int(z / 4)}, K4Vertex{int(z % 4)}};
            target.k.insert(target.k.end(), fixed.k.begin(), fixed.k.end());
            members.push_back(encode_vertex(target, out));
        }
    }
    return Code{out, std::move(members)};
}

auto apply_kappa(const Code & code, const XiTable & xi) -> Code
{
    return apply_kappa_at(code, xi, code.params().m - 1);
}

auto permute_k4_coordinates(const Code & code, std::span<const int> target) -> Code
{
    auto & p = code.params();
    if (p.m != 0 || target.size() != std::size_t(p.n))
        throw InvalidArgument("coordinate permutation needs a code in D(0,n) and n targets");
    std::vector<int> check(target.begin(), target.end());
    std::sort(check.begin(), check.end());
    for (int i = 0; i < p.n; ++i)
        if (check[i] != i)
            throw InvalidArgument("coordinate targets are not a permutation");

    std::vector<VertexIndex> members;
    members.reserve(code.size());
    for (auto v : code.members()) {
        auto from = decode_vertex(v, p);
        DoobVertex to = from;
        for (int i = 0; i < p.n; ++i)
            to.k[target[i]] = from.k[i];
        members.push_back(encode_vertex(to, p));
    }
    return Code{p, std::move(members)};
}

auto apply_kappa_iterated(const Code & code, const XiTable & xi, std::optional<std::vector<int>> order) -> Code
{
    auto m = code.params().m, n = code.params().n;
    if (! order) {
        order.emplace(m);
        std::iota(order->rbegin(), order->rend(), 0);
    }
    auto sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < int(sorted.size()); ++i)
        if (sorted.size() != std::size_t(m) || sorted[i] != i)
            throw InvalidArgument("kappa order must be a permutation of the " + std::to_string(m) + " Sh coordinates");

    if (m == 0) {
        if (! verify_mds(code, build_doob(code.params())).is_mds)
            throw InvalidArgument("kappa is only defined on MDS codes");
        return code;
    }

    std::vector<int> remaining(m);
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<int> k_labels(n);
    std::iota(k_labels.begin(), k_labels.end(), 2 * m);

    Code current = code;
    for (auto c : *order) {
        auto position = int(std::find(remaining.begin(), remaining.end(), c) - remaining.begin());
        current = apply_kappa_at(current, xi, position);
        remaining.erase(remaining.begin() + position);
        k_labels.insert(k_labels.begin(), {2 * c, 2 * c + 1});
    }
    return permute_k4_coordinates(current, k_labels);
}

}
