#pragma once

// Brute-force reference computations. None of this calls into the library
// search code: vertices are decoded and adjacency is decided directly from
// coordinates, so agreement with the library is an independent check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <vector>

namespace oracle {

struct Point {
    std::vector<int> sh; // index 4a+b
    std::vector<int> k;
};

inline auto decode(std::uint32_t i, int m, int n) -> Point
{
    Point p{std::vector<int>(m), std::vector<int>(n)};
    for (int j = n - 1; j >= 0; --j, i /= 4)
        p.k[j] = int(i % 4);
    for (int j = m - 1; j >= 0; --j, i /= 16)
        p.sh[j] = int(i % 16);
    return p;
}

inline auto sh_adjacent(int x, int y) -> bool
{
    int da = ((x / 4) - (y / 4) + 4) % 4, db = ((x % 4) - (y % 4) + 4) % 4;
    return (da == 1 && db == 0) || (da == 3 && db == 0) || (da == 0 && db == 1) || (da == 0 && db == 3)
        || (da == 1 && db == 1) || (da == 3 && db == 3);
}

/// Adjacent in D(m,n): differ in exactly one coordinate, adjacently there.
inline auto adjacent(const Point & p, const Point & q) -> bool
{
    int differing = 0;
    bool ok = true;
    for (std::size_t j = 0; j < p.sh.size(); ++j)
        if (p.sh[j] != q.sh[j]) {
            ++differing;
            ok = ok && sh_adjacent(p.sh[j], q.sh[j]);
        }
    for (std::size_t j = 0; j < p.k.size(); ++j)
        if (p.k[j] != q.k[j])
            ++differing;
    return differing == 1 && ok;
}

inline auto adjacency_matrix(int m, int n) -> std::vector<std::vector<bool>>
{
    std::size_t size = std::size_t(1) << (2 * (2 * m + n));
    std::vector<Point> points;
    for (std::uint32_t i = 0; i < size; ++i)
        points.push_back(decode(i, m, n));
    std::vector<std::vector<bool>> adj(size, std::vector<bool>(size, false));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            adj[i][j] = adjacent(points[i], points[j]);
    return adj;
}

/// Every independent set of exactly `target` vertices, by include/exclude
/// backtracking pruned on the number of still-admissible vertices.
inline auto independent_sets(const std::vector<std::vector<bool>> & adj, std::size_t target)
    -> std::vector<std::vector<std::uint32_t>>
{
    std::size_t size = adj.size();
    std::vector<std::vector<std::uint32_t>> result;
    std::vector<std::uint32_t> chosen;
    std::vector<int> blocked(size, 0);

    auto admissible_from = [&](std::size_t i) {
        std::size_t c = 0;
        for (std::size_t j = i; j < size; ++j)
            c += blocked[j] == 0;
        return c;
    };

    auto go = [&](auto & self, std::size_t i) -> void {
        if (chosen.size() == target) {
            result.push_back(chosen);
            return;
        }
        if (i == size || chosen.size() + admissible_from(i) < target)
            return;
        if (blocked[i] == 0) {
            chosen.push_back(std::uint32_t(i));
            for (std::size_t j = 0; j < size; ++j)
                if (adj[i][j])
                    ++blocked[j];
            self(self, i + 1);
            for (std::size_t j = 0; j < size; ++j)
                if (adj[i][j])
                    --blocked[j];
            chosen.pop_back();
        }
        self(self, i + 1);
    };
    go(go, 0);
    std::sort(result.begin(), result.end());
    return result;
}

/// Latin squares of order 4, by filling cells row by row.
inline auto latin_squares_of_order_4() -> std::uint64_t
{
    std::array<std::array<int, 4>, 4> grid{};
    std::uint64_t count = 0;
    auto go = [&](auto & self, int cell) -> void {
        if (cell == 16) {
            ++count;
            return;
        }
        int r = cell / 4, c = cell % 4;
        for (int s = 0; s < 4; ++s) {
            bool clash = false;
            for (int i = 0; i < c; ++i)
                clash = clash || grid[r][i] == s;
            for (int i = 0; i < r; ++i)
                clash = clash || grid[i][c] == s;
            if (clash)
                continue;
            grid[r][c] = s;
            self(self, cell + 1);
        }
    };
    go(go, 0);
    return count;
}

/// Codes of D(m,n+1) assembled from slices: one MDS code of D(m,n) per value
/// t of the new last K4 coordinate, the four pairwise disjoint. `smaller`
/// holds member index lists; the result holds sorted member index lists.
inline auto compose_slices(const std::vector<std::vector<std::uint32_t>> & smaller)
    -> std::vector<std::vector<std::uint32_t>>
{
    std::vector<std::vector<bool>> disjoint(smaller.size(), std::vector<bool>(smaller.size()));
    for (std::size_t i = 0; i < smaller.size(); ++i)
        for (std::size_t j = 0; j < smaller.size(); ++j) {
            std::vector<std::uint32_t> common;
            std::set_intersection(smaller[i].begin(), smaller[i].end(), smaller[j].begin(), smaller[j].end(),
                    std::back_inserter(common));
            disjoint[i][j] = common.empty();
        }
    std::vector<std::vector<std::uint32_t>> result;
    std::array<std::size_t, 4> pick{};
    auto go = [&](auto & self, int t) -> void {
        if (t == 4) {
            std::vector<std::uint32_t> members;
            for (std::uint32_t s = 0; s < 4; ++s)
                for (auto v : smaller[pick[s]])
                    members.push_back(v * 4 + s);
            std::sort(members.begin(), members.end());
            result.push_back(members);
            return;
        }
        for (std::size_t i = 0; i < smaller.size(); ++i) {
            bool ok = true;
            for (int s = 0; s < t && ok; ++s)
                ok = disjoint[pick[s]][i];
            if (! ok)
                continue;
            pick[t] = i;
            self(self, t + 1);
        }
    };
    go(go, 0);
    std::sort(result.begin(), result.end());
    return result;
}

/// Members of the parity code for a lambda given as a table over the
/// mixed-radix points, by direct scan of the definition.
inline auto parity_code(int m, int n, const std::vector<bool> & table) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> members;
    std::uint32_t size = std::uint32_t(1) << (2 * (2 * m + n));
    for (std::uint32_t i = 0; i < size; ++i) {
        auto p = decode(i, m, n);
        int s1 = 0, s2 = 0;
        std::size_t point = 0;
        for (int x : p.sh) {
            s1 += x / 4;
            s2 += x % 4;
            point = point * 4 + std::size_t(x / 4);
        }
        for (int x : p.k) {
            s1 += x / 2;
            s2 += x % 2;
            point = point * 2 + std::size_t(x / 2);
        }
        if (s1 % 2 == 0 && s2 % 2 == int(table[point]))
            members.push_back(i);
    }
    return members;
}

}
