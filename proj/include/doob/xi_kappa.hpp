#pragma once

#include <doob/code.hpp>

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace doob {

/// A bijection from the 16 MDS codes of the Shrikhande graph onto 16 MDS
/// codes of K4 x K4 under which two codes meet iff their images meet.
struct XiTable {
    std::vector<Code> domain;
    std::vector<Code> image;

    /// Index into domain of the Sh code with the given member mask.
    auto lookup(std::uint16_t sh_mask) const -> std::optional<std::size_t>;
};

/// Lexicographically least intersection-preserving injection from the
/// given Sh codes into the given K4^2 codes (both lists taken in order).
/// Throws ConsistencyError when none exists.
auto derive_xi(std::span<const Code> sh_codes, std::span<const Code> k4_square_codes) -> XiTable;

/// derive_xi over the enumerated MDS(1,0) and MDS(0,2).
auto derive_xi() -> XiTable;

struct Lemma1Report {
    bool pass = true;
    std::size_t entries_checked = 0;
    /// Pairs (i, j), i <= j, where domain and image disagree on meeting.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
};

auto check_lemma1_property(const XiTable & xi) -> Lemma1Report;

/// kappa consuming the Sh coordinate at `sh_position` of a code in D(m+1,n).
/// The result lives in D(m,n+2) with coordinates
/// (remaining Sh..., z1, z2, K4...), where (z1,z2) runs over the xi-image of
/// each Sh fiber. Throws InvalidArgument if the input is not MDS and
/// ConsistencyError if some fiber is not an Sh MDS code.
auto apply_kappa_at(const Code & code, const XiTable & xi, int sh_position) -> Code;

/// kappa on the last Sh coordinate.
auto apply_kappa(const Code & code, const XiTable & xi) -> Code;

/// m applications of kappa, taking the original Sh coordinates in the given
/// order (default: last first). The K4 coordinates of the result are
/// arranged so that the pair coming from original Sh coordinate i sits at
/// positions 2i, 2i+1, followed by the original K4 coordinates; with the
/// default order this is exactly repeated apply_kappa.
auto apply_kappa_iterated(const Code & code, const XiTable & xi,
        std::optional<std::vector<int>> order = std::nullopt) -> Code;

/// Reorders the coordinates of a code in D(0,n): coordinate i moves to
/// position target[i].
auto permute_k4_coordinates(const Code & code, std::span<const int> target) -> Code;

}
