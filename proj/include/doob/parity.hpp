#pragma once

#include <doob/code.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace doob {

using BigInt = boost::multiprecision::cpp_int;

/// A {0,1}-valued function on {0,1,2,3}^m x {0,1}^n. Points are indexed in
/// mixed radix (base 4 for the Sh positions, base 2 for the K4 positions),
/// most significant coordinate first.
class LambdaFunction {
public:
    /// Throws InvalidArgument unless `table` has exactly point_count(params) entries.
    LambdaFunction(DoobParams params, std::vector<bool> table);

    static auto zero(DoobParams params) -> LambdaFunction;
    /// Table whose bit i is bit i of `pattern` (for small tables).
    static auto from_integer(DoobParams params, std::uint64_t pattern) -> LambdaFunction;
    /// "0110..." in point-index order.
    static auto from_bits(DoobParams params, std::string_view bits) -> LambdaFunction;
    /// Hex form of the bit string: each digit holds four consecutive bits,
    /// first bit in the most significant position; padding bits must be 0.
    static auto from_hex(DoobParams params, std::string_view hex) -> LambdaFunction;

    static auto point_count(const DoobParams & params) -> std::size_t;
    /// Index of the point (x'_1, ..., x'_{m+n}).
    static auto point_index(const DoobParams & params, const std::vector<int> & point) -> std::size_t;
    /// Whether the coordinate sum of the point with this index is even.
    static auto even_point(const DoobParams & params, std::size_t index) -> bool;

    auto params() const -> const DoobParams & { return _params; }
    auto table() const -> const std::vector<bool> & { return _table; }
    auto operator()(std::size_t index) const -> bool { return _table[index]; }
    auto bits() const -> std::string;

private:
    DoobParams _params;
    std::vector<bool> _table;
};

/// The parity code: x'x'' in D(m,n) with sum x' even and sum x'' = lambda(x') mod 2,
/// where a Sh coordinate (a,b) reads as x'=a, x''=b and a K4 coordinate v as
/// x'=v div 2, x''=v mod 2.
auto build_m_lambda(const LambdaFunction & lambda) -> Code;

/// Agreement on every point of even coordinate sum.
auto essentially_equal(const LambdaFunction & l1, const LambdaFunction & l2) -> bool;

struct EssentialClassCount {
    /// log2 log2 of the count, 2m+n-1.
    int log2_log2 = 0;
    /// 2^(2^(2m+n-1)) when 2m+n <= 6.
    std::optional<BigInt> exact;
};

auto count_essential_classes(const DoobParams & params) -> EssentialClassCount;

struct BoundsReport {
    DoobParams params;
    int lower_log2_log2 = 0;
    std::optional<BigInt> lower_exact;
    /// |MDS(0,2m+n)|, which bounds |MDS(m,n)| through the injection kappa^m.
    std::optional<std::uint64_t> upper_exact;
    /// |MDS(m,n)| itself when small enough to count.
    std::optional<std::uint64_t> actual;

    auto text() const -> std::string;
};

/// Exact figures are attached for 2m+n <= 4.
auto bounds_report(const DoobParams & params) -> BoundsReport;

}
