#include <doob/enumeration.hpp>
#include <doob/errors.hpp>
#include <doob/parity.hpp>

#include <sstream>

namespace doob {

LambdaFunction::LambdaFunction(DoobParams params, std::vector<bool> table) :
    _params(params),
    _table(std::move(table))
{
    if (_table.size() != point_count(_params))
        throw InvalidArgument("lambda table for " + to_string(_params) + " needs " + std::to_string(point_count(_params))
                + " entries, got " + std::to_string(_table.size()));
}

auto LambdaFunction::zero(DoobParams params) -> LambdaFunction
{
    return LambdaFunction{params, std::vector<bool>(point_count(params), false)};
}

auto LambdaFunction::from_integer(DoobParams params, std::uint64_t pattern) -> LambdaFunction
{
    auto size = point_count(params);
    if (size > 64)
        throw InvalidArgument("lambda table too large for an integer pattern");
    std::vector<bool> table(size);
    for (std::size_t i = 0; i < size; ++i)
        table[i] = (pattern >> i) & 1;
    return LambdaFunction{params, std::move(table)};
}

auto LambdaFunction::from_bits(DoobParams params, std::string_view bits) -> LambdaFunction
{
    std::vector<bool> table;
    for (auto c : bits) {
        if (c != '0' && c != '1')
            throw InvalidArgument("lambda bit string may only contain 0 and 1");
        table.push_back(c == '1');
    }
    return LambdaFunction{params, std::move(table)};
}

auto LambdaFunction::from_hex(DoobParams params, std::string_view hex) -> LambdaFunction
{
    if (hex.starts_with("0x") || hex.starts_with("0X"))
        hex.remove_prefix(2);
    auto size = point_count(params);
    if (hex.size() != (size + 3) / 4)
        throw InvalidArgument("lambda hex for " + to_string(params) + " needs " + std::to_string((size + 3) / 4)
                + " digits");

    std::vector<bool> table;
    for (auto c : hex) {
        int digit;
        if (c >= '0' && c <= '9')
            digit = c - '0';
        else if (c >= 'a' && c <= 'f')
            digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            digit = c - 'A' + 10;
        else
            throw InvalidArgument(std::string("bad hex digit '") + c + "'");
        for (int b = 3; b >= 0; --b)
            table.push_back((digit >> b) & 1);
    }
    for (std::size_t i = size; i < table.size(); ++i)
        if (table[i])
            throw InvalidArgument("lambda hex has nonzero padding bits");
    table.resize(size);
    return LambdaFunction{params, std::move(table)};
}

auto LambdaFunction::point_count(const DoobParams & params) -> std::size_t
{
    return std::size_t{1} << (2 * params.m + params.n);
}

auto LambdaFunction::point_index(const DoobParams & params, const std::vector<int> & point) -> std::size_t
{
    if (point.size() != std::size_t(params.m + params.n))
        throw InvalidArgument("lambda point has the wrong number of coordinates");
    std::size_t result = 0;
    for (int i = 0; i < params.m + params.n; ++i) {
        int radix = i < params.m ? 4 : 2;
        if (point[i] < 0 || point[i] >= radix)
            throw InvalidArgument("lambda point coordinate out of range");
        result = result * radix + std::size_t(point[i]);
    }
    return result;
}

auto LambdaFunction::even_point(const DoobParams & params, std::size_t index) -> bool
{
    // Only the parity of each digit matters: base 4 and base 2 digits both
    // have their parity in the lowest bit.
    int sum = 0;
    for (int i = params.m + params.n - 1; i >= 0; --i) {
        int radix = i < params.m ? 4 : 2;
        sum += int(index % radix);
        index /= radix;
    }
    return sum % 2 == 0;
}

auto LambdaFunction::bits() const -> std::string
{
    std::string result;
    for (bool b : _table)
        result.push_back(b ? '1' : '0');
    return result;
}

auto build_m_lambda(const LambdaFunction & lambda) -> Code
{
    auto & p = lambda.params();
    std::vector<VertexIndex> members;
    std::vector<int> point(p.m + p.n);
    for (VertexIndex i = 0; i < p.vertex_count(); ++i) {
        auto v = decode_vertex(i, p);
        int prime_sum = 0, second_sum = 0;
        for (int j = 0; j < p.m; ++j) {
            point[j] = v.sh[j].a;
            prime_sum += v.sh[j].a;
            second_sum += v.sh[j].b;
        }
        for (int j = 0; j < p.n; ++j) {
            point[p.m + j] = v.k[j].high();
            prime_sum += v.k[j].high();
            second_sum += v.k[j].low();
        }
        if (prime_sum % 2 == 0 && second_sum % 2 == int(lambda(LambdaFunction::point_index(p, point))))
            members.push_back(i);
    }
    return Code{p, std::move(members)};
}

auto essentially_equal(const LambdaFunction & l1, const LambdaFunction & l2) -> bool
{
    if (l1.params() != l2.params())
        throw ParameterMismatch("comparing lambda functions over different parameters");
    for (std::size_t i = 0; i < l1.table().size(); ++i)
        if (LambdaFunction::even_point(l1.params(), i) && l1(i) != l2(i))
            return false;
    return true;
}

auto count_essential_classes(const DoobParams & params) -> EssentialClassCount
{
    EssentialClassCount result;
    result.log2_log2 = params.diameter() - 1;
    if (params.diameter() <= 6)
        result.exact = BigInt{1} << (std::size_t{1} << result.log2_log2);
    return result;
}

auto bounds_report(const DoobParams & params) -> BoundsReport
{
    BoundsReport report;
    report.params = params;
    auto classes = count_essential_classes(params);
    report.lower_log2_log2 = classes.log2_log2;
    report.lower_exact = classes.exact;
    if (params.diameter() <= 4) {
        report.upper_exact = count_mds(DoobParams{0, params.diameter()});
        report.actual = count_mds(params);
    }
    return report;
}

auto BoundsReport::text() const -> std::string
{
    std::ostringstream s;
    auto hamming = "|MDS(0," + std::to_string(params.diameter()) + ")|";
    s << "lower ";
    if (lower_exact)
        s << *lower_exact;
    else
        s << "2^2^" << lower_log2_log2;
    s << ", upper ";
    if (upper_exact)
        s << *upper_exact << " (=" << hamming << ")";
    else
        s << hamming;
    if (actual)
        s << ", actual " << *actual;
    return s.str();
}

}
