#include <doob/errors.hpp>
#include <doob/io.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace doob {

using nlohmann::json;

namespace {
    auto params_from(const json & j) -> DoobParams
    {
        if (! j.is_object() || ! j.contains("m") || ! j.contains("n"))
            throw ParseError("expected an object with \"m\" and \"n\"");
        return DoobParams{j.at("m").get<int>(), j.at("n").get<int>()};
    }

    template <typename F>
    auto parsing(F && f)
    {
        try {
            return f();
        }
        catch (const json::exception & e) {
            throw ParseError(e.what());
        }
        catch (const InvalidArgument & e) {
            throw ParseError(e.what());
        }
    }
}

auto vertex_to_json(const DoobVertex & vertex) -> json
{
    auto entry = json::array();
    for (auto & s : vertex.sh)
        entry.push_back(json::array({s.a, s.b}));
    for (auto & k : vertex.k)
        entry.push_back(k.v);
    return entry;
}

auto code_to_json(const Code & code) -> json
{
    auto members = json::array();
    for (auto v : code.members())
        members.push_back(vertex_to_json(decode_vertex(v, code.params())));
    return json{{"m", code.params().m}, {"n", code.params().n}, {"members", std::move(members)}};
}

auto code_from_json(const json & j) -> Code
{
    return parsing([&] {
        auto params = params_from(j);
        std::vector<DoobVertex> vertices;
        for (auto & entry : j.at("members")) {
            if (! entry.is_array() || entry.size() != std::size_t(params.m + params.n))
                throw ParseError("member has the wrong number of coordinates for " + to_string(params));
            DoobVertex v;
            for (int i = 0; i < params.m; ++i) {
                auto & pair = entry[i];
                if (! pair.is_array() || pair.size() != 2)
                    throw ParseError("Sh coordinate must be a pair [a,b]");
                v.sh.push_back(ShVertex{pair[0].get<int>(), pair[1].get<int>()});
            }
            for (int i = 0; i < params.n; ++i)
                v.k.push_back(K4Vertex{entry[params.m + i].get<int>()});
            vertices.push_back(std::move(v));
        }
        return Code::from_vertices(params, vertices);
    });
}

auto lambda_to_json(const LambdaFunction & lambda) -> json
{
    return json{{"m", lambda.params().m}, {"n", lambda.params().n}, {"bits", lambda.bits()}};
}

auto lambda_from_json(const json & j) -> LambdaFunction
{
    return parsing([&] { return LambdaFunction::from_bits(params_from(j), j.at("bits").get<std::string>()); });
}

auto xi_to_json(const XiTable & xi) -> json
{
    auto result = json::array();
    for (std::size_t i = 0; i < xi.domain.size(); ++i)
        result.push_back(json{{"sh_code", code_to_json(xi.domain[i])}, {"image_code", code_to_json(xi.image[i])}});
    return result;
}

auto xi_from_json(const json & j) -> XiTable
{
    return parsing([&] {
        XiTable xi;
        for (auto & entry : j) {
            xi.domain.push_back(code_from_json(entry.at("sh_code")));
            xi.image.push_back(code_from_json(entry.at("image_code")));
        }
        return xi;
    });
}

auto orbit_report_json(std::span<const Code> codes, const OrbitPartition & orbits) -> json
{
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (auto & c : orbits.classes)
        order.emplace_back(c.size(), c.front());
    std::sort(order.begin(), order.end());

    auto sizes = json::array(), representatives = json::array();
    for (auto & [size, rep] : order) {
        sizes.push_back(size);
        representatives.push_back(code_to_json(codes[rep]));
    }
    return json{{"sizes", std::move(sizes)}, {"representatives", std::move(representatives)}};
}

auto to_file_text(const json & j) -> std::string
{
    return j.dump() + "\n";
}

void write_json_file(const std::filesystem::path & path, const json & j)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw Error("cannot write " + path.string());
    out << to_file_text(j);
    if (! out)
        throw Error("failed writing " + path.string());
}

auto read_json_file(const std::filesystem::path & path) -> json
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError(path.string() + ": cannot open");
    try {
        return json::parse(in);
    }
    catch (const json::exception & e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

auto read_code_file(const std::filesystem::path & path) -> Code
{
    auto j = read_json_file(path);
    try {
        return code_from_json(j);
    }
    catch (const ParseError & e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_code_file(const std::filesystem::path & path, const Code & code)
{
    write_json_file(path, code_to_json(code));
}

auto read_lambda_file(const std::filesystem::path & path) -> LambdaFunction
{
    auto j = read_json_file(path);
    try {
        return lambda_from_json(j);
    }
    catch (const ParseError & e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

auto literature_count(const DoobParams & params) -> std::optional<std::uint64_t>
{
    if (params == DoobParams{0, 1})
        return 4;
    if (params == DoobParams{0, 2})
        return 24;
    if (params == DoobParams{1, 0})
        return 16;
    return std::nullopt;
}

auto manifest_to_json(const RunManifest & manifest) -> json
{
    auto derived = json::object();
    for (auto & [name, value] : manifest.derived_counts)
        derived[name] = value.str();
    return json{{"command", manifest.command},
        {"params", json::array({manifest.params.m, manifest.params.n})},
        {"count", manifest.count},
        {"count_source", literature_count(manifest.params) ? "literature" : "derived"},
        {"derived_counts", std::move(derived)},
        {"tool_version", manifest.tool_version}};
}

auto manifest_from_json(const json & j) -> RunManifest
{
    return parsing([&] {
        RunManifest m;
        m.command = j.value("command", "");
        auto & p = j.at("params");
        m.params = DoobParams{p.at(0).get<int>(), p.at(1).get<int>()};
        m.count = j.at("count").get<std::uint64_t>();
        m.tool_version = j.at("tool_version").get<std::string>();
        if (j.contains("derived_counts"))
            for (auto & [name, value] : j.at("derived_counts").items())
                m.derived_counts[name] = BigInt{value.get<std::string>()};
        return m;
    });
}

auto code_file_names(std::size_t count) -> std::vector<std::string>
{
    std::size_t width = 5;
    for (auto c = count; c >= 100000; c /= 10)
        ++width;
    std::vector<std::string> result;
    for (std::size_t i = 0; i < count; ++i) {
        auto digits = std::to_string(i);
        result.push_back("code_" + std::string(width - digits.size(), '0') + digits + ".code");
    }
    return result;
}

void write_code_directory(const std::filesystem::path & dir, std::span<const Code> codes, const RunManifest & manifest)
{
    std::filesystem::create_directories(dir);
    for (auto & entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".code")
            std::filesystem::remove(entry.path());

    auto names = code_file_names(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i)
        write_code_file(dir / names[i], codes[i]);
    write_json_file(dir / "manifest.json", manifest_to_json(manifest));
}

auto read_code_directory(const std::filesystem::path & dir) -> std::vector<Code>
{
    if (! std::filesystem::is_directory(dir))
        throw ParseError(dir.string() + ": not a directory");
    std::vector<std::filesystem::path> files;
    for (auto & entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".code")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<Code> result;
    for (auto & f : files)
        result.push_back(read_code_file(f));
    return result;
}

auto cache_directory(const std::filesystem::path & root, const DoobParams & params) -> std::filesystem::path
{
    return root / ("d" + std::to_string(params.m) + "_" + std::to_string(params.n));
}

auto load_cached_enumeration(const std::filesystem::path & dir, const DoobParams & params, bool materialize)
    -> std::optional<EnumerationResult>
{
    if (! std::filesystem::exists(dir / "manifest.json"))
        return std::nullopt;

    RunManifest manifest;
    try {
        manifest = manifest_from_json(read_json_file(dir / "manifest.json"));
    }
    catch (const Error &) {
        return std::nullopt;
    }
    if (manifest.params != params || manifest.tool_version != tool_version)
        return std::nullopt;

    EnumerationResult result;
    result.params = params;
    result.count = manifest.count;
    if (materialize) {
        result.codes = read_code_directory(dir);
        if (result.codes.size() != manifest.count)
            return std::nullopt;
    }
    return result;
}

}
