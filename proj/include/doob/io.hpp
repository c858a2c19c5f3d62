#pragma once

#include <doob/code.hpp>
#include <doob/enumeration.hpp>
#include <doob/parity.hpp>
#include <doob/symmetry.hpp>
#include <doob/xi_kappa.hpp>

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace doob {

inline constexpr const char * tool_version = "1.0.0";

// All JSON is written with sorted keys, compact, one trailing newline.

/// {"m": .., "n": .., "members": [[[a,b], ..., k, ...], ...]}: each member
/// lists its m Sh pairs then its n K4 values; members in index order.
auto code_to_json(const Code & code) -> nlohmann::json;
auto vertex_to_json(const DoobVertex & v) -> nlohmann::json;
auto code_from_json(const nlohmann::json & j) -> Code;

/// {"m": .., "n": .., "bits": "0101..."}.
auto lambda_to_json(const LambdaFunction & lambda) -> nlohmann::json;
auto lambda_from_json(const nlohmann::json & j) -> LambdaFunction;

/// [{"image_code": .., "sh_code": ..}, ...] in domain order.
auto xi_to_json(const XiTable & xi) -> nlohmann::json;
auto xi_from_json(const nlohmann::json & j) -> XiTable;

/// {"representatives": [least code of each orbit], "sizes": [...]}, orbits
/// ordered by size, then by representative.
auto orbit_report_json(std::span<const Code> codes, const OrbitPartition & orbits) -> nlohmann::json;

auto to_file_text(const nlohmann::json & j) -> std::string;
void write_json_file(const std::filesystem::path & path, const nlohmann::json & j);
/// Throws ParseError naming the file.
auto read_json_file(const std::filesystem::path & path) -> nlohmann::json;

auto read_code_file(const std::filesystem::path & path) -> Code;
void write_code_file(const std::filesystem::path & path, const Code & code);
auto read_lambda_file(const std::filesystem::path & path) -> LambdaFunction;

/// Count stated in the literature for the small cases D(0,1), D(0,2), D(1,0).
auto literature_count(const DoobParams & params) -> std::optional<std::uint64_t>;

struct RunManifest {
    std::string command;
    DoobParams params;
    std::string tool_version = doob::tool_version;
    std::uint64_t count = 0;
    /// Every number produced here that is not a literature value.
    std::map<std::string, BigInt> derived_counts;
};

auto manifest_to_json(const RunManifest & manifest) -> nlohmann::json;
auto manifest_from_json(const nlohmann::json & j) -> RunManifest;

/// File names used inside a code directory, in code order.
auto code_file_names(std::size_t count) -> std::vector<std::string>;

/// Writes one file per code plus manifest.json.
void write_code_directory(const std::filesystem::path & dir, std::span<const Code> codes, const RunManifest & manifest);

/// All *.code files of a directory in file-name order.
auto read_code_directory(const std::filesystem::path & dir) -> std::vector<Code>;

/// Cache directory for D(m,n) under `root`: root/d{m}_{n}.
auto cache_directory(const std::filesystem::path & root, const DoobParams & params) -> std::filesystem::path;

/// A cached enumeration, if its manifest matches the parameters and this
/// tool version. Codes are loaded only when `materialize` is set.
auto load_cached_enumeration(const std::filesystem::path & dir, const DoobParams & params, bool materialize)
    -> std::optional<EnumerationResult>;

}
