#include "cli.hpp"

#include <doob/enumeration.hpp>
#include <doob/errors.hpp>
#include <doob/io.hpp>
#include <doob/parity.hpp>
#include <doob/symmetry.hpp>
#include <doob/xi_kappa.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace doob::cli {

namespace fs = std::filesystem;

namespace {
    auto cache_root() -> fs::path
    {
        if (auto env = std::getenv("DOOB_CACHE_DIR"); env && *env)
            return env;
        return "cache";
    }

    void check_all_mds(std::span<const Code> codes, const Graph & graph, std::string_view what)
    {
        for (auto & c : codes)
            if (! verify_mds(c, graph).is_mds)
                throw ConsistencyError(std::string(what) + " produced a code that is not MDS");
    }

    auto describe_certificate(const Code & code, const MdsCertificate & cert) -> std::string
    {
        if (cert.is_mds)
            return "MDS ok, |M|=" + std::to_string(cert.cardinality);
        if (cert.witness) {
            auto & p = code.params();
            return "not independent: (" + vertex_to_json(decode_vertex(cert.witness->first, p)).dump() + ","
                + vertex_to_json(decode_vertex(cert.witness->second, p)).dump() + ")";
        }
        return "wrong cardinality " + std::to_string(cert.cardinality)
            + " != " + std::to_string(cert.target_cardinality);
    }

    auto parse_order(const std::string & spec, int m) -> std::optional<std::vector<int>>
    {
        if (spec.empty() || spec == "last-first")
            return std::nullopt;
        std::vector<int> order;
        if (spec == "first-first") {
            for (int i = 0; i < m; ++i)
                order.push_back(i);
            return order;
        }
        std::stringstream s(spec);
        std::string item;
        while (std::getline(s, item, ',')) {
            try {
                std::size_t used = 0;
                order.push_back(std::stoi(item, &used));
                if (used != item.size())
                    throw std::invalid_argument(item);
            }
            catch (const std::logic_error &) {
                throw InvalidArgument("bad --order entry '" + item + "'");
            }
        }
        return order;
    }

    struct Context {
        std::ostream & out;
        std::ostream & err;
    };

    auto cmd_enumerate(Context & ctx, int m, int n, bool count_only, const std::string & out_dir, unsigned jobs,
            bool no_cache) -> int
    {
        DoobParams params{m, n};
        auto dir = out_dir.empty() ? cache_directory(cache_root(), params) : fs::path(out_dir);

        std::optional<EnumerationResult> result;
        if (! no_cache)
            result = load_cached_enumeration(dir, params, ! count_only);

        if (result)
            ctx.err << "using cached " << to_string(params) << " from " << dir.string() << "\n";
        else {
            result = enumerate_mds(params, EnumerationOptions{! count_only, jobs});
            if (! count_only) {
                check_all_mds(result->codes, build_doob(params), "enumeration");
                RunManifest manifest;
                manifest.command = "enumerate";
                manifest.params = params;
                manifest.count = result->count;
                if (! literature_count(params))
                    manifest.derived_counts["mds_count"] = result->count;
                write_code_directory(dir, result->codes, manifest);
                ctx.err << "wrote " << result->count << " code files to " << dir.string() << "\n";
            }
            ctx.err << "elapsed " << result->elapsed.count() << " s\n";
        }

        if (auto stated = literature_count(params); stated && *stated != result->count)
            throw ConsistencyError("count " + std::to_string(result->count) + " disagrees with the stated "
                    + std::to_string(*stated));

        ctx.out << result->count << "\n";
        ctx.err << (literature_count(params) ? "count matches the literature value\n" : "count is derived\n");
        return success;
    }

    auto cmd_verify(Context & ctx, const std::vector<std::string> & files) -> int
    {
        bool all_mds = true;
        for (auto & f : files) {
            auto code = read_code_file(f);
            auto cert = verify_mds(code, build_doob(code.params()));
            all_mds = all_mds && cert.is_mds;
            ctx.out << f << ": " << describe_certificate(code, cert) << "\n";
        }
        return all_mds ? success : failure;
    }

    auto derive_checked_xi() -> XiTable
    {
        auto xi = derive_xi();
        auto report = check_lemma1_property(xi);
        if (! report.pass)
            throw ConsistencyError("derived xi does not preserve intersections");
        return xi;
    }

    auto emit(Context & ctx, const nlohmann::json & j, const std::string & out_file) -> void
    {
        if (out_file.empty())
            ctx.out << to_file_text(j);
        else
            write_json_file(out_file, j);
    }

    auto cmd_xi(Context & ctx, const std::string & out_file) -> int
    {
        auto xi = derive_checked_xi();
        emit(ctx, xi_to_json(xi), out_file);
        if (! out_file.empty())
            ctx.out << "xi: " << xi.domain.size() << " entries written to " << out_file << "\n";
        return success;
    }

    auto cmd_kappa(Context & ctx, const std::string & in_file, const std::string & out_file,
            const std::string & order_spec) -> int
    {
        auto code = read_code_file(in_file);
        auto input_cert = verify_mds(code, build_doob(code.params()));
        if (! input_cert.is_mds) {
            ctx.err << in_file << ": " << describe_certificate(code, input_cert) << "; kappa needs an MDS code\n";
            return failure;
        }
        auto xi = derive_checked_xi();
        auto image = apply_kappa_iterated(code, xi, parse_order(order_spec, code.params().m));
        if (! verify_mds(image, build_doob(image.params())).is_mds)
            throw ConsistencyError("kappa produced a code that is not MDS");
        emit(ctx, code_to_json(image), out_file);
        if (! out_file.empty())
            ctx.out << out_file << ": " << to_string(image.params()) << ", MDS ok, |M|=" << image.size() << "\n";
        return success;
    }

    auto cmd_lambda(Context & ctx, const std::string & lambda_file, const std::string & hex, int m, int n,
            const std::string & out_file) -> int
    {
        std::optional<LambdaFunction> lambda;
        if (! hex.empty()) {
            if (m < 0 || n < 0)
                throw InvalidArgument("--hex needs --m and --n");
            lambda = LambdaFunction::from_hex(DoobParams{m, n}, hex);
        }
        else if (! lambda_file.empty())
            lambda = read_lambda_file(lambda_file);
        else
            throw InvalidArgument("lambda needs a table file or --hex");

        auto code = build_m_lambda(*lambda);
        if (! verify_mds(code, build_doob(code.params())).is_mds)
            throw ConsistencyError("parity construction produced a code that is not MDS");
        emit(ctx, code_to_json(code), out_file);
        if (! out_file.empty())
            ctx.out << out_file << ": " << to_string(code.params()) << ", MDS ok, |M|=" << code.size() << "\n";
        return success;
    }

    auto cmd_bounds(Context & ctx, int m, int n) -> int
    {
        auto report = bounds_report(DoobParams{m, n});
        if (report.actual && report.lower_exact && BigInt{*report.actual} < *report.lower_exact)
            throw ConsistencyError("count below the parity-construction lower bound");
        if (report.actual && report.upper_exact && *report.actual > *report.upper_exact)
            throw ConsistencyError("count above the kappa upper bound");
        ctx.out << report.text() << "\n";
        return success;
    }

    auto cmd_classify(Context & ctx, const std::string & dir, const std::string & out_file) -> int
    {
        auto codes = read_code_directory(dir);
        if (codes.empty())
            throw ParseError(dir + ": no .code files");
        auto params = codes.front().params();

        std::vector<VertexPermutation> group;
        if (params == DoobParams{1, 0} || params == DoobParams{0, 1} || params == DoobParams{0, 2})
            group = automorphism_group(build_doob(params)).generators;
        else {
            ctx.err << "note: using the group generated by factor automorphisms and factor swaps\n";
            group = product_automorphism_generators(params);
        }

        auto orbits = orbits_of_codes(codes, group);
        ctx.out << "orbits: ";
        auto sizes = orbits.sorted_sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i)
            ctx.out << (i ? ", " : "") << sizes[i];
        ctx.out << "\n";
        if (! out_file.empty())
            write_json_file(out_file, orbit_report_json(codes, orbits));
        return success;
    }
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    Context ctx{out, err};
    CLI::App app{"Doob graph D(m,n) maximum independent sets (distance-2 MDS codes)", "doob"};
    app.require_subcommand(1);

    int m = 0, n = 0;
    bool count_only = false, no_cache = false;
    unsigned jobs = 1;
    std::string out_path, order, lambda_file, hex, dir;
    std::vector<std::string> files;
    int lm = -1, ln = -1;

    auto enumerate = app.add_subcommand("enumerate", "enumerate all MDS codes of D(m,n)");
    enumerate->add_option("m", m)->required();
    enumerate->add_option("n", n)->required();
    enumerate->add_flag("--count-only", count_only, "only print the count");
    enumerate->add_option("--out", out_path, "output directory (default: cache)");
    enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    enumerate->add_flag("--no-cache", no_cache, "recompute even when a cached result exists");

    auto verify = app.add_subcommand("verify", "check code files for the MDS property");
    verify->add_option("files", files)->required();

    auto xi = app.add_subcommand("xi", "derive the intersection-preserving table xi");
    xi->add_option("--out", out_path);

    std::string in_file;
    auto kappa = app.add_subcommand("kappa", "map an MDS code of D(m,n) into the Hamming graph H(2m+n,4)");
    kappa->add_option("input", in_file)->required();
    kappa->add_option("--out", out_path);
    kappa->add_option("--order", order, "Sh coordinates in consumption order, e.g. 0,1 (default: last-first)");

    auto lambda = app.add_subcommand("lambda", "build the parity code M_lambda");
    lambda->add_option("table", lambda_file, "lambda JSON file");
    lambda->add_option("--hex", hex, "inline table in hex");
    lambda->add_option("--m", lm);
    lambda->add_option("--n", ln);
    lambda->add_option("--out", out_path);

    auto bounds = app.add_subcommand("bounds", "lower and upper bounds on the MDS count");
    bounds->add_option("m", m)->required();
    bounds->add_option("n", n)->required();

    auto classify = app.add_subcommand("classify", "orbits of a directory of codes under graph automorphisms");
    classify->add_option("dir", dir)->required();
    classify->add_option("--out", out_path, "write the orbit report JSON here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e, out, err);
    }

    try {
        if (*enumerate)
            return cmd_enumerate(ctx, m, n, count_only, out_path, jobs, no_cache);
        if (*verify)
            return cmd_verify(ctx, files);
        if (*xi)
            return cmd_xi(ctx, out_path);
        if (*kappa)
            return cmd_kappa(ctx, in_file, out_path, order);
        if (*lambda)
            return cmd_lambda(ctx, lambda_file, hex, lm, ln, out_path);
        if (*bounds)
            return cmd_bounds(ctx, m, n);
        if (*classify)
            return cmd_classify(ctx, dir, out_path);
    }
    catch (const GuardExceeded & e) {
        err << "error: " << e.what() << "\n";
        return guard_exceeded;
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << "\n";
        return parse_failure;
    }
    catch (const ConsistencyError & e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return internal_inconsistency;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
    catch (const std::filesystem::filesystem_error & e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
    return failure;
}

}
