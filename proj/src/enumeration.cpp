#include <doob/enumeration.hpp>
#include <doob/errors.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace doob {

namespace {
    void independent_set_search(const Graph & graph, std::size_t target, VertexSet candidates,
            std::vector<VertexIndex> & chosen, const std::function<void (const std::vector<VertexIndex> &)> & visit)
    {
        while (true) {
            if (chosen.size() == target) {
                visit(chosen);
                return;
            }
            if (chosen.size() + candidates.count() < target)
                return;

            auto v = VertexIndex(candidates.find_first());
            candidates.reset(v);

            chosen.push_back(v);
            independent_set_search(graph, target, candidates - graph.neighbours(v), chosen, visit);
            chosen.pop_back();
        }
    }

    void check_guard(const DoobParams & params)
    {
        if (params.vertex_count() > max_vertex_count)
            throw GuardExceeded("enumeration of " + to_string(params) + " refused: 4^(2m+n) must be at most "
                    + std::to_string(max_vertex_count));
    }

    using DomainMask = std::uint32_t;

    /// Fibers of the last coordinate, with the disjointness relation between them.
    struct FiberAlphabet {
        std::size_t radix = 0;
        std::vector<std::vector<VertexIndex>> codes;
        std::vector<DomainMask> compatible;

        auto full() const -> DomainMask { return DomainMask((std::uint64_t{1} << codes.size()) - 1); }
    };

    auto single_factor_codes(const DoobParams & params) -> std::vector<std::vector<VertexIndex>>
    {
        auto graph = build_doob(params);
        std::vector<std::vector<VertexIndex>> result;
        for_each_independent_set(graph, params.mds_size(),
                [&](const std::vector<VertexIndex> & members) { result.push_back(members); });
        return result;
    }

    auto make_alphabet(const DoobParams & factor) -> FiberAlphabet
    {
        FiberAlphabet result;
        result.radix = factor.vertex_count();
        result.codes = single_factor_codes(factor);
        result.compatible.assign(result.codes.size(), 0);
        for (std::size_t i = 0; i < result.codes.size(); ++i)
            for (std::size_t j = 0; j < result.codes.size(); ++j) {
                std::vector<VertexIndex> common;
                std::set_intersection(result.codes[i].begin(), result.codes[i].end(),
                        result.codes[j].begin(), result.codes[j].end(), std::back_inserter(common));
                if (common.empty())
                    result.compatible[i] |= DomainMask(1) << j;
            }
        return result;
    }

    class FiberSearch {
    public:
        FiberSearch(const Graph & base, const FiberAlphabet & alphabet) :
            _base(base),
            _alphabet(alphabet),
            _later(base.size()),
            _domain(base.size(), alphabet.full()),
            _assignment(base.size(), 0)
        {
            for (VertexIndex u = 0; u < base.size(); ++u) {
                auto & n = base.neighbours(u);
                for (auto w = n.find_next(u); w != VertexSet::npos; w = n.find_next(w))
                    _later[u].push_back(VertexIndex(w));
            }
        }

        /// Runs the search with vertex 0 fixed to fiber `first`.
        template <typename Visit>
        void run_branch(std::size_t first, Visit && visit)
        {
            if (assign(0, first))
                descend(1, visit);
            undo_to(0);
        }

        auto members() const -> std::vector<VertexIndex>
        {
            std::vector<VertexIndex> result;
            auto radix = VertexIndex(_alphabet.radix);
            for (VertexIndex u = 0; u < _base.size(); ++u)
                for (auto t : _alphabet.codes[_assignment[u]])
                    result.push_back(u * radix + t);
            return result;
        }

    private:
        const Graph & _base;
        const FiberAlphabet & _alphabet;
        std::vector<std::vector<VertexIndex>> _later;
        std::vector<DomainMask> _domain;
        std::vector<std::size_t> _assignment;
        std::vector<std::pair<VertexIndex, DomainMask>> _trail;

        auto assign(VertexIndex u, std::size_t code) -> bool
        {
            _assignment[u] = code;
            auto allowed = _alphabet.compatible[code];
            for (auto w : _later[u]) {
                auto narrowed = _domain[w] & allowed;
                if (narrowed != _domain[w]) {
                    _trail.emplace_back(w, _domain[w]);
                    _domain[w] = narrowed;
                    if (narrowed == 0)
                        return false;
                }
            }
            return true;
        }

        void undo_to(std::size_t mark)
        {
            while (_trail.size() > mark) {
                _domain[_trail.back().first] = _trail.back().second;
                _trail.pop_back();
            }
        }

        template <typename Visit>
        void descend(VertexIndex u, Visit & visit)
        {
            if (u == _base.size()) {
                visit(*this);
                return;
            }
            for (auto d = _domain[u]; d != 0; d &= d - 1) {
                auto code = std::size_t(std::countr_zero(d));
                auto mark = _trail.size();
                if (assign(u, code))
                    descend(u + 1, visit);
                undo_to(mark);
            }
        }
    };

    struct BranchOutput {
        std::uint64_t count = 0;
        std::vector<Code> codes;
    };

    auto run_fiber_search(const DoobParams & params, bool materialize, unsigned jobs) -> std::vector<BranchOutput>
    {
        DoobParams base_params, factor;
        if (params.n >= 1) {
            base_params = DoobParams{params.m, params.n - 1};
            factor = DoobParams{0, 1};
        }
        else {
            base_params = DoobParams{params.m - 1, 0};
            factor = DoobParams{1, 0};
        }

        auto base = build_doob(base_params);
        auto alphabet = make_alphabet(factor);

        std::vector<BranchOutput> outputs(alphabet.codes.size());
        std::atomic<std::size_t> next{0};

        auto worker = [&] {
            FiberSearch search(base, alphabet);
            for (std::size_t b = next++; b < outputs.size(); b = next++) {
                auto & out = outputs[b];
                search.run_branch(b, [&](const FiberSearch & s) {
                    ++out.count;
                    if (materialize)
                        out.codes.emplace_back(params, s.members());
                });
            }
        };

        jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(outputs.size())));
        if (jobs == 1)
            worker();
        else {
            std::vector<std::jthread> threads;
            for (unsigned j = 0; j < jobs; ++j)
                threads.emplace_back(worker);
        }
        return outputs;
    }
}

void for_each_independent_set(const Graph & graph, std::size_t target,
        const std::function<void (const std::vector<VertexIndex> &)> & visit)
{
    VertexSet all(graph.size());
    all.set();
    std::vector<VertexIndex> chosen;
    chosen.reserve(target);
    independent_set_search(graph, target, all, chosen, visit);
}

auto enumerate_mds(const DoobParams & params, const EnumerationOptions & options) -> EnumerationResult
{
    check_guard(params);
    auto start = std::chrono::steady_clock::now();

    EnumerationResult result;
    result.params = params;

    if (params.m + params.n == 1) {
        for (auto & members : single_factor_codes(params)) {
            ++result.count;
            if (options.materialize)
                result.codes.emplace_back(params, members);
        }
    }
    else {
        for (auto & out : run_fiber_search(params, options.materialize, options.jobs)) {
            result.count += out.count;
            std::move(out.codes.begin(), out.codes.end(), std::back_inserter(result.codes));
        }
        std::sort(result.codes.begin(), result.codes.end());
    }

    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

auto count_mds(const DoobParams & params, unsigned jobs) -> std::uint64_t
{
    return enumerate_mds(params, EnumerationOptions{false, jobs}).count;
}

}
