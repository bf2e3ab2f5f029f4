#include "wrad/survey.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "wrad/codec.hpp"

namespace wrad {

namespace {

struct ShardAccumulator {
    bool minimize = true;
    std::optional<long long> best;
    std::vector<std::pair<Certificate, SmallGraph>> argbest;
    long long examined = 0;
    long long matching = 0;

    void offer(long long value, const Certificate& cert, const SmallGraph& g) {
        ++matching;
        if (!best || (minimize ? value < *best : value > *best)) {
            best = value;
            argbest.clear();
        }
        if (value == *best) argbest.emplace_back(cert, g);
    }
};

SurveyReport radius_survey(const std::string& mode, int n, int r, int threads, bool minimize) {
    if (n < 2 || n > 10) throw std::invalid_argument("survey: n must be in [2,10]");
    if (r < 1) throw std::invalid_argument("survey: r must be >= 1");
    if (threads < 1) threads = 1;
    auto start = std::chrono::steady_clock::now();

    std::vector<ShardAccumulator> acc(threads);
    auto run_shard = [&](int s) {
        ShardAccumulator& a = acc[s];
        a.minimize = minimize;
        enumerate_graphs(n, ShardSpec{s, threads}, [&](const SmallGraph& g, const CanonicalResult& canon) {
            ++a.examined;
            SmallGraphMetrics m = small_graph_metrics(g);
            if (!m.connected || m.radius != r) return;
            a.offer(m.wiener, canon.cert, g);
        });
    };
    if (threads == 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < threads; ++s) pool.emplace_back(run_shard, s);
        for (auto& t : pool) t.join();
    }

    SurveyReport rep;
    rep.mode = mode;
    rep.n = n;
    rep.r = r;
    for (const auto& a : acc) {
        rep.classes_examined += a.examined;
        rep.classes_matching += a.matching;
    }
    std::optional<long long> best;
    for (const auto& a : acc) {
        if (!a.best) continue;
        if (!best || (minimize ? *a.best < *best : *a.best > *best)) best = a.best;
    }
    rep.empty = !best.has_value();
    rep.optimum = best;
    if (best) {
        std::vector<std::pair<Certificate, SmallGraph>> all;
        for (const auto& a : acc)
            if (a.best == best)
                all.insert(all.end(), a.argbest.begin(), a.argbest.end());
        std::sort(all.begin(), all.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rep.extremal_all_acyclic = true;
        for (const auto& [cert, g] : all) {
            rep.extremal.push_back(ExtremalEntry{cert, encode_graph6(canonical_copy(to_graph(g)))});
            if (!small_is_forest(g)) rep.extremal_all_acyclic = false;
        }
    }
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

}  // namespace

SurveyReport min_wiener_radius_survey(int n, int r, int threads) {
    return radius_survey("min-wiener", n, r, threads, true);
}

SurveyReport max_wiener_radius_survey(int n, int r, int threads) {
    return radius_survey("max-wiener", n, r, threads, false);
}

SurveyReport max_wiener_outradius1_survey(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("outradius1 survey: n must be in [2,6]");
    auto start = std::chrono::steady_clock::now();
    SurveyReport rep;
    rep.mode = "outradius1-max";
    rep.n = n;

    // Vertex 0 is the universal out-star center; the remaining (n-1)^2 bits
    // are the arcs among vertices 1..n-1 plus the arcs back into 0.
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u < n; ++u) {
        for (int v = 1; v < n; ++v)
            if (u != v) slots.emplace_back(u, v);
        slots.emplace_back(u, 0);
    }
    const std::uint64_t total = 1ull << slots.size();
    long long best = -1;
    std::vector<Certificate> argbest;
    std::vector<SmallDigraph> argbest_graphs;
    SmallDigraph base;
    base.n = n;
    for (int v = 1; v < n; ++v) base.out[0] |= 1u << v;
    for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
        SmallDigraph d = base;
        std::uint64_t bits = assignment;
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            d.add_arc(slots[b].first, slots[b].second);
        }
        ++rep.classes_examined;
        SmallDigraphMetrics m = small_digraph_metrics(d);
        if (!m.strongly_connected) continue;
        ++rep.classes_matching;
        if (m.wiener > best) {
            best = m.wiener;
            argbest.clear();
            argbest_graphs.clear();
        }
        if (m.wiener == best) {
            Certificate c = canonical_form(d).cert;
            if (std::find(argbest.begin(), argbest.end(), c) == argbest.end()) {
                argbest.push_back(c);
                argbest_graphs.push_back(d);
            }
        }
    }
    rep.empty = best < 0;
    if (best >= 0) {
        rep.optimum = best;
        std::vector<size_t> idx(argbest.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return argbest[a] < argbest[b]; });
        for (size_t i : idx)
            rep.extremal.push_back(ExtremalEntry{
                argbest[i], encode_digraph6(canonical_copy(to_digraph(argbest_graphs[i])))});
    }
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

nlohmann::json SurveyReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["mode"] = mode;
    j["n"] = n;
    if (r) j["r"] = *r;
    if (empty) {
        j["result"] = "empty";
    } else {
        j["optimum"] = *optimum;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : extremal) {
            nlohmann::json item;
            item["certificate"] = e.cert.hex();
            item["encoding"] = e.encoding;
            arr.push_back(item);
        }
        j["extremal"] = arr;
        if (mode == "max-wiener") j["extremal_all_acyclic"] = extremal_all_acyclic;
    }
    j["classes_examined"] = classes_examined;
    j["classes_matching"] = classes_matching;
    if (include_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
}

}  // namespace wrad
