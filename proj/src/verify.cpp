#include "wrad/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "wrad/codec.hpp"
#include "wrad/constructions.hpp"
#include "wrad/formulas.hpp"
#include "wrad/metrics.hpp"

namespace wrad {

namespace {

constexpr int kEq1MaxR = 8, kEq1MaxN = 64;
constexpr int kEq2MaxR = 7, kEq2MaxN = 40;

std::string fmt_case(const char* family, int n, int r, int s) {
    std::ostringstream os;
    os << family << "(n=" << n << ",r=" << r << ",s=" << s << ")";
    return os.str();
}

template <typename Fn>
void sweep_gnrs(int max_r, int max_n, Fn fn) {
    for (int r = 3; r <= max_r; ++r)
        for (int n = 2 * r; n <= max_n; ++n)
            for (int s = 1; 2 * s <= n - 2 * r + 2; ++s) fn(n, r, s);
}

}  // namespace

std::optional<std::string> check_eq1_case(const Graph& g, int n, int r, int s) {
    WienerValue w = wiener(g);
    long long expected = formulas::eq1_wiener(n, r);
    if (!w || *w != expected) {
        std::ostringstream os;
        os << fmt_case("gnrs", n, r, s) << ": wiener " << (w ? std::to_string(*w) : "infinite")
           << " != " << expected;
        return os.str();
    }
    auto rd = radius_diameter(g);
    if (!rd.radius || *rd.radius != r)
        return fmt_case("gnrs", n, r, s) + ": radius " +
               (rd.radius ? std::to_string(*rd.radius) : "infinite") + " != " + std::to_string(r);
    return std::nullopt;
}

std::optional<std::string> check_eq2_case(const Digraph& d, int n, int r, int s) {
    if (!is_strongly_connected(d)) return fmt_case("dnrs", n, r, s) + ": not strongly connected";
    WienerValue w = wiener_digraph(d);
    long long expected = formulas::eq2_wiener(n, r);
    if (!w || *w != expected) {
        std::ostringstream os;
        os << fmt_case("dnrs", n, r, s) << ": wiener " << (w ? std::to_string(*w) : "infinite")
           << " != " << expected;
        return os.str();
    }
    auto rads = digraph_radii(d);
    if (!rads.out_radius || *rads.out_radius != r)
        return fmt_case("dnrs", n, r, s) + ": out radius != " + std::to_string(r);
    return std::nullopt;
}

SuiteResult verify_eq1_sweep() {
    SuiteResult res{"eq1-sweep", 0, {}};
    sweep_gnrs(kEq1MaxR, kEq1MaxN, [&](int n, int r, int s) {
        ++res.cases;
        if (auto fail = check_eq1_case(g_nrs(n, r, s), n, r, s)) res.failures.push_back(*fail);
    });
    return res;
}

SuiteResult verify_eq2_sweep() {
    SuiteResult res{"eq2-sweep", 0, {}};
    sweep_gnrs(kEq2MaxR, kEq2MaxN, [&](int n, int r, int s) {
        ++res.cases;
        if (auto fail = check_eq2_case(d_nrs(n, r, s), n, r, s)) res.failures.push_back(*fail);
    });
    return res;
}

SuiteResult verify_increments() {
    SuiteResult res{"increments", 0, {}};
    for (int r = 3; r <= kEq1MaxR; ++r)
        for (int n = 2 * r + 1; n <= kEq1MaxN; ++n) {
            ++res.cases;
            long long lhs = formulas::eq1_wiener(n, r) - formulas::eq1_wiener(n - 1, r);
            long long rhs = (n - 1) + static_cast<long long>(r - 1) * (r - 1);
            if (lhs != rhs)
                res.failures.push_back("eq1 increment (n=" + std::to_string(n) +
                                       ",r=" + std::to_string(r) + "): " + std::to_string(lhs) +
                                       " != " + std::to_string(rhs));
        }
    for (int r = 3; r <= kEq2MaxR; ++r)
        for (int n = 2 * r + 1; n <= kEq2MaxN; ++n) {
            ++res.cases;
            long long lhs = formulas::eq2_wiener(n, r) - formulas::eq2_wiener(n - 1, r);
            long long rhs = 2 * (n - 1) + static_cast<long long>(r - 1) * (r - 1);
            if (lhs != rhs)
                res.failures.push_back("eq2 increment (n=" + std::to_string(n) +
                                       ",r=" + std::to_string(r) + "): " + std::to_string(lhs) +
                                       " != " + std::to_string(rhs));
        }
    return res;
}

SuiteResult verify_sizes() {
    SuiteResult res{"sizes", 0, {}};
    sweep_gnrs(kEq1MaxR, kEq1MaxN, [&](int n, int r, int s) {
        ++res.cases;
        long long edges = g_nrs(n, r, s).edge_count();
        long long expected = formulas::vizing_max_size(n, r);
        if (edges != expected)
            res.failures.push_back(fmt_case("gnrs", n, r, s) + ": edges " + std::to_string(edges) +
                                   " != " + std::to_string(expected));
    });
    sweep_gnrs(kEq2MaxR, kEq2MaxN, [&](int n, int r, int s) {
        ++res.cases;
        long long arcs = d_nrs(n, r, s).arc_count();
        long long expected = formulas::digraph_max_arcs(n, r);
        if (arcs != expected)
            res.failures.push_back(fmt_case("dnrs", n, r, s) + ": arcs " + std::to_string(arcs) +
                                   " != " + std::to_string(expected));
        if (r == 3 && arcs != static_cast<long long>(n - 2) * (n - 2))
            res.failures.push_back(fmt_case("dnrs", n, r, s) + ": r=3 arcs != (n-2)^2");
    });
    return res;
}

SuiteResult verify_figures() {
    SuiteResult res{"figures", 0, {}};
    auto fail = [&](const std::string& msg) { res.failures.push_back(msg); };

    // 5-vertex seed: order, arc count, doubled radius.
    {
        ++res.cases;
        Digraph seed = fixed_digraph(FixedDigraph::kMinRad3Seed, 5);
        auto rads = digraph_radii(seed);
        if (seed.order() != 5 || seed.arc_count() != 9 || !rads.doubled_radius ||
            *rads.doubled_radius != 6)
            fail("min-rad3-seed core: expected order 5, 9 arcs, doubled radius 6");
    }
    // Seed blow-up undercuts the blown-up directed 4-cycle at n = 20.
    {
        ++res.cases;
        Digraph a = fixed_digraph(FixedDigraph::kMinRad3Seed, 20);
        Digraph b = min_rad_construction(20, 6);
        auto wa = wiener_digraph(a), wb = wiener_digraph(b);
        auto ra = digraph_radii(a);
        if (!wa || !wb || !ra.doubled_radius || *ra.doubled_radius != 6 || !(*wa < *wb))
            fail("min-rad3-seed blow-up at n=20 must keep rad 3 and beat the cycle blow-up");
    }
    // Out-radius-1 extremal topologies attain (n^3-n)/3.
    for (int n = 4; n <= 12; ++n) {
        for (auto which : {FixedDigraph::kMaxOutrad1Chain, FixedDigraph::kMaxOutrad1Fork}) {
            ++res.cases;
            Digraph d = fixed_digraph(which, n);
            auto w = wiener_digraph(d);
            auto rads = digraph_radii(d);
            if (!w || *w != formulas::radplus1_max_wiener(n) || !rads.out_radius || *rads.out_radius != 1)
                fail("outradius-1 topology at n=" + std::to_string(n) + " misses (n^3-n)/3");
        }
    }
    // Long-Wiener out-radius family: closed form, the pairwise identity
    // d(v_a,u) + d(u,v_a) = n - pr, and out-radius r.
    for (int r = 2; r <= 5; ++r)
        for (int n = 2 * r + 2; n <= 2 * r + 20; ++n) {
            ++res.cases;
            Digraph d = max_outradius_family(n, r);
            auto w = wiener_digraph(d);
            if (!w || *w != formulas::maxradplus_construction_wiener(n, r)) {
                fail("max-outrad family (n=" + std::to_string(n) + ",r=" + std::to_string(r) +
                     "): wiener != closed form");
                continue;
            }
            auto rads = digraph_radii(d);
            if (!rads.out_radius || *rads.out_radius != r) {
                fail("max-outrad family (n=" + std::to_string(n) + ",r=" + std::to_string(r) +
                     "): out radius != r");
                continue;
            }
            auto m = all_pairs(d);
            auto [q, k] = formulas::decompose_qk(n, r);
            (void)k;
            const int hub = n - 1;
            bool ok = true;
            for (long long p = 0; p < q && ok; ++p)
                for (long long i = 1; i <= r && ok; ++i) {
                    int a = static_cast<int>(p * r + i) - 1;  // v_{pr+i}
                    for (int j = a + 1; j < hub && ok; ++j)
                        if (m.at(a, j) + m.at(j, a) != n - p * r) ok = false;
                    if (m.at(a, hub) + m.at(hub, a) != n - p * r) ok = false;
                }
            if (!ok)
                fail("max-outrad family (n=" + std::to_string(n) + ",r=" + std::to_string(r) +
                     "): pairwise distance identity fails");
        }
    // Known/conjectured extremal chord sets keep radius exactly r.
    for (int r = 2; r <= 7; ++r)
        for (const auto& set : expected_optimal_chords(r))
            for (int n : {2 * r + 1, 2 * r + 5}) {
                ++res.cases;
                Digraph d = dp_with_chords(n, r, set);
                auto rads = digraph_radii(d);
                if (!rads.doubled_radius || *rads.doubled_radius != 2 * r)
                    fail("chord fixture r=" + std::to_string(r) + " n=" + std::to_string(n) +
                         ": doubled radius != 2r");
            }
    return res;
}

SuiteResult verify_codecs(std::uint64_t seed) {
    SuiteResult res{"codecs", 0, {}};
    auto fail = [&](const std::string& msg) { res.failures.push_back(msg); };
    {
        ++res.cases;
        Graph k2 = clique(2);
        if (encode_graph6(k2) != "A_") fail("graph6(K_2) != \"A_\"");
        ++res.cases;
        if (encode_graph6(empty_graph(2)) != "A?") fail("graph6(empty_2) != \"A?\"");
        ++res.cases;
        Digraph arc(2);
        arc.add_arc(0, 1);
        if (encode_digraph6(arc) != "&AO") fail("digraph6(single arc) != \"&AO\"");
    }
    std::mt19937_64 rng(seed);
    for (int iter = 0; iter < 10000; ++iter) {
        ++res.cases;
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        Graph back = parse_graph6(encode_graph6(g));
        if (!(back == g)) {
            fail("graph6 roundtrip mismatch at iteration " + std::to_string(iter));
            break;
        }
    }
    for (int iter = 0; iter < 10000; ++iter) {
        ++res.cases;
        int n = 1 + static_cast<int>(rng() % 20);
        Digraph d(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && (rng() & 1)) d.add_arc(u, v);
        Digraph back = parse_digraph6(encode_digraph6(d));
        if (!(back == d)) {
            fail("digraph6 roundtrip mismatch at iteration " + std::to_string(iter));
            break;
        }
    }
    return res;
}

std::vector<std::string> verify_suite_names() {
    return {"eq1-sweep", "eq2-sweep", "increments", "sizes", "figures", "codecs"};
}

std::vector<SuiteResult> run_suites(const std::string& which) {
    std::vector<SuiteResult> out;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (want("eq1-sweep")) out.push_back(verify_eq1_sweep());
    if (want("eq2-sweep")) out.push_back(verify_eq2_sweep());
    if (want("increments")) out.push_back(verify_increments());
    if (want("sizes")) out.push_back(verify_sizes());
    if (want("figures")) out.push_back(verify_figures());
    if (want("codecs")) out.push_back(verify_codecs());
    if (out.empty()) {
        std::string names;
        for (const auto& s : verify_suite_names()) names += " " + s;
        throw std::invalid_argument("unknown suite '" + which + "'; available:" + names + " all");
    }
    return out;
}

}  // namespace wrad
