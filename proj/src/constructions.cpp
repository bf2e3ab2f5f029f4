#include "wrad/constructions.hpp"

#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "wrad/formulas.hpp"

namespace wrad {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::domain_error("construction domain: " + what);
}

}  // namespace

Graph clique(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int k) {
    require(k >= 3, "cycle needs k >= 3");
    Graph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

Graph hypercube3() {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (std::popcount(static_cast<unsigned>(u ^ v)) == 1) g.add_edge(u, v);
    return g;
}

Digraph bidirected_clique(int n) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) d.add_arc(u, v);
    return d;
}

Digraph directed_cycle(int k) {
    require(k >= 2, "directed cycle needs k >= 2");
    Digraph d(k);
    for (int v = 0; v < k; ++v) d.add_arc(v, (v + 1) % k);
    return d;
}

Graph blow_up(const Graph& g, int v, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    if (v < 0 || v >= ng) throw std::out_of_range("blow_up: vertex out of range");
    Graph out(ng - 1 + nh);
    auto remap = [&](int u) { return u < v ? u : u - 1; };
    for (int u = 0; u < ng; ++u) {
        if (u == v) continue;
        for (int w : g.neighbors(u))
            if (w != v && u < w) out.add_edge(remap(u), remap(w));
    }
    for (int a = 0; a < nh; ++a)
        for (int b : h.neighbors(a))
            if (a < b) out.add_edge(ng - 1 + a, ng - 1 + b);
    for (int w : g.neighbors(v))
        for (int a = 0; a < nh; ++a) out.add_edge(remap(w), ng - 1 + a);
    return out;
}

Digraph blow_up_digraph(const Digraph& d, int v, const Digraph& h) {
    const int nd = d.order(), nh = h.order();
    if (v < 0 || v >= nd) throw std::out_of_range("blow_up_digraph: vertex out of range");
    Digraph out(nd - 1 + nh);
    auto remap = [&](int u) { return u < v ? u : u - 1; };
    for (int u = 0; u < nd; ++u) {
        if (u == v) continue;
        for (int w : d.out_neighbors(u))
            if (w != v) out.add_arc(remap(u), remap(w));
    }
    for (int a = 0; a < nh; ++a)
        for (int b : h.out_neighbors(a)) out.add_arc(nd - 1 + a, nd - 1 + b);
    for (int u = 0; u < nd; ++u) {
        if (u == v) continue;
        if (d.has_arc(u, v))
            for (int a = 0; a < nh; ++a) out.add_arc(remap(u), nd - 1 + a);
        if (d.has_arc(v, u))
            for (int a = 0; a < nh; ++a) out.add_arc(nd - 1 + a, remap(u));
    }
    return out;
}

Graph g_nrs(int n, int r, int s) {
    require(r >= 2, "g_nrs needs r >= 2");
    require(n >= 2 * r, "g_nrs needs n >= 2r");
    require(s >= 1 && 2 * s <= n - 2 * r + 2, "g_nrs needs 1 <= s <= (n-2r+2)/2");
    Graph base = cycle_graph(2 * r);
    Graph once = blow_up(base, 0, clique(s));
    // The consecutive cycle vertex (old label 1) sits at index 0 after the
    // first blow-up.
    return blow_up(once, 0, clique(n - 2 * r + 2 - s));
}

Digraph d_2r_r_1(int r) {
    require(r >= 3, "d_2r_r_1 needs r >= 3");
    Digraph d(2 * r);
    auto v = [&](int i) { return i - 1; };
    auto w = [&](int i) { return r + i - 1; };
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            if (i == j || j > i + 1) continue;
            d.add_arc(v(i), v(j));
            d.add_arc(w(i), w(j));
        }
    for (int i = 1; i <= r; ++i) {
        d.add_arc(v(i), w(1));
        d.add_arc(w(i), v(1));
    }
    return d;
}

Digraph d_nrs(int n, int r, int s) {
    require(r >= 3, "d_nrs needs r >= 3");
    require(n >= 2 * r, "d_nrs needs n >= 2r");
    require(s >= 1 && 2 * s <= n - 2 * r + 2, "d_nrs needs 1 <= s <= (n-2r+2)/2");
    Digraph core = d_2r_r_1(r);
    Digraph once = blow_up_digraph(core, 0, bidirected_clique(s));  // v_1
    // w_1 (original index r) shifts to r-1 after v_1 is removed.
    return blow_up_digraph(once, r - 1, bidirected_clique(n - 2 * r + 2 - s));
}

Digraph dp(int n, int d) {
    require(d >= 2, "dp needs cycle length >= 2");
    require(n >= d, "dp needs n >= cycle length");
    Digraph out(n);
    for (int i = 0; i + 1 <= d - 2; ++i) out.add_arc(i, i + 1);
    for (int z = d - 1; z < n; ++z) {
        out.add_arc(d - 2, z);
        out.add_arc(z, 0);
    }
    return out;
}

Digraph dp_with_chords(int n, int r, const std::vector<std::pair<int, int>>& chords) {
    require(r >= 1 && n >= 2 * r, "dp_with_chords needs r >= 1, n >= 2r");
    Digraph out = dp(n, 2 * r);
    for (auto [from, to] : chords) {
        require(1 <= to && to < from && from <= 2 * r - 1, "chord must be backward on the cycle path");
        out.add_arc(from - 1, to - 1);
    }
    return out;
}

Digraph max_rad_construction(int n, int r) {
    require(r >= 1 && n >= 2 * r + 1, "max_rad_construction needs r >= 1, n >= 2r+1");
    Digraph out = dp(n, 2 * r);
    if (r >= 2) {
        out.add_arc(r - 1, 0);          // u_r -> u_1
        out.add_arc(2 * r - 2, r - 1);  // u_{2r-1} -> u_r
    }
    return out;
}

Digraph min_rad_construction(int n, int doubled_r) {
    require(doubled_r >= 5, "min_rad_construction needs radius >= 5/2");
    require(2 * n > doubled_r + 4, "min_rad_construction needs n > r+2");
    if (doubled_r % 2 == 0) {
        const int r = doubled_r / 2;
        Digraph out(n);
        for (int i = 0; i + 1 < r; ++i) out.add_arc(i, i + 1);
        for (int z = r; z < n; ++z) {
            out.add_arc(r - 1, z);
            out.add_arc(z, 0);
            for (int y = r; y < n; ++y)
                if (y != z) out.add_arc(z, y);
        }
        return out;
    }
    // Half-integer radius: cycle c_1..c_L (L = r+1.5) plus reverse arc
    // c_2 -> c_1, blown up at c_2. Core labels: c_1 = 0, c_3..c_L = 1..L-2.
    const int L = (doubled_r + 3) / 2;
    Digraph out(n);
    for (int j = 1; j + 1 <= L - 2; ++j) out.add_arc(j, j + 1);
    out.add_arc(L - 2, 0);  // c_L -> c_1
    for (int z = L - 1; z < n; ++z) {
        out.add_arc(0, z);  // c_1 -> blow-up of c_2
        out.add_arc(z, 1);  // c_2 -> c_3
        out.add_arc(z, 0);  // the reverse arc c_2 -> c_1
        for (int y = L - 1; y < n; ++y)
            if (y != z) out.add_arc(z, y);
    }
    return out;
}

Digraph min_rad2_digraph(int n, const std::vector<int>& cycle_lengths) {
    long long total = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0LL);
    require(total == n, "cycle lengths must partition the vertex set");
    for (int len : cycle_lengths) require(len >= 2, "every removed cycle needs length >= 2");
    Digraph out = bidirected_clique(n);
    int base = 0;
    for (int len : cycle_lengths) {
        for (int i = 0; i < len; ++i) out.remove_arc(base + i, base + (i + 1) % len);
        base += len;
    }
    return out;
}

Digraph matching_complement_digraph(int n) {
    require(n >= 3, "matching complement needs n >= 3");
    Digraph out = bidirected_clique(n);
    for (int i = 0; 2 * i + 1 < n; ++i) out.remove_arc(2 * i, 2 * i + 1);
    if (n % 2 == 1) out.remove_arc(n - 1, 0);
    return out;
}

Digraph fixed_digraph(FixedDigraph which, int n) {
    switch (which) {
        case FixedDigraph::kMinRad3Seed: {
            require(n >= 5, "seed topology needs n >= 5");
            Digraph core(5);
            const int arcs[9][2] = {{0, 1}, {1, 0}, {1, 2}, {4, 1}, {4, 3},
                                    {2, 3}, {3, 4}, {3, 0}, {4, 0}};
            for (auto& a : arcs) core.add_arc(a[0], a[1]);
            if (n == 5) return core;
            return blow_up_digraph(core, kMinRad3SeedBlowup, bidirected_clique(n - 4));
        }
        case FixedDigraph::kMaxOutrad1Chain: {
            require(n >= 2, "chain topology needs n >= 2");
            Digraph d(n);
            const int hub = n - 1;
            for (int i = 0; i < hub; ++i) d.add_arc(hub, i);
            for (int i = 0; i + 1 < hub; ++i) d.add_arc(i, i + 1);
            d.add_arc(hub - 1, hub);
            return d;
        }
        case FixedDigraph::kMaxOutrad1Fork: {
            require(n >= 4, "fork topology needs n >= 4");
            Digraph d(n);
            const int hub = n - 1;
            for (int i = 0; i < hub; ++i) d.add_arc(hub, i);
            for (int i = 1; i + 1 < hub; ++i) d.add_arc(i, i + 1);
            d.add_arc(0, 2);
            d.add_arc(hub - 1, hub);
            return d;
        }
    }
    throw std::logic_error("fixed_digraph: unreachable");
}

Digraph max_outradius_family(int n, int r) {
    auto [q, k] = formulas::decompose_qk(n, r);
    (void)k;
    Digraph d(n);
    const int hub = n - 1;
    for (int i = 0; i + 1 < hub; ++i) d.add_arc(i, i + 1);
    d.add_arc(hub - 1, hub);
    for (long long p = 0; p <= q; ++p) d.add_arc(hub, static_cast<int>(p * r));
    return d;
}

std::vector<std::vector<std::pair<int, int>>> expected_optimal_chords(int r) {
    using Set = std::vector<std::pair<int, int>>;
    switch (r) {
        case 2:
            return {Set{{3, 1}}};
        case 3:
            return {Set{{4, 1}, {5, 1}}, Set{{4, 2}, {5, 1}}, Set{{5, 1}, {5, 2}}};
        case 4:
            return {Set{{6, 2}, {7, 1}}};
        case 5:
            return {Set{{6, 4}, {8, 2}, {9, 1}}};
        case 6:
            return {Set{{9, 3}, {10, 1}, {11, 1}}, Set{{9, 3}, {11, 1}, {11, 2}}};
        case 7:
            return {Set{{8, 6}, {11, 3}, {12, 1}, {13, 1}}, Set{{8, 6}, {11, 3}, {13, 1}, {13, 2}}};
        default:
            throw std::domain_error("expected_optimal_chords: r must be in [2,7]");
    }
}

namespace {

long long need(const std::optional<long long>& p, const char* what) {
    if (!p) throw std::domain_error(std::string("construction needs parameter ") + what);
    return *p;
}

}  // namespace

BuiltConstruction build_construction(const ConstructionSpec& spec) {
    BuiltConstruction out;
    // Family names are matched case-insensitively with '_' ignored, so the
    // conventional spellings G_nrs, D_nrs, D_2r_r_1, DP also work.
    std::string f;
    for (char ch : spec.family)
        if (ch != '_') f.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    auto n = [&] { return static_cast<int>(need(spec.n, "--n")); };
    auto r = [&] { return static_cast<int>(need(spec.r, "--r")); };
    if (f == "clique") out.graph = clique(n());
    else if (f == "empty") out.graph = empty_graph(n());
    else if (f == "path") out.graph = path_graph(n());
    else if (f == "cycle") out.graph = cycle_graph(n());
    else if (f == "q3") out.graph = hypercube3();
    else if (f == "bidirected-clique") out.digraph = bidirected_clique(n());
    else if (f == "directed-cycle") out.digraph = directed_cycle(n());
    else if (f == "gnrs") out.graph = g_nrs(n(), r(), static_cast<int>(need(spec.s, "--s")));
    else if (f == "d2rr1") out.digraph = d_2r_r_1(r());
    else if (f == "dnrs") out.digraph = d_nrs(n(), r(), static_cast<int>(need(spec.s, "--s")));
    else if (f == "dp") out.digraph = dp(n(), static_cast<int>(need(spec.d, "--d")));
    else if (f == "dp-chords") out.digraph = dp_with_chords(n(), r(), spec.chords);
    else if (f == "max-rad") out.digraph = max_rad_construction(n(), r());
    else if (f == "min-rad")
        out.digraph = min_rad_construction(n(), static_cast<int>(need(spec.doubled_r, "--dr")));
    else if (f == "min-rad2-cycles") out.digraph = min_rad2_digraph(n(), spec.cycle_lengths);
    else if (f == "min-rad-matching") out.digraph = matching_complement_digraph(n());
    else if (f == "min-rad3-seed") out.digraph = fixed_digraph(FixedDigraph::kMinRad3Seed, n());
    else if (f == "max-outrad1-chain") out.digraph = fixed_digraph(FixedDigraph::kMaxOutrad1Chain, n());
    else if (f == "max-outrad1-fork") out.digraph = fixed_digraph(FixedDigraph::kMaxOutrad1Fork, n());
    else if (f == "max-outrad") out.digraph = max_outradius_family(n(), r());
    else if (f == "max-rad-extremal") {
        auto sets = expected_optimal_chords(r());
        long long variant = spec.variant.value_or(0);
        if (variant < 0 || variant >= static_cast<long long>(sets.size()))
            throw std::domain_error("construction domain: variant out of range");
        out.digraph = dp_with_chords(n(), r(), sets[static_cast<size_t>(variant)]);
    } else
        throw std::domain_error("unknown construction family '" + f + "'");
    return out;
}

std::vector<std::string> construction_families() {
    return {"clique",          "empty",          "path",
            "cycle",           "q3",             "bidirected-clique",
            "directed-cycle",  "gnrs",           "d2rr1",
            "dnrs",            "dp",             "dp-chords",
            "max-rad",         "min-rad",        "min-rad2-cycles",
            "min-rad-matching","min-rad3-seed",  "max-outrad1-chain",
            "max-outrad1-fork","max-outrad",     "max-rad-extremal"};
}

}  // namespace wrad
