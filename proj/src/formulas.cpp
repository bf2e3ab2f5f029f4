#include "wrad/formulas.hpp"

#include <stdexcept>

namespace wrad::formulas {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::domain_error("formula domain: " + what);
}

long long exact_div(long long a, long long b, const char* what) {
    if (a % b != 0) throw std::logic_error(std::string(what) + ": non-exact division");
    return a / b;
}

}  // namespace

long long binom2(long long n) { return n * (n - 1) / 2; }

long long eq1_wiener(long long n, long long r) {
    require(r >= 3 && n >= 2 * r, "eq1 needs n >= 2r >= 6");
    return binom2(n) + (r - 1) * (r - 1) * n - r * (r - 1) * (r - 1);
}

long long eq2_wiener(long long n, long long r) {
    require(r >= 3 && n >= 2 * r, "eq2 needs n >= 2r >= 6");
    long long binom_r3 = exact_div(r * (r - 1) * (r - 2), 6, "eq2 C(r,3)");
    return 2 * binom2(n) + (r - 1) * (r - 1) * n - 4 * binom_r3;
}

long long vizing_max_size(long long n, long long r) {
    require(r >= 1, "vizing needs r >= 1");
    if (r == 1) {
        require(n >= 1, "vizing needs n >= 1");
        return binom2(n);
    }
    if (r == 2) {
        require(n >= 4, "vizing r=2 needs n >= 4");
        return n * (n - 2) / 2;  // floor
    }
    require(n >= 2 * r, "vizing needs n >= 2r when r >= 3");
    long long t = n - 2 * r;
    return exact_div(t * t + 5 * n - 6 * r, 2, "vizing");
}

long long digraph_max_arcs(long long n, long long r) {
    require(r >= 3 && n >= 2 * r, "digraph max arcs needs r >= 3, n >= 2r");
    long long m = n - (r - 1);
    return m * m + (r - 3);
}

long long min_digraph_wiener_small_r(long long n, int doubled_r) {
    require(n >= 1, "needs n >= 1");
    switch (doubled_r) {
        case 2:
            return 2 * binom2(n);
        case 3:
            return 2 * binom2(n) + (n + 1) / 2;
        case 4:
            return n * n;
        default:
            throw std::domain_error("formula domain: doubled radius must be 2, 3 or 4");
    }
}

long long min_rad_lower_bound(long long n, int doubled_r) {
    require(doubled_r >= 5, "needs radius >= 5/2");
    require(n >= 1, "needs n >= 1");
    // floor((r-0.5)^2) with r = doubled_r/2.
    long long f = static_cast<long long>(doubled_r - 1) * (doubled_r - 1) / 4;
    return 2 * binom2(n) + f * n;
}

long long maxrad_construction_lower(long long n, long long r) {
    require(r >= 1 && n >= 2 * r + 1, "needs r >= 1, n >= 2r+1");
    return 2 * r * n * n - 4 * r * r * n + 2 * r * (2 * r - 1) + r * r * r - r * r;
}

QkDecomposition decompose_qk(long long n, long long r) {
    require(r >= 2, "qk decomposition needs r >= 2");
    require(n >= r + 2, "qk decomposition needs n >= r+2");
    // Unique k in [2, r+1] congruent to n mod r.
    long long k = n % r;
    while (k < 2) k += r;
    long long q = exact_div(n - k, r, "qk decomposition");
    return QkDecomposition{q, k};
}

long long maxradplus_construction_wiener(long long n, long long r) {
    auto [q, k] = decompose_qk(n, r);
    long long total = 0;
    for (long long p = 0; p < q; ++p)
        for (long long i = 1; i <= r; ++i) total += (n - p * r) * (n - p * r - i);
    total += k * k * (k - 1) / 2;
    return total;
}

long long radplus1_max_wiener(long long n) {
    require(n >= 1, "needs n >= 1");
    return exact_div(n * n * n - n, 3, "radplus1 max");
}

long long evaluate_formula(const std::string& id, const std::vector<long long>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::domain_error("formula '" + id + "' expects " + std::to_string(k) + " parameter(s)");
    };
    if (id == "eq1") {
        need(2);
        return eq1_wiener(params[0], params[1]);
    }
    if (id == "eq2") {
        need(2);
        return eq2_wiener(params[0], params[1]);
    }
    if (id == "vizing") {
        need(2);
        return vizing_max_size(params[0], params[1]);
    }
    if (id == "max-arcs") {
        need(2);
        return digraph_max_arcs(params[0], params[1]);
    }
    if (id == "min-rad-small") {
        need(2);
        return min_digraph_wiener_small_r(params[0], static_cast<int>(params[1]));
    }
    if (id == "min-rad-bound") {
        need(2);
        return min_rad_lower_bound(params[0], static_cast<int>(params[1]));
    }
    if (id == "max-rad-lower") {
        need(2);
        return maxrad_construction_lower(params[0], params[1]);
    }
    if (id == "max-outrad") {
        need(2);
        return maxradplus_construction_wiener(params[0], params[1]);
    }
    if (id == "max-outrad1") {
        need(1);
        return radplus1_max_wiener(params[0]);
    }
    throw std::domain_error("unknown formula '" + id + "'");
}

std::vector<std::string> formula_ids() {
    return {"eq1",           "eq2",           "vizing",        "max-arcs",   "min-rad-small",
            "min-rad-bound", "max-rad-lower", "max-outrad",    "max-outrad1"};
}

}  // namespace wrad::formulas
