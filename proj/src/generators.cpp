#include "pairsolve/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace pairsolve {

namespace {

std::vector<Vertex> shuffled_vertices(int n, std::mt19937_64& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

DemandGraph gen_regular(int n, int r, std::uint64_t seed) {
    if (n < 0 || r < 0) throw PreconditionError("gen_regular: negative parameter");
    if ((static_cast<long long>(n) * r) % 2 != 0)
        throw PreconditionError("gen_regular: n*r must be even");
    if (r > 0 && n < 2) throw PreconditionError("gen_regular: no loopless edges on n < 2");
    if (r > 0 && n % 2 != 0 && n < 3)
        throw PreconditionError("gen_regular: odd n needs n >= 3");

    DemandGraph g(n);
    std::mt19937_64 rng(seed);
    OriginId next = 0;
    if (n % 2 == 0) {
        for (int round = 0; round < r; ++round) {
            std::vector<Vertex> p = shuffled_vertices(n, rng);
            for (int i = 0; i + 1 < n; i += 2) g.add_edge(p[i], p[i + 1], next++);
        }
    } else {
        for (int round = 0; round < r / 2; ++round) {
            std::vector<Vertex> p = shuffled_vertices(n, rng);
            for (int i = 0; i < n; ++i) g.add_edge(p[i], p[(i + 1) % n], next++);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != r) throw InternalError("gen_regular output is not regular");
    return g;
}

DemandGraph gen_sparse(int n, std::uint64_t seed) {
    if (n < 4) throw PreconditionError("gen_sparse: n must be >= 4");
    DemandGraph g(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    OriginId next = 0;
    const int m = 2 * n - 5;
    while (g.live_edge_count() < m) {
        Vertex u = pick(rng);
        Vertex v = pick(rng);
        if (u == v) continue;
        if (g.degree(u) >= n - 1 || g.degree(v) >= n - 1) continue;
        g.add_edge(u, v, next++);
    }
    if (g.max_degree() > n - 1) throw InternalError("gen_sparse exceeded the degree cap");
    return g;
}

DemandGraph gen_one_factor_bundles(int n, int q) {
    if (n < 0 || n % 2 != 0) throw PreconditionError("gen_one_factor_bundles: n must be even");
    if (q < 1) throw PreconditionError("gen_one_factor_bundles: q must be >= 1");
    DemandGraph g(n);
    OriginId next = 0;
    for (int i = 0; i + 1 < n; i += 2)
        for (int j = 0; j < q; ++j) g.add_edge(i, i + 1, next++);
    return g;
}

DemandGraph gen_double_bundle(int n) {
    if (n < 4) throw PreconditionError("gen_double_bundle: n must be >= 4");
    DemandGraph g(n);
    OriginId next = 0;
    for (int j = 0; j < n - 2; ++j) g.add_edge(0, 1, next++);
    for (int j = 0; j < n - 2; ++j) g.add_edge(2, 3, next++);
    return g;
}

} // namespace pairsolve
