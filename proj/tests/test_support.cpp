#include "test_support.hpp"

#include <algorithm>

namespace pairsolve {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void rec(std::vector<int> remaining, EdgeList edges,
         const std::function<void(const EdgeList&)>& fn) {
    if (remaining.empty()) {
        fn(edges);
        return;
    }
    int v = remaining.front();
    std::vector<int> rest(remaining.begin() + 1, remaining.end());

    rec(rest, edges, fn); // v isolated

    for (std::size_t i = 0; i < rest.size(); ++i) {
        int u = rest[i];
        std::vector<int> rest2 = rest;
        rest2.erase(rest2.begin() + i);
        EdgeList single = edges;
        single.push_back({v, u});
        rec(rest2, single, fn);
        EdgeList c2 = single;
        c2.push_back({v, u});
        rec(rest2, c2, fn);
    }

    // components of size k >= 3 containing v
    const int r = static_cast<int>(rest.size());
    for (int k = 3; k <= r + 1; ++k) {
        std::vector<int> mask(r, 0);
        std::fill(mask.begin(), mask.begin() + (k - 1), 1);
        std::sort(mask.begin(), mask.end());
        do {
            std::vector<int> chosen{v}, rest2;
            for (int i = 0; i < r; ++i)
                (mask[i] ? chosen : rest2).push_back(rest[i]);

            std::vector<int> perm(chosen.begin() + 1, chosen.end());
            std::sort(perm.begin(), perm.end());
            // paths: all sequences of `chosen` with first < last; enumerate
            // permutations of the non-v part and every insertion slot for v
            std::vector<int> base = chosen;
            std::sort(base.begin(), base.end());
            do {
                if (base.front() < base.back()) {
                    EdgeList path = edges;
                    for (int i = 0; i + 1 < k; ++i) path.push_back({base[i], base[i + 1]});
                    rec(rest2, path, fn);
                }
            } while (std::next_permutation(base.begin(), base.end()));

            // cycles: fixed start v (= min of the component), second < last
            do {
                if (perm.front() < perm.back()) {
                    EdgeList cyc = edges;
                    cyc.push_back({v, perm.front()});
                    for (int i = 0; i + 1 < k - 1; ++i) cyc.push_back({perm[i], perm[i + 1]});
                    cyc.push_back({perm.back(), v});
                    rec(rest2, cyc, fn);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        } while (std::next_permutation(mask.begin(), mask.end()));
    }
}

} // namespace

void enumerate_le2_multigraphs(int n, const std::function<void(const EdgeList&)>& fn) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    rec(all, {}, fn);
}

} // namespace pairsolve
