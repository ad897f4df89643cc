#include "eideal/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "eideal/canonical.hpp"
#include "eideal/graph_io.hpp"

namespace eideal {

namespace {

void check_range(const char* what, int n, int lo, int cap) {
    if (n < lo || n > cap) {
        throw ArgumentError(std::string(what) + " enumeration supports " +
                            std::to_string(lo) + ".." + std::to_string(cap) +
                            " vertices, got " + std::to_string(n));
    }
}

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    }
    return pairs;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false if x and y were already joined (edge closes a cycle)
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

using EdgeSel = std::vector<int>;  // indices into all_pairs(n)

// All k-subsets of {0..m-1}, invoking fn on each.
template <typename Fn>
void combinations(int m, int k, Fn&& fn) {
    EdgeSel sel(k);
    for (int i = 0; i < k; ++i) sel[i] = i;
    if (k > m) return;
    while (true) {
        fn(sel);
        int i = k - 1;
        while (i >= 0 && sel[i] == m - k + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
}

std::vector<SimpleGraph> dedup_sorted(std::map<std::string, SimpleGraph>&& classes) {
    std::vector<SimpleGraph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace

std::vector<SimpleGraph> enumerate_unicyclic(int n, int cap) {
    check_range("unicyclic", n, 3, cap);
    const auto pairs = all_pairs(n);
    std::map<std::string, SimpleGraph> classes;
    std::vector<std::pair<int, int>> edges(n);
    // Connected graph with n vertices and n edges has exactly one cycle.
    combinations(static_cast<int>(pairs.size()), n, [&](const EdgeSel& sel) {
        UnionFind uf(n);
        int components = n;
        for (int idx : sel) {
            if (uf.unite(pairs[idx].first - 1, pairs[idx].second - 1)) --components;
        }
        if (components != 1) return;
        for (int i = 0; i < n; ++i) edges[i] = pairs[sel[i]];
        SimpleGraph cg = canonical_graph(SimpleGraph::from_edges(n, edges));
        classes.emplace(encode_graph6(cg), std::move(cg));
    });
    return dedup_sorted(std::move(classes));
}

std::vector<SimpleGraph> enumerate_forests(int n, int cap) {
    check_range("forest", n, 2, cap);
    const auto pairs = all_pairs(n);
    std::map<std::string, SimpleGraph> classes;
    // A forest with no isolated vertex needs between ceil(n/2) and n-1 edges.
    for (int k = (n + 1) / 2; k <= n - 1; ++k) {
        std::vector<std::pair<int, int>> edges(k);
        combinations(static_cast<int>(pairs.size()), k, [&](const EdgeSel& sel) {
            UnionFind uf(n);
            std::uint64_t touched = 0;
            for (int idx : sel) {
                if (!uf.unite(pairs[idx].first - 1, pairs[idx].second - 1)) return;
                touched |= std::uint64_t(1) << (pairs[idx].first - 1);
                touched |= std::uint64_t(1) << (pairs[idx].second - 1);
            }
            if (touched != (std::uint64_t(1) << n) - 1) return;
            for (int i = 0; i < k; ++i) edges[i] = pairs[sel[i]];
            SimpleGraph cg = canonical_graph(SimpleGraph::from_edges(n, edges));
            classes.emplace(encode_graph6(cg), std::move(cg));
        });
    }
    return dedup_sorted(std::move(classes));
}

namespace {

std::vector<SimpleGraph> enumerate_by_mask(int n, bool connected_only) {
    const auto pairs = all_pairs(n);
    const std::size_t m = pairs.size();
    std::map<std::string, SimpleGraph> classes;
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::uint64_t(1) << i)) edges.push_back(pairs[i]);
        }
        SimpleGraph g = SimpleGraph::from_edges(n, edges);
        if (connected_only && !g.is_connected()) continue;
        SimpleGraph cg = canonical_graph(g);
        classes.emplace(encode_graph6(cg), std::move(cg));
    }
    return dedup_sorted(std::move(classes));
}

}  // namespace

std::vector<SimpleGraph> enumerate_connected(int n, int cap) {
    check_range("connected graph", n, 1, cap);
    if (n == 1) return {};
    return enumerate_by_mask(n, true);
}

std::vector<SimpleGraph> enumerate_all_graphs(int n, int cap) {
    check_range("graph", n, 1, cap);
    if (n == 1) return {};
    return enumerate_by_mask(n, false);
}

}  // namespace eideal
