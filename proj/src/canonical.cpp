#include "eideal/canonical.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "eideal/graph_io.hpp"

namespace eideal {

namespace {

// Vertices are 0..k-1 (positions into the live vertex list); adj is the
// restricted adjacency in those positions.

std::vector<int> refine(const std::vector<std::vector<int>>& adj, std::vector<int> color) {
    const std::size_t k = adj.size();
    while (true) {
        // Signature: (current color, sorted colors of neighbors).
        std::vector<std::pair<std::vector<int>, int>> sigs(k);
        for (std::size_t v = 0; v < k; ++v) {
            std::vector<int> s;
            s.reserve(adj[v].size() + 1);
            s.push_back(color[v]);
            for (int w : adj[v]) s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
            sigs[v] = {std::move(s), static_cast<int>(v)};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sigs) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        std::vector<int> fresh(k);
        for (std::size_t v = 0; v < k; ++v) fresh[v] = rank[sigs[v].first];
        if (fresh == color) return color;
        color = std::move(fresh);
    }
}

struct Search {
    const std::vector<std::vector<int>>& adj;
    std::size_t k;
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_order;
    bool have_best = false;

    // Upper-triangle bits of the relabeled adjacency, order[p] = old vertex
    // at new position p; packed row-major into 64-bit words.
    std::vector<std::uint64_t> encode(const std::vector<int>& order) const {
        std::vector<char> is_adj(k * k, 0);
        for (std::size_t v = 0; v < k; ++v) {
            for (int w : adj[v]) is_adj[v * k + w] = 1;
        }
        std::vector<std::uint64_t> code((k * k / 2 + 63) / 64 + 1, 0);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j, ++idx) {
                if (is_adj[order[i] * k + order[j]]) {
                    code[idx / 64] |= std::uint64_t(1) << (idx % 64);
                }
            }
        }
        return code;
    }

    void visit(const std::vector<int>& color) {
        // All color classes singletons: color is a permutation rank.
        std::vector<int> order(k);
        for (std::size_t v = 0; v < k; ++v) order[color[v]] = static_cast<int>(v);
        auto code = encode(order);
        if (!have_best || code < best_code) {
            best_code = std::move(code);
            best_order = order;
            have_best = true;
        }
    }

    void run(std::vector<int> color) {
        color = refine(adj, std::move(color));
        // Find the smallest non-singleton color class.
        std::vector<int> count(k, 0);
        for (int c : color) ++count[c];
        int target = -1;
        for (std::size_t c = 0; c < k; ++c) {
            if (count[c] > 1) {
                target = static_cast<int>(c);
                break;
            }
        }
        if (target < 0) {
            visit(color);
            return;
        }
        for (std::size_t v = 0; v < k; ++v) {
            if (color[v] != target) continue;
            // Individualize v: give it a color just below its class.
            std::vector<int> next(color);
            for (std::size_t w = 0; w < k; ++w) next[w] = 2 * next[w] + 1;
            next[v] -= 1;
            run(std::move(next));
        }
    }
};

}  // namespace

SimpleGraph canonical_graph(const SimpleGraph& g) {
    const auto verts = g.vertices();
    const std::size_t k = verts.size();
    std::vector<std::vector<int>> adj(k);
    std::vector<int> pos(g.ambient() + 1, -1);
    for (std::size_t i = 0; i < k; ++i) pos[verts[i]] = static_cast<int>(i);
    for (const auto& [u, v] : g.edges()) {
        adj[pos[u]].push_back(pos[v]);
        adj[pos[v]].push_back(pos[u]);
    }
    if (k == 0) return SimpleGraph::empty(0);
    Search search{adj, k, {}, {}, false};
    search.run(std::vector<int>(k, 0));
    std::vector<std::pair<int, int>> edges;
    std::vector<int> newpos(k);
    for (std::size_t p = 0; p < k; ++p) newpos[search.best_order[p]] = static_cast<int>(p);
    for (std::size_t v = 0; v < k; ++v) {
        for (int w : adj[v]) {
            if (newpos[v] < newpos[w]) edges.emplace_back(newpos[v] + 1, newpos[w] + 1);
        }
    }
    std::sort(edges.begin(), edges.end());
    return SimpleGraph::from_edges(static_cast<int>(k), edges);
}

std::string canonical_code(const SimpleGraph& g) { return encode_graph6(canonical_graph(g)); }

}  // namespace eideal
