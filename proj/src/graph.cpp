#include "eideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace eideal {

namespace {

inline std::uint64_t bit(int i) { return std::uint64_t(1) << i; }

}  // namespace

SimpleGraph SimpleGraph::empty(int n) {
    if (n < 0 || n > 64) {
        throw ArgumentError("vertex count must be in 0..64, got " + std::to_string(n));
    }
    const std::uint64_t present = n == 64 ? ~std::uint64_t(0) : bit(n) - 1;
    return SimpleGraph(n, present, std::vector<std::uint64_t>(n, 0));
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g = empty(n);
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ArgumentError("edge endpoint out of range: " + std::to_string(u) + " " +
                                std::to_string(v));
        }
        if (u == v) throw ArgumentError("loop edge at vertex " + std::to_string(u));
        if (g.adj_[u - 1] & bit(v - 1)) {
            throw ArgumentError("duplicate edge " + std::to_string(u) + " " +
                                std::to_string(v));
        }
        g.adj_[u - 1] |= bit(v - 1);
        g.adj_[v - 1] |= bit(u - 1);
    }
    return g;
}

int SimpleGraph::vertex_count() const { return std::popcount(present_); }

std::vector<int> SimpleGraph::vertices() const {
    std::vector<int> out;
    for (int i = 0; i < ambient_; ++i) {
        if (present_ & bit(i)) out.push_back(i + 1);
    }
    return out;
}

bool SimpleGraph::has_vertex(int v) const {
    return v >= 1 && v <= ambient_ && (present_ & bit(v - 1));
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t total = 0;
    for (int i = 0; i < ambient_; ++i) total += std::popcount(adj_[i]);
    return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < ambient_; ++i) {
        std::uint64_t m = adj_[i] & ~(bit(i) | (bit(i) - 1));
        while (m) {
            const int j = std::countr_zero(m);
            out.emplace_back(i + 1, j + 1);
            m &= m - 1;
        }
    }
    return out;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u - 1] & bit(v - 1);
}

void SimpleGraph::check_vertex(int v) const {
    if (!has_vertex(v)) {
        throw ArgumentError("vertex " + std::to_string(v) + " not in graph");
    }
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v - 1]);
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    std::uint64_t m = adj_[v - 1];
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

std::vector<int> SimpleGraph::closed_neighbors(int v) const {
    std::vector<int> out = neighbors(v);
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph SimpleGraph::delete_vertices(const std::vector<int>& U) const {
    std::uint64_t kill = 0;
    for (int v : U) {
        check_vertex(v);
        kill |= bit(v - 1);
    }
    std::vector<std::uint64_t> adj(adj_);
    for (int i = 0; i < ambient_; ++i) {
        adj[i] = (kill & bit(i)) ? 0 : adj[i] & ~kill;
    }
    return SimpleGraph(ambient_, present_ & ~kill, std::move(adj));
}

SimpleGraph SimpleGraph::delete_edge(int u, int v) const {
    if (!has_edge(u, v)) {
        throw ArgumentError("edge " + std::to_string(u) + " " + std::to_string(v) +
                            " not in graph");
    }
    std::vector<std::uint64_t> adj(adj_);
    adj[u - 1] &= ~bit(v - 1);
    adj[v - 1] &= ~bit(u - 1);
    return SimpleGraph(ambient_, present_, std::move(adj));
}

SimpleGraph SimpleGraph::induced_subgraph(const std::vector<int>& W) const {
    std::uint64_t keep = 0;
    for (int v : W) {
        check_vertex(v);
        keep |= bit(v - 1);
    }
    std::vector<std::uint64_t> adj(adj_);
    for (int i = 0; i < ambient_; ++i) {
        adj[i] = (keep & bit(i)) ? adj[i] & keep : 0;
    }
    return SimpleGraph(ambient_, keep, std::move(adj));
}

SimpleGraph SimpleGraph::edge_subgraph(const std::vector<std::pair<int, int>>& edges) const {
    std::vector<std::uint64_t> adj(ambient_, 0);
    for (const auto& [u, v] : edges) {
        if (!has_edge(u, v)) {
            throw ArgumentError("edge " + std::to_string(u) + " " + std::to_string(v) +
                                " not in graph");
        }
        adj[u - 1] |= bit(v - 1);
        adj[v - 1] |= bit(u - 1);
    }
    return SimpleGraph(ambient_, present_, std::move(adj));
}

std::optional<int> SimpleGraph::distance_to_set(int x, const std::vector<int>& W) const {
    check_vertex(x);
    if (W.empty()) throw ArgumentError("distance_to_set: target set is empty");
    std::uint64_t target = 0;
    for (int v : W) {
        check_vertex(v);
        target |= bit(v - 1);
    }
    std::uint64_t frontier = bit(x - 1), seen = frontier;
    int dist = 0;
    while (frontier) {
        if (frontier & target) return dist;
        std::uint64_t next = 0;
        std::uint64_t m = frontier;
        while (m) {
            next |= adj_[std::countr_zero(m)];
            m &= m - 1;
        }
        frontier = next & ~seen & present_;
        seen |= frontier;
        ++dist;
    }
    return std::nullopt;
}

std::uint64_t SimpleGraph::component_mask(int b) const {
    std::uint64_t comp = bit(b), frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t m = frontier;
        while (m) {
            next |= adj_[std::countr_zero(m)];
            m &= m - 1;
        }
        frontier = next & present_ & ~comp;
        comp |= frontier;
    }
    return comp;
}

bool SimpleGraph::is_connected() const {
    if (!present_) return true;
    return component_mask(std::countr_zero(present_)) == present_;
}

std::optional<Cycle> SimpleGraph::unique_cycle() const {
    int components = 0;
    std::uint64_t left = present_;
    while (left) {
        const std::uint64_t comp = component_mask(std::countr_zero(left));
        left &= ~comp;
        ++components;
    }
    const long long rank = static_cast<long long>(edge_count()) - vertex_count() + components;
    if (rank == 0) return std::nullopt;
    if (rank > 1) {
        throw NotUnicyclicError("graph has " + std::to_string(rank) +
                                " independent cycles");
    }
    // Peel leaves; what remains is exactly the one cycle.
    std::vector<std::uint64_t> adj(adj_);
    std::uint64_t live = present_;
    bool changed = true;
    while (changed) {
        changed = false;
        std::uint64_t m = live;
        while (m) {
            const int i = std::countr_zero(m);
            m &= m - 1;
            if (std::popcount(adj[i]) <= 1) {
                std::uint64_t nb = adj[i];
                while (nb) {
                    adj[std::countr_zero(nb)] &= ~bit(i);
                    nb &= nb - 1;
                }
                adj[i] = 0;
                live &= ~bit(i);
                changed = true;
            }
        }
    }
    Cycle cyc;
    const int start = std::countr_zero(live);
    int prev = -1, cur = start;
    do {
        cyc.vertices.push_back(cur + 1);
        std::uint64_t nb = adj[cur] & ~(prev >= 0 ? bit(prev) : 0);
        const int nxt = std::countr_zero(nb);
        prev = cur;
        cur = nxt;
    } while (cur != start);
    for (std::size_t k = 0; k < cyc.vertices.size(); ++k) {
        int u = cyc.vertices[k];
        int v = cyc.vertices[(k + 1) % cyc.vertices.size()];
        if (u > v) std::swap(u, v);
        cyc.edges.emplace_back(u, v);
    }
    std::sort(cyc.edges.begin(), cyc.edges.end());
    return cyc;
}

namespace {

// Bron–Kerbosch with pivoting over an adjacency-mask graph; collects all
// maximal cliques.
void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t R, std::uint64_t P,
                   std::uint64_t X, std::vector<std::uint64_t>& out) {
    if (!P && !X) {
        out.push_back(R);
        return;
    }
    const std::uint64_t PX = P | X;
    int pivot = -1, best = -1;
    std::uint64_t m = PX;
    while (m) {
        const int u = std::countr_zero(m);
        m &= m - 1;
        const int cnt = std::popcount(P & adj[u]);
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    std::uint64_t cand = P & ~adj[pivot];
    while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        bron_kerbosch(adj, R | bit(v), P & adj[v], X & adj[v], out);
        P &= ~bit(v);
        X |= bit(v);
    }
}

}  // namespace

std::vector<std::vector<int>> SimpleGraph::minimal_vertex_covers() const {
    // Maximal independent sets of G = maximal cliques of the complement.
    std::vector<std::uint64_t> comp(ambient_, 0);
    for (int i = 0; i < ambient_; ++i) {
        if (!(present_ & bit(i))) continue;
        comp[i] = present_ & ~adj_[i] & ~bit(i);
    }
    std::vector<std::uint64_t> mis;
    bron_kerbosch(comp, 0, present_, 0, mis);
    std::vector<std::vector<int>> covers;
    covers.reserve(mis.size());
    for (const std::uint64_t s : mis) {
        std::vector<int> cover;
        std::uint64_t m = present_ & ~s;
        while (m) {
            cover.push_back(std::countr_zero(m) + 1);
            m &= m - 1;
        }
        covers.push_back(std::move(cover));
    }
    std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return covers;
}

namespace {

using Mask128 = unsigned __int128;

int mis_search(const std::vector<Mask128>& conflict, Mask128 cand, int current, int& best) {
    if (!cand) {
        best = std::max(best, current);
        return current;
    }
    const int remaining =
        std::popcount(static_cast<std::uint64_t>(cand)) +
        std::popcount(static_cast<std::uint64_t>(cand >> 64));
    if (current + remaining <= best) return current;
    const int v = (static_cast<std::uint64_t>(cand) != 0)
                      ? std::countr_zero(static_cast<std::uint64_t>(cand))
                      : 64 + std::countr_zero(static_cast<std::uint64_t>(cand >> 64));
    const Mask128 vb = Mask128(1) << v;
    const int with_v = mis_search(conflict, cand & ~vb & ~conflict[v], current + 1, best);
    const int without_v = mis_search(conflict, cand & ~vb, current, best);
    return std::max(with_v, without_v);
}

}  // namespace

int SimpleGraph::induced_matching_number() const {
    if (vertex_count() > 16) {
        throw ResourceError("induced matching search capped at 16 vertices, graph has " +
                            std::to_string(vertex_count()));
    }
    const auto es = edges();
    const std::size_t m = es.size();
    if (m == 0) return 0;
    // Two edges conflict when they share a vertex or an edge of G joins them;
    // an induced matching is an independent set of the conflict relation.
    std::vector<std::uint64_t> ends(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        ends[i] = bit(es[i].first - 1) | bit(es[i].second - 1);
    }
    std::vector<Mask128> conflict(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t closed =
            ends[i] | adj_[es[i].first - 1] | adj_[es[i].second - 1];
        for (std::size_t j = 0; j < m; ++j) {
            if (j != i && (ends[j] & closed)) conflict[i] |= Mask128(1) << j;
        }
    }
    int best = 0;
    Mask128 all = m == 128 ? ~Mask128(0) : (Mask128(1) << m) - 1;
    mis_search(conflict, all, 0, best);
    return best;
}

bool SimpleGraph::is_bipartite() const {
    std::vector<int> color(ambient_, -1);
    for (int s = 0; s < ambient_; ++s) {
        if (!(present_ & bit(s)) || color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            std::uint64_t m = adj_[u];
            while (m) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<int> SimpleGraph::leaves() const {
    std::vector<int> out;
    for (int i = 0; i < ambient_; ++i) {
        if ((present_ & bit(i)) && std::popcount(adj_[i]) == 1) out.push_back(i + 1);
    }
    return out;
}

bool SimpleGraph::operator==(const SimpleGraph& other) const {
    return ambient_ == other.ambient_ && present_ == other.present_ && adj_ == other.adj_;
}

std::string SimpleGraph::str() const {
    std::ostringstream os;
    os << "graph(n=" << ambient_ << ", vertices={";
    bool first = true;
    for (int v : vertices()) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << "}, edges={";
    first = true;
    for (const auto& [u, v] : edges()) {
        if (!first) os << ",";
        os << u << "-" << v;
        first = false;
    }
    os << "})";
    return os.str();
}

}  // namespace eideal
