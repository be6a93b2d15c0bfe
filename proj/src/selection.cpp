#include "permcover/selection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permcover {

namespace {

SelectionEdge make_edge(const Permutation& selector, const OrderedPair& critical) {
    return SelectionEdge{std::min(critical.first, critical.second),
                         std::max(critical.first, critical.second), selector, critical};
}

std::vector<std::vector<OrderedPair>> critical_lists(const PermSet& s) {
    if (!is_minimal_complete(s))
        throw std::invalid_argument("build_selection_graph: set is not minimally complete");
    std::vector<std::vector<OrderedPair>> lists;
    lists.reserve(s.members().size());
    for (const Permutation& p : s.members()) lists.push_back(critical_elements(s, p));
    return lists;
}

std::vector<std::vector<bool>> adjacency(const CriticalSelectionGraph& g) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(g.n),
                                       std::vector<bool>(static_cast<std::size_t>(g.n), false));
    for (const SelectionEdge& e : g.edges) {
        adj[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)] = true;
        adj[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)] = true;
    }
    return adj;
}

}  // namespace

CriticalSelectionGraph build_selection_graph(const PermSet& s) {
    CriticalSelectionGraph g{s.n(), {}};
    const auto lists = critical_lists(s);
    for (std::size_t m = 0; m < lists.size(); ++m)
        g.edges.push_back(make_edge(s.members()[m], lists[m].front()));
    return g;
}

std::vector<CriticalSelectionGraph> build_all_selection_graphs(const PermSet& s,
                                                               std::size_t limit) {
    const auto lists = critical_lists(s);
    std::size_t total = 1;
    for (const auto& list : lists) {
        if (total > limit / list.size())
            throw std::length_error("build_all_selection_graphs: more than " +
                                    std::to_string(limit) + " selections");
        total *= list.size();
    }

    std::vector<CriticalSelectionGraph> out;
    out.reserve(total);
    std::vector<std::size_t> choice(lists.size(), 0);
    while (true) {
        CriticalSelectionGraph g{s.n(), {}};
        for (std::size_t m = 0; m < lists.size(); ++m)
            g.edges.push_back(make_edge(s.members()[m], lists[m][choice[m]]));
        out.push_back(std::move(g));

        // odometer: last member ticks fastest
        std::size_t m = lists.size();
        while (m > 0) {
            --m;
            if (++choice[m] < lists[m].size()) break;
            choice[m] = 0;
            if (m == 0) return out;
        }
    }
}

bool is_triangle_free(const CriticalSelectionGraph& g) {
    const auto adj = adjacency(g);
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            for (int c = b + 1; c < g.n; ++c)
                if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
                    return false;
        }
    return true;
}

std::optional<BalancedPartition> is_balanced_complete_bipartite(const CriticalSelectionGraph& g) {
    const auto adj = adjacency(g);
    const int n = g.n;

    // 2-color by BFS from vertex 1. A complete bipartite graph spanning
    // [n] with both sides nonempty is connected, so one sweep suffices.
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{1};
    color[0] = 1;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int w = 1; w <= n; ++w) {
            if (!adj[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(w - 1)]) continue;
            if (color[static_cast<std::size_t>(w - 1)] == 0) {
                color[static_cast<std::size_t>(w - 1)] = -color[static_cast<std::size_t>(v - 1)];
                queue.push_back(w);
            } else if (color[static_cast<std::size_t>(w - 1)] ==
                       color[static_cast<std::size_t>(v - 1)]) {
                return std::nullopt;  // odd cycle
            }
        }
    }

    std::vector<int> side1, side2;
    for (int v = 1; v <= n; ++v) {
        if (color[static_cast<std::size_t>(v - 1)] == 0) return std::nullopt;  // disconnected
        (color[static_cast<std::size_t>(v - 1)] == 1 ? side1 : side2).push_back(v);
    }
    const int lo = n / 2, hi = (n + 1) / 2;
    const int s1 = static_cast<int>(side1.size());
    if (std::min(s1, n - s1) != lo || std::max(s1, n - s1) != hi) return std::nullopt;

    // Completeness: every cross pair must be an edge.
    for (int a : side1)
        for (int b : side2)
            if (!adj[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)])
                return std::nullopt;

    return BalancedPartition(n, side1);  // side1 contains vertex 1
}

CriticalSelectionDigraph build_selection_digraph(const PermSet& s) {
    if (s.mode() != CoverMode::pair)
        throw std::invalid_argument("build_selection_digraph: set must be pair-mode");
    if (s.size() < 3)
        throw std::invalid_argument("build_selection_digraph: set must have at least 3 members");
    CriticalSelectionGraph g = build_selection_graph(s);
    return CriticalSelectionDigraph{g.n, std::move(g.edges)};
}

bool is_acyclic(const CriticalSelectionDigraph& d) {
    // Kahn: repeatedly strip vertices with in-degree zero.
    std::vector<int> indegree(static_cast<std::size_t>(d.n), 0);
    for (const SelectionEdge& a : d.arcs)
        ++indegree[static_cast<std::size_t>(a.directed_pair.second - 1)];

    std::vector<int> ready;
    for (int v = 1; v <= d.n; ++v)
        if (indegree[static_cast<std::size_t>(v - 1)] == 0) ready.push_back(v);

    int stripped = 0;
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++stripped;
        for (const SelectionEdge& a : d.arcs)
            if (a.directed_pair.first == v &&
                --indegree[static_cast<std::size_t>(a.directed_pair.second - 1)] == 0)
                ready.push_back(a.directed_pair.second);
    }
    return stripped == d.n;
}

bool has_doubly_oriented_edge(const CriticalSelectionDigraph& d) {
    for (std::size_t a = 0; a < d.arcs.size(); ++a)
        for (std::size_t b = a + 1; b < d.arcs.size(); ++b)
            if (d.arcs[a].directed_pair.first == d.arcs[b].directed_pair.second &&
                d.arcs[a].directed_pair.second == d.arcs[b].directed_pair.first)
                return true;
    return false;
}

}  // namespace permcover
