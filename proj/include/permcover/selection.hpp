#ifndef PERMCOVER_SELECTION_HPP
#define PERMCOVER_SELECTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "permcover/completeness.hpp"
#include "permcover/partition.hpp"
#include "permcover/permutation.hpp"

namespace permcover {

// One selected critical pair, recorded with the member that owns it.
// The undirected edge is {u, v} with u < v; directed_pair keeps the
// covered orientation.
struct SelectionEdge {
    int u;
    int v;
    Permutation selector;
    OrderedPair directed_pair;
};

// A critical selection graph: one edge per member of the originating
// set, on vertex set [n]. Distinct edge records may share the same
// vertex pair (this happens only for n = 2 in pair mode).
struct CriticalSelectionGraph {
    int n;
    std::vector<SelectionEdge> edges;
};

enum class SelectionStrategy { lex_min, all };

// The selection graph choosing, per member, the lexicographically
// smallest critical pair. The set must be minimally complete.
CriticalSelectionGraph build_selection_graph(const PermSet& s);

// Every possible selection: the Cartesian product of the per-member
// critical lists, members in canonical order, each list in
// lexicographic pair order. Refuses products larger than `limit`.
std::vector<CriticalSelectionGraph> build_all_selection_graphs(const PermSet& s,
                                                               std::size_t limit = 1000000);

// True iff no three vertices are pairwise adjacent.
bool is_triangle_free(const CriticalSelectionGraph& g);

// If g is a complete bipartite graph on [n] whose sides have sizes
// floor(n/2) and ceil(n/2), returns the bipartition with the side
// containing vertex 1 as W; otherwise nullopt.
std::optional<BalancedPartition> is_balanced_complete_bipartite(const CriticalSelectionGraph& g);

// The lex_min selection graph of a pair-mode set with its edges kept as
// arcs: each critical pair (i,j) is the arc i -> j.
struct CriticalSelectionDigraph {
    int n;
    std::vector<SelectionEdge> arcs;
};

// Requires a minimally pair-complete set with at least 3 members.
CriticalSelectionDigraph build_selection_digraph(const PermSet& s);

bool is_acyclic(const CriticalSelectionDigraph& d);

// True iff some vertex pair carries arcs in both directions.
bool has_doubly_oriented_edge(const CriticalSelectionDigraph& d);

}  // namespace permcover

#endif
