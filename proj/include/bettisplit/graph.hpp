#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bettisplit/vertex_set.hpp"

namespace bettisplit {

// An induced cycle of length >= 4 (a "hole" / minimal cycle).
struct MinimalCycle {
    int length = 0;
    std::vector<int> vertices; // in cyclic order
};

// A finite simple graph with named vertices.  Immutable after construction;
// every operation returns a fresh value, so instances can be shared freely
// across threads.
class Graph {
public:
    Graph() = default;

    // Vertex order is the order of `names`; edges refer to those names.
    Graph(std::vector<std::string> names,
          const std::vector<std::pair<std::string, std::string>>& edges);

    // Vertex order is first appearance in `edges`, then `isolated`.
    static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                            const std::vector<std::string>& isolated = {});

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const;
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[v]; }
    int index_of(std::string_view name) const; // throws precondition_error if unknown

    VertexSet adjacency(int v) const { return adj_[v]; }
    VertexSet vertex_mask() const { return VertexSet::first_n(vertex_count()); }
    int degree(int v) const { return adj_[v].count(); }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    bool has_vertex(std::string_view name) const;

    // Edges as index pairs (u < v), sorted.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet neighbors(int v) const;

    Graph delete_edge(int u, int v) const;
    Graph delete_vertices(const VertexSet& s) const;
    Graph induced_subgraph(const VertexSet& s) const;
    Graph complement() const;

    // Connected components as induced subgraphs, ordered by smallest vertex
    // index; isolated vertices yield singleton components.
    std::vector<Graph> connected_components() const;
    std::vector<VertexSet> component_masks() const;

    bool is_forest() const;
    // Some cycle (as a vertex index sequence) when the graph is not a forest.
    std::optional<std::vector<int>> find_cycle() const;
    // An edge (u, v) with deg u == 1; smallest such u.  nullopt if none.
    std::optional<std::pair<int, int>> find_leaf_edge() const;

    // Perfect-elimination test via maximum cardinality search.
    bool is_chordal() const;
    // Shortest induced cycle of length >= 4; nullopt iff chordal.
    std::optional<MinimalCycle> shortest_minimal_cycle() const;

    // Maximum number of pairwise disconnected edges (vertex-disjoint, with no
    // edge of G between their endpoints).  Exact; forests use a tree DP, other
    // graphs a branch-and-bound capped at `edge_cap` edges.
    int induced_matching_number(int edge_cap = 32) const;

    // Number of r-subsets of vertices inducing a complete graph.
    long long clique_count(int r) const;

    bool operator==(const Graph& o) const { return names_ == o.names_ && adj_ == o.adj_; }

    // Canonical encoding of the labeled graph, suitable as a memo key.
    std::string canonical_key() const;

private:
    void check_vertex(int v) const;

    std::vector<std::string> names_;
    std::vector<VertexSet> adj_;
};

} // namespace bettisplit
