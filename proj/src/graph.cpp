#include "bettisplit/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "bettisplit/errors.hpp"

namespace bettisplit {

namespace {

void check_capacity(std::size_t n) {
    if (n > static_cast<std::size_t>(VertexSet::capacity()))
        throw resource_error("graph has " + std::to_string(n) + " vertices; limit is " +
                             std::to_string(VertexSet::capacity()) +
                             " (rebuild with -DBETTISPLIT_WIDE_BITSETS=ON for wider sets)");
}

} // namespace

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
    check_capacity(names_.size());
    std::unordered_map<std::string_view, int> idx;
    for (int i = 0; i < vertex_count(); ++i) {
        if (!idx.emplace(names_[i], i).second)
            throw precondition_error("duplicate vertex name '" + names_[i] + "'");
    }
    adj_.assign(names_.size(), VertexSet());
    for (const auto& [a, b] : edges) {
        auto ia = idx.find(a);
        auto ib = idx.find(b);
        if (ia == idx.end()) throw precondition_error("unknown vertex '" + a + "'");
        if (ib == idx.end()) throw precondition_error("unknown vertex '" + b + "'");
        if (ia->second == ib->second)
            throw precondition_error("loop at vertex '" + a + "' is not allowed");
        adj_[ia->second].set(ib->second);
        adj_[ib->second].set(ia->second);
    }
}

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& isolated) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> seen;
    auto touch = [&](const std::string& s) {
        if (seen.emplace(s, static_cast<int>(names.size())).second) names.push_back(s);
    };
    for (const auto& [a, b] : edges) {
        touch(a);
        touch(b);
    }
    for (const auto& s : isolated) touch(s);
    return Graph(std::move(names), edges);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& a : adj_) twice += a.count();
    return twice / 2;
}

int Graph::index_of(std::string_view name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (names_[i] == name) return i;
    throw precondition_error("unknown vertex '" + std::string(name) + "'");
}

bool Graph::has_vertex(std::string_view name) const {
    for (const auto& n : names_)
        if (n == name) return true;
    return false;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw precondition_error("vertex index " + std::to_string(v) + " out of range");
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

Graph Graph::delete_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v))
        throw precondition_error("edge " + names_[u] + "-" + names_[v] + " is not in the graph");
    Graph g(*this);
    g.adj_[u].reset(v);
    g.adj_[v].reset(u);
    return g;
}

Graph Graph::delete_vertices(const VertexSet& s) const {
    if (!vertex_mask().contains(s))
        throw precondition_error("vertex set to delete contains out-of-range indices");
    return induced_subgraph(vertex_mask().minus(s));
}

Graph Graph::induced_subgraph(const VertexSet& s) const {
    if (!vertex_mask().contains(s))
        throw precondition_error("vertex set contains out-of-range indices");
    Graph g;
    std::vector<int> newidx(vertex_count(), -1);
    s.for_each([&](int v) {
        newidx[v] = static_cast<int>(g.names_.size());
        g.names_.push_back(names_[v]);
    });
    g.adj_.assign(g.names_.size(), VertexSet());
    s.for_each([&](int v) {
        (adj_[v] & s).for_each([&](int w) { g.adj_[newidx[v]].set(newidx[w]); });
    });
    return g;
}

Graph Graph::complement() const {
    Graph g(*this);
    VertexSet all = vertex_mask();
    for (int v = 0; v < vertex_count(); ++v) {
        g.adj_[v] = all.minus(adj_[v]);
        g.adj_[v].reset(v);
    }
    return g;
}

std::vector<VertexSet> Graph::component_masks() const {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int v = 0; v < vertex_count(); ++v) {
        if (seen.test(v)) continue;
        VertexSet comp = VertexSet::single(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int u) { next |= adj_[u]; });
            frontier = next.minus(comp);
            comp |= next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

std::vector<Graph> Graph::connected_components() const {
    std::vector<Graph> out;
    for (const auto& m : component_masks()) out.push_back(induced_subgraph(m));
    return out;
}

bool Graph::is_forest() const {
    // acyclic <=> every component has |E| = |V| - 1
    for (const auto& m : component_masks()) {
        int verts = m.count();
        int twice = 0;
        m.for_each([&](int v) { twice += (adj_[v] & m).count(); });
        if (twice / 2 != verts - 1) return false;
    }
    return true;
}

std::optional<std::vector<int>> Graph::find_cycle() const {
    // Recursive DFS; a back edge to a gray (in-progress) vertex closes a cycle.
    enum { White, Gray, Black };
    std::vector<int> color(vertex_count(), White), parent(vertex_count(), -1);
    std::vector<int> cycle;
    std::function<bool(int, int)> dfs = [&](int v, int p) -> bool {
        color[v] = Gray;
        bool found = false;
        adj_[v].for_each([&](int w) {
            if (found || w == p) return;
            if (color[w] == Gray) {
                for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                found = true;
            } else if (color[w] == White) {
                parent[w] = v;
                if (dfs(w, v)) found = true;
            }
        });
        color[v] = Black;
        return found;
    };
    for (int s = 0; s < vertex_count(); ++s)
        if (color[s] == White && dfs(s, -1)) return cycle;
    return std::nullopt;
}

std::optional<std::pair<int, int>> Graph::find_leaf_edge() const {
    for (int u = 0; u < vertex_count(); ++u)
        if (degree(u) == 1) return std::make_pair(u, adj_[u].lowest());
    return std::nullopt;
}

bool Graph::is_chordal() const {
    const int n = vertex_count();
    if (n == 0) return true;
    // Maximum cardinality search.
    std::vector<int> weight(n, 0), order; // order[k] = k-th chosen vertex
    std::vector<int> pos(n, -1);
    VertexSet unnumbered = vertex_mask();
    for (int k = 0; k < n; ++k) {
        int best = -1;
        unnumbered.for_each([&](int v) {
            if (best == -1 || weight[v] > weight[best]) best = v;
        });
        order.push_back(best);
        pos[best] = k;
        unnumbered.reset(best);
        (adj_[best] & unnumbered).for_each([&](int v) { ++weight[v]; });
    }
    // Reverse MCS order is a perfect elimination order iff chordal: for each
    // vertex, its earlier-numbered neighbors minus the latest of them must be
    // adjacent to that latest one.
    for (int k = 0; k < n; ++k) {
        int v = order[k];
        VertexSet earlier;
        adj_[v].for_each([&](int u) {
            if (pos[u] < k) earlier.set(u);
        });
        if (earlier.empty()) continue;
        int latest = -1;
        earlier.for_each([&](int u) {
            if (latest == -1 || pos[u] > pos[latest]) latest = u;
        });
        VertexSet rest = earlier;
        rest.reset(latest);
        if (!adj_[latest].contains(rest)) return false;
    }
    return true;
}

std::optional<MinimalCycle> Graph::shortest_minimal_cycle() const {
    // For each edge uv and each pair a in N(u)\N[v], b in N(v)\N[u] with
    // ab not an edge, a shortest a-b path avoiding N[u] u N[v] closes an
    // induced cycle u-a-...-b-v.  ab an edge gives an induced 4-cycle.
    const int n = vertex_count();
    int best = -1;
    MinimalCycle best_cycle;
    for (int u = 0; u < n && best != 4; ++u) {
        adj_[u].for_each([&](int v) {
            if (best == 4) return;
            VertexSet closed_u = adj_[u];
            closed_u.set(u);
            VertexSet closed_v = adj_[v];
            closed_v.set(v);
            VertexSet as = adj_[u].minus(closed_v);
            VertexSet bs = adj_[v].minus(closed_u);
            if (as.empty() || bs.empty()) return;
            VertexSet forbidden = closed_u | closed_v;
            as.for_each([&](int a) {
                if (best == 4) return;
                // C4 check: a adjacent to some b.
                VertexSet direct = adj_[a] & bs;
                if (!direct.empty()) {
                    int b = direct.lowest();
                    best = 4;
                    best_cycle = MinimalCycle{4, {u, a, b, v}};
                    return;
                }
                // BFS from a through V \ (N[u] u N[v]), then step into bs.
                VertexSet allowed = vertex_mask().minus(forbidden);
                std::vector<int> dist(n, -1), par(n, -1);
                std::deque<int> q;
                dist[a] = 0;
                q.push_back(a);
                while (!q.empty()) {
                    int x = q.front();
                    q.pop_front();
                    (adj_[x] & allowed).for_each([&](int y) {
                        if (dist[y] == -1) {
                            dist[y] = dist[x] + 1;
                            par[y] = x;
                            q.push_back(y);
                        }
                    });
                }
                bs.for_each([&](int b) {
                    int bd = -1, bvia = -1;
                    (adj_[b] & allowed).for_each([&](int y) {
                        if (dist[y] != -1 && (bd == -1 || dist[y] + 1 < bd)) {
                            bd = dist[y] + 1;
                            bvia = y;
                        }
                    });
                    if (bd == -1) return;
                    int len = bd + 3; // u, a, ..., b, v
                    if (best == -1 || len < best) {
                        best = len;
                        std::vector<int> path;
                        for (int x = bvia; x != -1; x = par[x]) path.push_back(x);
                        std::reverse(path.begin(), path.end()); // a .. bvia
                        std::vector<int> cyc{u};
                        cyc.insert(cyc.end(), path.begin(), path.end());
                        cyc.push_back(b);
                        cyc.push_back(v);
                        best_cycle = MinimalCycle{len, cyc};
                    }
                });
            });
        });
        if (best == 4) break;
    }
    if (best == -1) return std::nullopt;
    return best_cycle;
}

namespace {

// Branch and bound over edges, in index order.  Including edge uv removes
// N[u] u N[v] from play.
int im_search(const std::vector<std::pair<int, int>>& edges, const std::vector<VertexSet>& adj,
              std::size_t from, VertexSet alive, int current, int& best) {
    int remaining = 0;
    for (std::size_t i = from; i < edges.size(); ++i)
        if (alive.test(edges[i].first) && alive.test(edges[i].second)) ++remaining;
    if (current + remaining <= best) return best;
    for (std::size_t i = from; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (!alive.test(u) || !alive.test(v)) continue;
        VertexSet removed = adj[u] | adj[v];
        removed.set(u);
        removed.set(v);
        best = std::max(best, current + 1);
        im_search(edges, adj, i + 1, alive.minus(removed), current + 1, best);
    }
    return best;
}

} // namespace

int Graph::induced_matching_number(int edge_cap) const {
    auto es = edges();
    if (es.empty()) return 0;
    if (is_forest()) {
        // Tree DP per component.  A(v): best in subtree, v unmatched.
        // B(v): best in subtree, v matched to a child.
        int total = 0;
        std::vector<int> A(vertex_count(), 0), B(vertex_count(), -1);
        for (const auto& comp : component_masks()) {
            int root = comp.lowest();
            // iterative post-order
            std::vector<int> order, parent(vertex_count(), -1), stack{root};
            VertexSet seen = VertexSet::single(root);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                order.push_back(v);
                (adj_[v] & comp).for_each([&](int w) {
                    if (!seen.test(w)) {
                        seen.set(w);
                        parent[w] = v;
                        stack.push_back(w);
                    }
                });
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                int v = *it;
                std::vector<int> children;
                (adj_[v] & comp).for_each([&](int w) {
                    if (parent[w] == v) children.push_back(w);
                });
                int sumA = 0, sum_best = 0;
                for (int c : children) {
                    sumA += A[c];
                    sum_best += std::max(A[c], B[c]);
                }
                A[v] = sum_best;
                B[v] = -1;
                for (int c : children) {
                    int grandA = 0;
                    (adj_[c] & comp).for_each([&](int g) {
                        if (parent[g] == c) grandA += A[g];
                    });
                    B[v] = std::max(B[v], 1 + grandA + (sumA - A[c]));
                }
            }
            total += std::max(A[root], B[root]);
        }
        return total;
    }
    if (static_cast<int>(es.size()) > edge_cap)
        throw resource_error("induced matching search over " + std::to_string(es.size()) +
                             " edges exceeds the cap of " + std::to_string(edge_cap));
    int best = 0;
    im_search(es, adj_, 0, vertex_mask(), 0, best);
    return best;
}

long long Graph::clique_count(int r) const {
    if (r < 1) throw precondition_error("clique size must be >= 1");
    if (r == 1) return vertex_count();
    long long count = 0;
    // extend cliques by vertices in increasing order
    std::vector<std::pair<VertexSet, int>> stack; // (candidates above last, depth)
    for (int v = 0; v < vertex_count(); ++v) {
        VertexSet above;
        adj_[v].for_each([&](int w) {
            if (w > v) above.set(w);
        });
        stack.emplace_back(above, 1);
        while (!stack.empty()) {
            auto [cand, depth] = stack.back();
            stack.pop_back();
            if (depth == r - 1) {
                count += cand.count();
                continue;
            }
            cand.for_each([&](int w) {
                VertexSet next = cand & adj_[w];
                VertexSet trimmed;
                next.for_each([&](int x) {
                    if (x > w) trimmed.set(x);
                });
                if (trimmed.count() >= r - depth - 1)
                    stack.emplace_back(trimmed, depth + 1);
            });
        }
    }
    return count;
}

std::string Graph::canonical_key() const {
    std::ostringstream os;
    for (const auto& n : names_) os << n << ',';
    os << '|';
    for (const auto& a : adj_)
        for (int w = 0; w < VertexSet::kWords; ++w) os << std::hex << a.word(w) << ';';
    return os.str();
}

} // namespace bettisplit
