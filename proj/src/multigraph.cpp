#include "nzflow/multigraph.hpp"

#include <algorithm>
#include <queue>

namespace nzflow {

Multigraph::Multigraph(int vertices, std::vector<Edge> edge_list)
    : vertex_count(vertices), edges(std::move(edge_list)) {
    if (vertices < 0) throw std::invalid_argument("vertex_count must be nonnegative");
    for (const Edge& e : edges) {
        if (e.tail < 0 || e.tail >= vertices || e.head < 0 || e.head >= vertices)
            throw std::invalid_argument("edge endpoint out of range");
    }
}

Orientation Orientation::flipped() const {
    Orientation o = *this;
    for (auto& s : o.signs) s = static_cast<std::int8_t>(-s);
    return o;
}

std::string Orientation::to_string() const {
    std::string s;
    s.reserve(signs.size());
    for (auto v : signs) s.push_back(v > 0 ? '+' : '-');
    return s;
}

Orientation Orientation::from_string(const std::string& s) {
    Orientation o;
    o.signs.reserve(s.size());
    for (char c : s) {
        if (c == '+')
            o.signs.push_back(1);
        else if (c == '-')
            o.signs.push_back(-1);
        else
            throw std::invalid_argument("orientation string must be over {+,-}");
    }
    return o;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> undirected_adjacency(const Multigraph& g) {
    // adjacency[v] holds (neighbor, edge id); loops appear once.
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.is_loop()) {
            adj[ed.tail].push_back({ed.tail, e});
        } else {
            adj[ed.tail].push_back({ed.head, e});
            adj[ed.head].push_back({ed.tail, e});
        }
    }
    return adj;
}

}  // namespace

std::vector<int> components(const Multigraph& g) {
    std::vector<int> comp(g.vertex_count, -1);
    auto adj = undirected_adjacency(g);
    int next = 0;
    for (int start = 0; start < g.vertex_count; ++start) {
        if (comp[start] != -1) continue;
        comp[start] = next;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : adj[v]) {
                (void)e;
                if (comp[w] == -1) {
                    comp[w] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int component_count(const Multigraph& g) {
    auto comp = components(g);
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

int cyclomatic_number(const Multigraph& g) {
    return g.edge_count() - g.vertex_count + component_count(g);
}

std::vector<int> bridges(const Multigraph& g) {
    // Iterative DFS low-link, skipping the tree edge by id so parallel copies
    // are handled correctly.
    int n = g.vertex_count;
    auto adj = undirected_adjacency(g);
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> result;
    int timer = 0;

    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int start = 0; start < n; ++start) {
        if (disc[start] != -1) continue;
        stack.push_back({start, -1, 0});
        disc[start] = low[start] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, e] = adj[f.v][f.next++];
                if (e == f.parent_edge || g.edges[e].is_loop()) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] > disc[u]) result.push_back(pe);
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

IncidenceMatrix incidence_matrix(const Multigraph& g, const Orientation& sigma) {
    require_edge_length(g, sigma.signs.size(), "orientation");
    IncidenceMatrix a(g.vertex_count, std::vector<int>(g.edge_count(), 0));
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.is_loop()) continue;
        int s = sigma.signs[e];
        a[ed.head][e] += s;
        a[ed.tail][e] -= s;
    }
    return a;
}

IncidenceMatrix incidence_matrix(const Multigraph& g) {
    return incidence_matrix(g, Orientation::all_plus(g.edge_count()));
}

bool is_flow(const Multigraph& g, const Orientation& sigma, const FlowVector& x) {
    require_edge_length(g, sigma.signs.size(), "orientation");
    require_edge_length(g, x.size(), "flow vector");
    std::vector<std::int64_t> net(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.is_loop()) continue;
        std::int64_t v = sigma.signs[e] * x[e];
        net[ed.head] += v;
        net[ed.tail] -= v;
    }
    for (auto v : net)
        if (v != 0) return false;
    return true;
}

bool is_flow(const Multigraph& g, const FlowVector& x) {
    return is_flow(g, Orientation::all_plus(g.edge_count()), x);
}

CycleBasis fundamental_cycle_basis(const Multigraph& g) {
    CycleBasis basis;
    int n = g.vertex_count;
    int m = g.edge_count();

    // BFS spanning forest; parent_edge[v] leads toward the component root.
    std::vector<int> parent_edge(n, -1), parent_vertex(n, -1), depth(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<bool> in_forest(m, false);
    auto adj = undirected_adjacency(g);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : adj[v]) {
                if (seen[w] || g.edges[e].is_loop()) continue;
                seen[w] = true;
                parent_edge[w] = e;
                parent_vertex[w] = v;
                depth[w] = depth[v] + 1;
                in_forest[e] = true;
                basis.forest_edges.push_back(e);
                q.push(w);
            }
        }
    }
    std::sort(basis.forest_edges.begin(), basis.forest_edges.end());

    // Walks the forest path from a to b, applying signs so the traversal adds
    // a ->...-> b to the cycle.
    auto add_path = [&](std::vector<std::int8_t>& cyc, int a, int b) {
        while (a != b) {
            if (depth[a] >= depth[b]) {
                int e = parent_edge[a];
                // traverse a -> parent(a)
                cyc[e] += (g.edges[e].tail == a) ? 1 : -1;
                a = parent_vertex[a];
            } else {
                int e = parent_edge[b];
                // traverse parent(b) -> b
                cyc[e] += (g.edges[e].head == b) ? 1 : -1;
                b = parent_vertex[b];
            }
        }
    };

    for (int e = 0; e < m; ++e) {
        if (in_forest[e]) continue;
        basis.free_edges.push_back(e);
        std::vector<std::int8_t> cyc(m, 0);
        cyc[e] = 1;
        if (!g.edges[e].is_loop()) add_path(cyc, g.edges[e].head, g.edges[e].tail);
        basis.cycles.push_back(std::move(cyc));
    }
    return basis;
}

}  // namespace nzflow
