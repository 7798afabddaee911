#include "nzflow/orientations.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nzflow {

namespace {

// Tarjan strongly connected components, iterative. Returns component id per
// vertex.
std::vector<int> strongly_connected(const Multigraph& g, const Orientation& sigma) {
    int n = g.vertex_count;
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.is_loop()) continue;
        if (sigma.signs[e] > 0)
            out[ed.tail].push_back(ed.head);
        else
            out[ed.head].push_back(ed.tail);
    }

    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> scc_stack;
    int next_index = 0, next_comp = 0;

    struct Frame {
        int v;
        std::size_t next;
    };
    std::vector<Frame> call;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        scc_stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < out[f.v].size()) {
                int w = out[f.v][f.next++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    scc_stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                call.pop_back();
                if (!call.empty()) {
                    int u = call.back().v;
                    low[u] = std::min(low[u], low[v]);
                }
                if (low[v] == index[v]) {
                    while (true) {
                        int w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if (w == v) break;
                    }
                    ++next_comp;
                }
            }
        }
    }
    return comp;
}

Orientation orientation_from_mask(std::uint32_t mask, int m) {
    Orientation o;
    o.signs.resize(m);
    for (int e = 0; e < m; ++e) o.signs[e] = (mask >> e) & 1u ? -1 : 1;
    return o;
}

// Lexicographic order of the sign string, '+' < '-': edge 0 is the most
// significant position and bit set means '-'.
std::uint64_t lex_key(std::uint32_t mask, int m) {
    std::uint64_t key = 0;
    for (int e = 0; e < m; ++e) key = (key << 1) | ((mask >> e) & 1u);
    return key;
}

}  // namespace

bool OrientationSet::contains(const Orientation& o) const {
    return std::find(members.begin(), members.end(), o) != members.end();
}

bool is_totally_cyclic(const Multigraph& g, const Orientation& sigma) {
    require_edge_length(g, sigma.signs.size(), "orientation");
    auto comp = strongly_connected(g, sigma);
    for (const Edge& ed : g.edges) {
        if (ed.is_loop()) continue;
        if (comp[ed.tail] != comp[ed.head]) return false;
    }
    return true;
}

OrientationSet enumerate_totally_cyclic(const Multigraph& g, int max_edges) {
    int m = g.edge_count();
    if (m > max_edges)
        throw EnumerationCapExceeded("graph has " + std::to_string(m) +
                                     " edges, enumeration cap is " +
                                     std::to_string(max_edges));

    std::vector<std::uint32_t> found;
    std::uint64_t total = std::uint64_t{1} << m;
#pragma omp parallel
    {
        std::vector<std::uint32_t> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
            Orientation o = orientation_from_mask(static_cast<std::uint32_t>(mask), m);
            if (is_totally_cyclic(g, o)) local.push_back(static_cast<std::uint32_t>(mask));
        }
#pragma omp critical
        found.insert(found.end(), local.begin(), local.end());
    }
    std::sort(found.begin(), found.end(), [m](std::uint32_t a, std::uint32_t b) {
        return lex_key(a, m) < lex_key(b, m);
    });

    OrientationSet omega;
    omega.members.reserve(found.size());
    for (auto mask : found) omega.members.push_back(orientation_from_mask(mask, m));
    return omega;
}

std::int64_t count_compatible_tco(const Multigraph& g, const FlowVector& x,
                                  const OrientationSet& omega) {
    require_edge_length(g, x.size(), "flow vector");
    if (!is_flow(g, x)) throw std::invalid_argument("vector is not a flow");
    std::int64_t count = 0;
    for (const Orientation& o : omega.members) {
        bool ok = true;
        for (int e = 0; e < g.edge_count() && ok; ++e) {
            if (x[e] > 0 && o.signs[e] != 1) ok = false;
            if (x[e] < 0 && o.signs[e] != -1) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

std::int64_t count_compatible_tco(const Multigraph& g, const FlowVector& x, int max_edges) {
    return count_compatible_tco(g, x, enumerate_totally_cyclic(g, max_edges));
}

}  // namespace nzflow
