#ifndef NZFLOW_TEST_UTIL_HPP
#define NZFLOW_TEST_UTIL_HPP

// Brute-force reference implementations used only by the tests. They share no
// code with the library paths they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "nzflow/multigraph.hpp"

namespace nzflow::testutil {

// Bridges by per-edge deletion and component recount.
inline std::vector<int> brute_bridges(const Multigraph& g) {
    auto count_components = [](int nv, const std::vector<Edge>& edges) {
        std::vector<int> parent(nv);
        for (int v = 0; v < nv; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int comps = nv;
        for (const Edge& e : edges) {
            int a = find(e.tail), b = find(e.head);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        return comps;
    };
    int base = count_components(g.vertex_count, g.edges);
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<Edge> rest;
        for (int f = 0; f < g.edge_count(); ++f)
            if (f != e) rest.push_back(g.edges[f]);
        if (count_components(g.vertex_count, rest) > base) out.push_back(e);
    }
    return out;
}

// Coherent-cycle test straight from the definition: for every non-loop edge,
// search a directed path from its head back to its tail.
inline bool brute_is_totally_cyclic(const Multigraph& g, const Orientation& sigma) {
    auto reaches = [&](int from, int to) {
        std::vector<bool> seen(g.vertex_count, false);
        std::vector<int> stack{from};
        seen[from] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (int e = 0; e < g.edge_count(); ++e) {
                const Edge& ed = g.edges[e];
                if (ed.is_loop()) continue;
                int a = sigma.signs[e] > 0 ? ed.tail : ed.head;
                int b = sigma.signs[e] > 0 ? ed.head : ed.tail;
                if (a == v && !seen[b]) {
                    seen[b] = true;
                    stack.push_back(b);
                }
            }
        }
        return false;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.is_loop()) continue;
        int a = sigma.signs[e] > 0 ? ed.tail : ed.head;
        int b = sigma.signs[e] > 0 ? ed.head : ed.tail;
        if (!reaches(b, a)) return false;
    }
    return true;
}

inline std::vector<Orientation> brute_totally_cyclic_set(const Multigraph& g) {
    std::vector<Orientation> out;
    int m = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Orientation o;
        o.signs.resize(m);
        for (int e = 0; e < m; ++e) o.signs[e] = (mask >> e) & 1u ? -1 : 1;
        if (brute_is_totally_cyclic(g, o)) out.push_back(o);
    }
    return out;
}

inline std::int64_t brute_compatible_count(const Multigraph& g, const FlowVector& x) {
    std::int64_t n = 0;
    for (const Orientation& o : brute_totally_cyclic_set(g)) {
        bool ok = true;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (x[e] > 0 && o.signs[e] != 1) ok = false;
            if (x[e] < 0 && o.signs[e] != -1) ok = false;
        }
        if (ok) ++n;
    }
    return n;
}

// Nowhere-zero Z_k flows by scanning all labelings in (Z_k \ {0})^E.
inline std::int64_t brute_zk_count(const Multigraph& g, std::int64_t k) {
    int m = g.edge_count();
    std::vector<std::int64_t> x(m, 1);
    std::int64_t count = 0;
    auto conserved = [&]() {
        std::vector<std::int64_t> net(g.vertex_count, 0);
        for (int e = 0; e < m; ++e) {
            net[g.edges[e].head] += x[e];
            net[g.edges[e].tail] -= x[e];
        }
        for (auto v : net)
            if (v % k != 0) return false;
        return true;
    };
    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            if (conserved()) ++count;
            return;
        }
        for (std::int64_t v = 1; v < k; ++v) {
            x[e] = v;
            self(self, e + 1);
        }
    };
    if (k < 2) return m == 0 ? 1 : 0;
    rec(rec, 0);
    return count;
}

inline Multigraph random_multigraph(std::mt19937& rng, int max_vertices = 6,
                                    int max_edges = 9, bool allow_loops = true) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::uniform_int_distribution<int> ne(0, max_edges);
    int m = ne(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        int t = pick(rng), h = pick(rng);
        if (!allow_loops && t == h) {
            --i;
            continue;
        }
        edges.push_back({t, h});
    }
    return Multigraph(n, edges);
}

// Random graph guaranteed bridgeless: doubles every edge of a random graph's
// bridge until none remain.
inline Multigraph random_bridgeless(std::mt19937& rng, int max_vertices = 5,
                                    int max_edges = 7) {
    Multigraph g = random_multigraph(rng, max_vertices, max_edges);
    for (int guard = 0; guard < 32; ++guard) {
        auto b = brute_bridges(g);
        if (b.empty()) break;
        std::vector<Edge> edges = g.edges;
        edges.push_back(g.edges[b.front()]);
        g = Multigraph(g.vertex_count, edges);
    }
    return g;
}

inline CapacityVector random_capacities(std::mt19937& rng, int m, std::int64_t lo = 1,
                                        std::int64_t hi = 4) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    CapacityVector k(static_cast<std::size_t>(m));
    for (auto& v : k) v = d(rng);
    return k;
}

}  // namespace nzflow::testutil

#endif
