#ifndef NZFLOW_MULTIGRAPH_HPP
#define NZFLOW_MULTIGRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nzflow {

/// A directed edge of the reference orientation: tail -> head.
struct Edge {
    int tail = 0;
    int head = 0;

    bool is_loop() const { return tail == head; }
    friend bool operator==(const Edge& a, const Edge& b) {
        return a.tail == b.tail && a.head == b.head;
    }
};

/// Multigraph with a fixed reference orientation.
///
/// Edge identity is the position in `edges`; parallel edges and loops keep
/// distinct identities. The stored (tail, head) order of each edge is the
/// reference orientation that all sign vectors are relative to.
struct Multigraph {
    int vertex_count = 0;
    std::vector<Edge> edges;

    Multigraph() = default;
    Multigraph(int vertices, std::vector<Edge> edge_list);

    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Sign vector over edges; +1 keeps the reference direction, -1 reverses it.
/// For a loop both signs denote the same directed object.
struct Orientation {
    std::vector<std::int8_t> signs;

    static Orientation all_plus(int edge_count) {
        Orientation o;
        o.signs.assign(static_cast<std::size_t>(edge_count), 1);
        return o;
    }

    int size() const { return static_cast<int>(signs.size()); }

    Orientation flipped() const;

    /// Serializes as a string over {+,-} in edge order.
    std::string to_string() const;
    static Orientation from_string(const std::string& s);

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.signs == b.signs;
    }
};

using FlowVector = std::vector<std::int64_t>;
using CapacityVector = std::vector<std::int64_t>;

/// Dense |V| x |E| matrix with entries in {-1, 0, +1}; loops give zero columns.
using IncidenceMatrix = std::vector<std::vector<int>>;

/// Component id per vertex, ids numbered 0.. in order of first appearance.
std::vector<int> components(const Multigraph& g);
int component_count(const Multigraph& g);

/// |E| - |V| + #components.
int cyclomatic_number(const Multigraph& g);

/// Edges whose deletion increases the component count, ascending by id.
/// Loops and parallel copies are never bridges.
std::vector<int> bridges(const Multigraph& g);

IncidenceMatrix incidence_matrix(const Multigraph& g, const Orientation& sigma);
IncidenceMatrix incidence_matrix(const Multigraph& g);

/// True iff A_sigma * x = 0, i.e. flow conservation holds at every vertex.
bool is_flow(const Multigraph& g, const Orientation& sigma, const FlowVector& x);
bool is_flow(const Multigraph& g, const FlowVector& x);

/// Spanning forest plus the fundamental cycle attached to each non-forest
/// edge. Every integer flow is the unique integer combination of the cycles
/// given by its values on the free (non-forest) edges; forest values follow.
struct CycleBasis {
    std::vector<int> forest_edges;               // one per (vertex - component)
    std::vector<int> free_edges;                 // the other edges, loops included
    std::vector<std::vector<std::int8_t>> cycles;  // cycles[i] is a signed vector
                                                   // of length |E| with
                                                   // cycles[i][free_edges[i]] = +1
};

CycleBasis fundamental_cycle_basis(const Multigraph& g);

inline void require_edge_length(const Multigraph& g, std::size_t n, const char* what) {
    if (n != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument(std::string(what) + ": length " + std::to_string(n) +
                                    " does not match edge count " +
                                    std::to_string(g.edge_count()));
}

}  // namespace nzflow

#endif
