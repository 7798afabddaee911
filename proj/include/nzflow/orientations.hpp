#ifndef NZFLOW_ORIENTATIONS_HPP
#define NZFLOW_ORIENTATIONS_HPP

#include <vector>

#include "nzflow/multigraph.hpp"

namespace nzflow {

/// Raised when an exhaustive 2^|E| enumeration would exceed the edge cap.
struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumerationEdgeCap = 24;

/// Totally cyclic orientations in lexicographic sign order ('+' before '-').
struct OrientationSet {
    std::vector<Orientation> members;

    std::size_t size() const { return members.size(); }
    bool contains(const Orientation& o) const;
};

/// True iff every non-loop edge has both endpoints in the same strongly
/// connected component of the digraph induced by sigma. Loops always qualify.
bool is_totally_cyclic(const Multigraph& g, const Orientation& sigma);

/// Filters all 2^|E| sign vectors through is_totally_cyclic.
/// Throws EnumerationCapExceeded when |E| > max_edges.
OrientationSet enumerate_totally_cyclic(const Multigraph& g,
                                        int max_edges = kDefaultEnumerationEdgeCap);

/// Number of totally cyclic orientations obtained from the reference
/// orientation by flipping negative-flow edges, keeping positive-flow edges,
/// and choosing freely on zero-flow edges. `x` must be a flow.
std::int64_t count_compatible_tco(const Multigraph& g, const FlowVector& x,
                                  const OrientationSet& omega);
std::int64_t count_compatible_tco(const Multigraph& g, const FlowVector& x,
                                  int max_edges = kDefaultEnumerationEdgeCap);

}  // namespace nzflow

#endif
