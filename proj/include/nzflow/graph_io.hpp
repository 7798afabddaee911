#ifndef NZFLOW_GRAPH_IO_HPP
#define NZFLOW_GRAPH_IO_HPP

#include <string>
#include <vector>

#include "nzflow/multigraph.hpp"

namespace nzflow {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format: first line "n m", then m lines "t h" with 0-indexed tail and
/// head. Line order defines edge identity and the reference orientation.
/// Strings starting with '{' are treated as the JSON equivalent
/// {"vertices": n, "edges": [[t,h], ...]}.
Multigraph parse_graph(const std::string& text);
Multigraph load_graph_file(const std::string& path);

std::string dump_graph_text(const Multigraph& g);
std::string dump_graph_json(const Multigraph& g);

/// Built-in corpus: k3, 2k2, 3k2, k4, prism, bridge.
Multigraph example_graph(const std::string& name);
std::vector<std::string> example_names();

}  // namespace nzflow

#endif
