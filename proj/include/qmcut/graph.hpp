#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmcut {

/// Simple undirected graph: vertex count plus a sorted, duplicate-free edge
/// list of pairs (i, j) with i < j, 0-indexed.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

Graph complete_graph(int n);

/// Complete multipartite graph; vertex blocks are consecutive in the order
/// the parts are given. Edge (i, j) present iff i and j lie in different blocks.
Graph complete_multipartite(const std::vector<int>& parts);

/// K_n together with the cliques embedded on each part's vertex block; the
/// multipartite edge set is K_n's minus the (pairwise disjoint) clique edges.
std::pair<Graph, std::vector<Graph>> complement_decomposition(const std::vector<int>& parts);

struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

/// Edge-list text format: header "n m", then m lines "i j"; lines starting
/// with '#' are ignored. Throws ParseError with the offending line number.
Graph parse_edge_list(const std::string& text);

std::string to_edge_list(const Graph& g);

} // namespace qmcut
