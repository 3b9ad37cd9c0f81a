#include "qmcut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qmcut {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [i, j] : edges_) {
        if (i == j)
            throw std::invalid_argument("self-loop");
        if (i > j)
            std::swap(i, j);
        if (i < 0 || j >= n_)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
}

Graph complete_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty())
        throw std::invalid_argument("need at least one part");
    for (int p : parts)
        if (p < 1)
            throw std::invalid_argument("part sizes must be positive");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> block(n);
    int v = 0;
    for (std::size_t b = 0; b < parts.size(); ++b)
        for (int k = 0; k < parts[b]; ++k)
            block[v++] = static_cast<int>(b);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (block[i] != block[j])
                edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

std::pair<Graph, std::vector<Graph>> complement_decomposition(const std::vector<int>& parts) {
    if (parts.empty())
        throw std::invalid_argument("need at least one part");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<Graph> cliques;
    int offset = 0;
    for (int p : parts) {
        if (p < 1)
            throw std::invalid_argument("part sizes must be positive");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                edges.emplace_back(offset + i, offset + j);
        cliques.emplace_back(n, std::move(edges));
        offset += p;
    }
    return {complete_graph(n), std::move(cliques)};
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;

    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            return true;
        }
        return false;
    };

    auto parse_two = [&](long long& a, long long& b) {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError(lineno, "expected two integers, got \"" + line + "\"");
    };

    if (!next_content_line())
        throw ParseError(lineno, "missing header line \"n m\"");
    {
        long long a, b;
        parse_two(a, b);
        if (a < 0 || b < 0)
            throw ParseError(lineno, "negative counts in header");
        n = static_cast<int>(a);
        m = b;
    }
    while (next_content_line()) {
        long long a, b;
        parse_two(a, b);
        if (a == b)
            throw ParseError(lineno, "self-loop");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError(lineno, "endpoint out of range");
        int i = static_cast<int>(std::min(a, b));
        int j = static_cast<int>(std::max(a, b));
        if (std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end())
            throw ParseError(lineno, "duplicate edge");
        edges.emplace_back(i, j);
    }
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "header announced " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [i, j] : g.edges())
        os << i << ' ' << j << '\n';
    return os.str();
}

} // namespace qmcut
