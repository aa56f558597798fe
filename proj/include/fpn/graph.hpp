#ifndef FPN_GRAPH_HPP
#define FPN_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpn/common.hpp"

namespace fpn {

// Cliques and vertex subsets are strictly increasing index sequences; the
// vertex order fixed at parse time is normative for all sign conventions.
using Clique = std::vector<int>;
using VertexSet = std::uint64_t; // bit i = vertex i; graphs are capped at 64 vertices

constexpr std::size_t kMaxVertices = 64;
constexpr std::size_t kDefaultCliqueCeiling = 1000000;

VertexSet set_of(const Clique& c);
Clique clique_of(VertexSet s);

/**
 * Finite simple graph with a fixed total vertex order. No loops, no
 * multiple edges; immutable after construction.
 */
class Graph {
public:
    Graph(std::vector<std::string> vertex_names,
          const std::vector<std::pair<int, int>>& edges);

    // JSON: {"vertices": ["a", ...], "edges": [["a","b"], ...]}.
    // Vertex order = array order. Loops, duplicate names and unknown
    // endpoint names are rejected.
    static Graph parse(const std::string& json_text);

    std::size_t num_vertices() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }
    int index_of(const std::string& name) const; // -1 if absent

    bool adjacent(int u, int v) const;
    VertexSet neighbors(int v) const { return adj_.at(v); }
    VertexSet all_vertices() const;
    std::vector<std::pair<int, int>> edge_list() const;

    bool is_clique(const Clique& c) const;

    // All cliques with at most size_cap vertices, empty clique first, in
    // lexicographic order of the member sequences. Throws ResourceError
    // past the ceiling.
    std::vector<Clique> enumerate_cliques(std::size_t size_cap,
                                          std::size_t ceiling = kDefaultCliqueCeiling) const;

    // Largest clique size (uses the same ceiling guard).
    std::size_t max_clique_size(std::size_t ceiling = kDefaultCliqueCeiling) const;

    // Vertices outside w adjacent to every member of w; all vertices for
    // w = {}. w must be a clique.
    VertexSet link_of_clique(const Clique& w) const;

    // Induced subgraph on `subset`: nonempty and connected?
    bool is_connected(VertexSet subset) const;

    // Does every vertex outside `subset` have a neighbor inside?
    bool is_dominant(VertexSet subset) const;

    // New graph induced on `subset`, keeping relative vertex order;
    // second return value maps new index -> original index.
    std::pair<Graph, std::vector<int>> induced(VertexSet subset) const;

private:
    std::vector<std::string> names_;
    std::vector<VertexSet> adj_;
};

std::string format_clique(const Graph& g, const Clique& c);

} // namespace fpn

#endif
