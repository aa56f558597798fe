#include "fpn/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace fpn {

using nlohmann::json;

VertexSet set_of(const Clique& c) {
    VertexSet s = 0;
    for (int v : c) s |= VertexSet{1} << v;
    return s;
}

Clique clique_of(VertexSet s) {
    Clique c;
    while (s) {
        const int v = std::countr_zero(s);
        c.push_back(v);
        s &= s - 1;
    }
    return c;
}

Graph::Graph(std::vector<std::string> vertex_names,
             const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(vertex_names)) {
    if (names_.size() > kMaxVertices)
        throw ResourceError("graph has " + std::to_string(names_.size()) +
                            " vertices; the tool is capped at " + std::to_string(kMaxVertices));
    adj_.assign(names_.size(), 0);
    const int n = static_cast<int>(names_.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge endpoint out of range");
        if (u == v)
            throw InputError("loop edge at vertex '" + names_[u] + "'");
        adj_[u] |= VertexSet{1} << v;
        adj_[v] |= VertexSet{1} << u;
    }
}

Graph Graph::parse(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw InputError("graph JSON: expected an object with a \"vertices\" array");
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw InputError("graph JSON: vertex names must be strings");
        const std::string name = v.get<std::string>();
        if (index.count(name))
            throw InputError("graph JSON: duplicate vertex name '" + name + "'");
        index[name] = static_cast<int>(names.size());
        names.push_back(name);
    }
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("graph JSON: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw InputError("graph JSON: each edge must be a pair of vertex names");
            const std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
            const auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end())
                throw InputError("graph JSON: unknown vertex '" + a + "' in edge");
            if (ib == index.end())
                throw InputError("graph JSON: unknown vertex '" + b + "' in edge");
            edges.emplace_back(ia->second, ib->second); // Graph ctor rejects loops
        }
    }
    return Graph(std::move(names), edges);
}

int Graph::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

bool Graph::adjacent(int u, int v) const {
    return (adj_.at(u) >> v) & 1;
}

VertexSet Graph::all_vertices() const {
    return names_.empty() ? 0
                          : (names_.size() == 64 ? ~VertexSet{0}
                                                 : (VertexSet{1} << names_.size()) - 1);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < static_cast<int>(names_.size()); ++u)
        for (VertexSet s = adj_[u] >> (u + 1) << (u + 1); s; s &= s - 1)
            out.emplace_back(u, std::countr_zero(s));
    return out;
}

bool Graph::is_clique(const Clique& c) const {
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int v = c[i];
        if (v < 0 || v >= static_cast<int>(names_.size())) return false;
        if (i > 0 && c[i - 1] >= v) return false; // strictly increasing
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!adjacent(v, c[j])) return false;
    }
    return true;
}

namespace {

// Ordered backtracking: a clique is only ever extended by a common
// neighbor with a larger index, so each clique is produced exactly once
// and DFS preorder equals lexicographic order of member sequences.
void extend(const std::vector<VertexSet>& adj, int n, Clique& cur, VertexSet common,
            std::size_t size_cap, std::size_t ceiling, std::vector<Clique>& out) {
    if (out.size() >= ceiling)
        throw ResourceError("clique enumeration exceeded ceiling of " + std::to_string(ceiling));
    out.push_back(cur);
    if (cur.size() >= size_cap) return;
    const int lo = cur.empty() ? 0 : cur.back() + 1;
    for (int v = lo; v < n; ++v) {
        if (!((common >> v) & 1)) continue;
        cur.push_back(v);
        extend(adj, n, cur, common & adj[v], size_cap, ceiling, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Clique> Graph::enumerate_cliques(std::size_t size_cap, std::size_t ceiling) const {
    std::vector<Clique> out;
    Clique cur;
    extend(adj_, static_cast<int>(names_.size()), cur, all_vertices(), size_cap, ceiling, out);
    return out;
}

std::size_t Graph::max_clique_size(std::size_t ceiling) const {
    std::size_t best = 0;
    for (const Clique& c : enumerate_cliques(names_.size(), ceiling))
        best = std::max(best, c.size());
    return best;
}

VertexSet Graph::link_of_clique(const Clique& w) const {
    if (!is_clique(w))
        throw InputError("link_of_clique: argument is not a clique of the graph");
    VertexSet common = all_vertices();
    for (int v : w) common &= adj_[v];
    return common & ~set_of(w);
}

bool Graph::is_connected(VertexSet subset) const {
    if (subset == 0) return false;
    const int start = std::countr_zero(subset);
    VertexSet seen = VertexSet{1} << start;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1)
            next |= adj_[std::countr_zero(f)];
        next &= subset & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == subset;
}

bool Graph::is_dominant(VertexSet subset) const {
    for (VertexSet rest = all_vertices() & ~subset; rest; rest &= rest - 1)
        if ((adj_[std::countr_zero(rest)] & subset) == 0) return false;
    return true;
}

std::pair<Graph, std::vector<int>> Graph::induced(VertexSet subset) const {
    std::vector<int> back;
    std::vector<std::string> names;
    for (VertexSet s = subset; s; s &= s - 1) {
        const int v = std::countr_zero(s);
        back.push_back(v);
        names.push_back(names_[v]);
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < back.size(); ++i)
        for (std::size_t j = i + 1; j < back.size(); ++j)
            if (adjacent(back[i], back[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return {Graph(std::move(names), edges), back};
}

std::string format_clique(const Graph& g, const Clique& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += g.name(c[i]);
    }
    return out + "}";
}

} // namespace fpn
