#include "fpn/report.hpp"

namespace fpn {

Json graph_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertex_names();
    Json edges = Json::array();
    for (auto [u, v] : g.edge_list())
        edges.push_back(Json::array({g.name(u), g.name(v)}));
    j["edges"] = edges;
    return j;
}

Json character_json(const Graph& g, const Character& chi) {
    Json values = Json::object();
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        values[g.name(static_cast<int>(v))] = chi.values[v].str();
    Json j;
    j["field"] = chi.field.str();
    j["values"] = values;
    return j;
}

Json space_json(const Graph& g, const CharacterSpace& sp) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < sp.k(); ++r) {
        Json row = Json::object();
        for (std::size_t c = 0; c < sp.basis.cols(); ++c)
            row[g.name(static_cast<int>(c))] = sp.basis.at(r, c).str();
        rows.push_back(row);
    }
    Json j;
    j["field"] = sp.field.str();
    j["basis"] = rows;
    return j;
}

Json clique_json(const Graph& g, const Clique& c) {
    Json arr = Json::array();
    for (int v : c) arr.push_back(g.name(v));
    return arr;
}

Json verdict_json(const Graph& g, const Verdict& v, const std::string& clique_key) {
    Json j;
    j["holds"] = v.holds;
    if (v.witness) {
        Json w;
        if (v.witness->clique) w[clique_key] = clique_json(g, *v.witness->clique);
        w["degree"] = v.witness->degree;
        w["betti"] = v.witness->betti;
        j["witness"] = w;
    }
    if (v.support_witness) {
        Json w;
        w["support"] = clique_json(g, clique_of(v.support_witness->support));
        w["inner"] = verdict_json(g, *v.support_witness->inner, clique_key);
        j["witness"] = w;
    }
    if (v.bad_vertex) j["vertex"] = g.name(*v.bad_vertex);
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

Json table_json(const GradedHomologyTable& t) {
    Json h = Json::object();
    for (const auto& [i, row] : t.dims) {
        Json r = Json::object();
        for (const auto& [d, dim] : row) r[std::to_string(d)] = dim;
        h[std::to_string(i)] = r;
    }
    return h;
}

std::string render_verdict_text(const Graph& g, const Verdict& v, unsigned n) {
    std::string out = "FP_" + std::to_string(n);
    if (n == 1) out += " (finitely generated)";
    if (n == 2) out += " (finitely presented)";
    out += v.holds ? ": holds\n" : ": FAILS\n";
    if (v.witness) {
        out += "  witness: ";
        if (v.witness->clique) out += "clique " + format_clique(g, *v.witness->clique) + ", ";
        out += "reduced Betti " + std::to_string(v.witness->betti) + " in degree " +
               std::to_string(v.witness->degree) + "\n";
    }
    if (v.support_witness) {
        out += "  witness: living subgraph " +
               format_clique(g, clique_of(v.support_witness->support)) + "\n";
        out += "  inner " + render_verdict_text(g, *v.support_witness->inner, n);
    }
    for (const std::string& note : v.notes) out += "  note: " + note + "\n";
    return out;
}

} // namespace fpn
