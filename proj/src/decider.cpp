#include "fpn/decider.hpp"

#include <algorithm>

namespace fpn {

Convention parse_convention(const std::string& text) {
    if (text == "shifted") return Convention::Shifted;
    if (text == "uniform") return Convention::Uniform;
    throw InputError("bad convention '" + text + "' (expected shifted|uniform)");
}

std::string convention_str(Convention c) {
    return c == Convention::Shifted ? "shifted" : "uniform";
}

SimplicialComplex living_link_complex(const Graph& g, VertexSet living, const Clique& w,
                                      std::size_t dim_cap, std::size_t ceiling) {
    const VertexSet verts = g.link_of_clique(w) & living;
    auto [sub, back] = g.induced(verts);
    SimplicialComplex local = SimplicialComplex::flag_complex(sub, dim_cap, ceiling);
    // Re-express simplices in the ambient vertex indices so witnesses and
    // reports speak about the original graph.
    std::vector<Clique> facets;
    for (int d = 0; d <= local.top_dim(); ++d)
        for (const Clique& s : local.simplices(d)) {
            Clique orig;
            for (int v : s) orig.push_back(back[v]);
            facets.push_back(orig);
        }
    return SimplicialComplex::from_facets(g.vertex_names(), facets);
}

namespace {

// Smallest degree in [-1, m] with nonzero reduced Betti number, if any.
std::optional<std::pair<int, unsigned>> first_homology_failure(const SimplicialComplex& c,
                                                               int m, const FieldSpec& field) {
    if (m <= -2) return std::nullopt;
    for (int j = -1; j <= std::min(m, c.top_dim() + 1); ++j) {
        const unsigned b = c.reduced_betti(j, field);
        if (b != 0) return std::make_pair(j, b);
    }
    return std::nullopt;
}

} // namespace

Verdict fp_for_character(const Graph& g, const Character& chi, unsigned n, Convention conv) {
    const VertexSet living = living_subgraph(g, chi); // validates chi != 0
    Verdict v;
    v.n = n;
    if (n == 0) {
        v.notes.push_back("FP_0 holds unconditionally");
        return v;
    }
    const std::size_t dead_cap =
        conv == Convention::Shifted ? n : g.num_vertices(); // larger w are vacuous when shifted
    for (const Clique& w : dead_cliques(g, chi, dead_cap)) {
        const int m = conv == Convention::Shifted ? static_cast<int>(n) - 1 - static_cast<int>(w.size())
                                                  : static_cast<int>(n) - 1;
        const SimplicialComplex link =
            living_link_complex(g, living, w, static_cast<std::size_t>(std::max(m + 1, 0)));
        if (auto fail = first_homology_failure(link, m, chi.field)) {
            v.holds = false;
            v.witness = CliqueWitness{w, fail->first, fail->second};
            v.notes.push_back("living link of dead clique " + format_clique(g, w) +
                              " has nonzero reduced homology in degree " +
                              std::to_string(fail->first));
            return v;
        }
    }
    return v;
}

Verdict finitely_generated(const Graph& g, const Character& chi) {
    const VertexSet living = living_subgraph(g, chi);
    Verdict v;
    v.n = 1;
    if (!g.is_connected(living)) {
        v.holds = false;
        v.notes.push_back("not connected");
    }
    if (!g.is_dominant(living)) {
        v.holds = false;
        v.notes.push_back("not dominant");
        for (VertexSet rest = g.all_vertices() & ~living; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if ((g.neighbors(u) & living) == 0) {
                v.bad_vertex = u;
                break;
            }
        }
    }
    return v;
}

Verdict fp_for_space(const Graph& g, const CharacterSpace& sp, unsigned n, Convention conv) {
    if (sp.basis.cols() != g.num_vertices())
        throw InputError("character space is not defined on the vertices of the graph");
    Verdict v;
    v.n = n;
    const std::vector<RealizableSupport> supports = realizable_supports(sp);
    for (const RealizableSupport& rs : supports) {
        Verdict inner = fp_for_character(g, rs.witness, n, conv);
        if (!inner.holds) {
            v.holds = false;
            v.support_witness =
                SupportWitness{rs.support, std::make_shared<Verdict>(std::move(inner))};
            v.notes.push_back("fails on living subgraph " +
                              format_clique(g, clique_of(rs.support)));
            return v;
        }
    }
    v.notes.push_back("decided through the " + std::to_string(supports.size()) +
                      " realizable living subgraphs of the space (the verdict depends on a "
                      "character only through its living subgraph)");
    return v;
}

Verdict fp_sufficient_by_rank_links(const Graph& g, const CharacterSpace& sp, unsigned n) {
    if (sp.basis.cols() != g.num_vertices())
        throw InputError("character space is not defined on the vertices of the graph");
    const std::size_t k = sp.k();
    const std::vector<Clique> all = g.enumerate_cliques(g.num_vertices());
    std::vector<VertexSet> full_rank; // Y: cliques on which the space keeps rank k
    for (const Clique& a : all)
        if (restriction_rank(sp, set_of(a)) == k) full_rank.push_back(set_of(a));

    Verdict v;
    v.n = n;
    for (const Clique& z : all) {
        const VertexSet zs = set_of(z);
        if (restriction_rank(sp, zs) == k) continue; // Z must come from X \ Y
        const int m = static_cast<int>(n) - static_cast<int>(z.size()) - 1;
        if (m <= -2) continue;
        std::vector<VertexSet> over; // {A in Y : Z strictly below A}
        std::vector<std::string> labels;
        for (VertexSet a : full_rank)
            if ((zs & ~a) == 0 && a != zs) {
                over.push_back(a);
                labels.push_back(format_clique(g, clique_of(a)));
            }
        const SimplicialComplex order = SimplicialComplex::order_complex(
            labels, [&](int i, int j) { return over[i] != over[j] && (over[i] & ~over[j]) == 0; });
        if (auto fail = first_homology_failure(order, m, sp.field)) {
            v.holds = false;
            v.witness = CliqueWitness{z, fail->first, fail->second};
            v.notes.push_back("order-complex link of clique " + format_clique(g, z) +
                              " is not " + std::to_string(m) + "-acyclic");
            v.notes.push_back("sufficient condition only: NO conclusion about FP_" +
                              std::to_string(n));
            return v;
        }
    }
    v.notes.push_back("sufficient condition met: FP_" + std::to_string(n) + " is guaranteed");
    return v;
}

bool poset_link_cross_check(const Graph& g, const Character& chi, const Clique& Z) {
    const VertexSet living = living_subgraph(g, chi);
    if (!g.is_clique(Z) || (set_of(Z) & living) != 0)
        throw InputError("cross-check requires a dead clique");
    const VertexSet zs = set_of(Z);

    std::vector<VertexSet> poset; // cliques meeting the living set and containing Z
    std::vector<std::string> labels;
    for (const Clique& a : g.enumerate_cliques(g.num_vertices())) {
        const VertexSet as = set_of(a);
        if ((as & living) != 0 && (zs & ~as) == 0) {
            poset.push_back(as);
            labels.push_back(format_clique(g, a));
        }
    }
    const SimplicialComplex order = SimplicialComplex::order_complex(
        labels, [&](int i, int j) { return poset[i] != poset[j] && (poset[i] & ~poset[j]) == 0; });
    const SimplicialComplex link = living_link_complex(g, living, Z, g.num_vertices());

    std::vector<unsigned> b1 = order.betti_vector(chi.field);
    std::vector<unsigned> b2 = link.betti_vector(chi.field);
    const std::size_t len = std::max(b1.size(), b2.size());
    b1.resize(len, 0);
    b2.resize(len, 0);
    return b1 == b2;
}

} // namespace fpn
