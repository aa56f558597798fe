#ifndef FPN_TESTS_FIXTURES_HPP
#define FPN_TESTS_FIXTURES_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpn/character.hpp"
#include "fpn/graph.hpp"

namespace fixtures {

inline fpn::Graph four_cycle() {
    return fpn::Graph({"1", "2", "3", "4"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline fpn::Graph triangle() {
    return fpn::Graph({"1", "2", "3"}, {{0, 1}, {0, 2}, {1, 2}});
}

inline fpn::Graph path3() { return fpn::Graph({"1", "2", "3"}, {{0, 1}, {1, 2}}); }

inline fpn::Graph edge_graph() { return fpn::Graph({"1", "2"}, {{0, 1}}); }

inline fpn::Graph two_points() { return fpn::Graph({"1", "2"}, {}); }

inline fpn::Character character_from_ints(const fpn::Graph& g, const std::vector<long>& vals,
                                          const fpn::FieldSpec& field) {
    fpn::Character chi;
    chi.field = field;
    for (long v : vals) chi.values.push_back(fpn::Scalar::from_int(v, field));
    if (chi.values.size() != g.num_vertices())
        throw std::runtime_error("fixture character has wrong arity");
    return chi;
}

inline fpn::Character ones(const fpn::Graph& g, const fpn::FieldSpec& field) {
    return character_from_ints(g, std::vector<long>(g.num_vertices(), 1), field);
}

// The ten triangles of the 6-vertex triangulation of the real projective
// plane (its 1-skeleton is the complete graph on 6 vertices).
inline std::vector<fpn::Clique> projective_plane_triangles() {
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
}

// Face-incidence graph of the barycentric subdivision: one vertex per
// nonempty simplex (6 + 15 + 10 = 31), edges along strict face inclusion.
// Its flag complex is the subdivided projective plane.
inline fpn::Graph projective_plane_barycentric_graph() {
    std::vector<fpn::Clique> simplices;
    for (int v = 0; v < 6; ++v) simplices.push_back({v});
    const auto triangles = projective_plane_triangles();
    std::vector<fpn::Clique> edges_present;
    for (const fpn::Clique& t : triangles)
        for (std::size_t drop = 0; drop < 3; ++drop) {
            fpn::Clique e = t;
            e.erase(e.begin() + static_cast<long>(drop));
            if (std::find(edges_present.begin(), edges_present.end(), e) ==
                edges_present.end())
                edges_present.push_back(e);
        }
    std::sort(edges_present.begin(), edges_present.end());
    for (const fpn::Clique& e : edges_present) simplices.push_back(e);
    for (const fpn::Clique& t : triangles) simplices.push_back(t);

    std::vector<std::string> names;
    for (const fpn::Clique& s : simplices) {
        std::string n;
        for (int v : s) n += std::to_string(v + 1);
        names.push_back(n);
    }
    std::vector<std::pair<int, int>> incidences;
    for (std::size_t i = 0; i < simplices.size(); ++i)
        for (std::size_t j = 0; j < simplices.size(); ++j) {
            if (simplices[i].size() >= simplices[j].size()) continue;
            if (std::includes(simplices[j].begin(), simplices[j].end(),
                              simplices[i].begin(), simplices[i].end()))
                incidences.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return fpn::Graph(names, incidences);
}

} // namespace fixtures

#endif
