#ifndef FPN_SCOMPLEX_HPP
#define FPN_SCOMPLEX_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fpn/graph.hpp"
#include "fpn/matrix.hpp"

namespace fpn {

/**
 * Finite simplicial complex given by explicit simplex lists, one sorted
 * list per dimension. The empty simplex is always present implicitly:
 * all homology here is reduced (augmented), so the empty complex has
 * Betti number 1 in degree -1 and every nonempty complex has 0 there.
 *
 * Vertex labels are inherited from the ambient construction; a complex
 * need not touch every label.
 */
class SimplicialComplex {
public:
    // Downward closure of the given simplices (vertex index lists).
    static SimplicialComplex from_facets(std::vector<std::string> labels,
                                         const std::vector<Clique>& facets);

    // Simplices in dimension d = cliques of g with d+1 vertices, d <= dim_cap.
    static SimplicialComplex flag_complex(const Graph& g, std::size_t dim_cap,
                                          std::size_t ceiling = kDefaultCliqueCeiling);

    // Chains of a strict partial order; `less` is validated to be
    // irreflexive, antisymmetric and transitive.
    static SimplicialComplex order_complex(std::vector<std::string> labels,
                                           const std::function<bool(int, int)>& less,
                                           std::size_t ceiling = kDefaultCliqueCeiling);

    // Simplices t disjoint from s with s united t a simplex; link({}) is
    // the complex itself. s must be a simplex.
    SimplicialComplex link(const Clique& s) const;

    bool empty() const { return by_dim_.empty(); }
    int top_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t count(int d) const;
    const std::vector<Clique>& simplices(int d) const;
    bool contains(const Clique& s) const;
    const std::vector<std::string>& labels() const { return labels_; }

    // Boundary map C_d -> C_{d-1} in the augmented chain complex; rows and
    // columns follow the sorted simplex lists, d = 0 is the augmentation
    // row onto the empty simplex. Deleting the r-th smallest vertex
    // (1-based) contributes sign (-1)^(r-1).
    Matrix boundary_matrix(int d, const FieldSpec& field) const;

    // dim ker d_j - rank d_{j+1}; degree -1 follows the augmented convention.
    unsigned reduced_betti(int j, const FieldSpec& field) const;

    // Reduced Betti numbers for all degrees -1 .. top_dim().
    std::vector<unsigned> betti_vector(const FieldSpec& field) const;

    // True iff reduced_betti(j) = 0 for all -1 <= j <= m. Vacuous for
    // m <= -2; for m >= -1 this forces the complex to be nonempty.
    bool is_acyclic_up_to(int m, const FieldSpec& field) const;

    std::string to_json_string() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Clique>> by_dim_; // by_dim_[d]: sorted (d+1)-subsets

    std::size_t boundary_rank(int d, const FieldSpec& field) const;
};

} // namespace fpn

#endif
