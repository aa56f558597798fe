#ifndef FPN_CHARACTER_HPP
#define FPN_CHARACTER_HPP

#include <string>
#include <vector>

#include "fpn/graph.hpp"
#include "fpn/matrix.hpp"

namespace fpn {

/**
 * A K-valued vertex labeling. A character must be nonzero wherever the
 * decision procedures use one; the parser keeps zero labelings around so
 * the error can be raised at the point of use.
 */
struct Character {
    FieldSpec field;
    std::vector<Scalar> values; // one per vertex, in vertex order

    // JSON: {"field": "Q"|"GF:p", "values": {"<vertex>": "a/b", ...}};
    // every vertex of g must be present.
    static Character parse(const std::string& json_text, const Graph& g);

    bool is_zero() const;
    bool alive(int v) const { return !values.at(v).is_zero(); }
    VertexSet support() const;
};

// Vertices with nonzero value; rejects the zero character.
VertexSet living_subgraph(const Graph& g, const Character& chi);

// All cliques (including the empty one) whose vertices all carry value
// zero, up to size_cap, lexicographic.
std::vector<Clique> dead_cliques(const Graph& g, const Character& chi, std::size_t size_cap);

/**
 * A k-dimensional space of characters, presented by k independent basis
 * rows over the vertices. This is how coabelian ideals of codimension k
 * enter the tool: the space is the annihilator of the ideal.
 */
struct CharacterSpace {
    FieldSpec field;
    Matrix basis; // k x |V|, rows linearly independent

    static CharacterSpace parse(const std::string& json_text, const Graph& g);
    static CharacterSpace from_rows(const std::vector<Character>& rows);

    std::size_t k() const { return basis.rows(); }
    Character row_combination(const std::vector<Scalar>& coeffs) const;
};

// Rank of the basis matrix restricted to the columns in `subset` (0 for
// the empty subset). Equals k minus the dimension of the subspace of the
// row space vanishing on `subset`.
std::size_t restriction_rank(const CharacterSpace& sp, VertexSet subset);

struct RealizableSupport {
    VertexSet support = 0;
    Character witness; // a character in the row space with exactly this support
};

/**
 * All supports {v : chi(v) != 0} realized by nonzero characters in the
 * row space. Over a prime field this enumerates the (p^k-1)/(p-1)
 * projective points directly; over the rationals a support V\Z is
 * realizable iff the vanishing subspace drops strictly at every vertex
 * outside Z, decided by rank comparisons with upward pruning. Each
 * returned support carries a verified witness character.
 *
 * Results are sorted lexicographically by support member sequence.
 */
std::vector<RealizableSupport> realizable_supports(const CharacterSpace& sp,
                                                   std::size_t ceiling = kDefaultCliqueCeiling);

} // namespace fpn

#endif
