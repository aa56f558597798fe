#ifndef FPN_ORACLE_HPP
#define FPN_ORACLE_HPP

#include <map>

#include "fpn/decider.hpp"

namespace fpn {

/**
 * The brute-force side of the tool: a finite chain complex on the cliques
 * of the graph whose differential deletes living vertices only, with sign
 * (-1)^(r-1) for the r-th smallest vertex. Extending scalars by a
 * polynomial variable of degree one turns its slices into the exact
 * per-degree homology of the kernel ideal, independent of any link
 * decomposition.
 *
 * Shifted indexing: degree i holds the cliques of size i+1, with the
 * empty clique alone in degree -1.
 */
class CliqueChainComplex {
public:
    // Cliques enumerated up to `top_size` vertices; in the renormalized
    // basis a deleted living vertex contributes coefficient 1, otherwise
    // its character value. The complex property (differential squares to
    // zero) is verified at build time.
    CliqueChainComplex(const Graph& g, const Character& chi, std::size_t top_size,
                       bool renormalized = true,
                       std::size_t ceiling = kDefaultCliqueCeiling);

    const FieldSpec& field() const { return field_; }
    std::size_t top_size() const { return by_size_.size() - 1; }
    std::size_t count(std::size_t size) const;
    const std::vector<Clique>& cliques_of_size(std::size_t size) const;

    // Differential from cliques of `size` to cliques of `size`-1; size >= 1.
    const Matrix& differential(std::size_t size) const;
    std::size_t differential_rank(std::size_t size) const;

    // Homology at shifted degree i, for -1 <= i <= top_size() - 2.
    unsigned homology(int i) const;

private:
    FieldSpec field_;
    std::vector<std::vector<Clique>> by_size_; // by_size_[s]: cliques with s vertices
    std::vector<Matrix> diff_;                 // diff_[s]: C_s -> C_{s-1}, s >= 1
    mutable std::vector<std::size_t> rank_;    // lazily computed ranks of diff_
    mutable std::vector<bool> rank_known_;
};

/**
 * Exact dimensions of the degree-d slices of the kernel ideal homology,
 * for homological degrees 0..n and internal degrees i <= d <= degree_bound.
 */
struct GradedHomologyTable {
    unsigned n = 0;
    unsigned degree_bound = 0;
    std::map<unsigned, std::map<unsigned, unsigned>> dims; // dims[i][d]

    unsigned at(unsigned i, unsigned d) const;
};

GradedHomologyTable graded_homology(const Graph& g, const Character& chi, unsigned n,
                                    unsigned degree_bound);

// Does dim H_i of the clique complex equal the sum over dead cliques w of
// the reduced Betti numbers of their living links in degree i - |w|? This
// is the direct-sum decomposition the link-based decision rests on.
bool decomposition_check(const Graph& g, const Character& chi, int i);

/**
 * Brute-force FP_n verdict: for each 1 <= i <= n the homology slice
 * dimension is probed at internal degrees s+1 and s+2, where s is the
 * largest clique size. Beyond s the slice dimension is constant, so the
 * two probes must agree (InternalError otherwise) and FP_n holds iff all
 * probed dimensions vanish.
 */
Verdict fp_oracle(const Graph& g, const Character& chi, unsigned n);

} // namespace fpn

#endif
