#ifndef FPN_DECIDER_HPP
#define FPN_DECIDER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fpn/character.hpp"
#include "fpn/scomplex.hpp"

namespace fpn {

/**
 * Reading of the link acyclicity bound. Shifted requires reduced homology
 * of the link of a dead clique w to vanish up to degree n-1-|w|; Uniform
 * requires vanishing up to n-1 for every dead clique regardless of size.
 * Shifted is the default: it is the reading the brute-force graded oracle
 * and the n=1 connectivity/dominance criterion both confirm.
 */
enum class Convention { Shifted, Uniform };

Convention parse_convention(const std::string& text);
std::string convention_str(Convention c);

struct CliqueWitness {
    std::optional<Clique> clique; // failing dead clique / poset element
    int degree = 0;               // failing reduced homology degree
    unsigned betti = 0;           // its nonzero dimension
};

struct Verdict;

struct SupportWitness {
    VertexSet support = 0;
    std::shared_ptr<Verdict> inner;
};

/**
 * Decision outcome. A failed verdict carries a witness that re-verifies:
 * recomputing the cited reduced Betti number reproduces `betti` != 0.
 */
struct Verdict {
    bool holds = true;
    unsigned n = 0;
    std::optional<CliqueWitness> witness;
    std::optional<SupportWitness> support_witness;
    std::optional<int> bad_vertex; // dominance failure witness (fg)
    std::vector<std::string> notes;
};

// Flag complex of the living vertices adjacent to every member of the
// dead clique w (the whole living flag complex for w = {}); simplices are
// built up to dimension dim_cap.
SimplicialComplex living_link_complex(const Graph& g, VertexSet living, const Clique& w,
                                      std::size_t dim_cap,
                                      std::size_t ceiling = kDefaultCliqueCeiling);

// Is the kernel ideal of chi of homological type FP_n? Decided through
// reduced acyclicity of living links of dead cliques. n = 0 always holds.
Verdict fp_for_character(const Graph& g, const Character& chi, unsigned n,
                         Convention conv = Convention::Shifted);

// Is the kernel ideal finitely generated as a Lie algebra? True iff the
// living subgraph is connected and dominant; coincides with
// fp_for_character at n = 1 in Shifted mode.
Verdict finitely_generated(const Graph& g, const Character& chi);

// FP_n for the coabelian ideal annihilated by the whole space: reduces to
// fp_for_character on one representative of every realizable support.
Verdict fp_for_space(const Graph& g, const CharacterSpace& sp, unsigned n,
                     Convention conv = Convention::Shifted);

// Sufficient FP_n condition through order complexes: with X all cliques
// and Y those of full restriction rank, every Z in X \ Y with |Z| = i
// must have an (n-i-1)-acyclic order complex of {A in Y : Z strictly
// contained in A}. holds = true guarantees FP_n; holds = false is NO
// conclusion (the condition is one-sided).
Verdict fp_sufficient_by_rank_links(const Graph& g, const CharacterSpace& sp, unsigned n);

// Cross-validation: the order complex of {A clique : A meets the living
// set, Z contained in A} must have the same reduced Betti numbers as the
// living link of Z. Z must be a dead clique.
bool poset_link_cross_check(const Graph& g, const Character& chi, const Clique& Z);

} // namespace fpn

#endif
