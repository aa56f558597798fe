#include "fpn/oracle.hpp"

#include <algorithm>

namespace fpn {

CliqueChainComplex::CliqueChainComplex(const Graph& g, const Character& chi,
                                       std::size_t top_size, bool renormalized,
                                       std::size_t ceiling)
    : field_(chi.field) {
    living_subgraph(g, chi); // validates the character
    by_size_.assign(top_size + 1, {});
    for (const Clique& c : g.enumerate_cliques(top_size, ceiling))
        by_size_[c.size()].push_back(c); // lexicographic within each size

    diff_.reserve(top_size + 1);
    diff_.emplace_back(0, 0, field_); // unused slot so diff_[s] maps C_s
    const Scalar one = Scalar::one(field_);
    for (std::size_t s = 1; s <= top_size; ++s) {
        const auto& rows = by_size_[s - 1];
        const auto& cols = by_size_[s];
        Matrix d(rows.size(), cols.size(), field_);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Clique& sigma = cols[c];
            Scalar sign = one;
            for (std::size_t r = 0; r < sigma.size(); ++r) {
                const int v = sigma[static_cast<std::size_t>(r)];
                if (chi.alive(v)) {
                    Clique tau = sigma;
                    tau.erase(tau.begin() + static_cast<long>(r));
                    const auto it = std::lower_bound(rows.begin(), rows.end(), tau);
                    if (it == rows.end() || *it != tau)
                        throw InternalError("clique complex basis is not face-closed");
                    const Scalar coeff = renormalized ? sign : sign * chi.values[v];
                    d.set(static_cast<std::size_t>(it - rows.begin()), c, coeff);
                }
                sign = sign.neg();
            }
        }
        diff_.push_back(std::move(d));
    }
    for (std::size_t s = 2; s <= top_size; ++s)
        if (!(diff_[s - 1] * diff_[s]).is_zero())
            throw InternalError("clique complex differential does not square to zero");
    rank_.assign(diff_.size(), 0);
    rank_known_.assign(diff_.size(), false);
}

std::size_t CliqueChainComplex::count(std::size_t size) const {
    return size < by_size_.size() ? by_size_[size].size() : 0;
}

const std::vector<Clique>& CliqueChainComplex::cliques_of_size(std::size_t size) const {
    static const std::vector<Clique> kEmpty;
    return size < by_size_.size() ? by_size_[size] : kEmpty;
}

const Matrix& CliqueChainComplex::differential(std::size_t size) const {
    if (size == 0 || size >= diff_.size())
        throw InputError("differential index out of the built range");
    return diff_[size];
}

std::size_t CliqueChainComplex::differential_rank(std::size_t size) const {
    if (size == 0 || size >= diff_.size()) return 0;
    if (!rank_known_[size]) {
        rank_[size] = diff_[size].rank();
        rank_known_[size] = true;
    }
    return rank_[size];
}

unsigned CliqueChainComplex::homology(int i) const {
    if (i < -1 || i + 2 > static_cast<int>(top_size()))
        throw InputError("homology degree " + std::to_string(i) + " outside the built range");
    const std::size_t s = static_cast<std::size_t>(i + 1); // clique size at degree i
    const std::size_t kernel = count(s) - differential_rank(s);
    return static_cast<unsigned>(kernel - differential_rank(s + 1));
}

unsigned GradedHomologyTable::at(unsigned i, unsigned d) const {
    const auto row = dims.find(i);
    if (row == dims.end()) return 0;
    const auto cell = row->second.find(d);
    return cell == row->second.end() ? 0 : cell->second;
}

namespace {

// Dimension of the homology slice in homological degree i and internal
// degree d. The degree-d slice has the cliques of size j in position j
// carrying the (d-j)-th power of the polynomial variable, for 0 <= j <=
// min(d, s); the slice differentials are the clique-complex matrices.
unsigned slice_dimension(const CliqueChainComplex& C, unsigned i, unsigned d) {
    const std::size_t s = C.top_size();
    if (i > d || i > s) return 0;
    const std::size_t kernel =
        i == 0 ? C.count(0) // augmentation target deleted, no outgoing map
               : C.count(i) - C.differential_rank(i);
    const std::size_t image_in = (d >= i + 1) ? C.differential_rank(i + 1) : 0;
    return static_cast<unsigned>(kernel - image_in);
}

} // namespace

GradedHomologyTable graded_homology(const Graph& g, const Character& chi, unsigned n,
                                    unsigned degree_bound) {
    if (degree_bound < n)
        throw InputError("graded homology degree bound " + std::to_string(degree_bound) +
                         " is below n = " + std::to_string(n));
    const std::size_t s = g.max_clique_size();
    const CliqueChainComplex C(g, chi, s);
    GradedHomologyTable table;
    table.n = n;
    table.degree_bound = degree_bound;
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned d = i; d <= degree_bound; ++d)
            table.dims[i][d] = slice_dimension(C, i, d);
    return table;
}

bool decomposition_check(const Graph& g, const Character& chi, int i) {
    const CliqueChainComplex C(g, chi, static_cast<std::size_t>(std::max(i + 2, 0)));
    const unsigned lhs = C.homology(i);
    const VertexSet living = living_subgraph(g, chi);
    unsigned rhs = 0;
    for (const Clique& w : dead_cliques(g, chi, static_cast<std::size_t>(std::max(i + 1, 0)))) {
        const int degree = i - static_cast<int>(w.size());
        if (degree < -1) continue;
        const SimplicialComplex link =
            living_link_complex(g, living, w, static_cast<std::size_t>(degree + 1));
        rhs += link.reduced_betti(degree, chi.field);
    }
    return lhs == rhs;
}

Verdict fp_oracle(const Graph& g, const Character& chi, unsigned n) {
    const std::size_t s = g.max_clique_size();
    Verdict v;
    v.n = n;
    if (n == 0) {
        v.notes.push_back("FP_0 holds unconditionally");
        return v;
    }
    const CliqueChainComplex C(g, chi, s);
    for (unsigned i = 1; i <= n; ++i) {
        const unsigned a = slice_dimension(C, i, static_cast<unsigned>(s) + 1);
        const unsigned b = slice_dimension(C, i, static_cast<unsigned>(s) + 2);
        if (a != b)
            throw InternalError("stabilized homology slices disagree at degrees s+1, s+2");
        if (a != 0) {
            v.holds = false;
            v.witness = CliqueWitness{std::nullopt, static_cast<int>(i), a};
            v.notes.push_back("H_" + std::to_string(i) +
                              " has slice dimension " + std::to_string(a) +
                              " in every internal degree above the largest clique size");
            return v;
        }
    }
    v.notes.push_back("all homology slices vanish beyond the largest clique size");
    return v;
}

} // namespace fpn
