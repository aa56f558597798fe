#include "fpn/scomplex.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace fpn {

namespace {

std::vector<std::vector<Clique>> bucket_by_dim(std::set<Clique> simplices) {
    std::vector<std::vector<Clique>> by_dim;
    for (const Clique& s : simplices) {
        if (s.empty()) continue;
        const std::size_t d = s.size() - 1;
        if (by_dim.size() <= d) by_dim.resize(d + 1);
        by_dim[d].push_back(s);
    }
    for (auto& lst : by_dim) std::sort(lst.begin(), lst.end());
    return by_dim;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 const std::vector<Clique>& facets) {
    std::set<Clique> closed;
    // Downward closure by subset enumeration; facets are small here.
    for (const Clique& f : facets) {
        Clique s = f;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError("simplex with repeated vertex");
        for (int v : s)
            if (v < 0 || v >= static_cast<int>(labels.size()))
                throw InputError("simplex vertex index out of range");
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            Clique face;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1) face.push_back(s[i]);
            closed.insert(face);
        }
    }
    SimplicialComplex c;
    c.labels_ = std::move(labels);
    c.by_dim_ = bucket_by_dim(std::move(closed));
    return c;
}

SimplicialComplex SimplicialComplex::flag_complex(const Graph& g, std::size_t dim_cap,
                                                  std::size_t ceiling) {
    SimplicialComplex c;
    c.labels_ = g.vertex_names();
    for (const Clique& k : g.enumerate_cliques(dim_cap + 1, ceiling)) {
        if (k.empty()) continue;
        const std::size_t d = k.size() - 1;
        if (c.by_dim_.size() <= d) c.by_dim_.resize(d + 1);
        c.by_dim_[d].push_back(k); // enumeration is lexicographic already
    }
    return c;
}

SimplicialComplex SimplicialComplex::order_complex(std::vector<std::string> labels,
                                                   const std::function<bool(int, int)>& less,
                                                   std::size_t ceiling) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lt[i][j] = less(i, j);
    for (int i = 0; i < n; ++i)
        if (lt[i][i]) throw InputError("order_complex: relation is not irreflexive at '" +
                                       labels[i] + "'");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lt[i][j] && lt[j][i])
                throw InputError("order_complex: relation is not antisymmetric on '" +
                                 labels[i] + "', '" + labels[j] + "'");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!lt[i][j]) continue;
            for (int k = 0; k < n; ++k)
                if (lt[j][k] && !lt[i][k])
                    throw InputError("order_complex: relation is not transitive on '" +
                                     labels[i] + "' < '" + labels[j] + "' < '" + labels[k] + "'");
        }
    // Chains = cliques of the comparability graph: pairwise comparable
    // subsets of a poset are totally ordered.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (lt[i][j] || lt[j][i]) edges.emplace_back(i, j);
    Graph comparability(labels, edges);
    return flag_complex(comparability, labels.size(), ceiling);
}

SimplicialComplex SimplicialComplex::link(const Clique& s) const {
    if (s.empty()) return *this;
    if (!contains(s)) throw InputError("link: the given simplex is not in the complex");
    std::set<Clique> faces;
    for (int d = static_cast<int>(s.size()) - 1; d <= top_dim(); ++d) {
        for (const Clique& u : simplices(d)) {
            if (!std::includes(u.begin(), u.end(), s.begin(), s.end())) continue;
            Clique t;
            std::set_difference(u.begin(), u.end(), s.begin(), s.end(),
                                std::back_inserter(t));
            if (!t.empty()) faces.insert(t);
        }
    }
    SimplicialComplex c;
    c.labels_ = labels_;
    c.by_dim_ = bucket_by_dim(std::move(faces));
    return c;
}

std::size_t SimplicialComplex::count(int d) const {
    if (d < 0 || d > top_dim()) return 0;
    return by_dim_[d].size();
}

const std::vector<Clique>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Clique> kEmpty;
    if (d < 0 || d > top_dim()) return kEmpty;
    return by_dim_[d];
}

bool SimplicialComplex::contains(const Clique& s) const {
    if (s.empty()) return true;
    const int d = static_cast<int>(s.size()) - 1;
    if (d > top_dim()) return false;
    return std::binary_search(by_dim_[d].begin(), by_dim_[d].end(), s);
}

Matrix SimplicialComplex::boundary_matrix(int d, const FieldSpec& field) const {
    if (d < -1 || d > top_dim())
        throw InputError("boundary_matrix: dimension " + std::to_string(d) + " out of range");
    if (d == -1) return Matrix(0, 1, field); // empty simplex maps to nothing
    if (d == 0) {
        Matrix m(1, count(0), field);
        for (std::size_t c = 0; c < count(0); ++c) m.set(0, c, Scalar::one(field));
        return m;
    }
    const auto& rows = by_dim_[d - 1];
    const auto& cols = by_dim_[d];
    Matrix m(rows.size(), cols.size(), field);
    const Scalar one = Scalar::one(field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Clique& sigma = cols[c];
        Scalar sign = one;
        for (std::size_t r = 0; r < sigma.size(); ++r) {
            Clique tau = sigma;
            tau.erase(tau.begin() + static_cast<long>(r));
            const auto it = std::lower_bound(rows.begin(), rows.end(), tau);
            if (it == rows.end() || *it != tau)
                throw InternalError("boundary_matrix: complex not closed under faces");
            m.set(static_cast<std::size_t>(it - rows.begin()), c, sign);
            sign = sign.neg();
        }
    }
    return m;
}

std::size_t SimplicialComplex::boundary_rank(int d, const FieldSpec& field) const {
    if (d < 0 || d > top_dim() || count(d) == 0) return 0;
    return boundary_matrix(d, field).rank();
}

unsigned SimplicialComplex::reduced_betti(int j, const FieldSpec& field) const {
    if (j < -1) return 0;
    const std::size_t dim_cj = (j == -1) ? 1 : count(j);
    if (dim_cj == 0) return 0;
    const std::size_t rank_out = (j == -1) ? 0 : boundary_rank(j, field);
    const std::size_t rank_in = boundary_rank(j + 1, field);
    return static_cast<unsigned>(dim_cj - rank_out - rank_in);
}

std::vector<unsigned> SimplicialComplex::betti_vector(const FieldSpec& field) const {
    // One rank per boundary map, shared between adjacent degrees.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top_dim()) + 2, 0);
    for (int d = 0; d <= top_dim(); ++d)
        rank[static_cast<std::size_t>(d)] = boundary_rank(d, field);
    std::vector<unsigned> betti;
    for (int j = -1; j <= top_dim(); ++j) {
        const std::size_t dim_cj = (j == -1) ? 1 : count(j);
        const std::size_t out = (j == -1) ? 0 : rank[static_cast<std::size_t>(j)];
        const std::size_t in =
            (j + 1 <= top_dim()) ? rank[static_cast<std::size_t>(j + 1)] : 0;
        betti.push_back(static_cast<unsigned>(dim_cj - out - in));
    }
    return betti;
}

bool SimplicialComplex::is_acyclic_up_to(int m, const FieldSpec& field) const {
    if (m <= -2) return true;
    for (int j = -1; j <= std::min(m, top_dim() + 1); ++j)
        if (reduced_betti(j, field) != 0) return false;
    return true;
}

std::string SimplicialComplex::to_json_string() const {
    nlohmann::ordered_json dims = nlohmann::ordered_json::object();
    for (int d = 0; d <= top_dim(); ++d) {
        nlohmann::ordered_json lst = nlohmann::ordered_json::array();
        for (const Clique& s : by_dim_[d]) {
            nlohmann::ordered_json names = nlohmann::ordered_json::array();
            for (int v : s) names.push_back(labels_.at(v));
            lst.push_back(names);
        }
        dims[std::to_string(d)] = lst;
    }
    nlohmann::ordered_json out;
    out["simplices"] = dims;
    return out.dump();
}

} // namespace fpn
