#include "fpn/character.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace fpn {

using nlohmann::json;

Character Character::parse(const std::string& json_text, const Graph& g) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("character JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("field") || !j.contains("values") ||
        !j["values"].is_object())
        throw InputError("character JSON: expected {\"field\": ..., \"values\": {...}}");
    Character chi;
    chi.field = FieldSpec::parse(j["field"].get<std::string>());
    chi.values.assign(g.num_vertices(), Scalar::zero(chi.field));
    std::vector<bool> seen(g.num_vertices(), false);
    for (const auto& [name, val] : j["values"].items()) {
        const int v = g.index_of(name);
        if (v < 0) throw InputError("character JSON: unknown vertex '" + name + "'");
        if (!val.is_string())
            throw InputError("character JSON: value for '" + name + "' must be a string");
        chi.values[v] = Scalar::parse(val.get<std::string>(), chi.field);
        seen[v] = true;
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (!seen[v])
            throw InputError("character JSON: no value for vertex '" + g.name(static_cast<int>(v)) + "'");
    return chi;
}

bool Character::is_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

VertexSet Character::support() const {
    VertexSet s = 0;
    for (std::size_t v = 0; v < values.size(); ++v)
        if (!values[v].is_zero()) s |= VertexSet{1} << v;
    return s;
}

VertexSet living_subgraph(const Graph& g, const Character& chi) {
    if (chi.values.size() != g.num_vertices())
        throw InputError("character is not defined on all vertices of the graph");
    if (chi.is_zero()) throw InputError("character must be non-zero");
    return chi.support();
}

std::vector<Clique> dead_cliques(const Graph& g, const Character& chi, std::size_t size_cap) {
    const VertexSet dead = g.all_vertices() & ~living_subgraph(g, chi);
    auto [dg, back] = g.induced(dead);
    std::vector<Clique> out;
    for (const Clique& c : dg.enumerate_cliques(size_cap)) {
        Clique orig;
        for (int v : c) orig.push_back(back[v]);
        out.push_back(orig);
    }
    return out; // induced() preserves relative order, so this stays lexicographic
}

CharacterSpace CharacterSpace::parse(const std::string& json_text, const Graph& g) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("character space JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("field") || !j.contains("basis") || !j["basis"].is_array())
        throw InputError("character space JSON: expected {\"field\": ..., \"basis\": [...]}");
    const FieldSpec field = FieldSpec::parse(j["field"].get<std::string>());
    const std::size_t k = j["basis"].size();
    if (k == 0) throw InputError("character space JSON: empty basis");
    Matrix basis(k, g.num_vertices(), field);
    for (std::size_t r = 0; r < k; ++r) {
        const auto& row = j["basis"][r];
        if (!row.is_object())
            throw InputError("character space JSON: each basis row must be an object");
        std::vector<bool> seen(g.num_vertices(), false);
        for (const auto& [name, val] : row.items()) {
            const int v = g.index_of(name);
            if (v < 0) throw InputError("character space JSON: unknown vertex '" + name + "'");
            if (!val.is_string())
                throw InputError("character space JSON: values must be strings");
            basis.set(r, static_cast<std::size_t>(v), Scalar::parse(val.get<std::string>(), field));
            seen[static_cast<std::size_t>(v)] = true;
        }
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            if (!seen[v])
                throw InputError("character space JSON: basis row " + std::to_string(r) +
                                 " has no value for vertex '" + g.name(static_cast<int>(v)) + "'");
    }
    if (basis.rank() != k)
        throw InputError("character space basis rows are linearly dependent");
    return CharacterSpace{field, basis};
}

CharacterSpace CharacterSpace::from_rows(const std::vector<Character>& rows) {
    if (rows.empty()) throw InputError("character space needs at least one basis row");
    const FieldSpec field = rows[0].field;
    Matrix basis(rows.size(), rows[0].values.size(), field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!(rows[r].field == field) || rows[r].values.size() != basis.cols())
            throw InputError("character space rows disagree on field or vertex count");
        for (std::size_t c = 0; c < basis.cols(); ++c) basis.set(r, c, rows[r].values[c]);
    }
    if (basis.rank() != rows.size())
        throw InputError("character space basis rows are linearly dependent");
    return CharacterSpace{field, basis};
}

Character CharacterSpace::row_combination(const std::vector<Scalar>& coeffs) const {
    if (coeffs.size() != k()) throw InternalError("row_combination: wrong coefficient count");
    Character chi;
    chi.field = field;
    chi.values.assign(basis.cols(), Scalar::zero(field));
    for (std::size_t r = 0; r < k(); ++r) {
        if (coeffs[r].is_zero()) continue;
        for (std::size_t c = 0; c < basis.cols(); ++c)
            chi.values[c] = chi.values[c] + coeffs[r] * basis.at(r, c);
    }
    return chi;
}

namespace {

Matrix column_restriction(const CharacterSpace& sp, VertexSet subset) {
    const Clique cols = clique_of(subset);
    Matrix m(sp.k(), cols.size(), sp.field);
    for (std::size_t r = 0; r < sp.k(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            m.set(r, c, sp.basis.at(r, static_cast<std::size_t>(cols[c])));
    return m;
}

// Dimension of {chi in row space : chi restricted to `zero_set` = 0}.
class VanishingDim {
public:
    explicit VanishingDim(const CharacterSpace& sp) : sp_(sp) {}

    std::size_t operator()(VertexSet zero_set) {
        auto it = memo_.find(zero_set);
        if (it != memo_.end()) return it->second;
        const std::size_t d = sp_.k() - column_restriction(sp_, zero_set).rank();
        memo_.emplace(zero_set, d);
        return d;
    }

private:
    const CharacterSpace& sp_;
    std::map<VertexSet, std::size_t> memo_;
};

// Coefficient-space basis of the characters vanishing on zero_set.
std::vector<std::vector<Scalar>> vanishing_coefficients(const CharacterSpace& sp,
                                                        VertexSet zero_set) {
    const Matrix restricted_t = column_restriction(sp, zero_set).transpose();
    const Matrix kernel = restricted_t.kernel_basis(); // rows: coefficient vectors
    std::vector<std::vector<Scalar>> out;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        std::vector<Scalar> c;
        for (std::size_t j = 0; j < kernel.cols(); ++j) c.push_back(kernel.at(r, j));
        out.push_back(c);
    }
    return out;
}

// Deterministic witness over an infinite field: scan chi_t = sum_i t^i g_i
// for t = 1, 2, ... until the support is all of V \ Z. Each vertex outside
// Z kills at most q-1 values of t, so the scan terminates within the bound.
Character rational_witness(const CharacterSpace& sp, VertexSet zero_set, VertexSet want) {
    const auto gens = vanishing_coefficients(sp, zero_set);
    const std::size_t q = gens.size();
    const std::size_t bound = (q == 0 ? 0 : (q - 1) * sp.basis.cols() + 1);
    for (std::size_t t = 1; t <= bound; ++t) {
        std::vector<Scalar> coeffs(sp.k(), Scalar::zero(sp.field));
        Scalar power = Scalar::one(sp.field);
        const Scalar tval = Scalar::from_int(static_cast<long>(t), sp.field);
        for (const auto& gen : gens) {
            for (std::size_t r = 0; r < sp.k(); ++r)
                coeffs[r] = coeffs[r] + power * gen[r];
            power = power * tval;
        }
        Character chi = sp.row_combination(coeffs);
        if (chi.support() == want) return chi;
    }
    throw InternalError("failed to construct a witness character for a realizable support");
}

void check_witness(const CharacterSpace& sp, const RealizableSupport& rs) {
    if (rs.witness.support() != rs.support)
        throw InternalError("witness character has the wrong support");
    // Membership in the row space: appending the witness must not raise the rank.
    Matrix stacked(sp.k() + 1, sp.basis.cols(), sp.field);
    for (std::size_t r = 0; r < sp.k(); ++r)
        for (std::size_t c = 0; c < sp.basis.cols(); ++c)
            stacked.set(r, c, sp.basis.at(r, c));
    for (std::size_t c = 0; c < sp.basis.cols(); ++c)
        stacked.set(sp.k(), c, rs.witness.values[c]);
    if (stacked.rank() != sp.k())
        throw InternalError("witness character lies outside the row space");
}

std::vector<RealizableSupport> supports_prime_field(const CharacterSpace& sp,
                                                    std::size_t ceiling) {
    const std::uint64_t p = sp.field.p;
    const std::size_t k = sp.k();
    // Projective point count (p^k - 1) / (p - 1), guarded against overflow.
    long double approx = 0;
    for (std::size_t j = 0; j < k; ++j) approx = approx * static_cast<long double>(p) + 1;
    if (approx > static_cast<long double>(ceiling))
        throw ResourceError("projective enumeration needs more than " +
                            std::to_string(ceiling) + " characters");
    std::map<VertexSet, Character> found;
    std::vector<Scalar> coeffs(k, Scalar::zero(sp.field));
    // Leading coefficient normalized to 1; later coordinates run over GF(p).
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(coeffs.begin(), coeffs.end(), Scalar::zero(sp.field));
        coeffs[lead] = Scalar::one(sp.field);
        std::vector<std::uint64_t> digits(k - lead - 1, 0);
        while (true) {
            for (std::size_t j = 0; j < digits.size(); ++j)
                coeffs[lead + 1 + j] = Scalar::residue(digits[j], sp.field);
            Character chi = sp.row_combination(coeffs);
            const VertexSet s = chi.support();
            if (s != 0) found.emplace(s, chi); // keeps the first witness found
            std::size_t j = 0;
            for (; j < digits.size(); ++j) {
                if (++digits[j] < p) break;
                digits[j] = 0;
            }
            if (j == digits.size()) break;
        }
    }
    std::vector<RealizableSupport> out;
    for (auto& [s, chi] : found) out.push_back(RealizableSupport{s, chi});
    return out;
}

std::vector<RealizableSupport> supports_rationals(const CharacterSpace& sp,
                                                  std::size_t ceiling) {
    const std::size_t m = sp.basis.cols();
    VanishingDim dim_vanishing(sp);
    // Only vertices at which some nonzero character vanishes can belong to a
    // zero set.
    std::vector<int> candidates;
    for (std::size_t v = 0; v < m; ++v)
        if (dim_vanishing(VertexSet{1} << v) >= 1) candidates.push_back(static_cast<int>(v));

    const VertexSet everything = m == 0 ? 0 : (m == 64 ? ~VertexSet{0} : (VertexSet{1} << m) - 1);
    std::vector<RealizableSupport> out;
    std::size_t visited = 0;

    // DFS over candidate zero sets Z, ascending, pruned where no nonzero
    // character vanishes on Z.
    std::vector<std::pair<VertexSet, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [zero_set, next_idx] = stack.back();
        stack.pop_back();
        if (++visited > ceiling)
            throw ResourceError("support enumeration exceeded ceiling of " +
                                std::to_string(ceiling));
        const std::size_t q = dim_vanishing(zero_set);
        if (q == 0) continue;
        bool realizable = true;
        for (int v : candidates) {
            if ((zero_set >> v) & 1) continue;
            if (dim_vanishing(zero_set | (VertexSet{1} << v)) == q) {
                realizable = false;
                break;
            }
        }
        if (realizable) {
            const VertexSet support = everything & ~zero_set;
            out.push_back(RealizableSupport{support, rational_witness(sp, zero_set, support)});
        }
        for (std::size_t i = next_idx; i < candidates.size(); ++i) {
            const VertexSet ext = zero_set | (VertexSet{1} << candidates[i]);
            stack.emplace_back(ext, i + 1);
        }
    }
    return out;
}

} // namespace

std::size_t restriction_rank(const CharacterSpace& sp, VertexSet subset) {
    if (subset == 0) return 0;
    return column_restriction(sp, subset).rank();
}

std::vector<RealizableSupport> realizable_supports(const CharacterSpace& sp,
                                                   std::size_t ceiling) {
    if (sp.k() == 0) throw InputError("character space must have k >= 1");
    std::vector<RealizableSupport> out = sp.field.kind == FieldKind::PrimeField
                                             ? supports_prime_field(sp, ceiling)
                                             : supports_rationals(sp, ceiling);
    for (const auto& rs : out) check_witness(sp, rs);
    std::sort(out.begin(), out.end(), [](const RealizableSupport& a, const RealizableSupport& b) {
        return clique_of(a.support) < clique_of(b.support);
    });
    return out;
}

} // namespace fpn
