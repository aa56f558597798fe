#include "fpn/selftest.hpp"

namespace fpn {

std::uint64_t Rng::next() {
    // splitmix64; fixed algorithm so seeded runs are reproducible everywhere
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }

Graph random_graph(Rng& rng, std::size_t max_vertices) {
    const std::size_t nv = 1 + rng.below(max_vertices);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nv; ++i) names.push_back(std::to_string(i + 1));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            if (rng.coin()) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(std::move(names), edges);
}

namespace {

Scalar random_value(Rng& rng, const FieldSpec& field) {
    if (field.kind == FieldKind::PrimeField)
        return Scalar::residue(rng.below(field.p), field);
    // Small pool with zero twice so dead vertices show up often.
    switch (rng.below(8)) {
        case 0:
        case 1: return Scalar::from_int(0, field);
        case 2: return Scalar::from_int(1, field);
        case 3: return Scalar::from_int(-1, field);
        case 4: return Scalar::from_int(2, field);
        case 5: return Scalar::from_rational(Rational(1, 2));
        case 6: return Scalar::from_rational(Rational(-2, 3));
        default: return Scalar::from_int(3, field);
    }
}

} // namespace

Character random_character(Rng& rng, const Graph& g, const FieldSpec& field) {
    Character chi;
    chi.field = field;
    while (true) {
        chi.values.clear();
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            chi.values.push_back(random_value(rng, field));
        if (!chi.is_zero()) return chi;
    }
}

CharacterSpace random_space(Rng& rng, const Graph& g, const FieldSpec& field, std::size_t k) {
    if (k == 0 || k > g.num_vertices())
        throw InputError("random_space: k must satisfy 1 <= k <= vertex count");
    while (true) {
        Matrix basis(k, g.num_vertices(), field);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < g.num_vertices(); ++c)
                basis.set(r, c, random_value(rng, field));
        if (basis.rank() == k) return CharacterSpace{field, basis};
    }
}

Graph discriminator_graph() {
    return Graph({"1", "2", "3", "4"}, {{0, 2}, {2, 1}, {0, 3}, {1, 3}});
}

Character discriminator_character(const FieldSpec& field) {
    Character chi;
    chi.field = field;
    chi.values = {Scalar::one(field), Scalar::one(field), Scalar::one(field),
                  Scalar::zero(field)};
    return chi;
}

namespace {

void record(SelftestResult& res, bool ok, const std::string& what) {
    ++res.checks;
    if (!ok) {
        ++res.failures;
        if (res.failure_messages.size() < 20) res.failure_messages.push_back(what);
    }
}

void run_instance(const SelftestConfig& cfg, const Graph& g, const Character& chi,
                  std::size_t idx, SelftestResult& res) {
    const std::string tag = "instance " + std::to_string(idx);

    // Decider (under the configured convention) versus brute-force oracle.
    for (unsigned n = 1; n <= cfg.max_n; ++n) {
        const bool decider = fp_for_character(g, chi, n, cfg.convention).holds;
        const bool oracle = fp_oracle(g, chi, n).holds;
        record(res, decider == oracle,
               tag + ": decider/oracle disagree at n=" + std::to_string(n));
    }

    // Direct-sum decomposition of the clique-complex homology.
    for (int i = -1; i <= static_cast<int>(cfg.max_n); ++i)
        record(res, decomposition_check(g, chi, i),
               tag + ": decomposition identity fails at i=" + std::to_string(i));

    // Finite generation versus the n=1 shifted link condition.
    record(res,
           finitely_generated(g, chi).holds ==
               fp_for_character(g, chi, 1, Convention::Shifted).holds,
           tag + ": connectivity/dominance and n=1 link condition disagree");

    // Order-complex model of every living link.
    for (const Clique& z : dead_cliques(g, chi, g.num_vertices()))
        record(res, poset_link_cross_check(g, chi, z),
               tag + ": poset/link cross-check fails at Z=" + format_clique(g, z));
}

} // namespace

SelftestResult run_selftest(const SelftestConfig& cfg) {
    SelftestResult res;
    Rng rng(cfg.seed);
    for (std::size_t idx = 0; idx < cfg.instances; ++idx) {
        if (idx == 0) {
            run_instance(cfg, discriminator_graph(), discriminator_character(cfg.field), idx,
                         res);
            continue;
        }
        const Graph g = random_graph(rng, cfg.max_vertices);
        const Character chi = random_character(rng, g, cfg.field);
        run_instance(cfg, g, chi, idx, res);
    }
    return res;
}

} // namespace fpn
