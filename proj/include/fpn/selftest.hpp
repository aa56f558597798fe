#ifndef FPN_SELFTEST_HPP
#define FPN_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpn/decider.hpp"
#include "fpn/oracle.hpp"

namespace fpn {

// Deterministic across platforms and standard libraries; reports must be
// byte-identical for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);
    bool coin() { return next() & 1; }

private:
    std::uint64_t state_;
};

Graph random_graph(Rng& rng, std::size_t max_vertices);
Character random_character(Rng& rng, const Graph& g, const FieldSpec& field); // nonzero
CharacterSpace random_space(Rng& rng, const Graph& g, const FieldSpec& field, std::size_t k);

// The convention discriminator: a living path 1-3-2 with a dead vertex 4
// adjacent to both ends. At n = 1 the shifted reading holds and the
// uniform reading fails, while the graded oracle and the connectivity/
// dominance criterion side with the shifted reading.
Graph discriminator_graph();
Character discriminator_character(const FieldSpec& field);

struct SelftestConfig {
    std::uint64_t seed = 1;
    std::size_t instances = 100;
    std::size_t max_vertices = 7;
    FieldSpec field = FieldSpec::rationals();
    Convention convention = Convention::Shifted;
    unsigned max_n = 4;
};

struct SelftestResult {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> failure_messages; // capped
    bool ok() const { return failures == 0; }
};

/**
 * Runs the randomized invariant suites on `instances` seeded instances
 * (instance 0 is always the discriminator): decider-versus-oracle
 * agreement, the direct-sum decomposition identity, the poset/link
 * cross-check, and the n=1 equivalence with connectivity + dominance.
 */
SelftestResult run_selftest(const SelftestConfig& cfg);

} // namespace fpn

#endif
