// Acceptance suite: every release-gating property of the engine, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "fpn/oracle.hpp"
#include "fpn/selftest.hpp"

using namespace fpn;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF5 = FieldSpec::prime(5);

struct Criterion {
    std::string name;
    std::function<void(std::ostream&)> body; // throws on failure
};

struct Failure : std::runtime_error {
    explicit Failure(const std::string& m) : std::runtime_error(m) {}
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Instance {
    Graph g;
    Character chi;
};

std::vector<Instance> criterion_instances() {
    // 120 over GF(5) and 120 over Q: seeded, <= 7 vertices, edge odds 1/2.
    std::vector<Instance> out;
    Rng rng(2024);
    for (int i = 0; i < 120; ++i) {
        Graph g = random_graph(rng, 7);
        Character chi = random_character(rng, g, kF5);
        out.push_back({std::move(g), std::move(chi)});
    }
    for (int i = 0; i < 120; ++i) {
        Graph g = random_graph(rng, 7);
        Character chi = random_character(rng, g, kQ);
        out.push_back({std::move(g), std::move(chi)});
    }
    return out;
}

// 1. The link-based decision in shifted mode agrees with the brute-force
//    graded oracle on every seeded instance, for every n <= 4.
void criterion_oracle_arbitration(std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    const auto instances = criterion_instances();
    std::size_t compared = 0;
    for (const Instance& inst : instances)
        for (unsigned n = 1; n <= 4; ++n) {
            const bool decider =
                fp_for_character(inst.g, inst.chi, n, Convention::Shifted).holds;
            const bool oracle = fp_oracle(inst.g, inst.chi, n).holds;
            require(decider == oracle,
                    "decider and oracle disagree at n=" + std::to_string(n));
            ++compared;
        }
    const double elapsed = seconds_since(start);
    require(elapsed < 60.0, "runtime budget exceeded: " + std::to_string(elapsed) + " s");
    log << instances.size() << " instances, " << compared << " comparisons, "
        << elapsed << " s";
}

// 2. The designed discriminator separates the two readings of the link
//    condition, and the oracle plus the finite-generation criterion side
//    with the shifted one.
void criterion_discriminator(std::ostream& log) {
    const Graph g = discriminator_graph();
    const Character chi = discriminator_character(kQ);
    require(fp_for_character(g, chi, 1, Convention::Shifted).holds, "shifted should hold");
    require(!fp_for_character(g, chi, 1, Convention::Uniform).holds, "uniform should fail");
    require(fp_oracle(g, chi, 1).holds, "oracle should hold");
    require(finitely_generated(g, chi).holds, "finite generation should hold");
    log << "shifted=true uniform=false oracle=true fg=true";
}

// 3. Finite generation coincides with the n=1 shifted link condition on
//    every seeded instance.
void criterion_fg_equivalence(std::ostream& log) {
    const auto instances = criterion_instances();
    for (const Instance& inst : instances)
        require(finitely_generated(inst.g, inst.chi).holds ==
                    fp_for_character(inst.g, inst.chi, 1, Convention::Shifted).holds,
                "fg and n=1 link condition disagree");
    log << instances.size() << " instances";
}

// 4. dim H_i of the clique complex equals the sum of reduced link Betti
//    numbers over dead cliques, for all i <= 4, on every seeded instance.
void criterion_decomposition(std::ostream& log) {
    const auto instances = criterion_instances();
    std::size_t checks = 0;
    for (const Instance& inst : instances)
        for (int i = -1; i <= 4; ++i) {
            require(decomposition_check(inst.g, inst.chi, i),
                    "decomposition identity fails at i=" + std::to_string(i));
            ++checks;
        }
    log << checks << " identities";
}

// 5. Per-degree slice dimensions split as finite image part plus the
//    polynomial tail, and stabilize to the lower clique homology at
//    degrees s+1, s+2, s+3.
void criterion_split_stabilization(std::ostream& log) {
    const auto instances = criterion_instances();
    std::size_t checks = 0;
    for (const Instance& inst : instances) {
        const std::size_t s = inst.g.max_clique_size();
        const unsigned bound = static_cast<unsigned>(s) + 3;
        const GradedHomologyTable t = graded_homology(inst.g, inst.chi, 4, bound);
        const CliqueChainComplex C(inst.g, inst.chi, s + 1);
        for (unsigned i = 1; i <= 4; ++i) {
            const unsigned h_lower = i <= s ? C.homology(static_cast<int>(i) - 1) : 0;
            const unsigned image =
                i + 1 <= s ? static_cast<unsigned>(C.differential_rank(i + 1)) : 0;
            for (unsigned d = i; d <= bound; ++d) {
                require(t.at(i, d) == (d == i ? image : 0) + h_lower,
                        "split identity fails at (i,d)=(" + std::to_string(i) + "," +
                            std::to_string(d) + ")");
                ++checks;
            }
            for (unsigned d = static_cast<unsigned>(s) + 1; d <= bound; ++d) {
                require(t.at(i, d) == h_lower,
                        "stabilization fails at (i,d)=(" + std::to_string(i) + "," +
                            std::to_string(d) + ")");
                ++checks;
            }
        }
    }
    log << checks << " identities";
}

// 6. Worked fixed points, each within a second: the 4-cycle kernel (FP_1
//    but not FP_2, H_1 three-dimensional in a single internal degree, H_2
//    one-dimensional in every degree >= 2), two isolated vertices (not
//    FP_1), and a triangle with one living vertex (FP_n through n = 5).
void criterion_fixed_points(std::ostream& log) {
    const auto run_timed = [](const std::string& name, const std::function<void()>& f) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const double elapsed = seconds_since(start);
        require(elapsed < 1.0, name + " exceeded 1 s (" + std::to_string(elapsed) + ")");
    };

    run_timed("4-cycle", [] {
        const Graph c4 = fixtures::four_cycle();
        const Character ones = fixtures::ones(c4, kQ);
        require(fp_for_character(c4, ones, 1).holds, "4-cycle FP_1");
        require(!fp_for_character(c4, ones, 2).holds, "4-cycle not FP_2");
        require(fp_oracle(c4, ones, 1).holds, "4-cycle oracle FP_1");
        require(!fp_oracle(c4, ones, 2).holds, "4-cycle oracle not FP_2");
        const GradedHomologyTable t = graded_homology(c4, ones, 2, 6);
        unsigned total_h1 = 0;
        unsigned mass_degrees = 0;
        for (unsigned d = 1; d <= 6; ++d) {
            total_h1 += t.at(1, d);
            if (t.at(1, d) != 0) ++mass_degrees;
        }
        require(total_h1 == 3, "dim H_1 = 3");
        require(mass_degrees == 1, "H_1 concentrated in a single internal degree");
        require(t.at(1, 1) == 3, "H_1 mass sits in internal degree 1");
        for (unsigned d = 2; d <= 6; ++d)
            require(t.at(2, d) == 1, "H_2 slice dimension 1 at degree " + std::to_string(d));
    });

    run_timed("two points", [] {
        const Graph two = fixtures::two_points();
        require(!fp_for_character(two, fixtures::ones(two, kQ), 1).holds, "two points FP_1");
        require(!fp_oracle(two, fixtures::ones(two, kQ), 1).holds, "two points oracle FP_1");
    });

    run_timed("triangle", [] {
        const Graph tri = fixtures::triangle();
        const Character t1 = fixtures::character_from_ints(tri, {1, 0, 0}, kQ);
        for (unsigned n = 1; n <= 5; ++n) {
            require(fp_for_character(tri, t1, n).holds, "triangle FP_" + std::to_string(n));
            require(fp_oracle(tri, t1, n).holds, "triangle oracle FP_" + std::to_string(n));
        }
    });

    log << "4-cycle, two points, triangle; H_1 mass at internal degree 1";
}

// 7. Characteristic dependence on the subdivided projective plane: FP_2
//    over the rationals but not over GF(2).
void criterion_projective_plane(std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    const Graph bary = fixtures::projective_plane_barycentric_graph();
    require(bary.num_vertices() == 31, "barycentric graph has 31 vertices");

    const Character over_q = fixtures::ones(bary, kQ);
    require(fp_for_character(bary, over_q, 2).holds, "FP_2 over Q");
    require(fp_oracle(bary, over_q, 2).holds, "oracle FP_2 over Q");

    const Character over_f2 = fixtures::ones(bary, kF2);
    require(!fp_for_character(bary, over_f2, 2).holds, "not FP_2 over GF(2)");
    require(!fp_oracle(bary, over_f2, 2).holds, "oracle not FP_2 over GF(2)");

    const double elapsed = seconds_since(start);
    require(elapsed < 300.0, "runtime budget exceeded: " + std::to_string(elapsed) + " s");
    log << "FP_2 true over Q, false over GF(2), " << elapsed << " s";
}

// 8. The order-complex sufficient condition never contradicts the full
//    decision, and in the k=1 case every dead clique passes the poset
//    versus flag-link homology comparison.
void criterion_sufficiency_and_crosscheck(std::ostream& log) {
    Rng rng(4096);
    std::size_t implications = 0, crosschecks = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(rng, 6);
        for (const FieldSpec& f : {kF5, kQ}) {
            const std::size_t k = 1 + rng.below(std::min<std::size_t>(2, g.num_vertices()));
            const CharacterSpace sp = random_space(rng, g, f, k);
            for (unsigned n = 0; n <= 3; ++n) {
                if (fp_sufficient_by_rank_links(g, sp, n).holds) {
                    require(fp_for_space(g, sp, n, Convention::Shifted).holds,
                            "sufficient condition contradicted the decision at n=" +
                                std::to_string(n));
                    ++implications;
                }
            }
            if (k == 1) {
                Character chi; // the basis row of the 1-dimensional space
                chi.field = f;
                for (std::size_t c = 0; c < sp.basis.cols(); ++c)
                    chi.values.push_back(sp.basis.at(0, c));
                for (const Clique& z : dead_cliques(g, chi, g.num_vertices())) {
                    require(poset_link_cross_check(g, chi, z),
                            "poset/link cross-check failed");
                    ++crosschecks;
                }
            }
        }
    }
    require(implications > 0, "no instance met the sufficient condition");
    require(crosschecks > 0, "no dead cliques were cross-checked");
    log << implications << " implications, " << crosschecks << " cross-checks";
}

// 9. Sanity of the coabelian reduction: the full space on an edge is FP_n
//    for n <= 4 (the ideal is zero), the full space on two isolated
//    vertices fails already at n = 1 (the derived subalgebra of a free
//    Lie algebra on two generators).
void criterion_coabelian_sanity(std::ostream& log) {
    const Graph e = fixtures::edge_graph();
    const CharacterSpace full_edge = CharacterSpace::from_rows(
        {fixtures::character_from_ints(e, {1, 0}, kQ),
         fixtures::character_from_ints(e, {0, 1}, kQ)});
    for (unsigned n = 0; n <= 4; ++n)
        require(fp_for_space(e, full_edge, n).holds, "edge space FP_" + std::to_string(n));

    const Graph two = fixtures::two_points();
    const CharacterSpace full_two = CharacterSpace::from_rows(
        {fixtures::character_from_ints(two, {1, 0}, kQ),
         fixtures::character_from_ints(two, {0, 1}, kQ)});
    require(!fp_for_space(two, full_two, 1).holds, "two-point space must fail FP_1");
    log << "edge graph FP_4, free-algebra derived subalgebra fails FP_1";
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"oracle arbitration (shifted decider == graded oracle)", criterion_oracle_arbitration},
        {"convention discrimination on the designed graph", criterion_discriminator},
        {"finite generation == FP_1 (shifted)", criterion_fg_equivalence},
        {"direct-sum decomposition identity", criterion_decomposition},
        {"split and stabilization identities", criterion_split_stabilization},
        {"worked fixed points", criterion_fixed_points},
        {"characteristic dependence on the projective plane", criterion_projective_plane},
        {"sufficiency implication and poset/link cross-check", criterion_sufficiency_and_crosscheck},
        {"coabelian reduction sanity", criterion_coabelian_sanity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::ostringstream detail;
        try {
            criteria[i].body(detail);
            std::cout << "[PASS] " << (i + 1) << ". " << criteria[i].name;
            if (!detail.str().empty()) std::cout << " (" << detail.str() << ")";
            std::cout << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] " << (i + 1) << ". " << criteria[i].name << ": " << e.what()
                      << "\n";
        }
        std::cout.flush();
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
