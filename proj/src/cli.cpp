#include "fpn/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fpn/report.hpp"
#include "fpn/selftest.hpp"

namespace fpn {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_field_flag(const RunConfig& cfg, const FieldSpec& from_file) {
    if (!cfg.field_text) return;
    if (!(FieldSpec::parse(*cfg.field_text) == from_file))
        throw InputError("--field " + *cfg.field_text + " disagrees with the input file (" +
                         from_file.str() + ")");
}

struct LoadedCharacter {
    Graph g;
    Character chi;
};

LoadedCharacter load_character(const RunConfig& cfg) {
    if (cfg.graph_path.empty()) throw InputError("missing --graph");
    if (cfg.char_path.empty()) throw InputError("this command needs --char");
    if (!cfg.space_path.empty()) throw InputError("this command takes --char, not --space");
    Graph g = Graph::parse(slurp(cfg.graph_path));
    Character chi = Character::parse(slurp(cfg.char_path), g);
    check_field_flag(cfg, chi.field);
    return {std::move(g), std::move(chi)};
}

struct LoadedSpace {
    Graph g;
    CharacterSpace sp;
};

LoadedSpace load_space(const RunConfig& cfg) {
    if (cfg.graph_path.empty()) throw InputError("missing --graph");
    if (cfg.space_path.empty()) throw InputError("this command needs --space");
    if (!cfg.char_path.empty()) throw InputError("this command takes --space, not --char");
    Graph g = Graph::parse(slurp(cfg.graph_path));
    CharacterSpace sp = CharacterSpace::parse(slurp(cfg.space_path), g);
    check_field_flag(cfg, sp.field);
    return {std::move(g), std::move(sp)};
}

void emit(const RunConfig& cfg, const Json& report, const std::string& text,
          std::ostream& out) {
    if (cfg.text_output)
        out << text;
    else
        out << report.dump(2) << "\n";
}

int verdict_exit(const RunConfig& cfg, bool holds) {
    return cfg.exit_status && !holds ? kExitVerdictFalse : kExitOk;
}

int run_fp(const RunConfig& cfg, std::ostream& out) {
    auto [g, chi] = load_character(cfg);
    const Verdict v = fp_for_character(g, chi, cfg.n, cfg.convention);
    Json j;
    j["command"] = "fp";
    j["graph"] = graph_json(g);
    j["character"] = character_json(g, chi);
    j["field"] = chi.field.str();
    j["n"] = cfg.n;
    j["convention"] = convention_str(cfg.convention);
    j.update(verdict_json(g, v, "dead_clique"));
    emit(cfg, j, render_verdict_text(g, v, cfg.n), out);
    return verdict_exit(cfg, v.holds);
}

int run_fg(const RunConfig& cfg, std::ostream& out) {
    auto [g, chi] = load_character(cfg);
    const Verdict v = finitely_generated(g, chi);
    Json j;
    j["command"] = "fg";
    j["graph"] = graph_json(g);
    j["character"] = character_json(g, chi);
    j["field"] = chi.field.str();
    j["holds"] = v.holds;
    if (!v.holds && !v.notes.empty()) j["reason"] = v.notes.front();
    if (v.bad_vertex) j["vertex"] = g.name(*v.bad_vertex);
    if (!v.notes.empty()) j["notes"] = v.notes;
    std::string text = std::string("finitely generated: ") + (v.holds ? "yes" : "NO") + "\n";
    for (const std::string& note : v.notes) text += "  note: " + note + "\n";
    emit(cfg, j, text, out);
    return verdict_exit(cfg, v.holds);
}

int run_ideal(const RunConfig& cfg, std::ostream& out) {
    auto [g, sp] = load_space(cfg);
    const Verdict v = fp_for_space(g, sp, cfg.n, cfg.convention);
    Json j;
    j["command"] = "ideal";
    j["graph"] = graph_json(g);
    j["space"] = space_json(g, sp);
    j["field"] = sp.field.str();
    j["k"] = sp.k();
    j["n"] = cfg.n;
    j["convention"] = convention_str(cfg.convention);
    j.update(verdict_json(g, v, "dead_clique"));
    emit(cfg, j, render_verdict_text(g, v, cfg.n), out);
    return verdict_exit(cfg, v.holds);
}

int run_thmg(const RunConfig& cfg, std::ostream& out) {
    auto [g, sp] = load_space(cfg);
    const Verdict v = fp_sufficient_by_rank_links(g, sp, cfg.n);
    Json j;
    j["command"] = "thmg";
    j["graph"] = graph_json(g);
    j["space"] = space_json(g, sp);
    j["field"] = sp.field.str();
    j["k"] = sp.k();
    j["n"] = cfg.n;
    j.update(verdict_json(g, v, "clique"));
    j["conclusive"] = v.holds; // false means "no conclusion", not "not FP_n"
    std::string text = v.holds
                           ? "sufficient condition met: FP_" + std::to_string(cfg.n) +
                                 " is guaranteed\n"
                           : "sufficient condition not met: no conclusion\n";
    emit(cfg, j, text, out);
    return verdict_exit(cfg, v.holds);
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
    auto [g, chi] = load_character(cfg);
    const std::size_t s = g.max_clique_size();
    const unsigned degree_bound =
        cfg.max_degree ? *cfg.max_degree
                       : static_cast<unsigned>(std::max<std::size_t>(cfg.n, s) + 3);
    const GradedHomologyTable table = graded_homology(g, chi, cfg.n, degree_bound);
    const Verdict v = fp_oracle(g, chi, cfg.n);
    // One size past the largest clique so the homology report reaches the
    // top degree (the extra differential is an empty matrix).
    const CliqueChainComplex C(g, chi, s + 1);

    Json j;
    j["command"] = "oracle";
    j["graph"] = graph_json(g);
    j["character"] = character_json(g, chi);
    j["field"] = chi.field.str();
    j["n"] = cfg.n;
    j["max_clique_size"] = s;
    j["degree_bound"] = degree_bound;
    j["H"] = table_json(table);
    Json ch = Json::object();
    for (int i = -1; i + 1 <= static_cast<int>(s); ++i)
        ch[std::to_string(i)] = C.homology(i);
    j["C_homology"] = ch;
    j["verdict"] = verdict_json(g, v, "dead_clique");

    std::string text = "graded homology slices (degree -> dimension):\n";
    for (const auto& [i, row] : table.dims) {
        text += "  H_" + std::to_string(i) + ":";
        for (const auto& [d, dim] : row) text += " " + std::to_string(d) + "->" + std::to_string(dim);
        text += "\n";
    }
    text += render_verdict_text(g, v, cfg.n);
    emit(cfg, j, text, out);
    return verdict_exit(cfg, v.holds);
}

int run_crosscheck(const RunConfig& cfg, std::ostream& out) {
    auto [g, chi] = load_character(cfg);
    Json checks = Json::array();
    bool all_equal = true;
    std::string text;
    for (const Clique& z : dead_cliques(g, chi, g.num_vertices())) {
        const bool equal = poset_link_cross_check(g, chi, z);
        all_equal = all_equal && equal;
        Json c;
        c["clique"] = clique_json(g, z);
        c["equal"] = equal;
        checks.push_back(c);
        text += format_clique(g, z) + ": " + (equal ? "equal" : "DIFFER") + "\n";
    }
    Json j;
    j["command"] = "crosscheck";
    j["graph"] = graph_json(g);
    j["character"] = character_json(g, chi);
    j["field"] = chi.field.str();
    j["checks"] = checks;
    j["holds"] = all_equal;
    emit(cfg, j, text, out);
    return verdict_exit(cfg, all_equal);
}

int run_selftest(const RunConfig& cfg, std::ostream& out) {
    SelftestConfig sc;
    sc.seed = cfg.seed;
    sc.instances = cfg.instances;
    sc.max_vertices = cfg.max_vertices;
    sc.field = cfg.field_text ? FieldSpec::parse(*cfg.field_text) : FieldSpec::rationals();
    sc.convention = cfg.convention;
    const SelftestResult res = run_selftest(sc);

    Json j;
    j["command"] = "selftest";
    j["seed"] = cfg.seed;
    j["instances"] = cfg.instances;
    j["max_vertices"] = cfg.max_vertices;
    j["field"] = sc.field.str();
    j["convention"] = convention_str(sc.convention);
    j["checks"] = res.checks;
    j["failures"] = res.failures;
    if (!res.failure_messages.empty()) j["failure_messages"] = res.failure_messages;
    std::string text = "selftest: " + std::to_string(res.checks - res.failures) + "/" +
                       std::to_string(res.checks) + " checks passed\n";
    for (const std::string& m : res.failure_messages) text += "  FAIL " + m + "\n";
    emit(cfg, j, text, out);
    return res.ok() ? kExitOk : kExitVerdictFalse;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    int code = kExitInternal;
    try {
        switch (cfg.command) {
            case RunConfig::Command::Fp: code = run_fp(cfg, out); break;
            case RunConfig::Command::Fg: code = run_fg(cfg, out); break;
            case RunConfig::Command::Ideal: code = run_ideal(cfg, out); break;
            case RunConfig::Command::Thmg: code = run_thmg(cfg, out); break;
            case RunConfig::Command::Oracle: code = run_oracle(cfg, out); break;
            case RunConfig::Command::Crosscheck: code = run_crosscheck(cfg, out); break;
            case RunConfig::Command::Selftest: code = run_selftest(cfg, out); break;
        }
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const InternalError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    // Timing is diagnostic only; keeping it off stdout keeps reports
    // byte-deterministic for fixed inputs.
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    err << "computed in " << ms << " ms\n";
    return code;
}

} // namespace fpn
