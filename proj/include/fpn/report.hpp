#ifndef FPN_REPORT_HPP
#define FPN_REPORT_HPP

#include <nlohmann/json.hpp>

#include "fpn/oracle.hpp"

namespace fpn {

// Reports must be byte-deterministic for fixed inputs, so every JSON
// object is built with explicit insertion order.
using Json = nlohmann::ordered_json;

Json graph_json(const Graph& g);
Json character_json(const Graph& g, const Character& chi);
Json space_json(const Graph& g, const CharacterSpace& sp);
Json clique_json(const Graph& g, const Clique& c);

// clique_key names the witness clique field ("dead_clique" for the link
// decision, "clique" for the order-complex condition).
Json verdict_json(const Graph& g, const Verdict& v, const std::string& clique_key);

Json table_json(const GradedHomologyTable& t);

std::string render_verdict_text(const Graph& g, const Verdict& v, unsigned n);

} // namespace fpn

#endif
