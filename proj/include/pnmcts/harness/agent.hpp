#pragma once

#include <string>
#include <string_view>

#include "pnmcts/core/game.hpp"
#include "pnmcts/search/config.hpp"
#include "pnmcts/search/mcts.hpp"
#include "pnmcts/search/pn_mcts.hpp"

namespace pnmcts::harness {

enum class AgentKind { kMcts, kPnMcts };

struct AgentSpec {
  AgentKind kind = AgentKind::kMcts;
  search::SearchConfig config{};
};

AgentKind parse_agent_kind(std::string_view name);
std::string agent_name(AgentKind kind);

/// Sets one agent parameter by its CLI name: C, Cpn, playout-cap, max-nodes,
/// expand-one. Throws std::invalid_argument for unknown names, bad values,
/// and PN-only parameters on a baseline agent.
void set_agent_param(AgentSpec& agent, std::string_view key, std::string_view value);

/// Semicolon-separated "key=value" list of the agent's parameters.
std::string render_params(const AgentSpec& agent);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

/// One move decision with a fresh tree.
template <Game G>
search::SearchReport<MoveOf<G>> think(const G& game, const StateOf<G>& state, const AgentSpec& agent,
                                      const search::Budget& budget, std::uint64_t seed) {
  search::SearchConfig config = agent.config;
  config.budget = budget;
  config.seed = seed;
  if (agent.kind == AgentKind::kMcts) return search::Mcts<G>(game, config).search(state);
  return search::PnMcts<G>(game, config).search(state);
}

}  // namespace pnmcts::harness
