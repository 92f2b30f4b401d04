#include "pnmcts/harness/agent.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace pnmcts::harness {

AgentKind parse_agent_kind(std::string_view name) {
  if (name == "mcts") return AgentKind::kMcts;
  if (name == "pnmcts") return AgentKind::kPnMcts;
  throw std::invalid_argument("unknown agent '" + std::string(name) + "' (known: mcts, pnmcts)");
}

std::string agent_name(AgentKind kind) { return kind == AgentKind::kMcts ? "mcts" : "pnmcts"; }

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    // Accept forms like "2e6" for node caps.
    const double d = parse_double(text);
    if (!(d >= 0.0) || d != static_cast<double>(static_cast<std::uint64_t>(d))) {
      throw std::invalid_argument(std::string(key) + ": expected a nonnegative integer, got '" + std::string(text) + "'");
    }
    return static_cast<std::uint64_t>(d);
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw std::invalid_argument(std::string(key) + ": expected a boolean, got '" + std::string(text) + "'");
}

}  // namespace

void set_agent_param(AgentSpec& agent, std::string_view key, std::string_view value) {
  auto& c = agent.config;
  const bool pn = agent.kind == AgentKind::kPnMcts;
  if (key == "C") {
    c.exploration = parse_double(value);
  } else if (key == "Cpn" && pn) {
    c.pn_weight = parse_double(value);
  } else if (key == "playout-cap") {
    c.playout_cap = static_cast<std::uint32_t>(parse_unsigned(key, value));
  } else if (key == "max-nodes") {
    c.max_nodes = static_cast<std::size_t>(parse_unsigned(key, value));
  } else if (key == "expand-one" && pn) {
    c.expand_one = parse_bool(key, value);
  } else {
    throw std::invalid_argument("parameter '" + std::string(key) + "' does not apply to agent " + agent_name(agent.kind));
  }
  c.validate();
}

std::string render_params(const AgentSpec& agent) {
  const auto& c = agent.config;
  std::string out = "C=" + format_double(c.exploration);
  if (agent.kind == AgentKind::kPnMcts) out += ";Cpn=" + format_double(c.pn_weight);
  out += ";playout-cap=" + std::to_string(c.playout_cap);
  out += ";max-nodes=" + std::to_string(c.max_nodes);
  if (agent.kind == AgentKind::kPnMcts && c.expand_one) out += ";expand-one=1";
  return out;
}

}  // namespace pnmcts::harness
