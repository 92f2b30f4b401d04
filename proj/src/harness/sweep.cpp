#include "pnmcts/harness/sweep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "pnmcts/games/registry.hpp"

namespace pnmcts::harness {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool known_key(const std::string& key) {
  static const std::set<std::string> plain = {"game", "a", "b", "games", "time", "sims", "seed", "threads"};
  static const std::set<std::string> agent = {"C", "Cpn", "playout-cap", "max-nodes", "expand-one"};
  if (plain.contains(key)) return true;
  if (key.size() > 2 && (key[0] == 'a' || key[0] == 'b') && key[1] == '.') return agent.contains(key.substr(2));
  return false;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("sweep config line " + std::to_string(line) + ": " + what);
}

}  // namespace

SweepConfig SweepConfig::parse(std::string_view text) {
  SweepConfig config;
  std::unordered_set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (!known_key(key)) fail(line_no, "unknown key '" + key + "'");
    if (!seen.insert(key).second) fail(line_no, "duplicate key '" + key + "'");
    std::vector<std::string> values;
    if (!value.empty() && value.front() == '[') {
      if (value.back() != ']') fail(line_no, "unterminated list");
      const std::string inner = value.substr(1, value.size() - 2);
      std::size_t p = 0;
      while (p <= inner.size() && !trim(inner).empty()) {
        auto comma = inner.find(',', p);
        if (comma == std::string::npos) comma = inner.size();
        const std::string item = trim(std::string_view(inner).substr(p, comma - p));
        if (item.empty()) fail(line_no, "empty list item");
        values.push_back(item);
        p = comma + 1;
      }
      if (values.empty()) fail(line_no, "empty parameter list for '" + key + "'");
    } else {
      if (value.empty()) fail(line_no, "missing value for '" + key + "'");
      values.push_back(value);
    }
    if (key == "threads") {
      if (values.size() != 1) fail(line_no, "threads cannot be a list");
      config.threads = std::max(1, std::stoi(values.front()));
      continue;
    }
    config.entries.emplace_back(key, std::move(values));
  }
  if (config.entries.empty()) throw std::invalid_argument("sweep config: no parameters");
  return config;
}

std::vector<std::map<std::string, std::string>> SweepConfig::cells() const {
  std::vector<std::map<std::string, std::string>> out{{}};
  for (const auto& [key, values] : entries) {
    std::vector<std::map<std::string, std::string>> next;
    next.reserve(out.size() * values.size());
    for (const auto& partial : out) {
      for (const auto& v : values) {
        auto cell = partial;
        cell[key] = v;
        next.push_back(std::move(cell));
      }
    }
    out = std::move(next);
  }
  return out;
}

MatchSpec match_from_cell(const std::map<std::string, std::string>& cell) {
  auto get = [&](const std::string& key) -> const std::string* {
    const auto it = cell.find(key);
    return it == cell.end() ? nullptr : &it->second;
  };
  MatchSpec spec;
  if (const auto* g = get("game")) spec.game = *g;
  else throw std::invalid_argument("sweep config: 'game' is required");
  if (!games::is_game_id(spec.game)) games::make_game(spec.game);
  spec.a.kind = parse_agent_kind(get("a") ? *get("a") : "pnmcts");
  spec.b.kind = parse_agent_kind(get("b") ? *get("b") : "mcts");
  if (get("time") && get("sims")) throw std::invalid_argument("sweep config: set either 'time' or 'sims', not both");
  if (const auto* t = get("time")) spec.budget = search::Budget::time(parse_double(*t));
  if (const auto* s = get("sims")) spec.budget = search::Budget::sims(static_cast<std::uint64_t>(std::stoull(*s)));
  if (const auto* n = get("games")) spec.games = std::stoi(*n);
  if (const auto* s = get("seed")) spec.seed = std::stoull(*s);
  for (const auto& [key, value] : cell) {
    if (key.size() > 2 && key[1] == '.') set_agent_param(key[0] == 'a' ? spec.a : spec.b, key.substr(2), value);
  }
  validate(spec);
  return spec;
}

SweepOutcome run_sweep(const SweepConfig& config, const std::string& out_path,
                       const std::function<void(const SeriesRow&)>& on_row) {
  std::vector<MatchSpec> specs;
  for (const auto& cell : config.cells()) specs.push_back(match_from_cell(cell));

  std::unordered_set<std::string> done;
  for (const auto& row : read_rows(out_path)) done.insert(row_key(row));

  SweepOutcome outcome;
  for (const auto& spec : specs) {
    SeriesResult empty;
    empty.games = spec.games;
    const SeriesRow pending = make_row(spec, empty);
    if (done.contains(row_key(pending))) {
      ++outcome.skipped;
      continue;
    }
    const auto result = run_series(spec, config.threads);
    const SeriesRow row = make_row(spec, result);
    append_row(out_path, row);
    done.insert(row_key(row));
    if (on_row) on_row(row);
    outcome.executed.push_back(row);
  }
  return outcome;
}

}  // namespace pnmcts::harness
