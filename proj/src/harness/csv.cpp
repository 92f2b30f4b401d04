#include "pnmcts/harness/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace pnmcts::harness {

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
T parse_int(const std::string& text, const char* column) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument(std::string("csv: bad integer in column ") + column + ": '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  if (quoted) throw std::invalid_argument("csv: unterminated quote");
  fields.push_back(std::move(current));
  return fields;
}

SeriesRow make_row(const MatchSpec& spec, const SeriesResult& result) {
  SeriesRow row;
  row.game = spec.game;
  row.agent_a = agent_name(spec.a.kind);
  row.agent_b = agent_name(spec.b.kind);
  row.params_a = render_params(spec.a);
  row.params_b = render_params(spec.b);
  row.budget_kind = spec.budget.kind_name();
  row.budget_value = spec.budget.value();
  row.games = result.games;
  row.wins_a = result.wins;
  row.draws = result.draws;
  row.losses_a = result.losses;
  row.win_rate_a = result.win_rate;
  row.ci95 = result.ci95;
  row.forfeits = result.forfeits;
  row.seed = spec.seed;
  return row;
}

std::string render_row(const SeriesRow& r) {
  std::string out;
  for (const auto& f : {quote(r.game), quote(r.agent_a), quote(r.agent_b), quote(r.params_a), quote(r.params_b),
                        quote(r.budget_kind), format_double(r.budget_value), std::to_string(r.games),
                        std::to_string(r.wins_a), std::to_string(r.draws), std::to_string(r.losses_a),
                        format_double(r.win_rate_a), format_double(r.ci95), std::to_string(r.forfeits),
                        std::to_string(r.seed)}) {
    if (!out.empty()) out += ',';
    out += f;
  }
  return out;
}

SeriesRow parse_row(std::string_view line) {
  const auto f = split_csv(line);
  if (f.size() != 15) throw std::invalid_argument("csv: expected 15 columns, got " + std::to_string(f.size()));
  SeriesRow r;
  r.game = f[0];
  r.agent_a = f[1];
  r.agent_b = f[2];
  r.params_a = f[3];
  r.params_b = f[4];
  r.budget_kind = f[5];
  r.budget_value = parse_double(f[6]);
  r.games = parse_int<int>(f[7], "games");
  r.wins_a = parse_int<int>(f[8], "wins_a");
  r.draws = parse_int<int>(f[9], "draws");
  r.losses_a = parse_int<int>(f[10], "losses_a");
  r.win_rate_a = parse_double(f[11]);
  r.ci95 = parse_double(f[12]);
  r.forfeits = parse_int<int>(f[13], "forfeits");
  r.seed = parse_int<std::uint64_t>(f[14], "seed");
  return r;
}

std::string row_key(const SeriesRow& r) {
  return r.game + '|' + r.agent_a + '|' + r.agent_b + '|' + r.params_a + '|' + r.params_b + '|' + r.budget_kind + '|' +
         format_double(r.budget_value) + '|' + std::to_string(r.games) + '|' + std::to_string(r.seed);
}

std::vector<SeriesRow> read_rows(const std::string& path) {
  std::vector<SeriesRow> rows;
  std::ifstream in(path);
  if (!in) return rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == kCsvHeader) continue;
    rows.push_back(parse_row(line));
  }
  return rows;
}

void append_row(const std::string& path, const SeriesRow& row) {
  bool fresh = true;
  {
    std::ifstream in(path);
    fresh = !in || in.peek() == std::ifstream::traits_type::eof();
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (fresh) out << kCsvHeader << '\n';
  out << render_row(row) << '\n';
}

}  // namespace pnmcts::harness
