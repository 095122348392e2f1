#include "cubegroup/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "cubegroup/errors.hpp"

namespace cubegroup {

namespace {

struct Token {
  enum class Kind { Word, Open, Close } kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool is_word_char(char c) {
  return std::isspace(static_cast<unsigned char>(c)) == 0 && c != '(' && c != ')' &&
         c != '#' && c != ':' && c != '=';
}

// Tokenizes [begin, end) of a line into words and parentheses.
std::vector<Token> tokenize(std::string_view line, std::size_t offset, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = offset;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
    } else if (c == '(') {
      tokens.push_back({Token::Kind::Open, "(", i + 1});
      ++i;
    } else if (c == ')') {
      tokens.push_back({Token::Kind::Close, ")", i + 1});
      ++i;
    } else if (is_word_char(c)) {
      const auto start = i;
      while (i < line.size() && is_word_char(line[i])) ++i;
      tokens.push_back({Token::Kind::Word, std::string(line.substr(start, i - start)), start + 1});
    } else {
      throw ParseError(ErrorKind::ParseError, line_no, i + 1,
                       std::string("unexpected character '") + c + "'");
    }
  }
  return tokens;
}

struct Cycle {
  std::vector<Token> members;
  std::size_t column;
};

// `id` or a sequence of parenthesized cycles.
std::vector<Cycle> parse_cycles(const std::vector<Token>& tokens, std::size_t line_no,
                                std::size_t end_column) {
  if (tokens.empty()) {
    throw ParseError(ErrorKind::ParseError, line_no, end_column,
                     "expected cycles or 'id'");
  }
  if (tokens.size() == 1 && tokens[0].kind == Token::Kind::Word && tokens[0].text == "id") {
    return {};
  }
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].kind != Token::Kind::Open) {
      throw ParseError(ErrorKind::ParseError, line_no, tokens[i].column,
                       "expected '(' but found '" + tokens[i].text + "'");
    }
    Cycle cycle{{}, tokens[i].column};
    ++i;
    while (i < tokens.size() && tokens[i].kind == Token::Kind::Word) cycle.members.push_back(tokens[i++]);
    if (i == tokens.size() || tokens[i].kind != Token::Kind::Close) {
      throw ParseError(ErrorKind::ParseError, line_no,
                       i == tokens.size() ? end_column : tokens[i].column,
                       "unterminated cycle");
    }
    ++i;
    if (cycle.members.empty()) {
      throw ParseError(ErrorKind::ParseError, line_no, cycle.column, "empty cycle");
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<std::string_view> split_lines(std::string_view document) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= document.size()) {
    auto end = document.find('\n', start);
    if (end == std::string_view::npos) end = document.size();
    auto line = document.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

DecoratedGraph parse_decorated_graph(std::string_view document) {
  const auto lines = split_lines(document);
  std::vector<std::string> labels;
  std::map<std::string, Label, std::less<>> index;
  std::vector<std::optional<Permutation>> involutions;
  bool have_header = false;

  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line_no = n + 1;
    const auto line = strip_comment(lines[n]);
    if (blank(line)) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      const auto col = line.find_first_not_of(" \t") + 1;
      throw ParseError(ErrorKind::ParseError, line_no, col, "expected '<name>:'");
    }
    auto head_tokens = tokenize(line.substr(0, colon), 0, line_no);
    if (head_tokens.size() != 1 || head_tokens[0].kind != Token::Kind::Word) {
      throw ParseError(ErrorKind::ParseError, line_no,
                       head_tokens.empty() ? colon + 1 : head_tokens[0].column,
                       "expected a single name before ':'");
    }
    const auto& head = head_tokens[0];
    const auto body = tokenize(line, colon + 1, line_no);

    if (!have_header) {
      if (head.text != "gens") {
        throw ParseError(ErrorKind::ParseError, line_no, head.column,
                         "the first line must be 'gens: <label> ...'");
      }
      if (body.empty()) {
        throw ParseError(ErrorKind::ParseError, line_no, line.size() + 1,
                         "no generators declared");
      }
      for (const auto& token : body) {
        if (token.kind != Token::Kind::Word) {
          throw ParseError(ErrorKind::ParseError, line_no, token.column,
                           "generator labels cannot contain parentheses");
        }
        if (token.text == "id") {
          throw ParseError(ErrorKind::ParseError, line_no, token.column,
                           "'id' is reserved and cannot be a generator label");
        }
        if (!index.emplace(token.text, labels.size()).second) {
          throw ParseError(ErrorKind::DuplicateLabel, line_no, token.column,
                           "label '" + token.text + "' declared twice");
        }
        labels.push_back(token.text);
      }
      if (labels.size() > kMaxRank) {
        throw ParseError(ErrorKind::RankCapExceeded, line_no, body[kMaxRank].column,
                         "more than " + std::to_string(kMaxRank) + " generators");
      }
      involutions.assign(labels.size(), std::nullopt);
      have_header = true;
      continue;
    }

    const auto owner = index.find(head.text);
    if (owner == index.end()) {
      throw ParseError(ErrorKind::UnknownLabel, line_no, head.column,
                       "'" + head.text + "' is not a declared generator");
    }
    const auto s = owner->second;
    if (involutions[s]) {
      throw ParseError(ErrorKind::ParseError, line_no, head.column,
                       "second involution line for '" + head.text + "'");
    }
    std::vector<std::uint32_t> images(labels.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<std::uint32_t>(i);
    std::vector<bool> used(labels.size(), false);
    for (const auto& cycle : parse_cycles(body, line_no, line.size() + 1)) {
      std::vector<Label> members;
      for (const auto& token : cycle.members) {
        const auto it = index.find(token.text);
        if (it == index.end()) {
          throw ParseError(ErrorKind::UnknownLabel, line_no, token.column,
                           "'" + token.text + "' is not a declared generator");
        }
        if (it->second == s) {
          throw ParseError(ErrorKind::SelfCycle, line_no, token.column,
                           "j_" + head.text + " must fix " + head.text);
        }
        if (used[it->second]) {
          throw ParseError(ErrorKind::NonDisjointCycles, line_no, token.column,
                           "'" + token.text + "' appears in more than one cycle");
        }
        used[it->second] = true;
        members.push_back(it->second);
      }
      if (members.size() != 2) {
        throw ParseError(ErrorKind::ParseError, line_no, cycle.column,
                         "cycles must have exactly two members");
      }
      images[members[0]] = static_cast<std::uint32_t>(members[1]);
      images[members[1]] = static_cast<std::uint32_t>(members[0]);
    }
    involutions[s] = Permutation(std::move(images));
  }
  if (!have_header) {
    throw ParseError(ErrorKind::ParseError, lines.size(), 1, "missing 'gens:' header");
  }
  std::vector<Permutation> resolved;
  for (auto& j : involutions) resolved.push_back(j ? std::move(*j) : Permutation::identity(labels.size()));
  return DecoratedGraph(std::move(labels), std::move(resolved));
}

std::string serialize_decorated_graph(const DecoratedGraph& graph) {
  std::string out = "gens:";
  for (const auto& label : graph.labels()) out += " " + label;
  out += "\n";
  for (Label s = 0; s < graph.rank(); ++s) {
    out += graph.name(s) + ": " + format_involution(graph, graph.involution(s)) + "\n";
  }
  return out;
}

PermGroupInput parse_perm_group(std::string_view document) {
  const auto lines = split_lines(document);
  PermGroupInput input;
  std::set<std::string, std::less<>> seen;
  std::vector<std::vector<std::vector<std::uint32_t>>> cycle_lists;
  std::uint32_t degree = 0;

  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line_no = n + 1;
    const auto line = strip_comment(lines[n]);
    if (blank(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(ErrorKind::ParseError, line_no, line.find_first_not_of(" \t") + 1,
                       "expected '<label> = <cycles>'");
    }
    auto head = tokenize(line.substr(0, eq), 0, line_no);
    if (head.size() != 1 || head[0].kind != Token::Kind::Word) {
      throw ParseError(ErrorKind::ParseError, line_no, head.empty() ? eq + 1 : head[0].column,
                       "expected a single label before '='");
    }
    if (!seen.insert(head[0].text).second) {
      throw ParseError(ErrorKind::DuplicateLabel, line_no, head[0].column,
                       "label '" + head[0].text + "' declared twice");
    }
    std::vector<std::vector<std::uint32_t>> cycles;
    std::set<std::uint32_t> used;
    for (const auto& cycle : parse_cycles(tokenize(line, eq + 1, line_no), line_no, line.size() + 1)) {
      std::vector<std::uint32_t> points;
      for (const auto& token : cycle.members) {
        const bool numeric = !token.text.empty() &&
                             std::all_of(token.text.begin(), token.text.end(),
                                         [](unsigned char c) { return std::isdigit(c) != 0; });
        if (!numeric || token.text.size() > 6 || std::stoul(token.text) == 0) {
          throw ParseError(ErrorKind::ParseError, line_no, token.column,
                           "points must be positive integers, got '" + token.text + "'");
        }
        const auto p = static_cast<std::uint32_t>(std::stoul(token.text));
        if (!used.insert(p).second) {
          throw ParseError(ErrorKind::NonDisjointCycles, line_no, token.column,
                           "point " + token.text + " appears twice");
        }
        degree = std::max(degree, p);
        points.push_back(p - 1);
      }
      cycles.push_back(std::move(points));
    }
    input.labels.push_back(head[0].text);
    cycle_lists.push_back(std::move(cycles));
  }
  if (input.labels.empty()) {
    throw ParseError(ErrorKind::ParseError, lines.size(), 1, "no generators declared");
  }
  for (const auto& cycles : cycle_lists) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t i = 0; i < degree; ++i) images[i] = i;
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    input.generators.emplace_back(std::move(images));
  }
  return input;
}

DecoratedGraph decorated_graph_from_perm_group(const PermGroupInput& input) {
  const auto degree = input.generators.empty() ? 0 : input.generators.front().size();
  // g * s acts as s first, then g.
  return decorated_graph_from_group(
      input.labels, std::span<const Permutation>(input.generators), Permutation::identity(degree),
      [](const Permutation& g, const Permutation& s) { return compose(g, s); });
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
    const auto start = i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) == 0) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

std::string format_word(const DecoratedGraph& graph, const Word& word,
                        std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += separator;
    out += graph.name(word[i]);
  }
  return out;
}

std::string format_involution(const DecoratedGraph& graph, const Permutation& perm) {
  const auto cycles = perm.cycles();
  if (cycles.empty()) return "id";
  std::string out;
  for (const auto& cycle : cycles) {
    out += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += " ";
      out += graph.name(cycle[i]);
    }
    out += ")";
  }
  return out;
}

std::string format_subset(const DecoratedGraph& graph, LabelMask subset) {
  return "{" + format_labels(graph, mask_members(subset), ",") + "}";
}

std::string format_labels(const DecoratedGraph& graph, const std::vector<Label>& labels,
                          std::string_view separator) {
  return format_word(graph, labels, separator);
}

std::string format_edge_group(const DecoratedGraph& graph, const EdgeGroup& group) {
  const auto members = format_labels(graph, group.labels);
  switch (group.kind) {
    case TrajectoryKind::FourCycle: return "square " + members;
    case TrajectoryKind::Angle: return "angle " + members;
    case TrajectoryKind::SingleEdge: return "edge " + members;
    case TrajectoryKind::NotPeriodic: break;
  }
  return members;
}

std::string format_signed_permutation(const DecoratedGraph& graph, const SignedPermutation& m) {
  std::string out;
  for (Label t = 0; t < m.size(); ++t) {
    out += "e_" + graph.name(t) + " -> " + (m.sign(t) < 0 ? "-" : "") + "e_" +
           graph.name(m.perm()(t)) + "\n";
  }
  return out;
}

void write_cayley_dot(std::ostream& out, const CubeGroup& group) {
  const auto& graph = group.graph();
  auto vertex_name = [&](std::size_t x) {
    return "\"" + format_subset(graph, group.subset_of(x)) + "\"";
  };
  out << "graph cayley {\n";
  for (std::size_t x = 0; x < group.order(); ++x) out << "  " << vertex_name(x) << ";\n";
  for (const auto& e : group.cayley().edges) {
    out << "  " << vertex_name(e.u) << " -- " << vertex_name(e.v) << " [label=\""
        << graph.name(e.label) << "\"];\n";
  }
  out << "}\n";
}

namespace {

nlohmann::json label_list(const DecoratedGraph& graph, const std::vector<Label>& labels) {
  auto arr = nlohmann::json::array();
  for (auto s : labels) arr.push_back(graph.name(s));
  return arr;
}

nlohmann::json tree_node(const DecoratedGraph& graph, const OrbitTree& node) {
  nlohmann::json j;
  j["labels"] = label_list(graph, node.labels);
  j["children"] = nlohmann::json::array();
  for (const auto& child : node.children) j["children"].push_back(tree_node(graph, child));
  return j;
}

}  // namespace

nlohmann::json to_json(const DecoratedGraph& graph, const AdmissibilityReport& report) {
  nlohmann::json j;
  j["format_version"] = kJsonFormatVersion;
  j["admissible"] = report.admissible;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json item;
    item["seed"] = {graph.name(f.first), graph.name(f.second)};
    item["kind"] = f.kind == AdmissibilityFailureKind::NotFourPeriodic ? "NotFourPeriodic"
                                                                       : "Holonomy";
    if (f.holonomy) item["holonomy"] = format_involution(graph, *f.holonomy);
    j["failures"].push_back(std::move(item));
  }
  return j;
}

nlohmann::json to_json(const DecoratedGraph& graph, const OrbitPartition& partition) {
  nlohmann::json j;
  j["format_version"] = kJsonFormatVersion;
  j["orbits"] = nlohmann::json::array();
  for (const auto& block : partition.blocks) j["orbits"].push_back(label_list(graph, block));
  return j;
}

nlohmann::json to_json(const DecoratedGraph& graph, const OrbitTree& tree) {
  nlohmann::json j;
  j["format_version"] = kJsonFormatVersion;
  j["tree"] = tree_node(graph, tree);
  j["ordering"] = label_list(graph, decomposition_ordering(tree));
  return j;
}

nlohmann::json to_json(const SweepReport& report) {
  nlohmann::json j;
  j["format_version"] = kJsonFormatVersion;
  j["rank"] = report.rank;
  j["total_graphs"] = report.total_graphs;
  j["admissible_count"] = report.admissible_count;
  j["verified_count"] = report.verified_count;
  j["passed"] = report.passed();
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back(
        {{"graph_index", f.graph_index}, {"check", f.check}, {"detail", f.detail}});
  }
  return j;
}

}  // namespace cubegroup
