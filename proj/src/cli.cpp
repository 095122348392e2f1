#include "cubegroup/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubegroup/decomposition.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/graphcore.hpp"
#include "cubegroup/group.hpp"
#include "cubegroup/io.hpp"
#include "cubegroup/representation.hpp"

namespace cubegroup {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CubeError(ErrorKind::Usage, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

DecoratedGraph load_graph(const std::string& path) {
  return parse_decorated_graph(read_file(path));
}

std::string element_text(const CubeGroup& group, std::size_t x) {
  if (x == 0) return "1";
  return format_word(group.graph(), group.element(x).witness);
}

void print_tree(std::ostream& out, const DecoratedGraph& graph, const OrbitTree& node,
                std::size_t depth) {
  out << std::string(2 * depth, ' ') << format_subset(graph, mask_of(node.labels)) << "\n";
  for (const auto& child : node.children) print_tree(out, graph, child, depth + 1);
}

std::vector<Label> parse_ordering(const DecoratedGraph& graph, const std::string& text) {
  return graph.parse_word(split_words(text));
}

/// Product s_1 s_2 ... of the generators with exponent 1, leftmost applied last.
std::string normal_form_text(const DecoratedGraph& graph, const std::vector<Label>& ordering,
                             std::uint32_t exponents) {
  std::string out;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if ((exponents >> i) & 1U) out += (out.empty() ? "" : " ") + graph.name(ordering[i]);
  }
  return out.empty() ? "1" : out;
}

int cmd_check(const std::string& file, bool json, std::ostream& out) {
  const auto graph = load_graph(file);
  const auto report = is_admissible(graph);
  if (json) {
    auto j = to_json(graph, report);
    if (report.admissible) {
      j["edge_partition"] = nlohmann::json::array();
      for (const auto& g : edge_partition(graph)) {
        j["edge_partition"].push_back(format_edge_group(graph, g));
      }
      j["relators"] = nlohmann::json::array();
      for (const auto& r : presentation_relators(graph)) {
        j["relators"].push_back(format_word(graph, r));
      }
    }
    out << j.dump(2) << "\n";
    return report.admissible ? 0 : 1;
  }
  out << "admissible: " << (report.admissible ? "yes" : "no") << "\n";
  for (const auto& f : report.failures) {
    out << "  seed (" << graph.name(f.first) << ", " << graph.name(f.second) << "): "
        << (f.kind == AdmissibilityFailureKind::NotFourPeriodic ? "NotFourPeriodic" : "Holonomy");
    if (f.holonomy) out << " " << format_involution(graph, *f.holonomy);
    out << "\n";
  }
  if (!report.admissible) return 1;
  out << "edge partition:\n";
  for (const auto& g : edge_partition(graph)) out << "  " << format_edge_group(graph, g) << "\n";
  out << "relators:\n";
  for (const auto& r : presentation_relators(graph)) out << "  " << format_word(graph, r) << "\n";
  return 0;
}

int cmd_group(const std::string& file, bool elements, std::ostream& out) {
  const auto group = generate_group(load_graph(file));
  const auto expected = std::size_t{1} << group.rank();
  out << "rank: " << group.rank() << "\n";
  out << "order: " << group.order() << "\n";
  out << "expected: " << expected << "\n";
  out << "cayley: " << group.cube().dimension << "-cube\n";
  if (elements) {
    out << "elements:\n";
    for (std::size_t x = 0; x < group.order(); ++x) {
      out << "  " << std::left << std::setw(static_cast<int>(2 * group.rank() + 3))
          << format_subset(group.graph(), group.subset_of(x)) << " " << element_text(group, x)
          << "\n";
    }
  }
  return group.order() == expected ? 0 : 3;
}

int cmd_cayley(const std::string& file, const std::string& dot_path, std::ostream& out) {
  const auto group = generate_group(load_graph(file));
  if (dot_path == "-") {
    write_cayley_dot(out, group);
    return 0;
  }
  std::ofstream dot(dot_path);
  if (!dot) throw CubeError(ErrorKind::Usage, "cannot write '" + dot_path + "'");
  write_cayley_dot(dot, group);
  out << "wrote " << group.order() << " vertices and " << group.cayley().edges.size()
      << " edges to " << dot_path << "\n";
  return 0;
}

int cmd_orbits(const std::string& file, bool tree, bool json, std::ostream& out) {
  const auto graph = load_graph(file);
  if (tree) {
    const auto t = orbit_tree(graph);
    if (json) {
      out << to_json(graph, t).dump(2) << "\n";
    } else {
      print_tree(out, graph, t, 0);
    }
    return 0;
  }
  const auto partition = orbits(graph);
  if (json) {
    out << to_json(graph, partition).dump(2) << "\n";
    return 0;
  }
  out << "orbits:";
  for (const auto& block : partition.blocks) out << " " << format_subset(graph, mask_of(block));
  out << "\n";
  return 0;
}

int cmd_decompose(const std::string& file, std::ostream& out) {
  const auto graph = load_graph(file);
  const auto ordering = decomposition_ordering(orbit_tree(graph));
  out << "ordering: " << format_labels(graph, ordering) << "\n";
  out << "G = ";
  for (auto s : ordering) out << "<" << graph.name(s) << ">";
  out << "\n";
  return 0;
}

int cmd_normal_form(const std::string& file, const std::string& word_text,
                    const std::string& ordering_text, std::ostream& out) {
  const auto group = generate_group(load_graph(file));
  const auto& graph = group.graph();
  const auto word = graph.parse_word(split_words(word_text));
  const auto ordering = ordering_text.empty() ? decomposition_ordering(orbit_tree(graph))
                                              : parse_ordering(graph, ordering_text);
  const auto nf = normal_form(group, ordering);
  const auto x = group.evaluate(word);
  const auto exponents = nf.exponents_of[x];
  out << "word: " << (word.empty() ? "(empty)" : format_word(graph, word)) << "\n";
  out << "ordering: " << format_labels(graph, ordering) << "\n";
  out << "bits: " << exponent_string(exponents, ordering.size()) << "\n";
  out << "normal form: " << normal_form_text(graph, ordering, exponents) << "\n";
  out << "vertex: " << format_subset(graph, group.subset_of(x)) << "\n";
  return 0;
}

int cmd_rep(const std::string& file, const std::string& word_text, bool matrix, bool json,
            std::ostream& out) {
  const auto graph = load_graph(file);
  require_admissible(graph);
  const auto word = graph.parse_word(split_words(word_text));
  const auto rho = rho_of_word(graph, word);
  if (!(rho_via_formula(graph, word) == rho)) {
    throw CubeError(ErrorKind::InternalConsistency,
                    "sign formula disagrees with the matrix product");
  }
  const auto m = rho.matrix();
  if (json) {
    nlohmann::json j;
    j["format_version"] = kJsonFormatVersion;
    j["labels"] = graph.labels();
    j["word"] = split_words(word_text);
    j["matrix"] = m;
    nlohmann::json counts;
    for (Label t = 0; t < graph.rank(); ++t) counts[graph.name(t)] = sign_count(graph, word, t).count;
    j["sign_counts"] = counts;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "word: " << (word.empty() ? "(empty)" : format_word(graph, word)) << "\n";
  if (matrix) {
    std::size_t width = 3;
    for (const auto& name : graph.labels()) width = std::max(width, name.size() + 2);
    out << std::string(width + 2, ' ');
    for (const auto& name : graph.labels()) out << std::setw(static_cast<int>(width)) << name;
    out << "\n";
    for (Label r = 0; r < graph.rank(); ++r) {
      out << std::setw(static_cast<int>(width)) << graph.name(r) << "  ";
      for (int v : m[r]) out << std::setw(static_cast<int>(width)) << v;
      out << "\n";
    }
  } else {
    out << format_signed_permutation(graph, rho);
  }
  return 0;
}

int cmd_from_group(const std::string& file, std::ostream& out) {
  const auto graph = decorated_graph_from_perm_group(parse_perm_group(read_file(file)));
  out << serialize_decorated_graph(graph);
  return 0;
}

int cmd_enumerate(std::size_t rank, const SweepOptions& options, bool json, std::ostream& out) {
  const auto report = sweep(rank, options);
  if (json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << "rank: " << report.rank << "\n";
    out << "total graphs: " << report.total_graphs << "\n";
    out << "admissible: " << report.admissible_count << "\n";
    out << "verified: " << report.verified_count << "\n";
    out << "failures: " << report.failures.size() << "\n";
    for (const auto& f : report.failures) {
      out << "  graph " << f.graph_index << " " << f.check << ": " << f.detail << "\n";
    }
  }
  return report.passed() ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cube groups from decorated graphs", "cubegroup"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  bool tree = false;
  bool elements = false;
  bool matrix = false;
  std::string dot_path;
  std::string word;
  std::string ordering;
  std::size_t rank = 0;
  SweepOptions sweep_options;
  bool planar = false;

  auto* check = app.add_subcommand("check", "Admissibility report, edge partition and relators");
  check->add_option("FILE", file, "Decorated graph file")->required();
  check->add_flag("--json", json, "JSON output");

  auto* group = app.add_subcommand("group", "Generate the cube group and check its order");
  group->add_option("FILE", file, "Decorated graph file")->required();
  group->add_flag("--elements", elements, "List elements with their vertex subsets");

  auto* cayley = app.add_subcommand("cayley", "Export the Cayley graph");
  cayley->add_option("FILE", file, "Decorated graph file")->required();
  cayley->add_option("--dot", dot_path, "DOT output path, '-' for stdout")->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "Orbits of the permutation representation");
  orbits_cmd->add_option("FILE", file, "Decorated graph file")->required();
  orbits_cmd->add_flag("--tree", tree, "Print the full orbit tree");
  orbits_cmd->add_flag("--json", json, "JSON output");

  auto* decompose = app.add_subcommand("decompose", "Product decomposition ordering");
  decompose->add_option("FILE", file, "Decorated graph file")->required();

  auto* nf = app.add_subcommand("normal-form", "Boolean normal form of an element");
  nf->add_option("FILE", file, "Decorated graph file")->required();
  nf->add_option("--word", word, "Generators in application order, e.g. \"b a c\"")->required();
  nf->add_option("--ordering", ordering, "Generator ordering (default: orbit tree leaves)");

  auto* rep = app.add_subcommand("rep", "Geometric representation of an element");
  rep->add_option("FILE", file, "Decorated graph file")->required();
  rep->add_option("--word", word, "Generators in application order")->required();
  rep->add_flag("--matrix", matrix, "Print the signed permutation matrix");
  rep->add_flag("--json", json, "JSON output");

  auto* from_group = app.add_subcommand("from-group", "Decorated graph of a permutation group");
  from_group->add_option("FILE", file, "Permutation group file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive verification sweep");
  enumerate->add_option("--rank", rank, "Rank, 1 to 5")->required();
  enumerate->add_option("--jobs", sweep_options.jobs, "Worker threads");
  enumerate->add_flag("--planar", planar, "Check every planar drawing of each orbit tree");
  enumerate->add_option("--first", sweep_options.first, "First graph index");
  enumerate->add_option("--count", sweep_options.count, "Number of graphs");
  enumerate->add_flag("--json", json, "JSON output");

  std::vector<std::string> argv_storage{"cubegroup"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code_for(ErrorKind::Usage);
  }

  try {
    if (check->parsed()) return cmd_check(file, json, out);
    if (group->parsed()) return cmd_group(file, elements, out);
    if (cayley->parsed()) return cmd_cayley(file, dot_path, out);
    if (orbits_cmd->parsed()) return cmd_orbits(file, tree, json, out);
    if (decompose->parsed()) return cmd_decompose(file, out);
    if (nf->parsed()) return cmd_normal_form(file, word, ordering, out);
    if (rep->parsed()) return cmd_rep(file, word, matrix, json, out);
    if (from_group->parsed()) return cmd_from_group(file, out);
    if (enumerate->parsed()) {
      sweep_options.all_planar_orderings = planar;
      return cmd_enumerate(rank, sweep_options, json, out);
    }
  } catch (const CubeError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: InternalConsistency: " << e.what() << "\n";
    return exit_code_for(ErrorKind::InternalConsistency);
  }
  return exit_code_for(ErrorKind::Usage);
}

}  // namespace cubegroup
