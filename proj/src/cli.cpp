#include "coxeter/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "coxeter/canonical.hpp"
#include "coxeter/decompose.hpp"
#include "coxeter/enumerate.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/report.hpp"
#include "coxeter/textio.hpp"

namespace coxeter {

namespace {

using nlohmann::json;

Graph load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(1, 1, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse_graph_text(text, path).graph;
}

void print_classification(std::ostream& out, const Classification& c) {
  out << "class: " << to_string(c.cls) << "\n";
  out << "signature: (" << c.sig.p << "," << c.sig.q << "," << c.sig.r << ")\n";
  out << "lambda1: " << format_double(c.lambda1) << "\n";
  if (c.n >= 2) out << "lambda2: " << format_double(c.lambda2) << "\n";
  out << "exact: " << (c.exact ? "true" : "false") << "\n";
  if (c.approximate) out << "approximate: true\n";
}

int cmd_classify(const std::string& path, double tol, bool as_json, std::ostream& out) {
  Graph g = load_graph(path);
  Classification c = classify(g, tol);
  if (as_json) {
    out << report_to_string(make_report("classify", g, c));
  } else {
    print_classification(out, c);
  }
  return kExitOk;
}

int cmd_decompose(const std::string& path, bool as_json, std::ostream& out) {
  Graph g = load_graph(path);
  DecompositionCertificate cert = decompose_higher_rank(g);
  if (as_json) {
    json report = make_report("decompose", g, classify(g));
    report["certificate"] = decomposition_to_json(cert);
    out << report_to_string(report);
  } else {
    out << "higher-rank decomposition certificate\n";
    out << "lambda2: " << format_double(cert.split.lambda2)
        << (cert.split.degenerate ? " (degenerate; solver eigenvector recorded)" : "") << "\n";
    auto side = [&](const char* name, const Graph& part, double lambda_max,
                    const Classification& cls, const std::vector<double>& residuals) {
      double min_res = residuals.empty() ? 0.0 : *std::min_element(residuals.begin(), residuals.end());
      out << name << ":";
      for (const std::string& v : part.vertices()) out << ' ' << v;
      out << "\n  class " << to_string(cls.cls) << ", lambda_max " << format_double(lambda_max)
          << ", min residual " << format_double(min_res) << "\n";
    };
    side("positive part", cert.part_pos, cert.lambda_max_pos, cert.class_pos, cert.residuals_pos);
    side("negative part", cert.part_neg, cert.lambda_max_neg, cert.class_neg, cert.residuals_neg);
    if (!cert.split.zero.empty()) {
      out << "zero vertices:";
      for (const std::string& v : cert.split.zero) out << ' ' << v;
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_search_separated(const std::string& path, int max_n, bool as_json, std::ostream& out) {
  Graph g = load_graph(path);
  auto cert = find_separated_hyperbolic_pair(g, max_n);
  if (!cert) {
    if (as_json) {
      json report = make_report("search-separated", g, classify(g));
      out << report_to_string(report);
    } else {
      out << "none found\n";
    }
    return kExitOk;
  }
  if (as_json) {
    json report = make_report("search-separated", g, classify(g));
    report["certificate"] = separation_to_json(*cert);
    out << report_to_string(report);
  } else {
    out << "separated hyperbolic pair found; the graph is higher rank\n";
    out << "X:";
    for (const std::string& v : cert->x) out << ' ' << v;
    out << " (" << to_string(cert->class_x.cls) << ")\n";
    out << "Y:";
    for (const std::string& v : cert->y) out << ' ' << v;
    out << " (" << to_string(cert->class_y.cls) << ")\n";
  }
  return kExitOk;
}

int report_verification(const CorpusReport& report, const std::string& noun, std::ostream& out) {
  out << "sizes:";
  for (const auto& [n, count] : report.per_size_counts) out << ' ' << n << ':' << count;
  out << "\nclasses:";
  for (const auto& [cls, count] : report.class_tallies) out << ' ' << cls << ':' << count;
  out << "\nexact: " << (report.exact ? "true" : "false") << "\n";
  for (const std::string& witness : report.higher_rank_witnesses) {
    out << "witness: " << witness << "\n";
  }
  out << report.total << " " << noun << ", " << report.higher_rank_witnesses.size()
      << " higher-rank witnesses, " << (report.verified() ? "PASS" : "FAIL") << "\n";
  return report.verified() ? kExitOk : kExitVerifyFailed;
}

int cmd_verify_graphs(int max_n, std::ostream& out) {
  std::vector<Graph> corpus;
  for (int n = 1; n <= max_n; ++n) {
    for (Graph& g : connected_graphs(n)) corpus.push_back(std::move(g));
  }
  return report_verification(verify_corpus(corpus), "graphs", out);
}

int cmd_verify_trees(int max_n, std::ostream& out) {
  std::vector<Graph> corpus;
  for (int n = 1; n <= max_n; ++n) {
    for (Graph& g : free_trees(n)) corpus.push_back(std::move(g));
  }
  return report_verification(verify_corpus(corpus), "trees", out);
}

int cmd_verify_triples(int component_size, std::ostream& out) {
  return report_verification(sweep_subhyperbolic_triples(component_size), "triples", out);
}

int cmd_enumerate(const std::string& kind, int n, const std::string& format, std::ostream& out) {
  std::vector<Graph> corpus = (kind == "graphs") ? connected_graphs(n) : free_trees(n);
  if (format == "csv") out << corpus_csv_header() << "\n";
  for (const Graph& g : corpus) {
    Classification c = classify(g);
    std::string form = canonical_form(g);
    if (format == "csv") {
      out << corpus_csv_row(g, c, form) << "\n";
    } else {
      out << corpus_jsonl_row(g, c, form) << "\n";
    }
  }
  return kExitOk;
}

int cmd_figure(const std::string& name, std::ostream& out) {
  out << serialize_graph(figure(name));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter graph spectral classifier", "coxeter"};
  app.require_subcommand(1);

  std::string path;
  double tol = -1.0;
  bool as_json = false;
  int max_n = kDefaultSearchBound;
  int component_size = 4;
  int corpus_n = 0;
  std::string format = "csv";
  std::string figure_name;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a graph file");
  classify_cmd->add_option("file", path, "graph file (- for stdin)")->required();
  classify_cmd->add_option("--tol", tol, "tolerance for the eigenvalue-equals-2 band");
  classify_cmd->add_flag("--json", as_json, "emit a JSON report");

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "Certificate splitting a connected higher-rank graph into two disjoint "
                   "hyperbolic-or-higher-rank induced subgraphs");
  decompose_cmd->add_option("file", path, "graph file (- for stdin)")->required();
  decompose_cmd->add_flag("--json", as_json, "emit a JSON report");

  auto* search_cmd = app.add_subcommand(
      "search-separated", "Search for a separated pair of induced hyperbolic subgraphs");
  search_cmd->add_option("file", path, "graph file (- for stdin)")->required();
  search_cmd->add_option("--max-n", max_n, "exhaustive search size bound");
  search_cmd->add_flag("--json", as_json, "emit a JSON report");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive corpus verifications");
  verify_cmd->require_subcommand(1);
  auto* verify_graphs = verify_cmd->add_subcommand("graphs", "all connected unlabeled graphs");
  int graphs_max_n = 7;
  verify_graphs->add_option("--max-n", graphs_max_n, "largest size (<= 8)");
  auto* verify_trees = verify_cmd->add_subcommand("trees", "all unlabeled trees");
  int trees_max_n = 11;
  verify_trees->add_option("--max-n", trees_max_n, "largest size (<= 16)");
  auto* verify_triples = verify_cmd->add_subcommand("triples", "all subhyperbolic triples");
  verify_triples->add_option("--component-size", component_size,
                             "largest component vertex count");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Emit an isomorphism-class corpus");
  enumerate_cmd->require_subcommand(1);
  auto* enum_graphs = enumerate_cmd->add_subcommand("graphs", "connected unlabeled graphs");
  auto* enum_trees = enumerate_cmd->add_subcommand("trees", "unlabeled trees");
  for (auto* sub : {enum_graphs, enum_trees}) {
    sub->add_option("--n", corpus_n, "vertex count")->required();
    sub->add_option("--format", format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
  }

  auto* figure_cmd = app.add_subcommand("figure", "Print a named fixture graph");
  figure_cmd->add_option("name", figure_name, "fig1, fig2 or fig3_example")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help lands here
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*classify_cmd) return cmd_classify(path, tol, as_json, out);
    if (*decompose_cmd) return cmd_decompose(path, as_json, out);
    if (*search_cmd) return cmd_search_separated(path, max_n, as_json, out);
    if (*verify_graphs) return cmd_verify_graphs(graphs_max_n, out);
    if (*verify_trees) return cmd_verify_trees(trees_max_n, out);
    if (*verify_triples) return cmd_verify_triples(component_size, out);
    if (*enum_graphs) return cmd_enumerate("graphs", corpus_n, format, out);
    if (*enum_trees) return cmd_enumerate("trees", corpus_n, format, out);
    if (*figure_cmd) return cmd_figure(figure_name, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    err << "resource bound exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const InvariantBreachError& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    return kExitInvariantBreach;
  } catch (const ComputationError& e) {
    err << "computation failed: " << e.what() << "\n";
    return kExitInvariantBreach;
  }
  err << "error: no command selected\n";
  return kExitParse;
}

}  // namespace coxeter
