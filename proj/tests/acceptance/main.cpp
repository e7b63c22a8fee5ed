// Acceptance suite: runs every promised end-to-end property at its stated
// tolerance and prints one PASS/FAIL line per criterion.  Exit status is the
// number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "coxeter/canonical.hpp"
#include "coxeter/cli.hpp"
#include "coxeter/decompose.hpp"
#include "coxeter/enumerate.hpp"
#include "coxeter/exact.hpp"
#include "coxeter/spectral.hpp"
#include "coxeter/textio.hpp"
#include "support/generators.hpp"

using namespace coxeter;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

long count_data_lines(const std::string& text, bool skip_header) {
  std::istringstream in(text);
  std::string line;
  long rows = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && skip_header) {
      first = false;
      continue;
    }
    first = false;
    ++rows;
  }
  return rows;
}

// All assignments of labels from {3, 4, inf} to the edges of a simply laced
// base graph, visited through a callback.
template <typename F>
void for_each_labeling(const Graph& base, F&& visit) {
  const auto edges = base.edge_list();
  const int options[3] = {3, 4, Bond::kInfinity};
  std::vector<int> choice(edges.size(), 0);
  while (true) {
    std::vector<Edge> labeled = edges;
    for (size_t e = 0; e < edges.size(); ++e) {
      int m = options[choice[e]];
      labeled[e].label = (m == Bond::kInfinity) ? Bond::infinity() : Bond::finite(m);
    }
    visit(Graph::build(base.vertices(), labeled));
    size_t pos = 0;
    while (pos < choice.size() && choice[pos] == 2) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
    ++choice[pos];
  }
}

bool check_certificate(Criterion& c, const Graph& g, const DecompositionCertificate& cert,
                       long index) {
  bool ok = true;
  auto flag = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      c.require(false, std::string(what) + " (case " + std::to_string(index) + ", " +
                           canonical_form(g) + ")");
    }
  };
  flag(!cert.split.pos.empty() && !cert.split.neg.empty(), "empty sign class");
  for (double r : cert.residuals_pos) flag(r >= -1e-8, "positive-side residual below -1e-8");
  for (double r : cert.residuals_neg) flag(r >= -1e-8, "negative-side residual below -1e-8");
  flag(cert.lambda_max_pos >= cert.split.lambda2 - 1e-8, "positive part lambda_max too small");
  flag(cert.lambda_max_neg >= cert.split.lambda2 - 1e-8, "negative part lambda_max too small");
  for (const Classification* cls : {&cert.class_pos, &cert.class_neg}) {
    flag(cls->cls == CoxeterClass::StronglyHyperbolic ||
             cls->cls == CoxeterClass::WeaklyHyperbolic || cls->cls == CoxeterClass::HigherRank,
         "part not hyperbolic or higher rank");
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> results;

  // 1. connected-graph enumeration counts
  {
    Criterion c{"criterion 1: connected graph counts 1..7"};
    auto start = Clock::now();
    const long expected[] = {1, 1, 2, 6, 21, 112, 853};
    long total = 0;
    for (int n = 1; n <= 7; ++n) {
      CliRun r = cli({"enumerate", "graphs", "--n", std::to_string(n), "--format", "csv"});
      c.require(r.code == 0, "enumerate graphs --n " + std::to_string(n) + " failed");
      long rows = count_data_lines(r.out, true);
      total += rows;
      c.require(rows == expected[n - 1],
                "n=" + std::to_string(n) + ": got " + std::to_string(rows) + ", want " +
                    std::to_string(expected[n - 1]));
    }
    c.require(total == 996, "total " + std::to_string(total) + " != 996");
    double elapsed = seconds_since(start);
    c.require(elapsed < 60.0, "took " + std::to_string(elapsed) + "s (limit 60)");
    c.detail << "total " << total << " in " << elapsed << "s";
    results.push_back(std::move(c));
  }

  // 2. tree enumeration counts
  {
    Criterion c{"criterion 2: tree counts 1..11"};
    auto start = Clock::now();
    const long expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
    long total = 0;
    for (int n = 1; n <= 11; ++n) {
      CliRun r = cli({"enumerate", "trees", "--n", std::to_string(n), "--format", "jsonl"});
      c.require(r.code == 0, "enumerate trees failed");
      long rows = count_data_lines(r.out, false);
      total += rows;
      c.require(rows == expected[n - 1],
                "n=" + std::to_string(n) + ": got " + std::to_string(rows) + ", want " +
                    std::to_string(expected[n - 1]));
    }
    c.require(total == 436, "total " + std::to_string(total) + " != 436");
    double elapsed = seconds_since(start);
    c.require(elapsed < 10.0, "took " + std::to_string(elapsed) + "s (limit 10)");
    c.detail << "total " << total << " in " << elapsed << "s";
    results.push_back(std::move(c));
  }

  // 3. corpus verification with the exact signature path
  {
    Criterion c{"criterion 3: graph/tree corpora have no higher-rank member"};
    CliRun graphs = cli({"verify", "graphs", "--max-n", "7"});
    c.require(graphs.code == 0, "verify graphs exit " + std::to_string(graphs.code));
    c.require(graphs.out.find("996 graphs, 0 higher-rank witnesses, PASS") != std::string::npos,
              "graph summary line missing");
    c.require(graphs.out.find("exact: true") != std::string::npos,
              "graph verification left the exact path");
    CliRun trees = cli({"verify", "trees", "--max-n", "11"});
    c.require(trees.code == 0, "verify trees exit " + std::to_string(trees.code));
    c.require(trees.out.find("436 trees, 0 higher-rank witnesses, PASS") != std::string::npos,
              "tree summary line missing");
    c.require(trees.out.find("exact: true") != std::string::npos,
              "tree verification left the exact path");
    results.push_back(std::move(c));
  }

  // 4. figure fixtures
  {
    Criterion c{"criterion 4: figure fixtures classify and certify as promised"};
    Graph f1 = figure("fig1");
    Classification c1 = classify(f1);
    c.require(c1.cls == CoxeterClass::StronglyHyperbolic, "fig1 classifies " + to_string(c1.cls));
    c.require(c1.exact && !c1.approximate, "fig1 classification not exact/unambiguous");
    // both halves
    VertexSet left, right;
    for (const std::string& v : f1.vertices()) {
      (v[0] == 'u' ? left : right).push_back(v);
    }
    c.require(left.size() == 10 && right.size() == 10, "fig1 halves have wrong sizes");
    for (const VertexSet* half : {&left, &right}) {
      Classification hc = classify(induced_subgraph(f1, *half));
      c.require(hc.cls == CoxeterClass::StronglyHyperbolic,
                "fig1 half classifies " + to_string(hc.cls));
    }

    Graph f2 = figure("fig2");
    Classification c2 = classify(f2);
    c.require(c2.cls == CoxeterClass::HigherRank, "fig2 classifies " + to_string(c2.cls));
    c.require(c2.exact && !c2.approximate, "fig2 classification not exact/unambiguous");
    c.require(!find_separated_hyperbolic_pair(f2).has_value(),
              "fig2 unexpectedly has a separated hyperbolic pair");
    try {
      DecompositionCertificate cert = decompose_higher_rank(f2);
      check_certificate(c, f2, cert, 0);
    } catch (const std::exception& e) {
      c.require(false, std::string("fig2 decomposition failed: ") + e.what());
    }

    // the same promises through the command line
    std::string tmp = "/tmp/acceptance_fig2.cox";
    {
      std::ofstream out(tmp);
      out << serialize_graph(f2);
    }
    CliRun cls_run = cli({"classify", tmp});
    c.require(cls_run.code == 0 && cls_run.out.find("class: HigherRank") != std::string::npos,
              "CLI classify on fig2 failed");
    CliRun sep_run = cli({"search-separated", tmp});
    c.require(sep_run.code == 0 && sep_run.out == "none found\n",
              "CLI search-separated on fig2 should find none");
    CliRun dec_run = cli({"decompose", tmp});
    c.require(dec_run.code == 0 && dec_run.out.find("positive part") != std::string::npos,
              "CLI decompose on fig2 failed");
    results.push_back(std::move(c));
  }

  // 5. decomposition sweep
  {
    Criterion c{"criterion 5: decomposition certificates over the labeled sweep"};
    auto start = Clock::now();
    long higher_rank = 0;
    long seen = 0;
    for (int n = 2; n <= 6; ++n) {
      for (const Graph& base : connected_graphs(n)) {
        for_each_labeling(base, [&](const Graph& g) {
          ++seen;
          Classification cls = classify(g);
          if (cls.cls != CoxeterClass::HigherRank) return;
          ++higher_rank;
          try {
            DecompositionCertificate cert = decompose_higher_rank(g);
            check_certificate(c, g, cert, higher_rank);
          } catch (const std::exception& e) {
            c.require(false, std::string("decomposition failed: ") + e.what() + " on " +
                                 canonical_form(g));
          }
        });
      }
    }
    long sampled = 0;
    generators::Rng rng(20260810);
    while (sampled < 200) {
      Graph g = generators::random_graph_of_class(rng, 8, 12, CoxeterClass::HigherRank);
      ++sampled;
      try {
        DecompositionCertificate cert = decompose_higher_rank(g);
        check_certificate(c, g, cert, -sampled);
      } catch (const std::exception& e) {
        c.require(false, std::string("random decomposition failed: ") + e.what());
      }
    }
    double elapsed = seconds_since(start);
    c.require(elapsed < 300.0, "took " + std::to_string(elapsed) + "s (limit 300)");
    c.detail << seen << " labeled graphs, " << higher_rank << " higher rank, 200 random, in "
             << elapsed << "s";
    results.push_back(std::move(c));
  }

  // 6. planted separated pairs
  {
    Criterion c{"criterion 6: planted separated hyperbolic pairs certify"};
    generators::Rng rng(998877);
    std::uniform_int_distribution<int> path_edges(2, 4);
    for (int i = 0; i < 100; ++i) {
      generators::PlantedPair p =
          generators::planted_separated_hyperbolic_pair(rng, 8, path_edges(rng));
      Classification cls = classify(p.graph);
      c.require(cls.cls == CoxeterClass::HigherRank,
                "planted graph " + std::to_string(i) + " classifies " + to_string(cls.cls));
      try {
        SeparationCertificate cert = certify_higher_rank_via_separation(p.graph, p.x, p.y);
        c.require(cert.whole.cls == CoxeterClass::HigherRank, "certificate lost higher rank");
      } catch (const std::exception& e) {
        c.require(false, std::string("certification failed: ") + e.what());
      }
    }
    c.detail << "100 planted pairs";
    results.push_back(std::move(c));
  }

  // 7. subhyperbolic triple sweep
  {
    Criterion c{"criterion 7: subhyperbolic triple sweep finds no higher rank"};
    auto start = Clock::now();
    CorpusReport report = sweep_subhyperbolic_triples(4);
    c.require(report.verified(),
              std::to_string(report.higher_rank_witnesses.size()) + " higher-rank witnesses");
    double elapsed = seconds_since(start);
    c.require(elapsed < 600.0, "took " + std::to_string(elapsed) + "s (limit 600)");
    c.detail << report.total << " triples in " << elapsed << "s";
    results.push_back(std::move(c));
  }

  // 8. planted cone vertices
  {
    Criterion c{"criterion 8: planted cone vertices rule out higher rank"};
    generators::Rng rng(556677);
    for (int i = 0; i < 500; ++i) {
      generators::PlantedCone planted = generators::planted_cone_graph(rng);
      Classification cls = classify(planted.graph);
      c.require(cls.cls != CoxeterClass::HigherRank,
                "cone graph " + std::to_string(i) + " classifies HigherRank");
      auto witness = cone_vertex_witness(planted.graph);
      c.require(witness.has_value(), "no cone witness found for case " + std::to_string(i));
      if (witness) {
        // any returned witness must actually work
        Graph g = planted.graph;
        VertexSet rest;
        for (const std::string& v : g.vertices()) {
          if (v != *witness) rest.push_back(v);
        }
        Graph remainder = induced_subgraph(g, rest);
        for (const VertexSet& comp : connected_components(remainder)) {
          Classification cc = classify(induced_subgraph(remainder, comp));
          c.require(cc.cls == CoxeterClass::Spherical || cc.cls == CoxeterClass::Affine,
                    "witness leaves a non-spherical/affine component in case " +
                        std::to_string(i));
        }
      }
    }
    c.detail << "500 planted cones";
    results.push_back(std::move(c));
  }

  // 9. numerical sanity
  {
    Criterion c{"criterion 9: residuals, interlacing, exact/float agreement"};
    // (a) reconstruction residuals on the corpora (spectrum() also enforces
    // this bound internally on every call made by criteria 1-8)
    std::vector<Graph> corpus;
    for (int n = 1; n <= 7; ++n) {
      for (Graph& g : connected_graphs(n)) corpus.push_back(std::move(g));
    }
    size_t graph_corpus_size = corpus.size();
    for (int n = 1; n <= 11; ++n) {
      for (Graph& g : free_trees(n)) corpus.push_back(std::move(g));
    }
    for (const Graph& g : corpus) {
      AdjacencyMatrix a = generalized_adjacency(g);
      double bound = 1e-8 * g.size() * std::max(a.cwiseAbs().maxCoeff(), 0.0);
      Spectrum s = spectrum(a, default_tolerance(g.size()));
      c.require(s.residual <= bound || a.cwiseAbs().maxCoeff() == 0.0,
                "residual bound violated on " + canonical_form(g));
      // (c) float zero-band signature equals the exact signature
      Signature exact = exact_inertia(g);
      Signature fl;
      double tau = default_tolerance(g.size());
      for (int i = 0; i < g.size(); ++i) {
        if (std::abs(s.values[i] - 2.0) <= tau) {
          ++fl.r;
        } else if (s.values[i] > 2.0) {
          ++fl.q;
        } else {
          ++fl.p;
        }
      }
      c.require(exact.p == fl.p && exact.q == fl.q && exact.r == fl.r,
                "exact/float signature mismatch on " + canonical_form(g));
    }
    c.require(graph_corpus_size == 996, "graph corpus size drifted");
    c.require(corpus.size() == 996 + 436, "corpus size drifted");

    // (b) interlacing over random induced subgraphs
    generators::Rng rng(31337);
    const std::vector<int> labels = {3, 4, 5, 6, Bond::kInfinity};
    for (int i = 0; i < 10000; ++i) {
      std::uniform_int_distribution<int> size_pick(2, 9);
      int n = size_pick(rng);
      Graph g = generators::random_connected_labeled_graph(rng, n, 0.4, labels);
      std::uniform_int_distribution<std::uint64_t> mask_pick(1, (std::uint64_t{1} << n) - 1);
      Graph sub = induced_subgraph(g, mask_pick(rng));
      double whole = classify(g).lambda1;
      double part = classify(sub).lambda1;
      c.require(part <= whole + 1e-8, "interlacing violated at trial " + std::to_string(i));
    }
    c.detail << (996 + 436) << " corpus graphs checked, 10000 interlacing pairs";
    results.push_back(std::move(c));
  }

  int failures = 0;
  for (Criterion& c : results) {
    std::string detail = c.detail.str();
    std::printf("%s: %s%s%s\n", c.name.c_str(), c.passed ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!c.passed) ++failures;
  }
  return failures;
}
