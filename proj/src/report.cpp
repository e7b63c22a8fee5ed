#include "coxeter/report.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

#include "coxeter/canonical.hpp"

namespace coxeter {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

json bond_to_json(const Bond& b) {
  if (b.infinite()) return json("inf");
  return json(b.m);
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edge_list()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"m", bond_to_json(e.label)}});
  }
  return json{{"n", g.size()},
              {"vertices", g.vertices()},
              {"edges", edges},
              {"canonical_form", canonical_form(g)}};
}

json classification_to_json(const Classification& c) {
  json out{{"class", to_string(c.cls)},
           {"signature", {{"p", c.sig.p}, {"q", c.sig.q}, {"r", c.sig.r}}},
           {"lambda1", c.lambda1},
           {"exact", c.exact},
           {"approximate", c.approximate},
           {"tau", c.tau}};
  if (c.n >= 2) {
    out["lambda2"] = c.lambda2;
  } else {
    out["lambda2"] = nullptr;
  }
  return out;
}

json label_to_json(const Label& label) {
  json out = json::array();
  for (size_t i = 0; i < label.vertices.size(); ++i) {
    out.push_back({{"vertex", label.vertices[i]}, {"value", label.values[i]}});
  }
  return out;
}

json decomposition_to_json(const DecompositionCertificate& cert) {
  auto side = [](const Graph& part, const Label& label, const std::vector<double>& residuals,
                 double lambda_max, const Classification& cls) {
    return json{{"vertices", part.vertices()},
                {"inherited_label", label_to_json(label)},
                {"residuals", residuals},
                {"lambda_max", lambda_max},
                {"classification", classification_to_json(cls)}};
  };
  return json{{"kind", "decomposition"},
              {"lambda2", cert.split.lambda2},
              {"lambda2_degenerate", cert.split.degenerate},
              {"zero_tolerance", cert.split.zero_tol},
              {"eps", cert.eps},
              {"second_eigenvector", label_to_json(cert.split.v2)},
              {"zero_vertices", cert.split.zero},
              {"positive_part", side(cert.part_pos, cert.label_pos, cert.residuals_pos,
                                     cert.lambda_max_pos, cert.class_pos)},
              {"negative_part", side(cert.part_neg, cert.label_neg, cert.residuals_neg,
                                     cert.lambda_max_neg, cert.class_neg)}};
}

json separation_to_json(const SeparationCertificate& cert) {
  return json{{"kind", "separation"},
              {"x", cert.x},
              {"y", cert.y},
              {"class_x", classification_to_json(cert.class_x)},
              {"class_y", classification_to_json(cert.class_y)},
              {"whole", classification_to_json(cert.whole)}};
}

json corpus_report_to_json(const CorpusReport& report) {
  json sizes = json::object();
  for (const auto& [n, count] : report.per_size_counts) sizes[std::to_string(n)] = count;
  return json{{"max_n", report.max_n},
              {"total", report.total},
              {"per_size_counts", sizes},
              {"class_tallies", report.class_tallies},
              {"higher_rank_witnesses", report.higher_rank_witnesses},
              {"exact", report.exact},
              {"verified", report.verified()}};
}

json make_report(const std::string& command, const Graph& input, const Classification& cls) {
  return json{{"command", command},
              {"input", graph_to_json(input)},
              {"classification", classification_to_json(cls)},
              {"certificate", nullptr}};
}

std::string report_to_string(const json& report) {
  return report.dump(2) + "\n";
}

namespace {

std::string edge_list_string(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edge_list()) {
    if (!out.empty()) out += ' ';
    out += e.u + "-" + e.v + ":" + bond_to_string(e.label);
  }
  return out;
}

}  // namespace

std::string corpus_csv_header() {
  return "canonical_form,n,edge_list,class,p,q,r,lambda1,lambda2,exact";
}

std::string corpus_csv_row(const Graph& g, const Classification& c, const std::string& form) {
  std::string lambda2 = c.n >= 2 ? format_double(c.lambda2) : "";
  return form + "," + std::to_string(g.size()) + "," + edge_list_string(g) + "," +
         to_string(c.cls) + "," + std::to_string(c.sig.p) + "," + std::to_string(c.sig.q) + "," +
         std::to_string(c.sig.r) + "," + format_double(c.lambda1) + "," + lambda2 + "," +
         (c.exact ? "true" : "false");
}

std::string corpus_jsonl_row(const Graph& g, const Classification& c, const std::string& form) {
  json row{{"canonical_form", form},
           {"n", g.size()},
           {"edge_list", edge_list_string(g)},
           {"class", to_string(c.cls)},
           {"p", c.sig.p},
           {"q", c.sig.q},
           {"r", c.sig.r},
           {"lambda1", c.lambda1},
           {"exact", c.exact}};
  if (c.n >= 2) {
    row["lambda2"] = c.lambda2;
  } else {
    row["lambda2"] = nullptr;
  }
  return row.dump();
}

}  // namespace coxeter
