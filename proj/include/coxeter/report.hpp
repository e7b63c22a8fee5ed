#ifndef COXETER_REPORT_HPP
#define COXETER_REPORT_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "coxeter/decompose.hpp"
#include "coxeter/enumerate.hpp"
#include "coxeter/graph.hpp"
#include "coxeter/spectral.hpp"

namespace coxeter {

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json classification_to_json(const Classification& c);
nlohmann::json label_to_json(const Label& label);
nlohmann::json decomposition_to_json(const DecompositionCertificate& cert);
nlohmann::json separation_to_json(const SeparationCertificate& cert);
nlohmann::json corpus_report_to_json(const CorpusReport& report);

/// Top-level report for a CLI command: command echo, input graph with its
/// canonical form, classification, and an optional certificate payload.
nlohmann::json make_report(const std::string& command, const Graph& input,
                           const Classification& cls);

/// Serializes a report deterministically (sorted keys, 2-space indent,
/// trailing newline); identical inputs give byte-identical output.
std::string report_to_string(const nlohmann::json& report);

/// CSV header and row for corpus export.  Fields never contain commas: edge
/// lists use spaces and canonical forms use semicolons.
std::string corpus_csv_header();
std::string corpus_csv_row(const Graph& g, const Classification& c, const std::string& form);

/// JSONL record with the same fields as the CSV columns.
std::string corpus_jsonl_row(const Graph& g, const Classification& c, const std::string& form);

/// Fixed deterministic float formatting used in text output ("%.12g").
std::string format_double(double x);

}  // namespace coxeter

#endif
