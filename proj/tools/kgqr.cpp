/*
Copyright 2026 The kgqr Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kgqr/eval.hpp"
#include "kgqr/ntriples.hpp"
#include "kgqr/query_parser.hpp"
#include "kgqr/reformulation_graph.hpp"
#include "kgqr/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// one entry per line, '#' comments
std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

std::set<kgqr::RewriteKind> rules_for_mode(const std::string& mode) {
    using kgqr::RewriteKind;
    if (mode == "relax")
        return {RewriteKind::Superclass, RewriteKind::Superproperty,
                RewriteKind::LiteralRelax, RewriteKind::SimpleRelax};
    if (mode == "reform")
        return {RewriteKind::VariableTyping, RewriteKind::EntityReform};
    return kgqr::all_rewrite_kinds();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knowledge-graph query reformulation"};

    std::vector<std::string> data_files;
    std::string query_file;
    std::string mode = "both";
    std::string output = "text";
    std::string blacklist_file, namespace_priority_file;
    int k = 3;
    int max_level = 2;
    int max_candidates = 50;
    int answer_threshold = -1;
    bool per_feature = false;
    bool include_type_facts = false;
    bool no_closure = false;

    app.add_option("--data", data_files, "N-Triples data file (repeatable)")
        ->required();
    app.add_option("--query", query_file, "query file")->required();
    app.add_option("--mode", mode, "rule set: relax, reform, or both")
        ->check(CLI::IsMember({"relax", "reform", "both"}))
        ->capture_default_str();
    app.add_option("--k", k, "summary size")->capture_default_str();
    app.add_option("--max-level", max_level, "rewrite depth")
        ->capture_default_str();
    app.add_option("--max-candidates", max_candidates,
                   "candidate cap including the original")
        ->capture_default_str();
    app.add_option("--answer-threshold", answer_threshold,
                   "stop once this many distinct answers are reachable");
    app.add_option("--blacklist", blacklist_file,
                   "file of property IRIs to exclude from summaries");
    app.add_option("--namespace-priority", namespace_priority_file,
                   "file of IRI prefixes, highest priority first");
    app.add_flag("--per-feature", per_feature,
                 "append one feature per reformulation");
    app.add_flag("--include-type-facts", include_type_facts,
                 "keep rdf:type facts in summaries");
    app.add_flag("--no-closure", no_closure, "query the raw graph");
    app.add_option("--output", output, "report format")
        ->check(CLI::IsMember({"json", "tsv", "text"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        kgqr::GenerationConfig cfg;
        cfg.max_level = max_level;
        cfg.max_candidates = max_candidates;
        if (answer_threshold >= 0)
            cfg.answer_threshold = static_cast<std::size_t>(answer_threshold);
        cfg.enabled = rules_for_mode(mode);
        cfg.selection.k = k;
        cfg.selection.per_feature = per_feature;
        cfg.selection.include_type_facts = include_type_facts;
        if (!blacklist_file.empty())
            for (const std::string& iri : read_lines(blacklist_file))
                cfg.selection.blacklist.insert(iri);
        if (!namespace_priority_file.empty())
            cfg.selection.namespace_priority =
                read_lines(namespace_priority_file);

        kgqr::Graph graph;
        try {
            graph = kgqr::build_graph(kgqr::load_ntriples_files(data_files));
        } catch (const kgqr::ParseError& e) {
            std::cerr << "data parse error: " << e.what() << "\n";
            return 1;
        }
        if (!no_closure) graph = kgqr::compute_closure(graph);

        kgqr::BGPQuery query;
        try {
            query = kgqr::parse_query(read_file(query_file));
        } catch (const kgqr::QueryParseError& e) {
            std::cerr << "query parse error in " << query_file << ": "
                      << e.what() << "\n";
            return 1;
        }

        const auto candidates = kgqr::generate(query, graph, cfg);
        const auto runs = kgqr::execute_all(candidates, graph);
        const kgqr::RunReport report = kgqr::build_report(runs);

        if (output == "json")
            std::cout << kgqr::to_json(report);
        else if (output == "tsv")
            std::cout << kgqr::to_tsv(report);
        else
            std::cout << kgqr::to_text(report);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
