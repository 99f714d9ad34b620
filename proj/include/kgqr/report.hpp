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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgqr/reformulation_graph.hpp"

namespace kgqr {

/// Execution summary of one rewritten query.
struct CandidateReport {
    std::string id;  // stable for identical inputs: c1, c2, ...
    int level = 0;
    int round = 0;
    std::vector<std::string> rules_applied;
    std::string query;
    std::size_t answer_count = 0;
    std::size_t new_answer_count = 0;
    std::int64_t time_ms = 0;
    std::vector<std::vector<std::string>> sample_answers;  // first N rows
};

struct RunReport {
    std::vector<std::string> head;
    std::string original_query;
    std::size_t original_answer_count = 0;
    std::int64_t original_time_ms = 0;
    std::vector<std::vector<std::string>> original_answers;  // all rows
    std::vector<CandidateReport> candidates;
};

/// Shapes execution results into a report. The first run is the original;
/// candidate samples keep the first `sample_cap` rows.
RunReport build_report(const std::vector<CandidateRun>& runs,
                       std::size_t sample_cap = 5);

/// Deterministic renderings: identical inputs give identical bytes apart
/// from the time fields. JSON and TSV carry the same content.
std::string to_json(const RunReport& report);
std::string to_tsv(const RunReport& report);
std::string to_text(const RunReport& report);

}  // namespace kgqr
