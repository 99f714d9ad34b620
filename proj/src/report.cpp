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

#include "kgqr/report.hpp"

#include <sstream>

#include <json.hpp>

namespace kgqr {

namespace {

std::vector<std::string> render_row(const std::vector<Term>& row) {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const Term& t : row) out.push_back(t.to_ntriples());
    return out;
}

std::string render_step(const RewriteStep& step) {
    return std::string(to_string(step.kind)) + "[pattern " +
           std::to_string(step.pattern_index) + "]: " + step.detail;
}

}  // namespace

RunReport build_report(const std::vector<CandidateRun>& runs,
                       std::size_t sample_cap) {
    RunReport report;
    if (runs.empty()) return report;

    const CandidateRun& original = runs.front();
    report.head = original.solution.head;
    report.original_query = to_string(original.candidate.query);
    report.original_answer_count = original.solution.answer_count();
    report.original_time_ms = original.solution.wall_time_ms;
    for (const auto& row : original.solution.rows)
        report.original_answers.push_back(render_row(row));

    for (std::size_t i = 1; i < runs.size(); ++i) {
        const CandidateRun& run = runs[i];
        CandidateReport cr;
        cr.id = "c" + std::to_string(i);
        cr.level = static_cast<int>(run.candidate.level());
        cr.round = run.candidate.round;
        for (const RewriteStep& step : run.candidate.steps)
            cr.rules_applied.push_back(render_step(step));
        cr.query = to_string(run.candidate.query);
        cr.answer_count = run.solution.answer_count();
        cr.new_answer_count = run.new_answer_count;
        cr.time_ms = run.solution.wall_time_ms;
        const std::size_t n = std::min(sample_cap, run.solution.rows.size());
        for (std::size_t r = 0; r < n; ++r)
            cr.sample_answers.push_back(render_row(run.solution.rows[r]));
        report.candidates.push_back(std::move(cr));
    }
    return report;
}

std::string to_json(const RunReport& report) {
    nlohmann::json j;
    j["head"] = report.head;
    j["original"] = {
        {"query", report.original_query},
        {"answer_count", report.original_answer_count},
        {"time_ms", report.original_time_ms},
        {"answers", report.original_answers},
    };
    j["candidates"] = nlohmann::json::array();
    for (const CandidateReport& c : report.candidates) {
        j["candidates"].push_back({
            {"id", c.id},
            {"level", c.level},
            {"round", c.round},
            {"rules_applied", c.rules_applied},
            {"query", c.query},
            {"answer_count", c.answer_count},
            {"new_answer_count", c.new_answer_count},
            {"time_ms", c.time_ms},
            {"sample_answers", c.sample_answers},
        });
    }
    return j.dump(2) + "\n";
}

namespace {

std::string tsv_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '\t')
            out += "\\t";
        else if (c == '\n')
            out += "\\n";
        else
            out += c;
    }
    return out;
}

std::string join_rows(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += "|";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += " ";
            out += rows[i][j];
        }
    }
    return out;
}

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += "; ";
        out += items[i];
    }
    return out;
}

}  // namespace

std::string to_tsv(const RunReport& report) {
    std::ostringstream out;
    out << "kind\tid\tlevel\tround\trules\tquery\tanswer_count\t"
           "new_answer_count\ttime_ms\tanswers\n";
    out << "original\t-\t0\t0\t-\t" << tsv_escape(report.original_query)
        << "\t" << report.original_answer_count << "\t0\t"
        << report.original_time_ms << "\t"
        << tsv_escape(join_rows(report.original_answers)) << "\n";
    for (const CandidateReport& c : report.candidates) {
        out << "candidate\t" << c.id << "\t" << c.level << "\t" << c.round
            << "\t" << tsv_escape(join_list(c.rules_applied)) << "\t"
            << tsv_escape(c.query) << "\t" << c.answer_count << "\t"
            << c.new_answer_count << "\t" << c.time_ms << "\t"
            << tsv_escape(join_rows(c.sample_answers)) << "\n";
    }
    return out.str();
}

std::string to_text(const RunReport& report) {
    std::ostringstream out;
    out << "original query\n  " << report.original_query << "\n  answers: "
        << report.original_answer_count << "  (" << report.original_time_ms
        << " ms)\n";
    for (const auto& row : report.original_answers) {
        out << "    ";
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << " ";
            out << row[j];
        }
        out << "\n";
    }
    out << "\ncandidates: " << report.candidates.size() << "\n";
    for (const CandidateReport& c : report.candidates) {
        out << "\n[" << c.id << "] level " << c.level << ", round " << c.round
            << "\n  " << c.query << "\n";
        for (const std::string& rule : c.rules_applied)
            out << "  rule: " << rule << "\n";
        out << "  answers: " << c.answer_count << " (" << c.new_answer_count
            << " new, " << c.time_ms << " ms)\n";
        for (const auto& row : c.sample_answers) {
            out << "    ";
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) out << " ";
                out << row[j];
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace kgqr
