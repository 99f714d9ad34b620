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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgqr/entity_reformulation.hpp"
#include "kgqr/eval.hpp"
#include "kgqr/graph.hpp"
#include "kgqr/query.hpp"
#include "kgqr/relaxation.hpp"

namespace kgqr {

/// A rewritten query with its provenance chain. The original query is the
/// level-0 candidate with no steps; level equals the number of steps.
struct Candidate {
    BGPQuery query;
    std::vector<RewriteStep> steps;
    int round = 0;  // summary round used by the last entity rewrite

    std::size_t level() const { return steps.size(); }
};

inline std::set<RewriteKind> all_rewrite_kinds() {
    return {RewriteKind::Superclass,   RewriteKind::Superproperty,
            RewriteKind::LiteralRelax, RewriteKind::SimpleRelax,
            RewriteKind::VariableTyping, RewriteKind::EntityReform};
}

struct GenerationConfig {
    int max_level = 2;
    int max_candidates = 50;
    /// Stop once the union of distinct answers over emitted candidates
    /// reaches this size.
    std::optional<std::size_t> answer_threshold;
    SelectionConfig selection;
    std::set<RewriteKind> enabled = all_rewrite_kinds();
    TypingSource typing_source = TypingSource::ObservedTypes;
};

/// Canonical key of a query up to renaming of non-head variables: body
/// patterns with generated names replaced in first-occurrence order,
/// rendered and sorted. Used to prune duplicate candidates.
std::string canonical_query_key(const BGPQuery& q);

/// Breadth-first rewrite generation. Level n+1 candidates come from
/// applying every enabled applicable rule to every pattern of every level-n
/// candidate. Entity-constant positions are reformulated (one candidate per
/// summary round until exhaustion) in lieu of simple relaxation when both
/// are enabled; variable typing applies once, at level 1, ahead of the
/// other rules. Duplicates (same body up to variable renaming) are pruned.
/// Output is ordered by (level, generation order), truncated by
/// max_candidates and by the answer threshold; the original query is always
/// candidate 0.
std::vector<Candidate> generate(const BGPQuery& q, const Graph& g,
                                const GenerationConfig& cfg);

struct CandidateRun {
    Candidate candidate;
    SolutionSet solution;
    /// |answers \ answers(original)| over distinct rows; the first list
    /// entry is the baseline.
    std::size_t new_answer_count = 0;
};

/// Evaluates every candidate in order against the shared graph, recording
/// wall time, answer counts, and the distinct-answer difference against the
/// first (original) candidate.
std::vector<CandidateRun> execute_all(const std::vector<Candidate>& cands,
                                      const Graph& g);

}  // namespace kgqr
