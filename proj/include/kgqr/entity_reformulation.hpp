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

#include "kgqr/graph.hpp"
#include "kgqr/query.hpp"
#include "kgqr/relaxation.hpp"

namespace kgqr {

/// A <predicate, object> pair of some entity.
struct Fact {
    Term predicate;
    Term object;
    friend auto operator<=>(const Fact&, const Fact&) = default;
};

std::string to_string(const Fact& f);

/// All facts of one entity, in deterministic (predicate, object) order.
struct FactSet {
    Term entity;
    std::vector<Fact> facts;
};

/// A fact with its scores. rank = specificity * popularity, both in the
/// configured logarithm base (natural by default).
struct RankedFact {
    Fact fact;
    double specificity = 0.0;
    double popularity = 0.0;
    double rank = 0.0;
};

/// Top facts of an entity, non-increasing by rank (ties broken by predicate
/// IRI, then object IRI).
struct EntitySummary {
    Term entity;
    int k = 0;
    std::vector<RankedFact> ranked;

    bool empty() const { return ranked.empty(); }
};

/// Summary facts rewritten as triple patterns sharing one subject variable.
struct SummaryPattern {
    std::string variable;
    std::vector<TriplePattern> patterns;
};

/// Fact selection knobs.
struct SelectionConfig {
    int k = 3;
    std::set<std::string> blacklist;                // property IRIs to drop
    std::vector<std::string> namespace_priority;    // IRI prefixes, best first
    bool exclude_literals = true;
    bool exclude_unique = true;     // drop facts unique to one entity whose
                                    // object occurs once graph-wide
    bool include_type_facts = false;  // keep rdf:type facts (benchmark-style
                                      // summaries want them)
    bool per_feature = false;  // one fact per reformulation instead of a
                               // k-fact summary; skips namespace dedup and
                               // range grouping
    double log_base = 0.0;     // 0 = natural log
    bool df_over_any_fact = false;  // alternative specificity denominator:
                                    // entities with any fact at all
};

/// All <p, o> pairs with <e, p, o> in the graph, unfiltered. Empty when the
/// entity has no outgoing statements.
FactSet fact_set(const Term& entity, const Graph& g);

/// log(|entities| / |entities holding the fact|). The fact must be held by
/// at least one entity (throws std::invalid_argument otherwise).
double specificity(const Fact& f, const Graph& g,
                   const SelectionConfig& cfg = {});

/// log(number of triples whose object is `object`). The object must occur
/// at least once (throws std::invalid_argument otherwise).
double popularity(const Term& object, const Graph& g,
                  const SelectionConfig& cfg = {});

RankedFact rank_fact(const Fact& f, const Graph& g,
                     const SelectionConfig& cfg = {});

/// Drops literal-valued facts, blacklisted predicates, rdf:type facts
/// (unless configured in), and facts unique to one entity whose object
/// occurs only once graph-wide.
FactSet filter_facts(const FactSet& fs, const Graph& g,
                     const SelectionConfig& cfg);

/// Among facts whose predicates share a local name but live in different
/// namespaces, keeps only the highest ranked (ties broken by namespace
/// priority, then predicate and object IRI).
std::vector<RankedFact> dedup_properties(std::vector<RankedFact> facts,
                                         const SelectionConfig& cfg);

/// Groups facts by the object's range (most specific rdf:type of the
/// object, lexicographically least among incomparable ones; untyped objects
/// share one group). For round r, each group offers its (r+1)-th best fact;
/// the top k offers win. Empty once every group is exhausted.
EntitySummary group_and_select(std::vector<RankedFact> facts, const Graph& g,
                               int k, int round);

/// Full pipeline: facts -> filter -> rank -> namespace dedup -> selection
/// for the given round. `exclude` drops specific facts before ranking.
EntitySummary summarize(const Term& entity, const Graph& g,
                        const SelectionConfig& cfg, int round = 0,
                        const std::vector<Fact>& exclude = {},
                        const std::optional<Term>& exclude_predicate =
                            std::nullopt);

/// One triple pattern <?var, p, o> per summary fact, sharing `var`. The
/// caller supplies a variable that is fresh for its query.
SummaryPattern summary_pattern(const EntitySummary& summary,
                               const std::string& var);

/// One rewrite of an entity-constant pattern.
struct EntityReformulation {
    std::vector<TriplePattern> patterns;  // rewritten pattern first, then
                                          // the appended summary patterns
    int rule = 0;                         // which of the six shapes fired
    std::string entity_var;
    std::string detail;
};

/// Rewrites the entity constant at `entity_pos` into a fresh variable plus
/// the summary patterns of that entity for the given round:
///
///   1. <e,?p,?o>  -> <?e,?p,?o>            (round 0 only, no summary)
///   2. <e,P,?o>   -> rewritten + summary, facts with predicate P excluded
///   3. <e,P,o>    -> rewritten + summary, the exact fact <P,o> excluded
///   4. <s,p,e>    -> rewritten + summary, facts with predicate p excluded
///   5. <?s,p,e>   -> rewritten + summary, facts with predicate p excluded
///   6. <?s,?p,e>  -> rewritten + summary
///
/// nullopt when the pattern does not have one of these shapes, when the
/// position does not hold an entity IRI (class positions of rdf:type
/// patterns are not entities), or when the summary for this round is empty.
std::optional<EntityReformulation> reformulate_pattern(
    const TriplePattern& tp, Position entity_pos, const Graph& g,
    const SelectionConfig& cfg, int round, FreshVars& fresh);

/// True when `reformulate_pattern` could apply at this position.
bool is_entity_pattern(const TriplePattern& tp, Position entity_pos);

}  // namespace kgqr
