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

#include "kgqr/entity_reformulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace kgqr {

std::string to_string(const Fact& f) {
    return "<" + f.predicate.to_ntriples() + ", " + f.object.to_ntriples() +
           ">";
}

namespace {

double apply_base(double nats, const SelectionConfig& cfg) {
    if (cfg.log_base <= 0.0) return nats;
    return nats / std::log(cfg.log_base);
}

// ordering used everywhere a deterministic fact order is needed
bool ranked_before(const RankedFact& a, const RankedFact& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.fact < b.fact;
}

std::string local_name(const std::string& iri) {
    const std::size_t cut = iri.find_last_of("#/:");
    return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

std::string namespace_of(const std::string& iri) {
    const std::size_t cut = iri.find_last_of("#/:");
    return cut == std::string::npos ? std::string{} : iri.substr(0, cut + 1);
}

std::size_t namespace_rank(const std::string& iri,
                           const SelectionConfig& cfg) {
    for (std::size_t i = 0; i < cfg.namespace_priority.size(); ++i)
        if (iri.rfind(cfg.namespace_priority[i], 0) == 0) return i;
    return cfg.namespace_priority.size();
}

}  // namespace

FactSet fact_set(const Term& entity, const Graph& g) {
    FactSet out{entity, {}};
    for (const Triple& t : g.match(entity, std::nullopt, std::nullopt))
        out.facts.push_back(Fact{t.predicate, t.object});
    std::sort(out.facts.begin(), out.facts.end());
    out.facts.erase(std::unique(out.facts.begin(), out.facts.end()),
                    out.facts.end());
    return out;
}

double specificity(const Fact& f, const Graph& g, const SelectionConfig& cfg) {
    const std::size_t holders =
        cfg.df_over_any_fact ? g.count_entities()
                             : g.count_entities_with_fact(f.predicate, f.object);
    if (holders == 0)
        throw std::invalid_argument("fact held by no entity: " + to_string(f));
    const double nats = std::log(static_cast<double>(g.count_entities()) /
                                 static_cast<double>(holders));
    return apply_base(nats, cfg);
}

double popularity(const Term& object, const Graph& g,
                  const SelectionConfig& cfg) {
    const std::size_t occurrences = g.count_triples_with_object(object);
    if (occurrences == 0)
        throw std::invalid_argument("object never occurs: " +
                                    object.to_ntriples());
    return apply_base(std::log(static_cast<double>(occurrences)), cfg);
}

RankedFact rank_fact(const Fact& f, const Graph& g,
                     const SelectionConfig& cfg) {
    RankedFact out;
    out.fact = f;
    out.specificity = specificity(f, g, cfg);
    out.popularity = popularity(f.object, g, cfg);
    out.rank = out.specificity * out.popularity;
    return out;
}

FactSet filter_facts(const FactSet& fs, const Graph& g,
                     const SelectionConfig& cfg) {
    FactSet out{fs.entity, {}};
    for (const Fact& f : fs.facts) {
        if (cfg.exclude_literals && f.object.is_literal()) continue;
        if (cfg.blacklist.count(f.predicate.value())) continue;
        if (!cfg.include_type_facts &&
            f.predicate.value() == vocab::rdf_type)
            continue;
        if (cfg.exclude_unique &&
            g.count_entities_with_fact(f.predicate, f.object) == 1 &&
            g.count_triples_with_object(f.object) == 1)
            continue;
        out.facts.push_back(f);
    }
    return out;
}

std::vector<RankedFact> dedup_properties(std::vector<RankedFact> facts,
                                         const SelectionConfig& cfg) {
    std::map<std::string, std::vector<std::size_t>> by_local;
    for (std::size_t i = 0; i < facts.size(); ++i)
        by_local[local_name(facts[i].fact.predicate.value())].push_back(i);

    std::vector<bool> keep(facts.size(), true);
    for (const auto& [local, members] : by_local) {
        std::set<std::string> namespaces;
        for (std::size_t i : members)
            namespaces.insert(namespace_of(facts[i].fact.predicate.value()));
        if (namespaces.size() < 2) continue;

        std::size_t best = members.front();
        for (std::size_t i : members) {
            const RankedFact& a = facts[i];
            const RankedFact& b = facts[best];
            if (a.rank != b.rank) {
                if (a.rank > b.rank) best = i;
                continue;
            }
            const auto na = namespace_rank(a.fact.predicate.value(), cfg);
            const auto nb = namespace_rank(b.fact.predicate.value(), cfg);
            if (na != nb) {
                if (na < nb) best = i;
                continue;
            }
            if (a.fact < b.fact) best = i;
        }
        for (std::size_t i : members) keep[i] = (i == best);
    }

    std::vector<RankedFact> out;
    for (std::size_t i = 0; i < facts.size(); ++i)
        if (keep[i]) out.push_back(std::move(facts[i]));
    return out;
}

namespace {

// Range of a fact: the most specific type of its object, lexicographically
// least among incomparable ones. Untyped objects share the empty key.
std::string range_key(const Term& object, const Graph& g) {
    std::vector<Term> types = g.schema().types_of(object);
    if (types.empty()) return {};
    std::vector<Term> specific;
    for (const Term& t : types) {
        bool above_other = false;
        for (const Term& u : types) {
            if (g.schema().is_strict_superclass(t, u)) {
                above_other = true;
                break;
            }
        }
        if (!above_other) specific.push_back(t);
    }
    return std::min_element(specific.begin(), specific.end())->value();
}

}  // namespace

EntitySummary group_and_select(std::vector<RankedFact> facts, const Graph& g,
                               int k, int round) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (round < 0) throw std::invalid_argument("round must be non-negative");

    EntitySummary out;
    out.k = k;
    if (facts.empty()) return out;

    std::sort(facts.begin(), facts.end(), ranked_before);

    std::map<std::string, std::vector<RankedFact>> groups;
    for (RankedFact& f : facts)
        groups[range_key(f.fact.object, g)].push_back(std::move(f));

    // round r: each group offers its (r+1)-th best member
    std::vector<RankedFact> offers;
    for (const auto& [key, members] : groups)
        if (static_cast<std::size_t>(round) < members.size())
            offers.push_back(members[static_cast<std::size_t>(round)]);

    std::sort(offers.begin(), offers.end(), ranked_before);
    if (offers.size() > static_cast<std::size_t>(k))
        offers.resize(static_cast<std::size_t>(k));
    out.ranked = std::move(offers);
    return out;
}

EntitySummary summarize(const Term& entity, const Graph& g,
                        const SelectionConfig& cfg, int round,
                        const std::vector<Fact>& exclude,
                        const std::optional<Term>& exclude_predicate) {
    EntitySummary out;
    out.entity = entity;
    out.k = cfg.k;

    const FactSet eligible = filter_facts(fact_set(entity, g), g, cfg);
    std::vector<RankedFact> ranked;
    for (const Fact& f : eligible.facts) {
        if (exclude_predicate && f.predicate == *exclude_predicate) continue;
        if (std::find(exclude.begin(), exclude.end(), f) != exclude.end())
            continue;
        ranked.push_back(rank_fact(f, g, cfg));
    }

    if (cfg.per_feature) {
        // one fact per reformulation, in rank order; round selects the fact
        std::sort(ranked.begin(), ranked.end(), ranked_before);
        if (static_cast<std::size_t>(round) < ranked.size())
            out.ranked.push_back(ranked[static_cast<std::size_t>(round)]);
        return out;
    }

    ranked = dedup_properties(std::move(ranked), cfg);
    EntitySummary selected = group_and_select(std::move(ranked), g, cfg.k,
                                              round);
    out.ranked = std::move(selected.ranked);
    return out;
}

SummaryPattern summary_pattern(const EntitySummary& summary,
                               const std::string& var) {
    SummaryPattern out;
    out.variable = var;
    for (const RankedFact& f : summary.ranked)
        out.patterns.push_back(
            TriplePattern{Variable{var}, f.fact.predicate, f.fact.object});
    return out;
}

namespace {

TriplePattern with_var(const TriplePattern& tp, Position pos,
                       const std::string& name) {
    TriplePattern out = tp;
    if (pos == Position::Subject)
        out.subject = Variable{name};
    else if (pos == Position::Predicate)
        out.predicate = Variable{name};
    else
        out.object = Variable{name};
    return out;
}

// Table of shapes: rule number, or 0 when no rule applies.
int rule_for(const TriplePattern& tp, Position entity_pos) {
    if (entity_pos == Position::Subject) {
        if (!is_const(tp.subject) || !as_term(tp.subject).is_iri()) return 0;
        const bool p_const = is_const(tp.predicate);
        const bool o_const = is_const(tp.object);
        if (!p_const && !o_const) return 1;
        if (p_const && !o_const) return 2;
        if (p_const && o_const) return 3;
        return 0;  // <e,?p,o> has no rule
    }
    if (entity_pos != Position::Object) return 0;
    if (!is_const(tp.object) || !as_term(tp.object).is_iri()) return 0;
    // the class position of a type assertion is relaxed, not reformulated
    if (is_const(tp.predicate) &&
        as_term(tp.predicate).value() == vocab::rdf_type)
        return 0;
    const bool s_const = is_const(tp.subject);
    const bool p_const = is_const(tp.predicate);
    if (s_const && p_const) return 4;
    if (!s_const && p_const) return 5;
    if (!s_const && !p_const) return 6;
    return 0;  // <s,?p,e> has no rule
}

}  // namespace

bool is_entity_pattern(const TriplePattern& tp, Position entity_pos) {
    return rule_for(tp, entity_pos) != 0;
}

std::optional<EntityReformulation> reformulate_pattern(
    const TriplePattern& tp, Position entity_pos, const Graph& g,
    const SelectionConfig& cfg, int round, FreshVars& fresh) {
    const int rule = rule_for(tp, entity_pos);
    if (rule == 0) return std::nullopt;

    const Term entity = as_term(entity_pos == Position::Subject ? tp.subject
                                                                 : tp.object);

    if (rule == 1) {
        // bare rewrite, selects everything; one round only
        if (round != 0) return std::nullopt;
        EntityReformulation out;
        out.rule = 1;
        out.entity_var = fresh.next();
        out.patterns = {with_var(tp, entity_pos, out.entity_var)};
        out.detail = "rule 1: " + entity.value() + " -> ?" + out.entity_var;
        return out;
    }

    std::optional<Term> exclude_predicate;
    std::vector<Fact> exclude_facts;
    if (rule == 2 || rule == 4 || rule == 5)
        exclude_predicate = as_term(tp.predicate);
    if (rule == 3)
        exclude_facts.push_back(
            Fact{as_term(tp.predicate), as_term(tp.object)});

    const EntitySummary summary =
        summarize(entity, g, cfg, round, exclude_facts, exclude_predicate);
    if (summary.empty()) return std::nullopt;

    EntityReformulation out;
    out.rule = rule;
    out.entity_var = fresh.next();
    out.patterns.push_back(with_var(tp, entity_pos, out.entity_var));
    SummaryPattern sp = summary_pattern(summary, out.entity_var);
    out.patterns.insert(out.patterns.end(), sp.patterns.begin(),
                        sp.patterns.end());
    out.detail = "rule " + std::to_string(rule) + ": " + entity.value() +
                 " -> ?" + out.entity_var + " + " +
                 std::to_string(sp.patterns.size()) + " summary fact(s), round " +
                 std::to_string(round);
    return out;
}

}  // namespace kgqr
