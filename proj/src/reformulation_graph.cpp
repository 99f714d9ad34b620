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

#include "kgqr/reformulation_graph.hpp"

#include <algorithm>
#include <map>

namespace kgqr {

std::string canonical_query_key(const BGPQuery& q) {
    // rename non-head variables in first-occurrence order over the body
    std::map<std::string, std::string> renaming;
    const std::set<std::string> head(q.head.begin(), q.head.end());
    int counter = 0;
    auto canon_term = [&](const PatternTerm& t) -> std::string {
        if (is_const(t)) return as_term(t).to_ntriples();
        const std::string& name = as_var(t).name;
        if (head.count(name)) return "?" + name;
        auto [it, inserted] = renaming.emplace(
            name, "?_c" + std::to_string(counter));
        if (inserted) ++counter;
        return it->second;
    };

    std::vector<std::string> rendered;
    rendered.reserve(q.body.size());
    for (const TriplePattern& tp : q.body)
        rendered.push_back(canon_term(tp.subject) + " " +
                           canon_term(tp.predicate) + " " +
                           canon_term(tp.object));
    std::sort(rendered.begin(), rendered.end());

    std::string key = q.distinct ? "D|" : "|";
    for (const std::string& v : q.head) key += "?" + v + " ";
    key += "{";
    for (const std::string& r : rendered) key += r + " . ";
    key += "}";
    return key;
}

namespace {

BGPQuery replace_pattern(const BGPQuery& q, std::size_t index,
                         TriplePattern tp) {
    BGPQuery out = q;
    out.body[index] = std::move(tp);
    return out;
}

struct Generator {
    const Graph& g;
    const GenerationConfig& cfg;
    std::vector<Candidate> out{};
    std::set<std::string> seen{};
    std::set<std::vector<Term>> distinct_answers{};
    bool done = false;

    bool enabled(RewriteKind kind) const {
        return cfg.enabled.count(kind) > 0;
    }

    void note_answers(const BGPQuery& q) {
        if (!cfg.answer_threshold) return;
        for (const std::vector<Term>& row : evaluate(q, g).rows)
            distinct_answers.insert(row);
        if (distinct_answers.size() >= *cfg.answer_threshold) done = true;
    }

    void push(Candidate cand) {
        if (done) return;
        if (out.size() >= static_cast<std::size_t>(cfg.max_candidates)) {
            done = true;
            return;
        }
        const std::string key = canonical_query_key(cand.query);
        if (!seen.insert(key).second) return;
        note_answers(cand.query);
        out.push_back(std::move(cand));
    }

    // Candidates produced by rewriting pattern `i` of `parent`.
    void expand_pattern(const Candidate& parent, std::size_t i) {
        const TriplePattern& tp = parent.query.body[i];

        if (enabled(RewriteKind::Superclass)) {
            if (auto rewrites = superclass_relax(tp, g.schema())) {
                for (PatternRewrite& r : *rewrites) {
                    r.step.pattern_index = i;
                    Candidate c{replace_pattern(parent.query, i, r.pattern),
                                parent.steps, parent.round};
                    c.steps.push_back(r.step);
                    push(std::move(c));
                    if (done) return;
                }
            }
        }

        if (enabled(RewriteKind::Superproperty)) {
            if (auto rewrites = superproperty_relax(tp, g.schema())) {
                for (PatternRewrite& r : *rewrites) {
                    r.step.pattern_index = i;
                    Candidate c{replace_pattern(parent.query, i, r.pattern),
                                parent.steps, parent.round};
                    c.steps.push_back(r.step);
                    push(std::move(c));
                    if (done) return;
                }
            }
        }

        if (enabled(RewriteKind::LiteralRelax)) {
            FreshVars fresh(parent.query);
            if (auto r = literal_relax(tp, fresh)) {
                r->step.pattern_index = i;
                Candidate c{replace_pattern(parent.query, i, r->pattern),
                            parent.steps, parent.round};
                c.steps.push_back(r->step);
                push(std::move(c));
                if (done) return;
            }
        }

        // entity-constant positions: reformulation replaces simple
        // relaxation when both are enabled
        for (Position pos : {Position::Subject, Position::Object}) {
            if (!is_entity_pattern(tp, pos)) continue;
            bool reformulated = false;
            if (enabled(RewriteKind::EntityReform)) {
                for (int round = 0;; ++round) {
                    FreshVars fresh(parent.query);
                    auto ref = reformulate_pattern(tp, pos, g, cfg.selection,
                                                   round, fresh);
                    if (!ref) break;
                    reformulated = true;
                    BGPQuery q2 = parent.query;
                    q2.body[i] = ref->patterns[0];
                    q2.body.insert(q2.body.end(), ref->patterns.begin() + 1,
                                   ref->patterns.end());
                    Candidate c{std::move(q2), parent.steps, round};
                    c.steps.push_back(
                        {RewriteKind::EntityReform, i, ref->detail});
                    push(std::move(c));
                    if (done) return;
                    if (ref->rule == 1) break;  // single round by shape
                }
            }
            if (!reformulated && enabled(RewriteKind::SimpleRelax)) {
                FreshVars fresh(parent.query);
                if (auto r = simple_relax(tp, pos, fresh)) {
                    r->step.pattern_index = i;
                    Candidate c{replace_pattern(parent.query, i, r->pattern),
                                parent.steps, parent.round};
                    c.steps.push_back(r->step);
                    push(std::move(c));
                    if (done) return;
                }
            }
        }

        if (enabled(RewriteKind::SimpleRelax)) {
            // remaining constants: the predicate, class objects of type
            // assertions, and literal objects when literal relaxation is off
            if (is_const(tp.predicate)) {
                FreshVars fresh(parent.query);
                if (auto r = simple_relax(tp, Position::Predicate, fresh)) {
                    r->step.pattern_index = i;
                    Candidate c{replace_pattern(parent.query, i, r->pattern),
                                parent.steps, parent.round};
                    c.steps.push_back(r->step);
                    push(std::move(c));
                    if (done) return;
                }
            }
            const bool object_is_class =
                is_const(tp.object) && as_term(tp.object).is_iri() &&
                is_const(tp.predicate) &&
                as_term(tp.predicate).value() == vocab::rdf_type;
            const bool object_is_literal =
                is_const(tp.object) && as_term(tp.object).is_literal();
            if (object_is_class ||
                (object_is_literal && !enabled(RewriteKind::LiteralRelax))) {
                FreshVars fresh(parent.query);
                if (auto r = simple_relax(tp, Position::Object, fresh)) {
                    r->step.pattern_index = i;
                    Candidate c{replace_pattern(parent.query, i, r->pattern),
                                parent.steps, parent.round};
                    c.steps.push_back(r->step);
                    push(std::move(c));
                    if (done) return;
                }
            }
        }
    }

    std::vector<Candidate> run(const BGPQuery& q) {
        push(Candidate{q, {}, 0});
        if (done) return out;

        std::size_t frontier_begin = 0, frontier_end = out.size();

        // typing applies once, ahead of the other level-1 rewrites
        if (enabled(RewriteKind::VariableTyping)) {
            for (std::size_t i = 0; i < q.body.size() && !done; ++i) {
                std::vector<TriplePattern> typing =
                    variable_typing(q.body[i], g, cfg.typing_source);
                if (typing.empty()) continue;
                BGPQuery q2 = q;
                q2.body.insert(q2.body.begin() + static_cast<std::ptrdiff_t>(i),
                               typing.begin(), typing.end());
                std::string detail = "typed ?" +
                                     as_var(q.body[i].subject).name + " with " +
                                     std::to_string(typing.size()) +
                                     " class(es)";
                Candidate c{std::move(q2),
                            {{RewriteKind::VariableTyping, i,
                              std::move(detail)}},
                            0};
                push(std::move(c));
            }
        }

        for (int level = 0; level < cfg.max_level && !done; ++level) {
            for (std::size_t ci = frontier_begin; ci < frontier_end && !done;
                 ++ci) {
                // the frontier candidate is copied: `out` may reallocate
                const Candidate parent = out[ci];
                for (std::size_t i = 0;
                     i < parent.query.body.size() && !done; ++i)
                    expand_pattern(parent, i);
            }
            frontier_begin = frontier_end;
            frontier_end = out.size();
            if (frontier_begin == frontier_end) break;  // nothing new
        }
        return out;
    }
};

}  // namespace

std::vector<Candidate> generate(const BGPQuery& q, const Graph& g,
                                const GenerationConfig& cfg) {
    if (cfg.max_level < 1)
        throw std::invalid_argument("max_level must be at least 1");
    if (cfg.max_candidates < 1)
        throw std::invalid_argument("max_candidates must be at least 1");
    Generator gen{g, cfg};
    return gen.run(q);
}

std::vector<CandidateRun> execute_all(const std::vector<Candidate>& cands,
                                      const Graph& g) {
    std::vector<CandidateRun> out;
    out.reserve(cands.size());
    std::set<std::vector<Term>> baseline;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        CandidateRun run;
        run.candidate = cands[i];
        run.solution = evaluate(cands[i].query, g);
        const std::set<std::vector<Term>> rows = run.solution.row_set();
        if (i == 0) {
            baseline = rows;
            run.new_answer_count = 0;
        } else {
            std::size_t fresh = 0;
            for (const auto& row : rows)
                if (!baseline.count(row)) ++fresh;
            run.new_answer_count = fresh;
        }
        out.push_back(std::move(run));
    }
    return out;
}

}  // namespace kgqr
