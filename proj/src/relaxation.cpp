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

#include "kgqr/relaxation.hpp"

#include <algorithm>

namespace kgqr {

std::string_view to_string(RewriteKind kind) {
    switch (kind) {
        case RewriteKind::Superclass: return "Superclass";
        case RewriteKind::Superproperty: return "Superproperty";
        case RewriteKind::LiteralRelax: return "LiteralRelax";
        case RewriteKind::SimpleRelax: return "SimpleRelax";
        case RewriteKind::VariableTyping: return "VariableTyping";
        case RewriteKind::EntityReform: return "EntityReform";
    }
    return "?";
}

std::string_view to_string(Position pos) {
    switch (pos) {
        case Position::Subject: return "subject";
        case Position::Predicate: return "predicate";
        case Position::Object: return "object";
    }
    return "?";
}

FreshVars::FreshVars(const BGPQuery& q) {
    for (const std::string& v : query_variables(q)) used_.insert(v);
}

std::string FreshVars::next() {
    while (true) {
        std::string name = "_rlx" + std::to_string(counter_++);
        if (used_.insert(name).second) return name;
    }
}

namespace {

bool is_type_predicate(const PatternTerm& p) {
    return is_const(p) && as_term(p).is_iri() &&
           as_term(p).value() == vocab::rdf_type;
}

const PatternTerm& at(const TriplePattern& tp, Position pos) {
    switch (pos) {
        case Position::Subject: return tp.subject;
        case Position::Predicate: return tp.predicate;
        default: return tp.object;
    }
}

TriplePattern with(const TriplePattern& tp, Position pos, PatternTerm t) {
    TriplePattern out = tp;
    switch (pos) {
        case Position::Subject: out.subject = std::move(t); break;
        case Position::Predicate: out.predicate = std::move(t); break;
        case Position::Object: out.object = std::move(t); break;
    }
    return out;
}

}  // namespace

std::optional<std::vector<PatternRewrite>> superclass_relax(
    const TriplePattern& tp, const SchemaIndex& schema) {
    if (!is_type_predicate(tp.predicate)) return std::nullopt;
    if (!is_const(tp.object) || !as_term(tp.object).is_iri())
        return std::nullopt;

    const Term& cls = as_term(tp.object);
    std::vector<PatternRewrite> out;
    for (const Term& super : schema.direct_superclasses(cls)) {
        PatternRewrite r;
        r.pattern = with(tp, Position::Object, super);
        r.step = {RewriteKind::Superclass, 0,
                  cls.value() + " -> " + super.value()};
        out.push_back(std::move(r));
    }
    return out;
}

std::optional<std::vector<PatternRewrite>> superproperty_relax(
    const TriplePattern& tp, const SchemaIndex& schema) {
    if (!is_const(tp.predicate)) return std::nullopt;
    if (is_type_predicate(tp.predicate)) return std::nullopt;

    const Term& prop = as_term(tp.predicate);
    std::vector<PatternRewrite> out;
    for (const Term& super : schema.direct_superproperties(prop)) {
        PatternRewrite r;
        r.pattern = with(tp, Position::Predicate, super);
        r.step = {RewriteKind::Superproperty, 0,
                  prop.value() + " -> " + super.value()};
        out.push_back(std::move(r));
    }
    return out;
}

std::optional<PatternRewrite> literal_relax(const TriplePattern& tp,
                                            FreshVars& fresh) {
    if (!is_const(tp.object) || !as_term(tp.object).is_literal())
        return std::nullopt;

    const std::string var = fresh.next();
    PatternRewrite r;
    r.pattern = with(tp, Position::Object, Variable{var});
    r.step = {RewriteKind::LiteralRelax, 0,
              as_term(tp.object).to_ntriples() + " -> ?" + var};
    return r;
}

std::optional<PatternRewrite> simple_relax(const TriplePattern& tp,
                                           Position pos, FreshVars& fresh) {
    const PatternTerm& slot = at(tp, pos);
    if (!is_const(slot)) return std::nullopt;

    const std::string var = fresh.next();
    PatternRewrite r;
    r.pattern = with(tp, pos, Variable{var});
    r.step = {RewriteKind::SimpleRelax, 0,
              std::string(to_string(pos)) + " " +
                  as_term(slot).to_ntriples() + " -> ?" + var};
    return r;
}

namespace {

// Keeps only classes that are not strict superclasses of another member.
std::vector<Term> most_specific(std::vector<Term> classes,
                                const SchemaIndex& schema) {
    std::vector<Term> out;
    for (const Term& c : classes) {
        bool strictly_above_some = false;
        for (const Term& other : classes) {
            if (schema.is_strict_superclass(c, other)) {
                strictly_above_some = true;
                break;
            }
        }
        if (!strictly_above_some) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<TriplePattern> variable_typing(const TriplePattern& tp,
                                           const Graph& g,
                                           TypingSource source) {
    if (!is_var(tp.subject) || !is_const(tp.predicate) ||
        !is_const(tp.object))
        return {};

    const Term type_iri = Term::iri(std::string(vocab::rdf_type));
    std::vector<Term> classes;

    if (source == TypingSource::ObservedTypes) {
        // classes shared by every subject matching the pattern; this keeps
        // the typed query equivalent on the graph the types came from
        bool first = true;
        bool any_match = false;
        std::set<Term> common;
        for (const Triple& t : g.match(std::nullopt, as_term(tp.predicate),
                                       as_term(tp.object))) {
            any_match = true;
            std::vector<Term> types = g.schema().types_of(t.subject);
            std::set<Term> type_set(types.begin(), types.end());
            if (first) {
                common = std::move(type_set);
                first = false;
            } else {
                std::set<Term> intersection;
                std::set_intersection(
                    common.begin(), common.end(), type_set.begin(),
                    type_set.end(),
                    std::inserter(intersection, intersection.begin()));
                common = std::move(intersection);
            }
            if (common.empty()) break;
        }
        classes.assign(common.begin(), common.end());
        if (any_match && classes.empty()) return {};
        if (!any_match) {
            // no observed instance: fall back to declared domains
            for (const Triple& t : g.match(
                     as_term(tp.predicate),
                     Term::iri(std::string(vocab::rdfs_domain)), std::nullopt))
                classes.push_back(t.object);
        }
    } else {
        for (const Triple& t :
             g.match(as_term(tp.predicate),
                     Term::iri(std::string(vocab::rdfs_domain)), std::nullopt))
            classes.push_back(t.object);
    }

    std::vector<TriplePattern> out;
    for (const Term& c : most_specific(std::move(classes), g.schema()))
        out.push_back(TriplePattern{tp.subject, type_iri, c});
    return out;
}

}  // namespace kgqr
