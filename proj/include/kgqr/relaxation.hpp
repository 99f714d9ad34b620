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

namespace kgqr {

enum class RewriteKind {
    Superclass,
    Superproperty,
    LiteralRelax,
    SimpleRelax,
    VariableTyping,
    EntityReform,
};

std::string_view to_string(RewriteKind kind);

/// Provenance of one rewrite applied to one body pattern.
struct RewriteStep {
    RewriteKind kind;
    std::size_t pattern_index = 0;
    std::string detail;
};

struct PatternRewrite {
    TriplePattern pattern;
    RewriteStep step;
};

enum class Position { Subject, Predicate, Object };

std::string_view to_string(Position pos);

/// Deterministic supplier of variable names that do not collide with the
/// variables of the query it was constructed from. Generated names use the
/// reserved leading underscore (`_rlx0`, `_rlx1`, ...), which the query
/// grammar does not accept for user variables.
class FreshVars {
public:
    FreshVars() = default;
    explicit FreshVars(const BGPQuery& q);

    std::string next();
    void reserve(const std::string& name) { used_.insert(name); }

private:
    std::set<std::string> used_;
    int counter_ = 0;
};

/// <s, rdf:type, c1> -> one <s, rdf:type, c2> per direct superclass of c1.
/// nullopt when the pattern is not a class assertion with a constant class;
/// an empty list when the class simply has no superclass.
std::optional<std::vector<PatternRewrite>> superclass_relax(
    const TriplePattern& tp, const SchemaIndex& schema);

/// <s, p1, o> -> one <s, p2, o> per direct superproperty of p1. nullopt when
/// the predicate is a variable or rdf:type.
std::optional<std::vector<PatternRewrite>> superproperty_relax(
    const TriplePattern& tp, const SchemaIndex& schema);

/// Replaces a constant literal object by a fresh variable. nullopt when the
/// object is not a literal.
std::optional<PatternRewrite> literal_relax(const TriplePattern& tp,
                                            FreshVars& fresh);

/// Replaces the constant at `pos` by a fresh variable. nullopt when that
/// position already holds a variable.
std::optional<PatternRewrite> simple_relax(const TriplePattern& tp,
                                           Position pos, FreshVars& fresh);

enum class TypingSource {
    ObservedTypes,        // types shared by every subject matching the pattern
    DomainDeclarations,   // rdfs:domain of the pattern predicate
};

/// For a pattern <?v, p, o> with constant predicate and object, returns
/// class assertions <?v, rdf:type, c> to prepend, restricted to the most
/// specific classes. With ObservedTypes the classes are those common to
/// every matching subject (so the typed query keeps exactly the original
/// answers); when nothing matches, rdfs:domain declarations of p are used
/// as a fallback. Empty when no type can be established or the pattern has
/// a different shape.
std::vector<TriplePattern> variable_typing(
    const TriplePattern& tp, const Graph& g,
    TypingSource source = TypingSource::ObservedTypes);

}  // namespace kgqr
