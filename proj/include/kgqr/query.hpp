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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "kgqr/term.hpp"

namespace kgqr {

/// A query variable. Names match [A-Za-z_][A-Za-z0-9_]* and are stored
/// without the leading '?'.
struct Variable {
    std::string name;
    friend auto operator<=>(const Variable&, const Variable&) = default;
};

bool is_valid_variable_name(const std::string& name);

/// Either a variable or a constant term.
using PatternTerm = std::variant<Variable, Term>;

inline bool is_var(const PatternTerm& t) {
    return std::holds_alternative<Variable>(t);
}
inline bool is_const(const PatternTerm& t) {
    return std::holds_alternative<Term>(t);
}
inline const Variable& as_var(const PatternTerm& t) {
    return std::get<Variable>(t);
}
inline const Term& as_term(const PatternTerm& t) {
    return std::get<Term>(t);
}

std::string to_string(const PatternTerm& t);

/// A triple template; any position may be a variable. Subjects are never
/// constant literals and predicates are variables or constant IRIs.
struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;

    friend auto operator<=>(const TriplePattern&,
                            const TriplePattern&) = default;
};

std::string to_string(const TriplePattern& tp);

/// Variables occurring in the pattern, in subject/predicate/object order.
std::vector<std::string> pattern_variables(const TriplePattern& tp);

/// Conjunctive basic graph pattern query. Every head variable occurs in at
/// least one body pattern.
struct BGPQuery {
    std::vector<std::string> head;
    std::vector<TriplePattern> body;
    bool distinct = false;

    friend bool operator==(const BGPQuery&, const BGPQuery&) = default;
};

std::set<std::string> query_variables(const BGPQuery& q);

std::string to_string(const BGPQuery& q);

/// Variable-to-term assignment.
using Binding = std::map<std::string, Term>;

/// Replaces every variable bound in `b` by its term; other positions are
/// unchanged.
TriplePattern substitute(const TriplePattern& tp, const Binding& b);

/// Query result: rows are term tuples aligned with `head`.
struct SolutionSet {
    std::vector<std::string> head;
    std::vector<std::vector<Term>> rows;
    std::int64_t wall_time_ms = 0;

    std::size_t answer_count() const { return rows.size(); }
    /// Rows as a set (order-insensitive, duplicates collapsed).
    std::set<std::vector<Term>> row_set() const {
        return {rows.begin(), rows.end()};
    }
};

}  // namespace kgqr
