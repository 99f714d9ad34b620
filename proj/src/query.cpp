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

#include "kgqr/query.hpp"

#include <cctype>

namespace kgqr {

bool is_valid_variable_name(const std::string& name) {
    if (name.empty()) return false;
    unsigned char first = name[0];
    if (!std::isalpha(first) && first != '_') return false;
    for (unsigned char c : name)
        if (!std::isalnum(c) && c != '_') return false;
    return true;
}

std::string to_string(const PatternTerm& t) {
    if (is_var(t)) return "?" + as_var(t).name;
    return as_term(t).to_ntriples();
}

std::string to_string(const TriplePattern& tp) {
    return to_string(tp.subject) + " " + to_string(tp.predicate) + " " +
           to_string(tp.object) + " .";
}

std::vector<std::string> pattern_variables(const TriplePattern& tp) {
    std::vector<std::string> out;
    for (const PatternTerm* t : {&tp.subject, &tp.predicate, &tp.object})
        if (is_var(*t)) out.push_back(as_var(*t).name);
    return out;
}

std::set<std::string> query_variables(const BGPQuery& q) {
    std::set<std::string> out;
    for (const TriplePattern& tp : q.body)
        for (const std::string& v : pattern_variables(tp)) out.insert(v);
    return out;
}

std::string to_string(const BGPQuery& q) {
    std::string out = "SELECT ";
    if (q.distinct) out += "DISTINCT ";
    for (const std::string& v : q.head) out += "?" + v + " ";
    out += "WHERE { ";
    for (const TriplePattern& tp : q.body) out += to_string(tp) + " ";
    out += "}";
    return out;
}

TriplePattern substitute(const TriplePattern& tp, const Binding& b) {
    auto apply = [&](const PatternTerm& t) -> PatternTerm {
        if (is_var(t)) {
            auto it = b.find(as_var(t).name);
            if (it != b.end()) return it->second;
        }
        return t;
    };
    return TriplePattern{apply(tp.subject), apply(tp.predicate),
                         apply(tp.object)};
}

}  // namespace kgqr
