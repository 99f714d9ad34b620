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

#include "kgqr/eval.hpp"

#include <chrono>

namespace kgqr {

namespace {

int bound_positions(const TriplePattern& tp, const Binding& b) {
    int n = 0;
    for (const PatternTerm* t : {&tp.subject, &tp.predicate, &tp.object}) {
        if (is_const(*t) || b.count(as_var(*t).name)) ++n;
    }
    return n;
}

// Extends `b` with the variable positions of `tp` matched against `t`.
// Returns false on a conflict (constant mismatch or a repeated variable
// binding to two different terms).
bool bind_pattern(const TriplePattern& tp, const Triple& t, Binding& b) {
    const std::pair<const PatternTerm*, const Term*> slots[3] = {
        {&tp.subject, &t.subject},
        {&tp.predicate, &t.predicate},
        {&tp.object, &t.object},
    };
    for (const auto& [pt, term] : slots) {
        if (is_const(*pt)) {
            if (as_term(*pt) != *term) return false;
            continue;
        }
        auto [it, inserted] = b.emplace(as_var(*pt).name, *term);
        if (!inserted && it->second != *term) return false;
    }
    return true;
}

struct JoinState {
    const BGPQuery* query;
    const Graph* graph;
    std::vector<std::vector<Term>>* rows;
    std::set<std::vector<Term>>* seen;  // non-null when DISTINCT
};

void join(JoinState& st, std::vector<bool>& used, std::size_t remaining,
          const Binding& binding) {
    if (remaining == 0) {
        std::vector<Term> row;
        row.reserve(st.query->head.size());
        for (const std::string& v : st.query->head)
            row.push_back(binding.at(v));
        if (st.seen && !st.seen->insert(row).second) return;
        st.rows->push_back(std::move(row));
        return;
    }

    // most-bound pattern first, ties by body order
    std::size_t best = 0;
    int best_bound = -1;
    for (std::size_t i = 0; i < st.query->body.size(); ++i) {
        if (used[i]) continue;
        int n = bound_positions(st.query->body[i], binding);
        if (n > best_bound) {
            best_bound = n;
            best = i;
        }
    }

    used[best] = true;
    const TriplePattern tp = substitute(st.query->body[best], binding);
    auto opt = [](const PatternTerm& t) -> std::optional<Term> {
        if (is_const(t)) return as_term(t);
        return std::nullopt;
    };
    for (const Triple& t :
         st.graph->match(opt(tp.subject), opt(tp.predicate), opt(tp.object))) {
        Binding extended = binding;
        if (bind_pattern(tp, t, extended))
            join(st, used, remaining - 1, extended);
    }
    used[best] = false;
}

}  // namespace

SolutionSet evaluate(const BGPQuery& q, const Graph& g) {
    SolutionSet out;
    out.head = q.head;

    const auto start = std::chrono::steady_clock::now();
    std::set<std::vector<Term>> seen;
    JoinState st{&q, &g, &out.rows, q.distinct ? &seen : nullptr};
    std::vector<bool> used(q.body.size(), false);
    if (!q.body.empty()) join(st, used, q.body.size(), Binding{});
    const auto stop = std::chrono::steady_clock::now();

    out.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count();
    return out;
}

}  // namespace kgqr
