#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace kgqr::testsup {

namespace {

const Term kType = Term::iri(std::string(vocab::rdf_type));
const Term kSubClassOf = Term::iri(std::string(vocab::rdfs_subclassof));
const Term kSubPropertyOf = Term::iri(std::string(vocab::rdfs_subpropertyof));

}  // namespace

std::set<Triple> naive_closure(const std::vector<Triple>& input) {
    std::set<Triple> closed(input.begin(), input.end());
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<Triple> snapshot(closed.begin(), closed.end());
        for (const Triple& a : snapshot) {
            for (const Triple& b : snapshot) {
                // subClassOf transitivity
                if (a.predicate == kSubClassOf && b.predicate == kSubClassOf &&
                    a.object == b.subject)
                    changed |=
                        closed.insert({a.subject, kSubClassOf, b.object})
                            .second;
                // subPropertyOf transitivity
                if (a.predicate == kSubPropertyOf &&
                    b.predicate == kSubPropertyOf && a.object == b.subject)
                    changed |=
                        closed.insert({a.subject, kSubPropertyOf, b.object})
                            .second;
                // type inheritance
                if (a.predicate == kType && b.predicate == kSubClassOf &&
                    a.object == b.subject)
                    changed |=
                        closed.insert({a.subject, kType, b.object}).second;
                // subproperty propagation
                if (b.predicate == kSubPropertyOf && a.predicate == b.subject)
                    changed |=
                        closed.insert({a.subject, b.object, a.object}).second;
            }
        }
    }
    return closed;
}

std::vector<std::vector<Term>> oracle_evaluate(
    const BGPQuery& q, const std::vector<Triple>& triples) {
    // local integer coding so the odometer sweep stays affordable
    std::map<Term, int> ids;
    std::vector<Term> terms;
    auto code = [&](const Term& t) {
        auto [it, inserted] = ids.emplace(t, static_cast<int>(terms.size()));
        if (inserted) terms.push_back(t);
        return it->second;
    };

    std::set<std::uint64_t> coded_triples;
    auto pack = [](int s, int p, int o) {
        return (static_cast<std::uint64_t>(s) << 42) |
               (static_cast<std::uint64_t>(p) << 21) |
               static_cast<std::uint64_t>(o);
    };
    for (const Triple& t : triples)
        coded_triples.insert(
            pack(code(t.subject), code(t.predicate), code(t.object)));

    const std::set<std::string> var_set = query_variables(q);
    const std::vector<std::string> vars(var_set.begin(), var_set.end());
    auto var_index = [&](const std::string& name) {
        return static_cast<int>(
            std::find(vars.begin(), vars.end(), name) - vars.begin());
    };

    // pattern slots: const term id, or -(var index + 1)
    struct CodedPattern {
        int slot[3];
    };
    std::vector<CodedPattern> body;
    bool unmatchable = false;
    for (const TriplePattern& tp : q.body) {
        CodedPattern cp{};
        const PatternTerm* pts[3] = {&tp.subject, &tp.predicate, &tp.object};
        for (int i = 0; i < 3; ++i) {
            if (is_var(*pts[i])) {
                cp.slot[i] = -(var_index(as_var(*pts[i]).name) + 1);
            } else {
                auto it = ids.find(as_term(*pts[i]));
                if (it == ids.end()) unmatchable = true;
                else cp.slot[i] = it->second;
            }
        }
        body.push_back(cp);
    }

    std::vector<std::vector<Term>> rows;
    if (unmatchable) return rows;
    if (terms.empty() && !vars.empty()) return rows;

    std::vector<int> head_vars;
    for (const std::string& v : q.head) head_vars.push_back(var_index(v));

    // odometer over terms^vars
    const int n_terms = static_cast<int>(terms.size());
    std::vector<int> choice(vars.size(), 0);
    while (true) {
        bool all = true;
        for (const CodedPattern& cp : body) {
            int resolved[3];
            for (int i = 0; i < 3; ++i)
                resolved[i] = cp.slot[i] >= 0
                                  ? cp.slot[i]
                                  : choice[static_cast<std::size_t>(
                                        -cp.slot[i] - 1)];
            if (!coded_triples.count(
                    pack(resolved[0], resolved[1], resolved[2]))) {
                all = false;
                break;
            }
        }
        if (all) {
            std::vector<Term> row;
            row.reserve(head_vars.size());
            for (int v : head_vars)
                row.push_back(terms[static_cast<std::size_t>(
                    choice[static_cast<std::size_t>(v)])]);
            rows.push_back(std::move(row));
        }

        std::size_t pos = 0;
        for (; pos < choice.size(); ++pos) {
            if (++choice[pos] < n_terms) break;
            choice[pos] = 0;
        }
        if (pos == choice.size()) break;
    }

    if (q.distinct) {
        std::set<std::vector<Term>> dedup(rows.begin(), rows.end());
        rows.assign(dedup.begin(), dedup.end());
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

namespace {

struct ScoredFact {
    Fact fact;
    double rank;
    std::string range;
};

// reachability over subclass statements of the triple list
bool reachable(const Term& from, const Term& to,
               const std::map<Term, std::set<Term>>& supers) {
    std::set<Term> seen;
    std::vector<Term> work{from};
    while (!work.empty()) {
        Term cur = work.back();
        work.pop_back();
        if (cur == to) return true;
        if (!seen.insert(cur).second) continue;
        auto it = supers.find(cur);
        if (it != supers.end())
            for (const Term& next : it->second) work.push_back(next);
    }
    return false;
}

}  // namespace

std::vector<Fact> oracle_summary(const Term& entity,
                                 const std::vector<Triple>& triples,
                                 const SelectionConfig& cfg) {
    // scans instead of indexes, everywhere
    std::set<Term> entity_pool;
    for (const Triple& t : triples)
        if (t.predicate != kSubClassOf && t.predicate != kSubPropertyOf)
            entity_pool.insert(t.subject);
    const double total = static_cast<double>(entity_pool.size());

    auto holders = [&](const Fact& f) {
        std::set<Term> out;
        for (const Triple& t : triples)
            if (t.predicate == f.predicate && t.object == f.object)
                out.insert(t.subject);
        return out.size();
    };
    auto object_count = [&](const Term& o) {
        std::size_t n = 0;
        for (const Triple& t : triples)
            if (t.object == o) ++n;
        return n;
    };

    std::map<Term, std::set<Term>> supers;
    std::map<Term, std::set<Term>> types;
    for (const Triple& t : triples) {
        if (t.predicate == kSubClassOf) supers[t.subject].insert(t.object);
        if (t.predicate == kType) types[t.subject].insert(t.object);
    }

    auto range_of = [&](const Term& object) -> std::string {
        auto it = types.find(object);
        if (it == types.end()) return {};
        std::vector<Term> specific;
        for (const Term& c : it->second) {
            bool strictly_above_other = false;
            for (const Term& d : it->second) {
                if (c == d) continue;
                if (reachable(d, c, supers) && !reachable(c, d, supers)) {
                    strictly_above_other = true;
                    break;
                }
            }
            if (!strictly_above_other) specific.push_back(c);
        }
        return std::min_element(specific.begin(), specific.end())->value();
    };

    // eligible facts of the entity
    std::set<Fact> facts;
    for (const Triple& t : triples)
        if (t.subject == entity) facts.insert(Fact{t.predicate, t.object});

    std::vector<ScoredFact> scored;
    for (const Fact& f : facts) {
        if (cfg.exclude_literals && f.object.is_literal()) continue;
        if (cfg.blacklist.count(f.predicate.value())) continue;
        if (!cfg.include_type_facts && f.predicate == kType) continue;
        const std::size_t df = holders(f);
        const std::size_t oc = object_count(f.object);
        if (cfg.exclude_unique && df == 1 && oc == 1) continue;
        const double rank = std::log(total / static_cast<double>(df)) *
                            std::log(static_cast<double>(oc));
        scored.push_back({f, rank, range_of(f.object)});
    }

    std::sort(scored.begin(), scored.end(),
              [](const ScoredFact& a, const ScoredFact& b) {
                  if (a.rank != b.rank) return a.rank > b.rank;
                  return a.fact < b.fact;
              });

    std::vector<Fact> out;
    std::set<std::string> used_ranges;
    for (const ScoredFact& f : scored) {
        if (out.size() >= static_cast<std::size_t>(cfg.k)) break;
        if (!used_ranges.insert(f.range).second) continue;
        out.push_back(f.fact);
    }
    return out;
}

}  // namespace kgqr::testsup
