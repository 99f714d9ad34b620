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

#include "kgqr/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace kgqr {

// ---------------------------------------------------------------------------
// SchemaIndex
// ---------------------------------------------------------------------------

namespace {

void sort_unique(std::vector<Term>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Iterative Tarjan SCC over the edge map. Nodes are every term appearing as
// source or target of an edge.
std::vector<std::vector<Term>> strongly_connected_components(
    const SchemaIndex::EdgeMap& edges) {
    std::vector<Term> nodes;
    for (const auto& [src, targets] : edges) {
        nodes.push_back(src);
        for (const Term& t : targets) nodes.push_back(t);
    }
    sort_unique(nodes);

    std::map<Term, int> index_of;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        index_of[nodes[i]] = static_cast<int>(i);

    const int n = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& [src, targets] : edges) {
        int u = index_of[src];
        for (const Term& t : targets) adj[u].push_back(index_of[t]);
    }

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<Term>> sccs;
    int counter = 0;

    struct Frame {
        int node;
        std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        disc[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < adj[f.node].size()) {
                int next = adj[f.node][f.edge++];
                if (disc[next] == -1) {
                    disc[next] = low[next] = counter++;
                    stack.push_back(next);
                    on_stack[next] = true;
                    frames.push_back({next, 0});
                } else if (on_stack[next]) {
                    low[f.node] = std::min(low[f.node], disc[next]);
                }
            } else {
                if (low[f.node] == disc[f.node]) {
                    std::vector<Term> scc;
                    while (true) {
                        int v = stack.back();
                        stack.pop_back();
                        on_stack[v] = false;
                        scc.push_back(nodes[v]);
                        if (v == f.node) break;
                    }
                    sccs.push_back(std::move(scc));
                }
                int done = f.node;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().node] =
                        std::min(low[frames.back().node], low[done]);
            }
        }
    }
    return sccs;
}

}  // namespace

void SchemaIndex::Hierarchy::finalize() {
    for (auto& [src, targets] : edges) sort_unique(targets);

    representative.clear();
    collapsed.clear();
    ancestors.clear();

    auto sccs = strongly_connected_components(edges);
    for (auto& scc : sccs) {
        const Term canon = *std::min_element(scc.begin(), scc.end());
        for (const Term& member : scc) representative[member] = canon;
    }

    // collapsed edges between distinct components
    for (const auto& [src, targets] : edges) {
        const Term from = repr(src);
        for (const Term& t : targets) {
            const Term to = repr(t);
            if (to != from) collapsed[from].push_back(to);
        }
    }
    for (auto& [from, tos] : collapsed) sort_unique(tos);

    // strict ancestor sets by DFS over the collapsed DAG
    for (const auto& [member, canon] : representative) {
        if (ancestors.count(canon)) continue;
        std::set<Term>& anc = ancestors[canon];
        std::vector<Term> work;
        auto it = collapsed.find(canon);
        if (it != collapsed.end())
            work.assign(it->second.begin(), it->second.end());
        while (!work.empty()) {
            Term cur = work.back();
            work.pop_back();
            if (!anc.insert(cur).second) continue;
            auto jt = collapsed.find(cur);
            if (jt != collapsed.end())
                for (const Term& next : jt->second) work.push_back(next);
        }
    }
}

Term SchemaIndex::Hierarchy::repr(const Term& t) const {
    auto it = representative.find(t);
    return it == representative.end() ? t : it->second;
}

std::vector<Term> SchemaIndex::Hierarchy::direct_supers(const Term& t) const {
    auto it = collapsed.find(repr(t));
    return it == collapsed.end() ? std::vector<Term>{} : it->second;
}

bool SchemaIndex::Hierarchy::strictly_above(const Term& anc,
                                            const Term& desc) const {
    const Term a = repr(anc), d = repr(desc);
    if (a == d) return false;
    auto it = ancestors.find(d);
    return it != ancestors.end() && it->second.count(a) > 0;
}

SchemaIndex SchemaIndex::build(EdgeMap subclass_edges,
                               EdgeMap subproperty_edges, EdgeMap type_map) {
    SchemaIndex idx;
    idx.classes_.edges = std::move(subclass_edges);
    idx.properties_.edges = std::move(subproperty_edges);
    idx.classes_.finalize();
    idx.properties_.finalize();
    idx.type_map_ = std::move(type_map);
    for (auto& [subject, types] : idx.type_map_) sort_unique(types);
    return idx;
}

std::vector<Term> SchemaIndex::direct_superclasses(const Term& cls) const {
    return classes_.direct_supers(cls);
}

std::vector<Term> SchemaIndex::direct_superproperties(const Term& prop) const {
    return properties_.direct_supers(prop);
}

std::vector<Term> SchemaIndex::types_of(const Term& subject) const {
    auto it = type_map_.find(subject);
    return it == type_map_.end() ? std::vector<Term>{} : it->second;
}

bool SchemaIndex::is_strict_superclass(const Term& ancestor,
                                       const Term& descendant) const {
    return classes_.strictly_above(ancestor, descendant);
}

Term SchemaIndex::class_representative(const Term& cls) const {
    return classes_.repr(cls);
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

std::size_t Graph::CodedTripleHash::operator()(
    const CodedTriple& t) const noexcept {
    std::uint64_t h = t.s;
    h = h * 0x100000001b3ULL ^ t.p;
    h = h * 0x100000001b3ULL ^ t.o;
    return static_cast<std::size_t>(h);
}

std::optional<Graph::TermId> Graph::find_id(const Term& t) const {
    auto it = term_ids_.find(t);
    if (it == term_ids_.end()) return std::nullopt;
    return it->second;
}

Graph::TermId Graph::intern(const Term& t) {
    auto it = term_ids_.find(t);
    if (it != term_ids_.end()) return it->second;
    if (terms_.size() >= std::numeric_limits<TermId>::max() - 1)
        throw std::length_error("term dictionary overflow");
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(t);
    term_ids_.emplace(t, id);
    return id;
}

bool Graph::insert_coded(const CodedTriple& t) {
    if (!triple_set_.insert(t).second) return false;
    triples_.push_back(t);
    return true;
}

void Graph::rebuild_indexes() {
    const auto n = static_cast<std::uint32_t>(triples_.size());
    spo_.resize(n);
    pos_.resize(n);
    osp_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) spo_[i] = pos_[i] = osp_[i] = i;

    auto key = [this](std::uint32_t i, int a, int b, int c) {
        const CodedTriple& t = triples_[i];
        const TermId v[3] = {t.s, t.p, t.o};
        return Key{v[a], v[b], v[c]};
    };
    std::sort(spo_.begin(), spo_.end(), [&](std::uint32_t x, std::uint32_t y) {
        return key(x, 0, 1, 2) < key(y, 0, 1, 2);
    });
    std::sort(pos_.begin(), pos_.end(), [&](std::uint32_t x, std::uint32_t y) {
        return key(x, 1, 2, 0) < key(y, 1, 2, 0);
    });
    std::sort(osp_.begin(), osp_.end(), [&](std::uint32_t x, std::uint32_t y) {
        return key(x, 2, 0, 1) < key(y, 2, 0, 1);
    });
}

void Graph::rebuild_entity_set() {
    const auto sc = find_id(Term::iri(std::string(vocab::rdfs_subclassof)));
    const auto sp = find_id(Term::iri(std::string(vocab::rdfs_subpropertyof)));
    std::set<TermId> subjects;
    for (const CodedTriple& t : triples_) {
        if (sc && t.p == *sc) continue;
        if (sp && t.p == *sp) continue;
        subjects.insert(t.s);
    }
    entity_ids_.assign(subjects.begin(), subjects.end());
}

void Graph::rebuild_type_map() {
    const auto type = find_id(Term::iri(std::string(vocab::rdf_type)));
    SchemaIndex::EdgeMap type_map;
    if (type) {
        for (const CodedTriple& t : triples_)
            if (t.p == *type) type_map[terms_[t.s]].push_back(terms_[t.o]);
    }
    schema_ = SchemaIndex::build(schema_.subclass_edges(),
                                 schema_.subproperty_edges(),
                                 std::move(type_map));
}

bool Graph::contains(const Triple& t) const {
    auto s = find_id(t.subject);
    auto p = find_id(t.predicate);
    auto o = find_id(t.object);
    if (!s || !p || !o) return false;
    return triple_set_.count(CodedTriple{*s, *p, *o}) > 0;
}

Triple Graph::triple_at(std::size_t pos) const {
    const CodedTriple& t = triples_.at(pos);
    return Triple{terms_[t.s], terms_[t.p], terms_[t.o]};
}

std::vector<Triple> Graph::all_triples() const {
    std::vector<Triple> out;
    out.reserve(triples_.size());
    for (std::size_t i = 0; i < triples_.size(); ++i)
        out.push_back(triple_at(i));
    return out;
}

Triple Graph::MatchIterator::operator*() const {
    return graph_->triple_at((*order_)[pos_]);
}

std::size_t Graph::MatchRange::size() const {
    std::size_t n = 0;
    for (auto it = first; it != last; ++it) ++n;
    return n;
}

std::pair<std::size_t, std::size_t> Graph::index_bounds(
    const std::vector<std::uint32_t>& order, int a, int b, int c,
    const Key& lo, const Key& hi) const {
    auto key = [&](std::uint32_t i) {
        const CodedTriple& t = triples_[i];
        const TermId v[3] = {t.s, t.p, t.o};
        return Key{v[a], v[b], v[c]};
    };
    auto first = std::lower_bound(
        order.begin(), order.end(), lo,
        [&](std::uint32_t i, const Key& k) { return key(i) < k; });
    auto last = std::upper_bound(
        order.begin(), order.end(), hi,
        [&](const Key& k, std::uint32_t i) { return k < key(i); });
    return {static_cast<std::size_t>(first - order.begin()),
            static_cast<std::size_t>(last - order.begin())};
}

Graph::MatchRange Graph::match(const std::optional<Term>& s,
                               const std::optional<Term>& p,
                               const std::optional<Term>& o) const {
    constexpr TermId kMax = std::numeric_limits<TermId>::max();
    const MatchRange empty{MatchIterator(this, &spo_, 0),
                           MatchIterator(this, &spo_, 0)};

    std::optional<TermId> sid, pid, oid;
    if (s) {
        sid = find_id(*s);
        if (!sid) return empty;
    }
    if (p) {
        pid = find_id(*p);
        if (!pid) return empty;
    }
    if (o) {
        oid = find_id(*o);
        if (!oid) return empty;
    }

    const std::vector<std::uint32_t>* order = &spo_;
    int a = 0, b = 1, c = 2;
    Key lo{0, 0, 0}, hi{kMax, kMax, kMax};

    if (sid) {
        // subject-first ordering covers s, sp, spo
        order = &spo_;
        a = 0, b = 1, c = 2;
        lo = {*sid, pid ? *pid : 0, oid ? *oid : 0};
        hi = {*sid, pid ? *pid : kMax, oid ? *oid : kMax};
        if (oid && !pid) {
            // (s,-,o) is an object-subject prefix
            order = &osp_;
            a = 2, b = 0, c = 1;
            lo = {*oid, *sid, 0};
            hi = {*oid, *sid, kMax};
        }
    } else if (pid) {
        // predicate-first ordering covers p, po
        order = &pos_;
        a = 1, b = 2, c = 0;
        lo = {*pid, oid ? *oid : 0, 0};
        hi = {*pid, oid ? *oid : kMax, kMax};
    } else if (oid) {
        order = &osp_;
        a = 2, b = 0, c = 1;
        lo = {*oid, 0, 0};
        hi = {*oid, kMax, kMax};
    } else {
        return MatchRange{MatchIterator(this, &spo_, 0),
                          MatchIterator(this, &spo_, spo_.size())};
    }

    auto [first, last] = index_bounds(*order, a, b, c, lo, hi);
    return MatchRange{MatchIterator(this, order, first),
                      MatchIterator(this, order, last)};
}

std::size_t Graph::count_entities_with_fact(const Term& predicate,
                                            const Term& object) const {
    // triples are unique, so every hit in the (p,o) range has a distinct
    // subject
    return match(std::nullopt, predicate, object).size();
}

std::size_t Graph::count_triples_with_object(const Term& object) const {
    return match(std::nullopt, std::nullopt, object).size();
}

std::vector<Term> Graph::entities() const {
    std::vector<Term> out;
    out.reserve(entity_ids_.size());
    for (TermId id : entity_ids_) out.push_back(terms_[id]);
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::is_entity(const Term& t) const {
    auto id = find_id(t);
    if (!id) return false;
    return std::binary_search(entity_ids_.begin(), entity_ids_.end(), *id);
}

Graph build_graph(std::vector<Triple> triples) {
    Graph g;
    SchemaIndex::EdgeMap subclass, subproperty, type_map;
    for (const Triple& t : triples) {
        require_valid_triple(t);
        Graph::CodedTriple coded{g.intern(t.subject), g.intern(t.predicate),
                                 g.intern(t.object)};
        if (!g.insert_coded(coded)) continue;
        const std::string& p = t.predicate.value();
        if (p == vocab::rdfs_subclassof)
            subclass[t.subject].push_back(t.object);
        else if (p == vocab::rdfs_subpropertyof)
            subproperty[t.subject].push_back(t.object);
        else if (p == vocab::rdf_type)
            type_map[t.subject].push_back(t.object);
    }
    g.schema_ = SchemaIndex::build(std::move(subclass), std::move(subproperty),
                                   std::move(type_map));
    g.rebuild_indexes();
    g.rebuild_entity_set();
    return g;
}

Graph compute_closure(const Graph& g) {
    Graph out = g;

    const auto type = out.find_id(Term::iri(std::string(vocab::rdf_type)));
    const auto sc =
        out.find_id(Term::iri(std::string(vocab::rdfs_subclassof)));
    const auto sp =
        out.find_id(Term::iri(std::string(vocab::rdfs_subpropertyof)));

    using TermId = Graph::TermId;
    std::unordered_map<TermId, std::vector<TermId>> sub_of, sub_inv;
    std::unordered_map<TermId, std::vector<TermId>> prop_of, prop_inv;
    std::unordered_map<TermId, std::vector<TermId>> instances;
    std::unordered_map<TermId, std::vector<std::pair<TermId, TermId>>> by_pred;

    std::deque<Graph::CodedTriple> work(out.triples_.begin(),
                                        out.triples_.end());
    auto add = [&](Graph::CodedTriple t) {
        if (out.insert_coded(t)) work.push_back(t);
    };

    // Semi-naive forward chaining: each statement is processed exactly once
    // against everything processed before it, then indexed. Any rule firing
    // between X and a later-processed Y happens when Y is processed.
    while (!work.empty()) {
        const Graph::CodedTriple t = work.front();
        work.pop_front();

        if (sc && t.p == *sc) {
            for (TermId below : sub_inv[t.s]) add({below, *sc, t.o});
            for (TermId above : sub_of[t.o]) add({t.s, *sc, above});
            if (type)
                for (TermId inst : instances[t.s]) add({inst, *type, t.o});
        }
        if (sp && t.p == *sp) {
            for (TermId below : prop_inv[t.s]) add({below, *sp, t.o});
            for (TermId above : prop_of[t.o]) add({t.s, *sp, above});
            for (const auto& [subj, obj] : by_pred[t.s])
                add({subj, t.o, obj});
        }
        if (type && t.p == *type) {
            for (TermId super : sub_of[t.o]) add({t.s, *type, super});
        }
        for (TermId super : prop_of[t.p]) add({t.s, super, t.o});

        by_pred[t.p].emplace_back(t.s, t.o);
        if (sc && t.p == *sc) {
            sub_of[t.s].push_back(t.o);
            sub_inv[t.o].push_back(t.s);
        }
        if (sp && t.p == *sp) {
            prop_of[t.s].push_back(t.o);
            prop_inv[t.o].push_back(t.s);
        }
        if (type && t.p == *type) instances[t.o].push_back(t.s);
    }

    out.rebuild_indexes();
    out.rebuild_entity_set();
    // The asserted hierarchy edges are kept as-is; only the type map absorbs
    // inferred statements. Relaxation steps stay one asserted edge at a time.
    out.rebuild_type_map();
    out.closure_applied_ = true;
    return out;
}

}  // namespace kgqr
