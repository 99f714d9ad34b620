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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kgqr/term.hpp"

namespace kgqr {

/// Class/property hierarchies and the rdf:type map of a graph.
///
/// Hierarchy edges are the asserted (direct) rdfs:subClassOf /
/// rdfs:subPropertyOf statements; cycles are collapsed into strongly
/// connected components whose members are treated as equivalent, so
/// `direct_superclasses` always moves strictly up the collapsed DAG.
/// The type map reflects the rdf:type statements of the graph it was
/// built from (after closure it therefore includes inherited types).
class SchemaIndex {
public:
    using EdgeMap = std::map<Term, std::vector<Term>>;

    SchemaIndex() = default;

    static SchemaIndex build(EdgeMap subclass_edges, EdgeMap subproperty_edges,
                             EdgeMap type_map);

    /// One term per superclass SCC directly above `cls`, sorted; empty when
    /// `cls` has no superclass outside its own component.
    std::vector<Term> direct_superclasses(const Term& cls) const;
    std::vector<Term> direct_superproperties(const Term& prop) const;

    /// rdf:type objects recorded for `subject`, sorted; empty when untyped.
    std::vector<Term> types_of(const Term& subject) const;

    /// True when `ancestor` is reachable from `descendant` through
    /// subclass edges and the two are not equivalent.
    bool is_strict_superclass(const Term& ancestor,
                              const Term& descendant) const;

    /// Canonical representative of the class SCC containing `cls`
    /// (lexicographically least member).
    Term class_representative(const Term& cls) const;

    const EdgeMap& subclass_edges() const { return classes_.edges; }
    const EdgeMap& subproperty_edges() const { return properties_.edges; }
    const EdgeMap& type_map() const { return type_map_; }

private:
    struct Hierarchy {
        EdgeMap edges;  // asserted direct edges, values sorted+deduped
        std::map<Term, Term> representative;
        std::map<Term, std::vector<Term>> collapsed;  // repr -> repr supers
        std::map<Term, std::set<Term>> ancestors;     // repr -> strict reprs

        void finalize();
        Term repr(const Term& t) const;
        std::vector<Term> direct_supers(const Term& t) const;
        bool strictly_above(const Term& anc, const Term& desc) const;
    };

    Hierarchy classes_;
    Hierarchy properties_;
    EdgeMap type_map_;
};

/// In-memory triple store. Write-once: built by `build_graph` (optionally
/// extended by `compute_closure`), immutable afterwards; all read
/// operations are const and safe to call concurrently.
///
/// Three orderings (subject-, predicate-, and object-first) over the same
/// deduplicated triple set back pattern matching; every bound-position
/// combination is served by a contiguous range of exactly one ordering.
class Graph {
public:
    Graph() = default;

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }
    bool closure_applied() const { return closure_applied_; }
    const SchemaIndex& schema() const { return schema_; }

    bool contains(const Triple& t) const;
    Triple triple_at(std::size_t pos) const;
    std::vector<Triple> all_triples() const;

    class MatchIterator {
    public:
        using value_type = Triple;
        using difference_type = std::ptrdiff_t;

        MatchIterator() = default;
        MatchIterator(const Graph* g, const std::vector<std::uint32_t>* order,
                      std::size_t pos)
            : graph_(g), order_(order), pos_(pos) {}

        Triple operator*() const;
        MatchIterator& operator++() {
            ++pos_;
            return *this;
        }
        MatchIterator operator++(int) {
            MatchIterator prev = *this;
            ++pos_;
            return prev;
        }
        friend bool operator==(const MatchIterator&,
                               const MatchIterator&) = default;

    private:
        const Graph* graph_ = nullptr;
        const std::vector<std::uint32_t>* order_ = nullptr;
        std::size_t pos_ = 0;
    };

    struct MatchRange {
        MatchIterator first, last;
        MatchIterator begin() const { return first; }
        MatchIterator end() const { return last; }
        bool empty() const { return first == last; }
        std::size_t size() const;
    };

    /// Yields every triple agreeing with all bound positions. Picks the
    /// ordering whose sort prefix covers the bound positions, so the result
    /// is a contiguous index range.
    MatchRange match(const std::optional<Term>& s, const std::optional<Term>& p,
                     const std::optional<Term>& o) const;

    /// Number of distinct subjects of non-schema statements (subClassOf /
    /// subPropertyOf declarations do not make their subject an entity).
    std::size_t count_entities() const { return entity_ids_.size(); }

    /// Distinct subjects e such that <e, predicate, object> is present.
    std::size_t count_entities_with_fact(const Term& predicate,
                                         const Term& object) const;

    /// Number of triples whose object equals `object`.
    std::size_t count_triples_with_object(const Term& object) const;

    std::vector<Term> entities() const;
    bool is_entity(const Term& t) const;

    friend Graph build_graph(std::vector<Triple> triples);
    friend Graph compute_closure(const Graph& g);

private:
    using TermId = std::uint32_t;

    struct CodedTriple {
        TermId s, p, o;
        friend auto operator<=>(const CodedTriple&,
                                const CodedTriple&) = default;
    };
    struct CodedTripleHash {
        std::size_t operator()(const CodedTriple& t) const noexcept;
    };

    std::optional<TermId> find_id(const Term& t) const;
    TermId intern(const Term& t);
    bool insert_coded(const CodedTriple& t);  // false on duplicate
    void rebuild_indexes();
    void rebuild_entity_set();
    void rebuild_type_map();

    using Key = std::array<TermId, 3>;
    std::pair<std::size_t, std::size_t> index_bounds(
        const std::vector<std::uint32_t>& order, int a, int b, int c,
        const Key& lo, const Key& hi) const;

    std::vector<Term> terms_;
    std::unordered_map<Term, TermId> term_ids_;
    std::vector<CodedTriple> triples_;  // insertion order, deduplicated
    std::unordered_set<CodedTriple, CodedTripleHash> triple_set_;
    std::vector<std::uint32_t> spo_, pos_, osp_;
    std::vector<TermId> entity_ids_;  // sorted
    SchemaIndex schema_;
    bool closure_applied_ = false;
};

/// Deduplicates, indexes, and extracts the schema. Every input triple must
/// satisfy the triple invariants (throws std::invalid_argument otherwise).
Graph build_graph(std::vector<Triple> triples);

/// Returns the graph closed under four RDFS rules: subClassOf transitivity,
/// subPropertyOf transitivity, type inheritance, and subproperty
/// propagation. Idempotent; the result keeps the asserted hierarchy edges
/// of the input so that one-step relaxations stay one step.
Graph compute_closure(const Graph& g);

}  // namespace kgqr
