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

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace kgqr {

namespace vocab {
inline constexpr std::string_view rdf_type =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdfs_subclassof =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view rdfs_subpropertyof =
    "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view rdfs_domain =
    "http://www.w3.org/2000/01/rdf-schema#domain";
}  // namespace vocab

enum class TermKind : std::uint8_t { Iri, Literal, Blank };

/// An RDF term: an IRI, a literal (with optional datatype IRI or language
/// tag), or a blank node identified by its local label.
class Term {
public:
    Term() : kind_(TermKind::Iri) {}

    /// Throws std::invalid_argument if `value` is empty or contains whitespace.
    static Term iri(std::string value);
    static Term literal(std::string lexical, std::string datatype = {},
                        std::string language = {});
    /// Throws std::invalid_argument if `label` is empty or contains whitespace.
    static Term blank(std::string label);

    TermKind kind() const { return kind_; }
    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_literal() const { return kind_ == TermKind::Literal; }
    bool is_blank() const { return kind_ == TermKind::Blank; }

    /// IRI string, literal lexical form, or blank node label.
    const std::string& value() const { return value_; }
    const std::string& datatype() const { return datatype_; }
    const std::string& language() const { return language_; }

    /// Surface form: `<iri>`, `"lex"`, `"lex"@en`, `"5"^^<dt>`, `_:label`.
    std::string to_ntriples() const;

    friend auto operator<=>(const Term&, const Term&) = default;

private:
    Term(TermKind kind, std::string value, std::string datatype,
         std::string language)
        : kind_(kind),
          value_(std::move(value)),
          datatype_(std::move(datatype)),
          language_(std::move(language)) {}

    TermKind kind_;
    std::string value_;
    std::string datatype_;  // literals only
    std::string language_;  // literals only
};

/// A statement. Valid triples have an IRI or blank subject, an IRI
/// predicate, and any term as object.
struct Triple {
    Term subject;
    Term predicate;
    Term object;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

bool is_valid_triple(const Triple& t);

/// Throws std::invalid_argument naming the offending position.
void require_valid_triple(const Triple& t);

std::string to_string(const Triple& t);

}  // namespace kgqr

template <>
struct std::hash<kgqr::Term> {
    std::size_t operator()(const kgqr::Term& t) const noexcept;
};

template <>
struct std::hash<kgqr::Triple> {
    std::size_t operator()(const kgqr::Triple& t) const noexcept;
};
