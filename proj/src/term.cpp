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

#include "kgqr/term.hpp"

#include <cctype>
#include <stdexcept>

namespace kgqr {

namespace {

bool contains_whitespace(std::string_view s) {
    for (unsigned char c : s) {
        if (std::isspace(c)) return true;
    }
    return false;
}

std::string escape_literal(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Term Term::iri(std::string value) {
    if (value.empty() || contains_whitespace(value))
        throw std::invalid_argument("invalid IRI: '" + value + "'");
    return Term(TermKind::Iri, std::move(value), {}, {});
}

Term Term::literal(std::string lexical, std::string datatype,
                   std::string language) {
    if (!datatype.empty() && contains_whitespace(datatype))
        throw std::invalid_argument("invalid literal datatype IRI: '" +
                                    datatype + "'");
    return Term(TermKind::Literal, std::move(lexical), std::move(datatype),
                std::move(language));
}

Term Term::blank(std::string label) {
    if (label.empty() || contains_whitespace(label))
        throw std::invalid_argument("invalid blank node label: '" + label +
                                    "'");
    return Term(TermKind::Blank, std::move(label), {}, {});
}

std::string Term::to_ntriples() const {
    switch (kind_) {
        case TermKind::Iri:
            return "<" + value_ + ">";
        case TermKind::Blank:
            return "_:" + value_;
        case TermKind::Literal: {
            std::string out = "\"" + escape_literal(value_) + "\"";
            if (!language_.empty())
                out += "@" + language_;
            else if (!datatype_.empty())
                out += "^^<" + datatype_ + ">";
            return out;
        }
    }
    return {};
}

bool is_valid_triple(const Triple& t) {
    return (t.subject.is_iri() || t.subject.is_blank()) &&
           t.predicate.is_iri();
}

void require_valid_triple(const Triple& t) {
    if (t.subject.is_literal())
        throw std::invalid_argument("triple subject must not be a literal: " +
                                    to_string(t));
    if (!t.predicate.is_iri())
        throw std::invalid_argument("triple predicate must be an IRI: " +
                                    to_string(t));
}

std::string to_string(const Triple& t) {
    return t.subject.to_ntriples() + " " + t.predicate.to_ntriples() + " " +
           t.object.to_ntriples() + " .";
}

}  // namespace kgqr

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::size_t std::hash<kgqr::Term>::operator()(
    const kgqr::Term& t) const noexcept {
    std::hash<std::string> h;
    std::size_t seed = static_cast<std::size_t>(t.kind());
    seed = mix(seed, h(t.value()));
    seed = mix(seed, h(t.datatype()));
    seed = mix(seed, h(t.language()));
    return seed;
}

std::size_t std::hash<kgqr::Triple>::operator()(
    const kgqr::Triple& t) const noexcept {
    std::hash<kgqr::Term> h;
    std::size_t seed = h(t.subject);
    seed = mix(seed, h(t.predicate));
    seed = mix(seed, h(t.object));
    return seed;
}
