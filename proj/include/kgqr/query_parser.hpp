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

#include <stdexcept>
#include <string>

#include "kgqr/query.hpp"

namespace kgqr {

class QueryParseError : public std::runtime_error {
public:
    QueryParseError(std::size_t line, std::size_t column,
                    const std::string& reason);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses the SELECT subset:
///
///   [PREFIX name: <iri>]*
///   SELECT [DISTINCT] ?v+ WHERE { tp ( . tp )* [.] }
///
/// A pattern term is a variable, `<iri>`, `prefix:name`, a quoted literal
/// (single or double quotes, optional @lang or ^^ datatype), or the keyword
/// `a` (expands to rdf:type). Prefixed names are expanded to absolute IRIs.
/// Keywords are case-insensitive. `#` starts a comment.
BGPQuery parse_query(const std::string& text);

}  // namespace kgqr
