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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgqr/term.hpp"

namespace kgqr {

/// Raised on a malformed data line; carries the 1-based line number and the
/// offending line text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string text, const std::string& reason);

    std::size_t line() const { return line_; }
    const std::string& text() const { return text_; }

private:
    std::size_t line_;
    std::string text_;
};

/// Line-oriented N-Triples subset: absolute IRIs in angle brackets,
/// plain/typed/language-tagged literals in double quotes, blank nodes as
/// `_:label`, statements terminated by ` .`. Empty lines and `#` comment
/// lines are skipped. Duplicate statements are kept; graph construction
/// deduplicates.
std::vector<Triple> parse_ntriples(std::istream& in);

std::vector<Triple> parse_ntriples(const std::string& text);

/// Loads and concatenates several files. Blank node labels are file-scoped:
/// the same label in two files denotes two distinct nodes.
std::vector<Triple> load_ntriples_files(const std::vector<std::string>& paths);

}  // namespace kgqr
