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

#include "kgqr/ntriples.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace kgqr {

ParseError::ParseError(std::size_t line, std::string text,
                       const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason +
                         " in '" + text + "'"),
      line_(line),
      text_(std::move(text)) {}

namespace {

// Cursor over a single statement line.
class LineScanner {
public:
    LineScanner(std::size_t lineno, const std::string& line)
        : lineno_(lineno), line_(line) {}

    [[noreturn]] void fail(const std::string& reason) const {
        throw ParseError(lineno_, line_, reason);
    }

    void skip_ws() {
        while (pos_ < line_.size() &&
               std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= line_.size(); }
    char peek() const { return line_[pos_]; }

    char take() {
        if (at_end()) fail("unexpected end of line");
        return line_[pos_++];
    }

    void expect(char c) {
        if (at_end() || line_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Term parse_iri() {
        expect('<');
        std::string value;
        while (!at_end() && peek() != '>') value += take();
        expect('>');
        if (value.empty()) fail("empty IRI");
        for (unsigned char c : value)
            if (std::isspace(c)) fail("whitespace inside IRI");
        return Term::iri(std::move(value));
    }

    Term parse_blank() {
        expect('_');
        expect(':');
        std::string label;
        while (!at_end() && !std::isspace(static_cast<unsigned char>(peek())))
            label += take();
        if (label.empty()) fail("empty blank node label");
        return Term::blank(std::move(label));
    }

    Term parse_literal() {
        expect('"');
        std::string lexical;
        while (true) {
            if (at_end()) fail("unterminated literal");
            char c = take();
            if (c == '"') break;
            if (c == '\\') {
                lexical += unescape();
            } else {
                lexical += c;
            }
        }
        if (!at_end() && peek() == '@') {
            take();
            std::string lang;
            while (!at_end() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) ||
                    peek() == '-'))
                lang += take();
            if (lang.empty()) fail("empty language tag");
            return Term::literal(std::move(lexical), {}, std::move(lang));
        }
        if (pos_ + 1 < line_.size() && line_[pos_] == '^' &&
            line_[pos_ + 1] == '^') {
            pos_ += 2;
            Term dt = parse_iri();
            return Term::literal(std::move(lexical), dt.value());
        }
        return Term::literal(std::move(lexical));
    }

    Term parse_subject() {
        skip_ws();
        if (at_end()) fail("missing subject");
        if (peek() == '<') return parse_iri();
        if (peek() == '_') return parse_blank();
        fail("subject must be an IRI or blank node");
    }

    Term parse_predicate() {
        skip_ws();
        if (at_end()) fail("missing predicate");
        if (peek() == '<') return parse_iri();
        fail("predicate must be an IRI");
    }

    Term parse_object() {
        skip_ws();
        if (at_end()) fail("missing object");
        if (peek() == '<') return parse_iri();
        if (peek() == '_') return parse_blank();
        if (peek() == '"') return parse_literal();
        fail("object must be an IRI, blank node, or literal");
    }

    void parse_terminator() {
        skip_ws();
        if (at_end()) fail("missing ' .' terminator");
        expect('.');
        skip_ws();
        // allow an end-of-line comment after the dot
        if (!at_end() && peek() != '#') fail("trailing content after '.'");
    }

private:
    std::string unescape() {
        if (at_end()) fail("dangling escape");
        char c = take();
        switch (c) {
            case 't': return "\t";
            case 'n': return "\n";
            case 'r': return "\r";
            case '"': return "\"";
            case '\\': return "\\";
            case 'u': return unescape_codepoint(4);
            case 'U': return unescape_codepoint(8);
            default:
                fail(std::string("unsupported escape '\\") + c + "'");
        }
    }

    std::string unescape_codepoint(int digits) {
        std::uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (at_end()) fail("truncated \\u escape");
            char c = take();
            cp <<= 4;
            if (c >= '0' && c <= '9')
                cp |= static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f')
                cp |= static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                cp |= static_cast<std::uint32_t>(c - 'A' + 10);
            else
                fail("invalid hex digit in \\u escape");
        }
        // minimal UTF-8 encoding
        std::string out;
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
        return out;
    }

    std::size_t lineno_;
    const std::string& line_;
    std::size_t pos_ = 0;
};

bool blank_or_comment(const std::string& line) {
    for (unsigned char c : line) {
        if (std::isspace(c)) continue;
        return c == '#';
    }
    return true;
}

}  // namespace

std::vector<Triple> parse_ntriples(std::istream& in) {
    std::vector<Triple> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank_or_comment(line)) continue;
        LineScanner scan(lineno, line);
        Triple t;
        t.subject = scan.parse_subject();
        t.predicate = scan.parse_predicate();
        t.object = scan.parse_object();
        scan.parse_terminator();
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Triple> parse_ntriples(const std::string& text) {
    std::istringstream in(text);
    return parse_ntriples(in);
}

std::vector<Triple> load_ntriples_files(
    const std::vector<std::string>& paths) {
    std::vector<Triple> all;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        std::ifstream in(paths[i]);
        if (!in) throw std::runtime_error("cannot open file: " + paths[i]);
        std::vector<Triple> triples;
        try {
            triples = parse_ntriples(in);
        } catch (const ParseError& e) {
            throw ParseError(e.line(), e.text(),
                             "in file " + paths[i] + ": " + e.what());
        }
        // scope blank labels to their file
        const std::string scope = "f" + std::to_string(i) + ".";
        for (Triple& t : triples) {
            if (t.subject.is_blank())
                t.subject = Term::blank(scope + t.subject.value());
            if (t.object.is_blank())
                t.object = Term::blank(scope + t.object.value());
            all.push_back(std::move(t));
        }
    }
    return all;
}

}  // namespace kgqr
