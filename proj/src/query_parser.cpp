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

#include "kgqr/query_parser.hpp"

#include <cctype>
#include <map>

namespace kgqr {

QueryParseError::QueryParseError(std::size_t line, std::size_t column,
                                 const std::string& reason)
    : std::runtime_error("query error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + reason),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum class Kind {
        End,
        Var,      // text = name without '?'
        IriRef,   // text = iri
        PName,    // text = prefix, local = local part
        Literal,  // text = lexical form
        Word,     // bare keyword or 'a'
        LBrace,
        RBrace,
        Dot,
    };

    Kind kind = Kind::End;
    std::string text;
    std::string local;

    // literal annotations
    std::string lang;
    std::string dt_iri;     // absolute datatype
    std::string dt_prefix;  // datatype given as a prefixed name
    std::string dt_local;
    bool dt_is_pname = false;

    std::size_t line = 1, col = 1;
};

bool word_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

bool pname_local_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.';
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    [[noreturn]] void fail(std::size_t line, std::size_t col,
                           const std::string& reason) const {
        throw QueryParseError(line, col, reason);
    }

    Token next() {
        skip_trivia();
        Token tok;
        tok.line = line_;
        tok.col = col_;
        if (at_end()) return tok;

        const char c = peek();
        switch (c) {
            case '{': advance(); tok.kind = Token::Kind::LBrace; return tok;
            case '}': advance(); tok.kind = Token::Kind::RBrace; return tok;
            case '.': advance(); tok.kind = Token::Kind::Dot; return tok;
            case '?': return lex_var(tok);
            case '<': return lex_iri(tok);
            case '"':
            case '\'': return lex_literal(tok);
            case ':': return lex_pname(tok, "");
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return lex_word(tok);
        fail(line_, col_, std::string("unexpected character '") + c + "'");
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char peek_ahead() const {
        return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        while (!at_end()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token lex_var(Token tok) {
        advance();  // '?'
        std::string name;
        while (!at_end() && word_char(static_cast<unsigned char>(peek())))
            name += advance();
        if (name.empty()) fail(tok.line, tok.col, "empty variable name");
        if (!std::isalpha(static_cast<unsigned char>(name[0])))
            fail(tok.line, tok.col,
                 "variable names must start with a letter: ?" + name);
        tok.kind = Token::Kind::Var;
        tok.text = std::move(name);
        return tok;
    }

    Token lex_iri(Token tok) {
        advance();  // '<'
        std::string iri;
        while (!at_end() && peek() != '>') {
            if (peek() == '\n') fail(tok.line, tok.col, "unterminated IRI");
            iri += advance();
        }
        if (at_end()) fail(tok.line, tok.col, "unterminated IRI");
        advance();  // '>'
        if (iri.empty()) fail(tok.line, tok.col, "empty IRI");
        tok.kind = Token::Kind::IriRef;
        tok.text = std::move(iri);
        return tok;
    }

    Token lex_literal(Token tok) {
        const char quote = advance();
        std::string lexical;
        while (true) {
            if (at_end()) fail(tok.line, tok.col, "unterminated literal");
            char c = advance();
            if (c == quote) break;
            if (c == '\\') {
                if (at_end()) fail(tok.line, tok.col, "dangling escape");
                char e = advance();
                switch (e) {
                    case 't': lexical += '\t'; break;
                    case 'n': lexical += '\n'; break;
                    case 'r': lexical += '\r'; break;
                    case '"': lexical += '"'; break;
                    case '\'': lexical += '\''; break;
                    case '\\': lexical += '\\'; break;
                    default:
                        fail(tok.line, tok.col,
                             std::string("unsupported escape '\\") + e + "'");
                }
            } else {
                lexical += c;
            }
        }
        tok.kind = Token::Kind::Literal;
        tok.text = std::move(lexical);
        if (!at_end() && peek() == '@') {
            advance();
            std::string lang;
            while (!at_end() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) ||
                    peek() == '-'))
                lang += advance();
            if (lang.empty()) fail(tok.line, tok.col, "empty language tag");
            tok.lang = std::move(lang);
        } else if (!at_end() && peek() == '^' && peek_ahead() == '^') {
            advance();
            advance();
            if (at_end())
                fail(tok.line, tok.col, "missing datatype after '^^'");
            if (peek() == '<') {
                Token dt = lex_iri(Token{});
                tok.dt_iri = dt.text;
            } else {
                Token dt = next();
                if (dt.kind != Token::Kind::PName)
                    fail(dt.line, dt.col, "expected datatype IRI after '^^'");
                tok.dt_is_pname = true;
                tok.dt_prefix = dt.text;
                tok.dt_local = dt.local;
            }
        }
        return tok;
    }

    Token lex_pname(Token tok, std::string prefix) {
        advance();  // ':'
        std::string local;
        while (!at_end() && pname_local_char(static_cast<unsigned char>(peek())))
            local += advance();
        // a trailing dot belongs to the statement, not the name
        while (!local.empty() && local.back() == '.') {
            local.pop_back();
            --pos_;
            --col_;
        }
        tok.kind = Token::Kind::PName;
        tok.text = std::move(prefix);
        tok.local = std::move(local);
        return tok;
    }

    Token lex_word(Token tok) {
        std::string word;
        while (!at_end() && word_char(static_cast<unsigned char>(peek())))
            word += advance();
        if (!at_end() && peek() == ':') return lex_pname(std::move(tok), word);
        tok.kind = Token::Kind::Word;
        tok.text = std::move(word);
        return tok;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

bool keyword_is(const Token& tok, std::string_view kw) {
    if (tok.kind != Token::Kind::Word) return false;
    if (tok.text.size() != kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i)
        if (std::toupper(static_cast<unsigned char>(tok.text[i])) != kw[i])
            return false;
    return true;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) {
        lookahead_ = lexer_.next();
    }

    BGPQuery parse() {
        parse_prologue();

        expect_keyword("SELECT");
        BGPQuery q;
        if (keyword_is(lookahead_, "DISTINCT")) {
            consume();
            q.distinct = true;
        }

        std::vector<Token> head_tokens;
        while (lookahead_.kind == Token::Kind::Var) {
            head_tokens.push_back(lookahead_);
            consume();
        }
        if (head_tokens.empty())
            fail(lookahead_, "expected at least one head variable");

        expect_keyword("WHERE");
        expect(Token::Kind::LBrace, "expected '{'");

        while (lookahead_.kind != Token::Kind::RBrace) {
            q.body.push_back(parse_pattern());
            if (lookahead_.kind == Token::Kind::Dot) {
                consume();
                continue;
            }
            break;
        }
        if (q.body.empty()) fail(lookahead_, "empty query body");
        expect(Token::Kind::RBrace, "expected '}'");
        if (lookahead_.kind != Token::Kind::End)
            fail(lookahead_, "trailing content after '}'");

        const std::set<std::string> body_vars = query_variables(q);
        std::set<std::string> seen;
        for (const Token& tok : head_tokens) {
            if (!seen.insert(tok.text).second)
                fail(tok, "duplicate head variable ?" + tok.text);
            if (!body_vars.count(tok.text))
                fail(tok, "head variable ?" + tok.text + " absent from body");
            q.head.push_back(tok.text);
        }
        return q;
    }

private:
    void consume() { lookahead_ = lexer_.next(); }

    [[noreturn]] void fail(const Token& tok, const std::string& reason) {
        throw QueryParseError(tok.line, tok.col, reason);
    }

    void expect(Token::Kind kind, const std::string& what) {
        if (lookahead_.kind != kind) fail(lookahead_, what);
        consume();
    }

    void expect_keyword(std::string_view kw) {
        if (!keyword_is(lookahead_, kw))
            fail(lookahead_, "expected " + std::string(kw));
        consume();
    }

    void parse_prologue() {
        while (keyword_is(lookahead_, "PREFIX")) {
            consume();
            if (lookahead_.kind != Token::Kind::PName ||
                !lookahead_.local.empty())
                fail(lookahead_, "expected prefix name declaration");
            std::string name = lookahead_.text;
            consume();
            if (lookahead_.kind != Token::Kind::IriRef)
                fail(lookahead_, "expected IRI after prefix name");
            prefixes_[name] = lookahead_.text;
            consume();
        }
    }

    std::string expand(const Token& tok) {
        auto it = prefixes_.find(tok.text);
        if (it == prefixes_.end())
            fail(tok, "undeclared prefix '" + tok.text + ":'");
        return it->second + tok.local;
    }

    TriplePattern parse_pattern() {
        PatternTerm s = parse_term();
        PatternTerm p = parse_term();
        PatternTerm o = parse_term();
        if (is_const(s) && as_term(s).is_literal())
            fail(lookahead_, "subject must not be a literal");
        if (is_const(p) && !as_term(p).is_iri())
            fail(lookahead_, "predicate must be a variable or an IRI");
        return TriplePattern{std::move(s), std::move(p), std::move(o)};
    }

    PatternTerm parse_term() {
        Token tok = lookahead_;
        switch (tok.kind) {
            case Token::Kind::Var:
                consume();
                return Variable{tok.text};
            case Token::Kind::IriRef:
                consume();
                return Term::iri(tok.text);
            case Token::Kind::PName: {
                consume();
                return Term::iri(expand(tok));
            }
            case Token::Kind::Literal: {
                consume();
                std::string dt = tok.dt_iri;
                if (tok.dt_is_pname) {
                    Token dt_tok = tok;
                    dt_tok.text = tok.dt_prefix;
                    dt_tok.local = tok.dt_local;
                    dt = expand(dt_tok);
                }
                return Term::literal(tok.text, dt, tok.lang);
            }
            case Token::Kind::Word:
                if (tok.text == "a") {
                    consume();
                    return Term::iri(std::string(vocab::rdf_type));
                }
                fail(tok, "unexpected word '" + tok.text + "'");
            default:
                fail(tok, "expected a pattern term");
        }
    }

    Lexer lexer_;
    Token lookahead_;
    std::map<std::string, std::string> prefixes_;
};

}  // namespace

BGPQuery parse_query(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace kgqr
