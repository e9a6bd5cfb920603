#include "elp/parser.hpp"

#include <cctype>
#include <sstream>

#include "elp/errors.hpp"

namespace elp {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Token {
    enum Kind { Ident, Semicolon, Comma, Arrow, Period, End } kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        std::size_t line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::End, "", line, col};
        char c = text_[pos_];
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
            return {Token::Ident, std::string(text_.substr(start, pos_ - start)), line, col};
        }
        switch (c) {
            case ';': advance(); return {Token::Semicolon, ";", line, col};
            case ',': advance(); return {Token::Comma, ",", line, col};
            case '.': advance(); return {Token::Period, ".", line, col};
            case ':':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                    advance();
                    advance();
                    return {Token::Arrow, ":-", line, col};
                }
                throw SyntaxError("expected ':-'", line, col);
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text), tok_(lex_.next()) {}

    Program run() {
        while (tok_.kind != Token::End) rule();
        return builder_.finish();
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, tok_.line, tok_.column); }

    void eat() { tok_ = lex_.next(); }

    AtomIndex atom() {
        if (tok_.kind != Token::Ident) fail("expected atom");
        if (tok_.text == "not") fail("'not' is reserved and cannot name an atom");
        AtomIndex a = builder_.atom(tok_.text);
        eat();
        return a;
    }

    void rule() {
        Rule r;
        if (tok_.kind == Token::Ident) {
            r.head.add(atom());
            while (tok_.kind == Token::Semicolon) {
                eat();
                r.head.add(atom());
            }
        } else if (tok_.kind != Token::Arrow) {
            fail("expected atom or ':-'");
        }
        if (tok_.kind == Token::Arrow) {
            eat();
            if (tok_.kind != Token::Period) body(r);
        }
        if (tok_.kind != Token::Period) fail("expected '.' at end of rule");
        eat();
        builder_.add(std::move(r));
    }

    void body(Rule& r) {
        literal(r);
        while (tok_.kind == Token::Comma) {
            eat();
            literal(r);
        }
    }

    void literal(Rule& r) {
        int negs = 0;
        while (tok_.kind == Token::Ident && tok_.text == "not") {
            if (++negs > 2) fail("at most two 'not' per literal");
            eat();
        }
        AtomIndex a = atom();
        if (negs == 0)
            r.pos.add(a);
        else if (negs == 1)
            r.neg.add(a);
        else
            r.dneg.add(a);
    }

    Lexer lex_;
    Token tok_;
    ProgramBuilder builder_;
};

} // namespace

Program parse_program(const SourceProgram& src) {
    try {
        return Parser(src.text).run();
    } catch (const SyntaxError& e) {
        throw SyntaxError(src.origin + ":" + std::to_string(e.line()) + ":" +
                              std::to_string(e.column()) + ": " + e.what(),
                          e.line(), e.column());
    }
}

Program parse_program(std::string_view text, std::string origin) {
    return parse_program(SourceProgram{std::string(text), std::move(origin)});
}

std::string render_rule(const Program& p, const Rule& r) {
    std::ostringstream out;
    bool first = true;
    for (AtomIndex a : r.head) {
        if (!first) out << " ; ";
        out << p.atom_name(a);
        first = false;
    }
    if (!r.pos.empty() || !r.neg.empty() || !r.dneg.empty() || r.head.empty()) {
        out << (r.head.empty() ? ":-" : " :-");
        first = true;
        auto lit = [&](const char* prefix, AtomIndex a) {
            out << (first ? " " : ", ") << prefix << p.atom_name(a);
            first = false;
        };
        for (AtomIndex a : r.pos) lit("", a);
        for (AtomIndex a : r.neg) lit("not ", a);
        for (AtomIndex a : r.dneg) lit("not not ", a);
    }
    out << ".";
    return out.str();
}

std::string render_program(const Program& p) {
    std::string out;
    for (const Rule& r : p.rules()) {
        out += render_rule(p, r);
        out += '\n';
    }
    return out;
}

} // namespace elp
