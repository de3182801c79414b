#include "conelab/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "conelab/errors.hpp"

namespace conelab {

namespace {

enum class Tok { Ident, Nat, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, Semi, Eq, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    // Command words may contain '-', e.g. "tangent-star"; only valid at
    // statement heads, so the parser asks for the extended form explicitly.
    Token take_command_word() {
        Token t = take();
        if (t.kind != Tok::Ident) return t;
        while (tok_.kind == Tok::Minus && pos_ok_adjacent(t)) {
            advance(); // consume '-'
            if (tok_.kind != Tok::Ident) error("identifier expected after '-' in command name");
            t.text += "-" + tok_.text;
            advance();
        }
        return t;
    }

    [[noreturn]] void error(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.col);
    }

  private:
    bool pos_ok_adjacent(const Token& prev) const {
        // no whitespace between the ident and the '-'
        return tok_.line == prev.line && tok_.col == prev.col + static_cast<int>(prev.text.size());
    }

    void advance() {
        skip_space();
        tok_.line = line_;
        tok_.col = col_;
        if (i_ >= src_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
                s += src_[i_];
                bump();
            }
            tok_.kind = Tok::Ident;
            tok_.text = s;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                s += src_[i_];
                bump();
            }
            tok_.kind = Tok::Nat;
            tok_.text = s;
            return;
        }
        bump();
        switch (c) {
            case '+': tok_.kind = Tok::Plus; break;
            case '-': tok_.kind = Tok::Minus; break;
            case '*': tok_.kind = Tok::Star; break;
            case '^': tok_.kind = Tok::Caret; break;
            case '/': tok_.kind = Tok::Slash; break;
            case '(': tok_.kind = Tok::LParen; break;
            case ')': tok_.kind = Tok::RParen; break;
            case ',': tok_.kind = Tok::Comma; break;
            case ';': tok_.kind = Tok::Semi; break;
            case '=': tok_.kind = Tok::Eq; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", tok_.line,
                                 tok_.col);
        }
        tok_.text = c;
    }

    void skip_space() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '#') {
                while (i_ < src_.size() && src_[i_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    const std::string& src_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{};
};

class PolyParser {
  public:
    PolyParser(Lexer& lex, const RingPtr& ring) : lex_(lex), ring_(ring) {}

    Polynomial expression() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        } else if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

  private:
    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        while (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token t = lex_.take();
            if (t.kind != Tok::Nat)
                throw ParseError("exponent must be a nonnegative integer", t.line, t.col);
            base = base.pow(std::stoi(t.text));
        }
        return base;
    }

    Polynomial primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Nat: {
                Rational c(t.text);
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Tok::Nat)
                        throw ParseError("denominator must be a positive integer", d.line, d.col);
                    Rational den(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.line, d.col);
                    c /= den;
                }
                return Polynomial::constant(ring_, c);
            }
            case Tok::Ident: {
                int v = ring_->index_of(t.text);
                if (v < 0)
                    throw ParseError("undeclared identifier '" + t.text + "'", t.line, t.col);
                return Polynomial::variable(ring_, v);
            }
            case Tok::LParen: {
                Polynomial inner = expression();
                Token close = lex_.take();
                if (close.kind != Tok::RParen)
                    throw ParseError("expected ')'", close.line, close.col);
                return inner;
            }
            default:
                throw ParseError("expected a polynomial factor", t.line, t.col);
        }
    }

    Lexer& lex_;
    const RingPtr& ring_;
};

void expect(Lexer& lex, Tok kind, const char* what) {
    Token t = lex.take();
    if (t.kind != kind) throw ParseError(std::string("expected ") + what, t.line, t.col);
}

} // namespace

const Polynomial* SessionScript::find_poly(const std::string& name) const {
    for (const auto& [n, p] : polys)
        if (n == name) return &p;
    return nullptr;
}

const std::vector<Polynomial>* SessionScript::find_ideal(const std::string& name) const {
    for (const auto& [n, g] : ideals)
        if (n == name) return &g;
    return nullptr;
}

SessionScript parse_script(const std::string& source) {
    Lexer lex(source);
    SessionScript script;

    Token head = lex.take();
    if (head.kind != Tok::Ident || head.text != "ring")
        throw ParseError("script must start with a ring declaration", head.line, head.col);
    std::vector<std::string> names;
    for (;;) {
        Token t = lex.take();
        if (t.kind != Tok::Ident) throw ParseError("variable name expected", t.line, t.col);
        names.push_back(t.text);
        Token sep = lex.take();
        if (sep.kind == Tok::Semi) break;
        if (sep.kind != Tok::Comma) throw ParseError("expected ',' or ';'", sep.line, sep.col);
    }
    std::optional<std::string> param;
    std::optional<MonomialOrder> order;
    while (lex.peek().kind == Tok::Ident &&
           (lex.peek().text == "param" || lex.peek().text == "order")) {
        Token kw = lex.take();
        Token v = lex.take();
        if (v.kind != Tok::Ident) throw ParseError("name expected", v.line, v.col);
        if (kw.text == "param") {
            param = v.text;
        } else {
            if (v.text == "lex")
                order = MonomialOrder::lex(static_cast<int>(names.size()));
            else if (v.text == "grevlex")
                order = MonomialOrder::grevlex(static_cast<int>(names.size()));
            else
                throw ParseError("unknown order '" + v.text + "'", v.line, v.col);
        }
        expect(lex, Tok::Semi, "';'");
    }
    try {
        script.ring = PolyRing::make(names, param, order);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), head.line, head.col);
    }

    auto declared = [&](const std::string& n) {
        return script.find_poly(n) != nullptr || script.find_ideal(n) != nullptr ||
               script.ring->index_of(n) >= 0;
    };

    while (lex.peek().kind != Tok::End) {
        Token kw = lex.take_command_word();
        if (kw.kind != Tok::Ident)
            throw ParseError("statement expected", kw.line, kw.col);
        if (kw.text == "poly" || kw.text == "ideal") {
            Token name = lex.take();
            if (name.kind != Tok::Ident)
                throw ParseError("binding name expected", name.line, name.col);
            if (declared(name.text))
                throw ParseError("identifier '" + name.text + "' already declared", name.line,
                                 name.col);
            expect(lex, Tok::Eq, "'='");
            PolyParser pp(lex, script.ring);
            if (kw.text == "poly") {
                script.polys.emplace_back(name.text, pp.expression());
                expect(lex, Tok::Semi, "';'");
            } else {
                std::vector<Polynomial> gens;
                for (;;) {
                    gens.push_back(pp.expression());
                    Token sep = lex.take();
                    if (sep.kind == Tok::Semi) break;
                    if (sep.kind != Tok::Comma)
                        throw ParseError("expected ',' or ';'", sep.line, sep.col);
                }
                script.ideals.emplace_back(name.text, std::move(gens));
            }
        } else {
            // command statement: word then identifier/number arguments
            script.command = kw.text;
            while (lex.peek().kind != Tok::Semi) {
                Token a = lex.take();
                if (a.kind == Tok::Ident || a.kind == Tok::Nat) {
                    script.command_args.push_back(a.text);
                } else if (a.kind == Tok::Comma) {
                    continue;
                } else {
                    throw ParseError("unexpected token in command arguments", a.line, a.col);
                }
            }
            lex.take(); // ';'
            Token trailing = lex.take();
            if (trailing.kind != Tok::End)
                throw ParseError("command must be the final statement", trailing.line,
                                 trailing.col);
            break;
        }
    }
    return script;
}

SessionScript parse_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_script(buf.str());
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& source) {
    Lexer lex(source);
    PolyParser pp(lex, ring);
    Polynomial f = pp.expression();
    if (lex.peek().kind != Tok::End)
        throw ParseError("trailing input after polynomial", lex.peek().line, lex.peek().col);
    return f;
}

} // namespace conelab
