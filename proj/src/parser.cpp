#include "solp/parser.hpp"

#include <cctype>
#include <sstream>

#include "solp/analysis.hpp"

namespace solp {

namespace {

enum class Tok {
    End,
    ProgramDecl, // #program
    Ident,
    Variable, // uppercase-initial or '_' -- always rejected downstream
    Integer,
    Decimal,
    Okay,
    Not,
    Dot,
    Comma,
    Arrow, // :-
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    Lexer(const std::string& src, const std::string& unit, std::vector<Diagnostic>& diags)
        : src_(src), unit_(unit), diags_(diags) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skipSpace();
            if (pos_ >= src_.size()) break;
            int line = line_, col = col_;
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            if (c == '#') {
                std::string word;
                advance();
                while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) )) {
                    word += src_[pos_];
                    advance();
                }
                if (word == "program") {
                    out.push_back({Tok::ProgramDecl, "#program", line, col});
                } else {
                    error(line, col, "unknown directive '#" + word + "'");
                }
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    num += src_[pos_];
                    advance();
                }
                // a '.' starts a decimal only when a digit follows; otherwise
                // it terminates the rule
                if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
                    std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                    num += '.';
                    advance();
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                        num += src_[pos_];
                        advance();
                    }
                    out.push_back({Tok::Decimal, num, line, col});
                } else {
                    out.push_back({Tok::Integer, num, line, col});
                }
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    word += src_[pos_];
                    advance();
                }
                if (std::isupper(static_cast<unsigned char>(word[0])) || word[0] == '_') {
                    out.push_back({Tok::Variable, word, line, col});
                } else if (word == "okay") {
                    out.push_back({Tok::Okay, word, line, col});
                } else if (word == "not") {
                    out.push_back({Tok::Not, word, line, col});
                } else {
                    if (word.find("__") != std::string::npos) {
                        error(line, col, "identifier '" + word + "' contains the reserved separator '__'");
                    }
                    out.push_back({Tok::Ident, word, line, col});
                }
                continue;
            }
            switch (c) {
                case '.': out.push_back({Tok::Dot, ".", line, col}); advance(); break;
                case ',': out.push_back({Tok::Comma, ",", line, col}); advance(); break;
                case '[': out.push_back({Tok::LBracket, "[", line, col}); advance(); break;
                case ']': out.push_back({Tok::RBracket, "]", line, col}); advance(); break;
                case '{': out.push_back({Tok::LBrace, "{", line, col}); advance(); break;
                case '}': out.push_back({Tok::RBrace, "}", line, col}); advance(); break;
                case '(': out.push_back({Tok::LParen, "(", line, col}); advance(); break;
                case ')': out.push_back({Tok::RParen, ")", line, col}); advance(); break;
                case '+': out.push_back({Tok::Plus, "+", line, col}); advance(); break;
                case '*': out.push_back({Tok::Star, "*", line, col}); advance(); break;
                case '/': out.push_back({Tok::Slash, "/", line, col}); advance(); break;
                case '-': out.push_back({Tok::Minus, "-", line, col}); advance(); break;
                case ':':
                    if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
                        out.push_back({Tok::Arrow, ":-", line, col});
                        advance();
                        advance();
                    } else {
                        error(line, col, "stray ':'");
                        advance();
                    }
                    break;
                default:
                    error(line, col, std::string("unexpected character '") + c + "'");
                    advance();
                    break;
            }
        }
        out.push_back({Tok::End, "", line_, col_});
        return out;
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skipSpace() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    void error(int line, int col, const std::string& msg) {
        diags_.push_back({Diagnostic::Severity::Error, msg, unit_, line, col});
    }

    const std::string& src_;
    std::string unit_;
    std::vector<Diagnostic>& diags_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const std::string& unit, std::vector<Diagnostic>& diags)
        : toks_(std::move(toks)), unit_(unit), diags_(diags) {}

    // Appends parsed programs to out. Stops at end of token stream.
    void run(std::vector<Program>& out) {
        while (cur().kind != Tok::End) {
            if (cur().kind == Tok::ProgramDecl) {
                next();
                if (cur().kind != Tok::Ident) {
                    fail("expected program identifier after #program");
                    recover();
                    continue;
                }
                Program p;
                p.id = cur().text;
                next();
                expect(Tok::Dot, "expected '.' after program declaration");
                out.push_back(std::move(p));
            } else {
                if (out.empty()) {
                    fail("rule appears before any #program declaration");
                    recover();
                    continue;
                }
                auto r = parseRule();
                if (r) out.back().rules.push_back(std::move(*r));
            }
        }
    }

private:
    const Token& cur() const { return toks_[idx_]; }
    const Token& peek(size_t k = 1) const {
        return toks_[std::min(idx_ + k, toks_.size() - 1)];
    }
    void next() {
        if (idx_ + 1 < toks_.size()) ++idx_;
    }
    void fail(const std::string& msg) {
        diags_.push_back({Diagnostic::Severity::Error, msg, unit_, cur().line, cur().column});
    }
    bool expect(Tok k, const std::string& msg) {
        if (cur().kind != k) {
            fail(msg);
            return false;
        }
        next();
        return true;
    }
    // Skip to the next '.' or #program so one bad rule yields one diagnostic.
    void recover() {
        while (cur().kind != Tok::End && cur().kind != Tok::Dot && cur().kind != Tok::ProgramDecl)
            next();
        if (cur().kind == Tok::Dot) next();
    }

    std::optional<Atom> parseAtom() {
        if (cur().kind == Tok::Variable) {
            fail("variables are unsupported ('" + cur().text + "'); programs must be ground");
            return std::nullopt;
        }
        if (cur().kind != Tok::Ident) {
            fail("expected atom, got '" + cur().text + "'");
            return std::nullopt;
        }
        Atom a;
        a.predicate = cur().text;
        next();
        if (cur().kind == Tok::LParen) {
            next();
            while (true) {
                if (cur().kind == Tok::Ident) {
                    a.args.push_back(cur().text);
                    next();
                } else if (cur().kind == Tok::Integer) {
                    // normalize integer constants (02 -> 2)
                    a.args.push_back(std::to_string(std::stoll(cur().text)));
                    next();
                } else if (cur().kind == Tok::Variable) {
                    fail("variables are unsupported ('" + cur().text + "'); programs must be ground");
                    return std::nullopt;
                } else {
                    fail("expected constant argument");
                    return std::nullopt;
                }
                if (cur().kind == Tok::Comma) {
                    next();
                    continue;
                }
                break;
            }
            if (!expect(Tok::RParen, "expected ')' after atom arguments")) return std::nullopt;
        }
        return a;
    }

    std::optional<Literal> parseLiteral() {
        Literal l;
        if (cur().kind == Tok::Not) {
            l.negated = true;
            next();
        }
        auto a = parseAtom();
        if (!a) return std::nullopt;
        l.atom = std::move(*a);
        return l;
    }

    BoundExprPtr parseExpr() { return parseAdditive(); }

    BoundExprPtr parseAdditive() {
        auto lhs = parseMultiplicative();
        if (!lhs) return nullptr;
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            auto op = cur().kind == Tok::Plus ? BoundExpr::Kind::Add : BoundExpr::Kind::Sub;
            next();
            auto rhs = parseMultiplicative();
            if (!rhs) return nullptr;
            lhs = BoundExpr::binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    BoundExprPtr parseMultiplicative() {
        auto lhs = parsePrimary();
        if (!lhs) return nullptr;
        while (cur().kind == Tok::Star || cur().kind == Tok::Slash) {
            auto op = cur().kind == Tok::Star ? BoundExpr::Kind::Mul : BoundExpr::Kind::Div;
            next();
            auto rhs = parsePrimary();
            if (!rhs) return nullptr;
            lhs = BoundExpr::binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    BoundExprPtr parsePrimary() {
        switch (cur().kind) {
            case Tok::Integer: {
                auto e = BoundExpr::number(Rational(std::stoll(cur().text)));
                next();
                return e;
            }
            case Tok::Decimal: {
                auto dot = cur().text.find('.');
                long long intPart = std::stoll(cur().text.substr(0, dot));
                std::string frac = cur().text.substr(dot + 1);
                long long den = 1;
                for (size_t i = 0; i < frac.size(); ++i) den *= 10;
                long long num = intPart * den + std::stoll(frac);
                auto e = BoundExpr::number(Rational(num, den));
                next();
                return e;
            }
            case Tok::Ident:
                if (cur().text == "n") {
                    next();
                    return BoundExpr::agentCount();
                }
                fail("unknown symbol '" + cur().text + "' in bound expression (only n is available)");
                return nullptr;
            case Tok::LParen: {
                next();
                auto e = parseExpr();
                if (!e) return nullptr;
                if (!expect(Tok::RParen, "expected ')' in bound expression")) return nullptr;
                return e;
            }
            case Tok::Minus: {
                next();
                auto e = parsePrimary();
                if (!e) return nullptr;
                return BoundExpr::binary(BoundExpr::Kind::Sub, BoundExpr::number(Rational(0)), std::move(e));
            }
            default:
                fail("expected bound expression");
                return nullptr;
        }
    }

    // Selection condition inside brackets. A lone identifier is a member
    // selection; anything with a top-level comma is cardinal. A lone
    // expression with no comma is refused as ambiguous.
    std::optional<Selection> parseSelection() {
        Selection s;
        if (cur().kind == Tok::Ident && cur().text != "n" && peek().kind == Tok::RBracket) {
            s.sel = MemberSelection{cur().text};
            next();
            return s;
        }
        CardinalSelection c;
        if (cur().kind == Tok::RBracket) {
            s.sel = std::move(c); // [] -> both defaults
            return s;
        }
        if (cur().kind != Tok::Comma) {
            c.lower = parseExpr();
            if (!c.lower) return std::nullopt;
        }
        if (cur().kind != Tok::Comma) {
            fail("ambiguous selection condition: write [e, ] or [ ,e] (a bare expression is refused)");
            return std::nullopt;
        }
        next();
        if (cur().kind != Tok::RBracket) {
            c.upper = parseExpr();
            if (!c.upper) return std::nullopt;
        }
        s.sel = std::move(c);
        return s;
    }

    std::optional<SocialCondition> parseSc() {
        // caller consumed '['
        SocialCondition sc;
        auto sel = parseSelection();
        if (!sel) return std::nullopt;
        sc.cond = std::move(*sel);
        if (!expect(Tok::RBracket, "expected ']' after selection condition")) return std::nullopt;
        if (cur().kind == Tok::LBrace) {
            next();
            while (true) {
                if (cur().kind == Tok::LBracket) {
                    next();
                    auto child = parseSc();
                    if (!child) return std::nullopt;
                    sc.skel.push_back(std::move(*child));
                } else {
                    auto l = parseLiteral();
                    if (!l) return std::nullopt;
                    sc.content.push_back(std::move(*l));
                }
                if (cur().kind == Tok::Comma) {
                    next();
                    continue;
                }
                break;
            }
            if (!expect(Tok::RBrace, "expected '}' closing social condition")) return std::nullopt;
        } else {
            // braces omitted: simple SC with singleton content
            auto l = parseLiteral();
            if (!l) return std::nullopt;
            sc.content.push_back(std::move(*l));
        }
        if (sc.content.empty()) {
            fail("social condition has empty content");
            return std::nullopt;
        }
        return sc;
    }

    std::optional<BodyElement> parseBodyElement() {
        bool negated = false;
        if (cur().kind == Tok::Not) {
            negated = true;
            next();
        }
        if (cur().kind == Tok::LBracket) {
            next();
            auto sc = parseSc();
            if (!sc) return std::nullopt;
            BodyElement e;
            e.elem = BodyElement::Sc{std::move(*sc), negated};
            return e;
        }
        auto a = parseAtom();
        if (!a) return std::nullopt;
        BodyElement e;
        e.elem = BodyElement::Lit{Literal{std::move(*a), negated}};
        return e;
    }

    std::optional<Rule> parseRule() {
        Rule r;
        bool haveHead = false;
        if (cur().kind == Tok::Okay) {
            next();
            if (!expect(Tok::LParen, "expected '(' after okay")) {
                recover();
                return std::nullopt;
            }
            auto a = parseAtom();
            if (!a) {
                recover();
                return std::nullopt;
            }
            if (!expect(Tok::RParen, "expected ')' after okay argument")) {
                recover();
                return std::nullopt;
            }
            r.headKind = Rule::HeadKind::Okay;
            r.head = std::move(*a);
            haveHead = true;
        } else if (cur().kind == Tok::Ident || cur().kind == Tok::Variable) {
            auto a = parseAtom();
            if (!a) {
                recover();
                return std::nullopt;
            }
            r.headKind = Rule::HeadKind::Plain;
            r.head = std::move(*a);
            haveHead = true;
        }
        if (cur().kind == Tok::Arrow) {
            next();
            if (!haveHead) r.headKind = Rule::HeadKind::Constraint;
            while (true) {
                auto e = parseBodyElement();
                if (!e) {
                    recover();
                    return std::nullopt;
                }
                r.body.push_back(std::move(*e));
                if (cur().kind == Tok::Comma) {
                    next();
                    continue;
                }
                break;
            }
        } else if (!haveHead) {
            fail("expected a rule");
            recover();
            return std::nullopt;
        }
        if (!expect(Tok::Dot, "expected '.' terminating rule")) {
            recover();
            return std::nullopt;
        }
        return r;
    }

    std::vector<Token> toks_;
    std::string unit_;
    std::vector<Diagnostic>& diags_;
    size_t idx_ = 0;
};

} // namespace

ParseResult parseCollection(const std::vector<SourceUnit>& sources) {
    ParseResult res;
    Collection c;
    for (const auto& unit : sources) {
        Lexer lex(unit.text, unit.name, res.diagnostics);
        auto toks = lex.run();
        Parser p(std::move(toks), unit.name, res.diagnostics);
        p.run(c.programs);
    }
    if (hasErrors(res.diagnostics)) return res;
    auto vdiags = validateCollection(c);
    res.diagnostics.insert(res.diagnostics.end(), vdiags.begin(), vdiags.end());
    if (hasErrors(res.diagnostics)) return res;
    res.collection = std::move(c);
    return res;
}

ParseResult parseCollectionText(const std::string& text, const std::string& name) {
    return parseCollection({SourceUnit{name, text}});
}

std::optional<Atom> parseAtomText(const std::string& text) {
    std::vector<Diagnostic> diags;
    Lexer lex(text, "<atom>", diags);
    auto toks = lex.run();
    if (!diags.empty()) return std::nullopt;
    std::string wrapped = "#program q. " + text + ".";
    auto parsed = parseCollectionText(wrapped, "<atom>");
    if (!parsed.ok()) return std::nullopt;
    const auto& prog = parsed.collection->programs[0];
    if (prog.rules.size() != 1 || prog.rules[0].headKind != Rule::HeadKind::Plain ||
        !prog.rules[0].body.empty())
        return std::nullopt;
    return prog.rules[0].head;
}

namespace {

void printLiteral(const Literal& l, std::string& out) {
    if (l.negated) out += "not ";
    out += l.atom.toString();
}

void printSc(const SocialCondition& s, std::string& out, std::vector<Bounds>& resolvedOut) {
    out += '[';
    if (s.cond.isMember()) {
        out += s.cond.member().programId;
    } else {
        const auto& c = s.cond.cardinal();
        if (c.lower) out += c.lower->toString();
        out += ", ";
        if (c.upper) out += c.upper->toString();
        if (c.resolved) resolvedOut.push_back(*c.resolved);
    }
    out += "]{";
    bool first = true;
    for (const auto& l : s.content) {
        if (!first) out += ", ";
        first = false;
        printLiteral(l, out);
    }
    for (const auto& child : s.skel) {
        out += ", ";
        printSc(child, out, resolvedOut);
    }
    out += '}';
}

} // namespace

std::string printCollection(const Collection& c) {
    std::string out;
    for (const auto& p : c.programs) {
        out += "#program " + p.id + ".\n";
        for (const auto& r : p.rules) {
            std::string line;
            std::vector<Bounds> resolved;
            if (r.headKind == Rule::HeadKind::Okay) {
                line += "okay(" + r.head.toString() + ")";
            } else if (r.headKind == Rule::HeadKind::Plain) {
                line += r.head.toString();
            }
            if (!r.body.empty()) {
                if (!line.empty()) line += ' ';
                line += ":- ";
                bool first = true;
                for (const auto& e : r.body) {
                    if (!first) line += ", ";
                    first = false;
                    if (e.isLiteral()) {
                        printLiteral(e.literal(), line);
                    } else {
                        if (e.sc().negated) line += "not ";
                        printSc(e.sc().sc, line, resolved);
                    }
                }
            }
            line += '.';
            if (!resolved.empty()) {
                line += " % bounds";
                for (const auto& b : resolved)
                    line += " [" + std::to_string(b.lower) + "," + std::to_string(b.upper) + "]";
            }
            out += line + "\n";
        }
        out += "\n";
    }
    return out;
}

} // namespace solp
