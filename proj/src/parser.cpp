#include "rnc/parser.hpp"

#include <cctype>
#include <vector>

namespace rnc {

namespace {

struct Token {
    enum Kind { LParen, RParen, LBrace, RBrace, Pipe, Amp, Atom, End } kind;
    std::string_view text;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        std::size_t i = 0;
        const std::size_t n = text_.size();
        while (i < n) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (c == '#') {
                while (i < n && text_[i] != '\n')
                    ++i;
                continue;
            }
            SourceSpan span{i, i + 1};
            switch (c) {
            case '(': out.push_back({Token::LParen, text_.substr(i, 1), span}); ++i; continue;
            case ')': out.push_back({Token::RParen, text_.substr(i, 1), span}); ++i; continue;
            case '{': out.push_back({Token::LBrace, text_.substr(i, 1), span}); ++i; continue;
            case '}': out.push_back({Token::RBrace, text_.substr(i, 1), span}); ++i; continue;
            case '|': out.push_back({Token::Pipe, text_.substr(i, 1), span}); ++i; continue;
            case '&': out.push_back({Token::Amp, text_.substr(i, 1), span}); ++i; continue;
            default: break;
            }
            std::size_t start = i;
            while (i < n && !std::isspace(static_cast<unsigned char>(text_[i])) &&
                   text_[i] != '(' && text_[i] != ')' && text_[i] != '{' &&
                   text_[i] != '}' && text_[i] != '|' && text_[i] != '&' && text_[i] != '#')
                ++i;
            out.push_back({Token::Atom, text_.substr(start, i - start), {start, i}});
        }
        out.push_back({Token::End, {}, {n, n}});
        return out;
    }

private:
    std::string_view text_;
};

bool is_ident(std::string_view s)
{
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula run()
    {
        NodeId root = formula();
        if (peek().kind != Token::End)
            throw ParseError("trailing input after formula", peek().span);
        return builder_.finish(root);
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    NodeId formula()
    {
        Token t = next();
        switch (t.kind) {
        case Token::LParen: {
            if (next().kind != Token::Pipe)
                throw ParseError("expected '|' after '('", t.span);
            std::vector<NodeId> kids;
            while (peek().kind != Token::RParen) {
                if (peek().kind == Token::End)
                    throw ParseError("unclosed disjunction", t.span);
                kids.push_back(formula());
            }
            next();
            return builder_.disj(std::move(kids));
        }
        case Token::LBrace: {
            if (next().kind != Token::Amp)
                throw ParseError("expected '&' after '{'", t.span);
            std::vector<NodeId> kids;
            while (peek().kind != Token::RBrace) {
                if (peek().kind == Token::End)
                    throw ParseError("unclosed conjunction", t.span);
                kids.push_back(formula());
            }
            next();
            return builder_.conj(std::move(kids));
        }
        case Token::Atom:
            return atom(t);
        default:
            throw ParseError("expected formula", t.span);
        }
    }

    TruthValue num(std::string_view text, SourceSpan span)
    {
        auto r = TruthValue::parse(text);
        if (r.status == TruthValue::ParseStatus::Range)
            throw RangeError("truth value outside [0,1]: " + std::string(text), span);
        if (r.status != TruthValue::ParseStatus::Ok)
            throw ParseError("malformed number: " + std::string(text), span);
        return r.value;
    }

    NodeId atom(const Token& t)
    {
        std::string_view s = t.text;
        if (s == "T")
            return builder_.top();
        if (s == "F")
            return builder_.bot();
        auto geq = s.find(">=");
        auto leq = s.find("<=");
        if (geq != std::string_view::npos) {
            std::string_view lhs = s.substr(0, geq);
            std::string_view rhs = s.substr(geq + 2);
            SourceSpan rspan{t.span.start + geq + 2, t.span.end};
            if (is_ident(lhs))
                return builder_.geq(std::string(lhs), num(rhs, rspan));
            return builder_.constant(num(lhs, {t.span.start, t.span.start + geq}),
                                     num(rhs, rspan));
        }
        if (leq != std::string_view::npos) {
            std::string_view lhs = s.substr(0, leq);
            std::string_view rhs = s.substr(leq + 2);
            if (!is_ident(lhs))
                throw ParseError("expected identifier before '<=': " + std::string(s), t.span);
            return builder_.leq(std::string(lhs),
                                num(rhs, {t.span.start + leq + 2, t.span.end}));
        }
        throw ParseError("malformed atom: " + std::string(s), t.span);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    FormulaBuilder builder_;
};

void print_rec(const Formula& f, NodeId id, std::string& out)
{
    const Node& n = f.node(id);
    if (n.is_lit()) {
        out += print_literal(n.lit());
        return;
    }
    if (n.is_const()) {
        const RegConstant& c = n.cst();
        if (c.lhs == TruthValue::one() && c.rhs == TruthValue::zero())
            out += "T";
        else if (c.lhs == TruthValue::zero() && c.rhs == TruthValue::one())
            out += "F";
        else
            out += c.lhs.str() + ">=" + c.rhs.str();
        return;
    }
    out += n.conn().is_conj ? "{&" : "(|";
    for (NodeId k : n.conn().kids) {
        out += ' ';
        print_rec(f, k, out);
    }
    out += n.conn().is_conj ? '}' : ')';
}

} // namespace

Formula parse(std::string_view text)
{
    return Parser(Lexer(text).run()).run();
}

std::string print(const Formula& f)
{
    std::string out;
    print_rec(f, f.root(), out);
    return out;
}

std::string print_literal(const Literal& lit)
{
    return lit.prop + (lit.positive() ? ">=" : "<=") + lit.threshold.str();
}

} // namespace rnc
