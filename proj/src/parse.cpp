#include "firstint/parse.hpp"

#include <cctype>
#include <utility>

namespace firstint {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

struct Parser {
    Lexer lex;

    [[noreturn]] void fail(ParseErrorKind kind, Span span, const std::string& what) {
        throw ParseError(kind, span, what);
    }
    [[noreturn]] void syntax(const std::string& what) {
        std::size_t at = std::min(lex.pos, lex.text.size());
        fail(ParseErrorKind::Syntax, {at, std::min(at + 1, lex.text.size())}, what);
    }

    std::unique_ptr<ExprNode> node(ExprNode::Kind kind, Span span) {
        auto n = std::make_unique<ExprNode>();
        n->kind = kind;
        n->span = span;
        return n;
    }

    // nat := digit+ ; returns the digits and their span.
    std::pair<mpz_class, Span> parse_nat() {
        lex.skip_ws();
        std::size_t begin = lex.pos;
        std::string digits;
        while (lex.pos < lex.text.size() && std::isdigit(static_cast<unsigned char>(lex.text[lex.pos])))
            digits.push_back(lex.text[lex.pos++]);
        if (digits.empty()) syntax("expected a number");
        return {mpz_class(digits), Span{begin, lex.pos}};
    }

    std::unique_ptr<ExprNode> parse_expr() {
        auto left = parse_term();
        while (true) {
            lex.skip_ws();
            char c = lex.peek();
            if (c != '+' && c != '-') break;
            lex.consume(c);
            auto right = parse_term();
            auto n = node(c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub,
                          {left->span.begin, right->span.end});
            n->children.push_back(std::move(left));
            n->children.push_back(std::move(right));
            left = std::move(n);
        }
        return left;
    }

    std::unique_ptr<ExprNode> parse_term() {
        auto left = parse_unary();
        while (lex.peek() == '*') {
            lex.consume('*');
            auto right = parse_unary();
            auto n = node(ExprNode::Kind::Mul, {left->span.begin, right->span.end});
            n->children.push_back(std::move(left));
            n->children.push_back(std::move(right));
            left = std::move(n);
        }
        return left;
    }

    std::unique_ptr<ExprNode> parse_unary() {
        lex.skip_ws();
        if (lex.peek() == '-') {
            std::size_t begin = lex.pos;
            lex.consume('-');
            auto inner = parse_unary();
            auto n = node(ExprNode::Kind::Neg, {begin, inner->span.end});
            n->children.push_back(std::move(inner));
            return n;
        }
        auto base = parse_atom();
        if (lex.peek() == '^') {
            lex.consume('^');
            auto [exponent, span] = parse_exponent();
            auto n = node(ExprNode::Kind::Pow, {base->span.begin, span.end});
            n->exponent = exponent;
            n->children.push_back(std::move(base));
            return n;
        }
        return base;
    }

    // The grammar only admits a nat here; a negative exponent (bare or
    // parenthesized) gets its dedicated error rather than a syntax error.
    std::pair<long, Span> parse_exponent() {
        lex.skip_ws();
        std::size_t begin = lex.pos;
        bool parens = lex.consume('(');
        bool negative = lex.consume('-');
        auto [value, span] = parse_nat();
        if (parens && !lex.consume(')')) syntax("expected ')'");
        Span full{begin, parens || negative ? lex.pos : span.end};
        if (negative && value != 0)
            fail(ParseErrorKind::NegativeExponent, full, "exponents must be nonnegative");
        if (value > kDegreeLimit)
            fail(ParseErrorKind::DegreeLimitExceeded, full,
                 "exponent exceeds the degree limit of 10^6");
        return {value.get_si(), full};
    }

    std::unique_ptr<ExprNode> parse_atom() {
        lex.skip_ws();
        std::size_t begin = lex.pos;
        if (lex.pos >= lex.text.size()) syntax("unexpected end of input");
        char c = lex.text[lex.pos];

        if (c == '(') {
            lex.consume('(');
            auto inner = parse_expr();
            if (!lex.consume(')')) syntax("expected ')'");
            inner->span = {begin, lex.pos};
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto [num, num_span] = parse_nat();
            mpz_class den = 1;
            Span full = num_span;
            if (lex.peek() == '/') {
                lex.consume('/');
                auto [d, den_span] = parse_nat();
                if (d == 0)
                    fail(ParseErrorKind::Syntax, den_span, "zero denominator");
                den = d;
                full.end = den_span.end;
            }
            auto n = node(ExprNode::Kind::Literal, full);
            n->literal = make_rational(num, den);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            std::size_t word_begin = lex.pos;
            while (lex.pos < lex.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(lex.text[lex.pos]))))
                word.push_back(lex.text[lex.pos++]);
            Span span{word_begin, lex.pos};
            if (word == "z1") return node(ExprNode::Kind::Z1, span);
            if (word == "z2") return node(ExprNode::Kind::Z2, span);
            if (word == "i") return node(ExprNode::Kind::ImaginaryUnit, span);
            fail(ParseErrorKind::UnknownVariable, span, "unknown variable '" + word + "'");
        }
        syntax(std::string("unexpected character '") + c + "'");
    }
};

void check_degree(const Polynomial& p, Span span) {
    for (const auto& [m, c] : p.terms())
        if (m.e1 > kDegreeLimit || m.e2 > kDegreeLimit || m.e1 + m.e2 > kDegreeLimit)
            throw ParseError(ParseErrorKind::DegreeLimitExceeded, span,
                             "expansion exceeds the degree limit of 10^6");
}

Polynomial expand_node(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::Add:
            return expand_node(*n.children[0]) + expand_node(*n.children[1]);
        case ExprNode::Kind::Sub:
            return expand_node(*n.children[0]) - expand_node(*n.children[1]);
        case ExprNode::Kind::Mul: {
            Polynomial p = expand_node(*n.children[0]) * expand_node(*n.children[1]);
            check_degree(p, n.span);
            return p;
        }
        case ExprNode::Kind::Pow: {
            Polynomial p = expand_node(*n.children[0]).pow(static_cast<unsigned>(n.exponent));
            check_degree(p, n.span);
            return p;
        }
        case ExprNode::Kind::Neg:
            return -expand_node(*n.children[0]);
        case ExprNode::Kind::Z1:
            return Polynomial::z1();
        case ExprNode::Kind::Z2:
            return Polynomial::z2();
        case ExprNode::Kind::ImaginaryUnit:
            return Polynomial::constant(GaussianRational::imaginary_unit());
        case ExprNode::Kind::Literal:
            return Polynomial::constant(GaussianRational(n.literal));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ParsedExpr parse_poly(std::string_view text) {
    Parser parser{Lexer{text}};
    ParsedExpr expr;
    expr.source = std::string(text);
    expr.root = parser.parse_expr();
    if (!parser.lex.eof()) parser.syntax("unexpected trailing input");
    return expr;
}

Polynomial expand(const ParsedExpr& expr) { return expand_node(*expr.root); }

Polynomial parse_polynomial(std::string_view text) { return expand(parse_poly(text)); }

// ---------------------------------------------------------------------------
// Canonical printing.
// ---------------------------------------------------------------------------

namespace {

// Magnitude (sign already extracted) of a coefficient, "" for an omittable 1
// in front of a monomial. Mixed re/im coefficients are parenthesized so they
// survive a leading '-' and adjacent '*'.
std::string coeff_text(const GaussianRational& c, bool has_monomial) {
    if (sgn(c.im) == 0) {
        if (c.re == 1 && has_monomial) return "";
        return to_string(c.re);
    }
    if (sgn(c.re) == 0) {
        if (c.im == 1) return "i";
        if (sgn(c.im) > 0) return to_string(c.im) + "*i";
        // Negative imaginary magnitude only appears inside parentheses below.
        return "(0 - " + to_string(Rational(-c.im)) + "*i)";
    }
    std::string im_part = c.im == 1 ? "i" : c.im == -1 ? "i" : to_string(Rational(abs(c.im))) + "*i";
    return "(" + to_string(c.re) + (sgn(c.im) > 0 ? " + " : " - ") + im_part + ")";
}

std::string monomial_text(const char* v1, int e1, const char* v2, int e2) {
    std::string out;
    auto append = [&out](const char* v, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += v;
        if (e > 1) out += "^" + std::to_string(e);
    };
    append(v1, e1);
    append(v2, e2);
    return out;
}

void append_term(std::string& out, const GaussianRational& coeff, const std::string& mono) {
    bool negative = print_negative(coeff);
    GaussianRational magnitude = negative ? -coeff : coeff;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    std::string c = coeff_text(magnitude, !mono.empty());
    if (c.empty()) {
        out += mono.empty() ? "1" : mono;
    } else {
        out += c;
        if (!mono.empty()) out += "*" + mono;
    }
}

}  // namespace

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        append_term(out, it->second, monomial_text("z1", it->first.e1, "z2", it->first.e2));
    return out;
}

std::string to_text(const UnivariatePoly& h, const std::string& var) {
    if (h.is_zero()) return "0";
    std::string out;
    for (int k = h.degree(); k >= 0; --k) {
        if (h.coeff(k).is_zero()) continue;
        append_term(out, h.coeff(k), monomial_text(var.c_str(), k, "", 0));
    }
    return out;
}

std::string to_text(const GaussianRational& c) {
    std::string out;
    append_term(out, c, "");
    return out;
}

}  // namespace firstint
