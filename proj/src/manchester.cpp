#include "eo/manchester.hpp"

#include <cctype>
#include <sstream>

#include "eo/errors.hpp"
#include "eo/vocab.hpp"

namespace eo {

namespace {

enum class TokKind { LParen, RParen, And, Or, Some, Min, Integer, Name, End };

struct Token {
    TokKind kind = TokKind::End;
    Iri iri;           // Name
    unsigned integer = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    Lexer(std::string_view text, const PrefixMap& prefixes)
        : m_text(text), m_prefixes(prefixes) {}

    Token next() {
        skip_space();
        Token tok;
        tok.line = m_line;
        tok.column = m_column;
        if (eof()) {
            tok.kind = TokKind::End;
            return tok;
        }
        char c = peek();
        if (c == '(') {
            advance();
            tok.kind = TokKind::LParen;
            return tok;
        }
        if (c == ')') {
            advance();
            tok.kind = TokKind::RParen;
            return tok;
        }
        if (c == '<') {
            tok.kind = TokKind::Name;
            tok.iri = lex_iri_ref();
            return tok;
        }
        if (c == '`' || c == '\'') {
            tok.kind = TokKind::Name;
            std::string label = lex_quoted_label();
            auto resolved = vocab::resolve_bare_name(label);
            if (!resolved)
                throw UnknownNameError(label);
            tok.iri = *resolved;
            return tok;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned value = 0;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                value = value * 10 + static_cast<unsigned>(peek() - '0');
                advance();
            }
            tok.kind = TokKind::Integer;
            tok.integer = value;
            return tok;
        }
        if (is_word_char(c)) {
            std::string word = lex_word();
            if (!eof() && peek() == ':') {
                advance();
                tok.kind = TokKind::Name;
                tok.iri = lex_prefixed_local(word);
                return tok;
            }
            if (word == "and") { tok.kind = TokKind::And; return tok; }
            if (word == "or") { tok.kind = TokKind::Or; return tok; }
            if (word == "some") { tok.kind = TokKind::Some; return tok; }
            if (word == "min") { tok.kind = TokKind::Min; return tok; }
            auto resolved = vocab::resolve_bare_name(word);
            if (!resolved)
                throw UnknownNameError(word);
            tok.kind = TokKind::Name;
            tok.iri = *resolved;
            return tok;
        }
        throw SyntaxError(m_line, m_column, "expression token");
    }

private:
    static bool is_word_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
    }

    bool eof() const { return m_pos >= m_text.size(); }
    char peek() const { return m_text[m_pos]; }

    void advance() {
        if (m_text[m_pos] == '\n') {
            ++m_line;
            m_column = 1;
        } else {
            ++m_column;
        }
        ++m_pos;
    }

    void skip_space() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    std::string lex_word() {
        std::string out;
        while (!eof() && is_word_char(peek())) {
            out.push_back(peek());
            advance();
        }
        return out;
    }

    Iri lex_iri_ref() {
        advance();  // '<'
        std::string out;
        while (!eof() && peek() != '>') {
            out.push_back(peek());
            advance();
        }
        if (eof())
            throw SyntaxError(m_line, m_column, "'>'");
        advance();
        return Iri{out};
    }

    // `label' or 'label'; the closing delimiter is always a single quote.
    std::string lex_quoted_label() {
        advance();  // opening ` or '
        std::string out;
        while (!eof() && peek() != '\'') {
            out.push_back(peek());
            advance();
        }
        if (eof())
            throw SyntaxError(m_line, m_column, "closing \"'\"");
        advance();
        return out;
    }

    Iri lex_prefixed_local(const std::string& prefix) {
        const Iri& ns = m_prefixes.resolve(prefix);
        if (!eof() && (peek() == '`' || peek() == '\''))
            return vocab::resolve_local_name(ns, lex_quoted_label());
        if (eof() || !is_word_char(peek()))
            throw SyntaxError(m_line, m_column, "local name after ':'");
        return Iri{ns.value + lex_word()};
    }

    std::string_view m_text;
    const PrefixMap& m_prefixes;
    std::size_t m_pos = 0;
    std::size_t m_line = 1;
    std::size_t m_column = 1;
};

class Parser {
public:
    Parser(std::string_view text, const PrefixMap& prefixes) : m_lexer(text, prefixes) {
        m_current = m_lexer.next();
    }

    ExprPtr parse() {
        ExprPtr expr = parse_or();
        expect(TokKind::End, "end of expression");
        return expr;
    }

private:
    void bump() { m_current = m_lexer.next(); }

    void expect(TokKind kind, const char* what) {
        if (m_current.kind != kind)
            throw SyntaxError(m_current.line, m_current.column, what);
    }

    ExprPtr parse_or() {
        std::vector<ExprPtr> operands{parse_and()};
        while (m_current.kind == TokKind::Or) {
            bump();
            operands.push_back(parse_and());
        }
        if (operands.size() == 1)
            return operands.front();
        return ClassExpression::union_of(std::move(operands));
    }

    ExprPtr parse_and() {
        std::vector<ExprPtr> operands{parse_unary()};
        while (m_current.kind == TokKind::And) {
            bump();
            operands.push_back(parse_unary());
        }
        if (operands.size() == 1)
            return operands.front();
        return ClassExpression::intersection(std::move(operands));
    }

    ExprPtr parse_unary() {
        if (m_current.kind == TokKind::Name) {
            Iri name = m_current.iri;
            bump();
            if (m_current.kind == TokKind::Some) {
                bump();
                return ClassExpression::some(std::move(name), parse_primary());
            }
            if (m_current.kind == TokKind::Min) {
                bump();
                expect(TokKind::Integer, "cardinality integer");
                unsigned n = m_current.integer;
                Token at = m_current;
                if (n < 1)
                    throw SyntaxError(at.line, at.column, "cardinality >= 1");
                bump();
                return ClassExpression::at_least(n, std::move(name), parse_primary());
            }
            return ClassExpression::named(std::move(name));
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        if (m_current.kind == TokKind::LParen) {
            bump();
            ExprPtr inner = parse_or();
            expect(TokKind::RParen, "')'");
            bump();
            return inner;
        }
        expect(TokKind::Name, "class name or '('");
        ExprPtr named = ClassExpression::named(m_current.iri);
        bump();
        return named;
    }

    Lexer m_lexer;
    Token m_current;
};

std::string render_name(const Iri& iri, const PrefixMap& prefixes) {
    if (auto curie = prefixes.compress(iri))
        return *curie;
    return "<" + iri.value + ">";
}

std::string expr_text(const ClassExpression& e, const PrefixMap& prefixes);

std::string primary_text(const ClassExpression& e, const PrefixMap& prefixes) {
    if (e.kind() == ClassExpression::Kind::Named)
        return render_name(e.iri(), prefixes);
    return "(" + expr_text(e, prefixes) + ")";
}

// Parenthesize a boolean operand only where precedence or same-operator
// nesting would otherwise reshape the tree on re-parse.
std::string operand_text(const ClassExpression& e, ClassExpression::Kind context,
                         const PrefixMap& prefixes) {
    bool parens = false;
    if (context == ClassExpression::Kind::And)
        parens = e.kind() == ClassExpression::Kind::And || e.kind() == ClassExpression::Kind::Or;
    else
        parens = e.kind() == ClassExpression::Kind::Or;
    if (parens)
        return "(" + expr_text(e, prefixes) + ")";
    return expr_text(e, prefixes);
}

std::string expr_text(const ClassExpression& e, const PrefixMap& prefixes) {
    switch (e.kind()) {
        case ClassExpression::Kind::Named:
            return render_name(e.iri(), prefixes);
        case ClassExpression::Kind::Some:
            return render_name(e.property(), prefixes) + " some " +
                   primary_text(*e.filler(), prefixes);
        case ClassExpression::Kind::AtLeast:
            return render_name(e.property(), prefixes) + " min " +
                   std::to_string(e.cardinality()) + " " + primary_text(*e.filler(), prefixes);
        case ClassExpression::Kind::And:
        case ClassExpression::Kind::Or: {
            const char* sep = e.kind() == ClassExpression::Kind::And ? " and " : " or ";
            std::string out;
            for (const auto& op : e.operands()) {
                if (!out.empty())
                    out += sep;
                out += operand_text(*op, e.kind(), prefixes);
            }
            return out;
        }
    }
    return {};
}

}  // namespace

ExprPtr parse_manchester(std::string_view text, const PrefixMap& prefixes) {
    return Parser(text, prefixes).parse();
}

std::string serialize_manchester(const ClassExpression& expr, const PrefixMap& prefixes) {
    return expr_text(expr, prefixes);
}

std::vector<std::string> normalize_manchester_tokens(std::string_view text,
                                                     const PrefixMap& prefixes) {
    Lexer lexer(text, prefixes);
    std::vector<std::string> out;
    for (Token tok = lexer.next(); tok.kind != TokKind::End; tok = lexer.next()) {
        switch (tok.kind) {
            case TokKind::LParen:
            case TokKind::RParen:
                break;
            case TokKind::And: out.emplace_back("and"); break;
            case TokKind::Or: out.emplace_back("or"); break;
            case TokKind::Some: out.emplace_back("some"); break;
            case TokKind::Min: out.emplace_back("min"); break;
            case TokKind::Integer: out.push_back(std::to_string(tok.integer)); break;
            case TokKind::Name: out.push_back(render_name(tok.iri, prefixes)); break;
            case TokKind::End: break;
        }
    }
    return out;
}

}  // namespace eo
