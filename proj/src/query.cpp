#include "eo/query.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "eo/errors.hpp"
#include "eo/manchester.hpp"
#include "eo/vocab.hpp"

namespace eo {

namespace {

enum class TokKind {
    Word,      // select, where, prefix, a
    Variable,  // ?name
    IriRef,
    PName,
    String,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Pipe,
    Dot,
    End,
};

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    std::string prefix;
    std::string local;
    bool quoted_local = false;
    std::string language;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : m_text(text) {}

    Token next() {
        skip_space_and_comments();
        Token tok;
        tok.line = m_line;
        tok.column = m_column;
        if (eof()) {
            tok.kind = TokKind::End;
            return tok;
        }
        char c = peek();
        switch (c) {
            case '{': advance(); tok.kind = TokKind::LBrace; return tok;
            case '}': advance(); tok.kind = TokKind::RBrace; return tok;
            case '(': advance(); tok.kind = TokKind::LParen; return tok;
            case ')': advance(); tok.kind = TokKind::RParen; return tok;
            case '|': advance(); tok.kind = TokKind::Pipe; return tok;
            case '.': advance(); tok.kind = TokKind::Dot; return tok;
            default: break;
        }
        if (c == '?') {
            advance();
            tok.kind = TokKind::Variable;
            tok.text = lex_word();
            if (tok.text.empty())
                throw SyntaxError(tok.line, tok.column, "variable name");
            return tok;
        }
        if (c == '<') {
            tok.kind = TokKind::IriRef;
            tok.text = lex_iri_ref();
            return tok;
        }
        if (c == '"') {
            tok.kind = TokKind::String;
            tok.text = lex_string('"');
            return tok;
        }
        if (c == '`' && m_pos + 1 < m_text.size() && m_text[m_pos + 1] == '`') {
            tok.kind = TokKind::String;
            tok.text = lex_tex_string();
            return tok;
        }
        if (c == ':' || std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            std::string word;
            if (c != ':')
                word = lex_word();
            if (!eof() && peek() == ':') {
                advance();
                tok.kind = TokKind::PName;
                tok.prefix = word;
                if (!eof() && (peek() == '`' || peek() == '\'')) {
                    tok.local = lex_quoted_label();
                    tok.quoted_local = true;
                } else if (!eof() && is_name_char(peek())) {
                    tok.local = lex_word();
                }
                return tok;
            }
            tok.kind = TokKind::Word;
            tok.text = word;
            return tok;
        }
        throw SyntaxError(m_line, m_column, "query token");
    }

private:
    static bool is_name_char(char c) {
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

    void skip_space_and_comments() {
        while (!eof()) {
            if (std::isspace(static_cast<unsigned char>(peek())))
                advance();
            else if (peek() == '#')
                while (!eof() && peek() != '\n')
                    advance();
            else
                break;
        }
    }

    std::string lex_word() {
        std::string out;
        while (!eof() && is_name_char(peek())) {
            out.push_back(peek());
            advance();
        }
        return out;
    }

    std::string lex_iri_ref() {
        advance();
        std::string out;
        while (!eof() && peek() != '>') {
            out.push_back(peek());
            advance();
        }
        if (eof())
            throw SyntaxError(m_line, m_column, "'>'");
        advance();
        return out;
    }

    std::string lex_string(char quote) {
        advance();
        std::string out;
        while (!eof() && peek() != quote) {
            if (peek() == '\\') {
                advance();
                if (eof())
                    throw SyntaxError(m_line, m_column, "escape sequence");
            }
            out.push_back(peek());
            advance();
        }
        if (eof())
            throw SyntaxError(m_line, m_column, "closing quote");
        advance();
        return out;
    }

    std::string lex_tex_string() {
        advance();
        advance();
        std::string out;
        while (!eof()) {
            if (peek() == '\'' && m_pos + 1 < m_text.size() && m_text[m_pos + 1] == '\'') {
                advance();
                advance();
                return out;
            }
            out.push_back(peek());
            advance();
        }
        throw SyntaxError(m_line, m_column, "closing \"''\"");
    }

    std::string lex_quoted_label() {
        advance();
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

    std::string_view m_text;
    std::size_t m_pos = 0;
    std::size_t m_line = 1;
    std::size_t m_column = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : m_lexer(text) {
        m_prefixes = vocab::default_prefixes();
        bump();
    }

    Query parse() {
        while (m_current.kind == TokKind::Word &&
               (m_current.text == "prefix" || m_current.text == "PREFIX")) {
            parse_prefix_declaration();
        }
        if (!(m_current.kind == TokKind::Word &&
              (m_current.text == "select" || m_current.text == "SELECT")))
            fail("select clause");
        bump();
        Query query;
        while (m_current.kind == TokKind::Variable) {
            query.select.push_back(m_current.text);
            bump();
        }
        if (query.select.empty())
            fail("at least one ?variable");
        if (!(m_current.kind == TokKind::Word &&
              (m_current.text == "where" || m_current.text == "WHERE")))
            fail("where clause");
        bump();
        if (m_current.kind != TokKind::LBrace)
            fail("'{'");
        bump();
        while (m_current.kind != TokKind::RBrace)
            query.patterns.push_back(parse_pattern());
        bump();
        if (m_current.kind != TokKind::End)
            fail("end of query");

        for (const std::string& var : query.select) {
            bool used = false;
            for (const TriplePattern& p : query.patterns) {
                used = used || (p.subject.variable && *p.subject.variable == var) ||
                       (p.predicate_variable && *p.predicate_variable == var) ||
                       (p.object.variable && *p.object.variable == var);
            }
            if (!used)
                throw SyntaxError(1, 1, "selected variable ?" + var + " used in a pattern");
        }
        query.prefixes = m_prefixes;
        return query;
    }

private:
    void bump() { m_current = m_lexer.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(m_current.line, m_current.column, expected);
    }

    void parse_prefix_declaration() {
        bump();
        if (m_current.kind != TokKind::PName || !m_current.local.empty())
            fail("prefix label ending in ':'");
        std::string label = m_current.prefix;
        bump();
        if (m_current.kind != TokKind::IriRef)
            fail("namespace IRI in angle brackets");
        m_prefixes.bind(label, Iri{m_current.text});
        bump();
        if (m_current.kind == TokKind::Dot)
            bump();
    }

    Iri resolve_pname(const Token& tok) {
        if (!tok.quoted_local) {
            auto alias = vocab::curie_aliases().find(tok.prefix + ":" + tok.local);
            if (alias != vocab::curie_aliases().end())
                return alias->second;
        }
        const Iri& ns = m_prefixes.resolve(tok.prefix);
        if (tok.quoted_local)
            return vocab::resolve_local_name(ns, tok.local);
        return Iri{ns.value + tok.local};
    }

    PatternSlot parse_term_slot(bool literal_allowed) {
        switch (m_current.kind) {
            case TokKind::Variable: {
                PatternSlot slot = PatternSlot::var(m_current.text);
                bump();
                return slot;
            }
            case TokKind::PName: {
                PatternSlot slot = PatternSlot::ground(resolve_pname(m_current));
                bump();
                return slot;
            }
            case TokKind::IriRef: {
                PatternSlot slot = PatternSlot::ground(Iri{m_current.text});
                bump();
                return slot;
            }
            case TokKind::String: {
                if (!literal_allowed)
                    fail("IRI or variable");
                PatternSlot slot = PatternSlot::ground(Literal{m_current.text, {}});
                bump();
                return slot;
            }
            default:
                fail(literal_allowed ? "term or variable" : "IRI or variable");
        }
    }

    TriplePattern parse_pattern() {
        TriplePattern pattern;
        pattern.subject = parse_term_slot(false);

        if (m_current.kind == TokKind::Variable) {
            pattern.predicate_variable = m_current.text;
            bump();
        } else if (m_current.kind == TokKind::LParen) {
            bump();
            while (true) {
                if (m_current.kind == TokKind::Word && m_current.text == "a") {
                    pattern.predicate_alternatives.push_back(vocab::rdf_type());
                    bump();
                } else if (m_current.kind == TokKind::PName) {
                    pattern.predicate_alternatives.push_back(resolve_pname(m_current));
                    bump();
                } else if (m_current.kind == TokKind::IriRef) {
                    pattern.predicate_alternatives.push_back(Iri{m_current.text});
                    bump();
                } else {
                    fail("predicate IRI");
                }
                if (m_current.kind == TokKind::Pipe) {
                    bump();
                    continue;
                }
                break;
            }
            if (m_current.kind != TokKind::RParen)
                fail("')'");
            bump();
        } else if (m_current.kind == TokKind::Word && m_current.text == "a") {
            pattern.predicate_alternatives.push_back(vocab::rdf_type());
            bump();
        } else if (m_current.kind == TokKind::PName) {
            pattern.predicate_alternatives.push_back(resolve_pname(m_current));
            bump();
        } else if (m_current.kind == TokKind::IriRef) {
            pattern.predicate_alternatives.push_back(Iri{m_current.text});
            bump();
        } else {
            fail("predicate");
        }

        pattern.object = parse_term_slot(true);
        if (m_current.kind != TokKind::Dot)
            fail("'.'");
        bump();
        return pattern;
    }

    Lexer m_lexer;
    Token m_current;
    PrefixMap m_prefixes;
};

using Binding = std::map<std::string, Term>;

std::optional<Term> slot_value(const PatternSlot& slot, const Binding& binding) {
    if (slot.term)
        return slot.term;
    auto it = binding.find(*slot.variable);
    if (it != binding.end())
        return it->second;
    return std::nullopt;
}

bool bind_slot(const PatternSlot& slot, const Term& value, Binding& binding) {
    if (slot.term)
        return *slot.term == value;
    auto [it, inserted] = binding.try_emplace(*slot.variable, value);
    return inserted || it->second == value;
}

void match_pattern(const Graph& graph, const TriplePattern& pattern, const Binding& binding,
                   const std::vector<TriplePattern>& patterns, std::size_t next,
                   std::set<std::vector<Term>>& rows, const std::vector<std::string>& select);

void continue_match(const Graph& graph, const std::vector<TriplePattern>& patterns,
                    std::size_t index, const Binding& binding,
                    std::set<std::vector<Term>>& rows,
                    const std::vector<std::string>& select) {
    if (index == patterns.size()) {
        std::vector<Term> row;
        row.reserve(select.size());
        for (const std::string& var : select)
            row.push_back(binding.at(var));
        rows.insert(std::move(row));
        return;
    }
    match_pattern(graph, patterns[index], binding, patterns, index + 1, rows, select);
}

void match_pattern(const Graph& graph, const TriplePattern& pattern, const Binding& binding,
                   const std::vector<TriplePattern>& patterns, std::size_t next,
                   std::set<std::vector<Term>>& rows, const std::vector<std::string>& select) {
    std::optional<Term> subject = slot_value(pattern.subject, binding);
    std::optional<Term> object = slot_value(pattern.object, binding);

    std::vector<std::optional<Iri>> predicates;
    if (pattern.predicate_variable) {
        auto it = binding.find(*pattern.predicate_variable);
        if (it != binding.end()) {
            if (!is_iri(it->second))
                return;
            predicates.push_back(as_iri(it->second));
        } else {
            predicates.push_back(std::nullopt);  // wildcard
        }
    } else {
        for (const Iri& p : pattern.predicate_alternatives)
            predicates.emplace_back(p);
    }

    for (const auto& predicate : predicates) {
        for (const Triple& t : graph.match(subject, predicate, object)) {
            Binding extended = binding;
            if (!bind_slot(pattern.subject, t.subject, extended))
                continue;
            if (pattern.predicate_variable) {
                auto [it, inserted] =
                    extended.try_emplace(*pattern.predicate_variable, Term{t.predicate});
                if (!inserted && !(it->second == Term{t.predicate}))
                    continue;
            }
            if (!bind_slot(pattern.object, t.object, extended))
                continue;
            continue_match(graph, patterns, next, extended, rows, select);
        }
    }
}

std::size_t bound_positions(const TriplePattern& p) {
    std::size_t n = 0;
    if (p.subject.term)
        ++n;
    if (!p.predicate_variable)
        ++n;
    if (p.object.term)
        ++n;
    return n;
}

}  // namespace

Query parse_query(std::string_view text) {
    return Parser(text).parse();
}

SchemaView schema_view(const Ontology& ont) {
    SchemaView view;
    GraphBuilder builder;
    std::size_t next_expr = 0;

    auto expression_node = [&](const ExprPtr& expr) -> Term {
        std::string id = "schema:e" + std::to_string(next_expr++);
        view.expressions[id] = expr;
        return BlankNode{id};
    };

    for (const Axiom& axiom : ont.axioms()) {
        switch (axiom.kind) {
            case Axiom::Kind::SubClassOf:
                if (axiom.super_class)
                    builder.insert(Triple(axiom.subject, vocab::rdfs_sub_class_of(),
                                          *axiom.super_class));
                else
                    builder.insert(Triple(axiom.subject, vocab::rdfs_sub_class_of(),
                                          expression_node(axiom.expression)));
                break;
            case Axiom::Kind::EquivalentTo:
                builder.insert(Triple(axiom.subject, vocab::owl_equivalent_class(),
                                      expression_node(axiom.expression)));
                break;
            default:
                break;
        }
    }
    for (const auto& [iri, label] : ont.labels())
        builder.insert(Triple(iri, vocab::rdfs_label(), Literal{label, {}}));
    for (const auto& [individual, type] : ont.individuals())
        builder.insert(Triple(individual, vocab::rdf_type(), type));

    view.graph = builder.seal();
    return view;
}

std::string render_term(const Term& term, const PrefixMap& prefixes, const SchemaView* view) {
    if (is_iri(term)) {
        if (auto curie = prefixes.compress(as_iri(term)))
            return *curie;
        return "<" + as_iri(term).value + ">";
    }
    if (is_literal(term)) {
        const Literal& lit = as_literal(term);
        std::string out = "\"" + lit.text + "\"";
        if (!lit.language.empty())
            out += "@" + lit.language;
        return out;
    }
    const std::string& id = as_blank(term).id;
    if (view != nullptr) {
        auto it = view->expressions.find(id);
        if (it != view->expressions.end())
            return serialize_manchester(*it->second, prefixes);
    }
    return "_:" + id;
}

BindingSet execute(const Ontology& ont, const Graph& data, const Query& q) {
    SchemaView view = schema_view(ont);

    GraphBuilder combined;
    for (const Triple& t : view.graph.triples())
        combined.insert(t);
    for (const Triple& t : data.triples())
        combined.insert(t);
    Graph graph = combined.seal();

    // most selective pattern first; stable for reproducibility
    std::vector<TriplePattern> patterns = q.patterns;
    std::stable_sort(patterns.begin(), patterns.end(),
                     [](const TriplePattern& a, const TriplePattern& b) {
                         return bound_positions(a) > bound_positions(b);
                     });

    std::set<std::vector<Term>> rows;
    continue_match(graph, patterns, 0, Binding{}, rows, q.select);

    BindingSet result;
    result.variables = q.select;
    std::vector<std::pair<std::vector<std::string>, std::vector<Term>>> keyed;
    for (const std::vector<Term>& row : rows) {
        std::vector<std::string> rendered;
        rendered.reserve(row.size());
        for (const Term& t : row)
            rendered.push_back(render_term(t, q.prefixes, &view));
        keyed.emplace_back(std::move(rendered), row);
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [rendered, row] : keyed) {
        result.rendered.push_back(std::move(rendered));
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace eo
