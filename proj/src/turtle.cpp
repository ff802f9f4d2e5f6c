#include "eo/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "eo/errors.hpp"
#include "eo/vocab.hpp"

namespace eo {

namespace {

enum class TokKind {
    IriRef,     // <...>
    PName,      // prefix:local, :local, prefix:`quoted label'
    Word,       // bare word: "a", "prefix", "PREFIX"
    AtPrefix,   // @prefix
    String,     // "..." or ``...''
    Dot,
    Semicolon,
    Comma,
    LBracket,
    RBracket,
    End,
};

struct Token {
    TokKind kind = TokKind::End;
    std::string text;        // IriRef value, Word, String text
    std::string prefix;      // PName prefix label
    std::string local;       // PName local part
    bool quoted_local = false;
    std::string language;    // String lang tag
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
            case '.': advance(); tok.kind = TokKind::Dot; return tok;
            case ';': advance(); tok.kind = TokKind::Semicolon; return tok;
            case ',': advance(); tok.kind = TokKind::Comma; return tok;
            case '[': advance(); tok.kind = TokKind::LBracket; return tok;
            case ']': advance(); tok.kind = TokKind::RBracket; return tok;
            default: break;
        }
        if (c == '<') {
            tok.kind = TokKind::IriRef;
            tok.text = lex_iri_ref();
            return tok;
        }
        if (c == '"') {
            tok.kind = TokKind::String;
            tok.text = lex_string();
            tok.language = maybe_lang_tag();
            return tok;
        }
        if (c == '`') {
            // `` opens a TeX-style string; a single backtick opens a
            // quoted local name, which is only valid after a prefix.
            if (m_pos + 1 < m_text.size() && m_text[m_pos + 1] == '`') {
                tok.kind = TokKind::String;
                tok.text = lex_tex_string();
                tok.language = maybe_lang_tag();
                return tok;
            }
            throw SyntaxError(m_line, m_column, "\"``\" string or prefixed name");
        }
        if (c == '@') {
            advance();
            std::string word = lex_word();
            if (word == "prefix") {
                tok.kind = TokKind::AtPrefix;
                return tok;
            }
            throw SyntaxError(tok.line, tok.column, "@prefix");
        }
        if (c == ':' || is_name_start(c)) {
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
        throw SyntaxError(m_line, m_column, "statement");
    }

private:
    static bool is_name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
    }
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
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n')
                    advance();
            } else {
                break;
            }
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
        advance();  // '<'
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

    std::string lex_string() {
        advance();  // '"'
        std::string out;
        while (!eof() && peek() != '"') {
            char c = peek();
            if (c == '\\') {
                advance();
                if (eof())
                    throw SyntaxError(m_line, m_column, "escape sequence");
                switch (peek()) {
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    case 'r': out.push_back('\r'); break;
                    case '"': out.push_back('"'); break;
                    case '\\': out.push_back('\\'); break;
                    default:
                        throw SyntaxError(m_line, m_column, "escape sequence");
                }
                advance();
            } else {
                out.push_back(c);
                advance();
            }
        }
        if (eof())
            throw SyntaxError(m_line, m_column, "closing '\"'");
        advance();
        return out;
    }

    // ``text'' with no escapes; closes on two consecutive apostrophes.
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
        advance();  // ` or '
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

    std::string maybe_lang_tag() {
        if (eof() || peek() != '@')
            return {};
        advance();
        std::string tag = lex_word();
        if (tag.empty())
            throw SyntaxError(m_line, m_column, "language tag");
        return tag;
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
    std::size_t m_line = 1;
    std::size_t m_column = 1;
};

class Parser {
public:
    Parser(std::string_view text, const PrefixMap& seed) : m_lexer(text) {
        m_prefixes = seed;
        bump();
    }

    TurtleDocument parse() {
        while (m_current.kind != TokKind::End) {
            if (m_current.kind == TokKind::AtPrefix ||
                (m_current.kind == TokKind::Word &&
                 (m_current.text == "prefix" || m_current.text == "PREFIX"))) {
                parse_prefix_declaration();
            } else {
                parse_statement();
            }
        }
        return TurtleDocument{m_prefixes, m_builder.seal()};
    }

private:
    void bump() { m_current = m_lexer.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(m_current.line, m_current.column, expected);
    }

    void parse_prefix_declaration() {
        bump();  // @prefix / prefix
        if (m_current.kind != TokKind::PName || !m_current.local.empty())
            fail("prefix label ending in ':'");
        std::string label = m_current.prefix;
        bump();
        if (m_current.kind != TokKind::IriRef)
            fail("namespace IRI in angle brackets");
        m_prefixes.bind(label, Iri{m_current.text});
        bump();
        if (m_current.kind == TokKind::Dot)
            bump();  // @prefix form ends with '.'; bare prefix form may not
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

    Term parse_subject() {
        if (m_current.kind == TokKind::LBracket)
            return parse_blank();
        if (m_current.kind == TokKind::PName) {
            Iri iri = resolve_pname(m_current);
            bump();
            return iri;
        }
        if (m_current.kind == TokKind::IriRef) {
            Iri iri{m_current.text};
            bump();
            return iri;
        }
        fail("subject");
    }

    Iri parse_verb() {
        if (m_current.kind == TokKind::Word && m_current.text == "a") {
            bump();
            return vocab::rdf_type();
        }
        if (m_current.kind == TokKind::PName) {
            Iri iri = resolve_pname(m_current);
            bump();
            return iri;
        }
        if (m_current.kind == TokKind::IriRef) {
            Iri iri{m_current.text};
            bump();
            return iri;
        }
        fail("predicate");
    }

    Term parse_object() {
        switch (m_current.kind) {
            case TokKind::PName: {
                Iri iri = resolve_pname(m_current);
                bump();
                return iri;
            }
            case TokKind::IriRef: {
                Iri iri{m_current.text};
                bump();
                return iri;
            }
            case TokKind::String: {
                Literal lit{m_current.text, m_current.language};
                bump();
                return lit;
            }
            case TokKind::LBracket:
                return parse_blank();
            default:
                fail("object");
        }
    }

    Term parse_blank() {
        bump();  // '['
        BlankNode node{"b" + std::to_string(m_next_blank++)};
        if (m_current.kind != TokKind::RBracket)
            parse_predicate_object_list(node);
        if (m_current.kind != TokKind::RBracket)
            fail("']'");
        bump();
        return node;
    }

    void parse_predicate_object_list(const Term& subject) {
        while (true) {
            Iri predicate = parse_verb();
            while (true) {
                Term object = parse_object();
                m_builder.insert(Triple(subject, predicate, object));
                if (m_current.kind != TokKind::Comma)
                    break;
                bump();
            }
            if (m_current.kind != TokKind::Semicolon)
                return;
            while (m_current.kind == TokKind::Semicolon)
                bump();
            // trailing ';' before '.' or ']'
            if (m_current.kind == TokKind::Dot || m_current.kind == TokKind::RBracket)
                return;
        }
    }

    void parse_statement() {
        bool blank_subject = m_current.kind == TokKind::LBracket;
        Term subject = parse_subject();
        // "[ ... ] ." is a complete statement on its own
        if (!(blank_subject && m_current.kind == TokKind::Dot))
            parse_predicate_object_list(subject);
        if (m_current.kind != TokKind::Dot)
            fail("'.'");
        bump();
    }

    Lexer m_lexer;
    Token m_current;
    PrefixMap m_prefixes;
    GraphBuilder m_builder;
    std::size_t m_next_blank = 0;
};

std::string escape_literal(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

class Serializer {
public:
    explicit Serializer(const TurtleDocument& doc) : m_doc(doc) {}

    std::string run() {
        std::ostringstream out;
        for (const auto& [label, ns] : m_doc.prefixes.entries())
            out << "@prefix " << label << ": <" << ns.value << "> .\n";

        index_blanks();

        std::vector<Term> roots;
        for (const Triple& t : m_doc.graph.triples()) {
            if (is_blank(t.subject) && m_object_refs.count(as_blank(t.subject).id))
                continue;  // inlined at its reference site
            roots.push_back(t.subject);
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

        for (const Term& subject : roots) {
            out << "\n";
            if (is_blank(subject)) {
                out << render_blank_inline(as_blank(subject).id) << " .\n";
            } else {
                out << render_iri(as_iri(subject)) << "\n";
                out << render_predicate_objects(subject, 1) << " .\n";
            }
        }
        return out.str();
    }

private:
    void index_blanks() {
        for (const Triple& t : m_doc.graph.triples()) {
            if (is_blank(t.object)) {
                const std::string& id = as_blank(t.object).id;
                if (m_object_refs.count(id))
                    throw Error("blank node _:" + id +
                                " referenced more than once; not serializable");
                m_object_refs.insert(id);
            }
        }
    }

    std::string render_iri(const Iri& iri) const {
        auto curie = m_doc.prefixes.compress(iri);
        if (curie) {
            auto alias = vocab::curie_aliases().find(*curie);
            if (alias == vocab::curie_aliases().end() || alias->second == iri)
                return *curie;
        }
        return "<" + iri.value + ">";
    }

    std::string render_object(const Term& term) {
        if (is_iri(term))
            return render_iri(as_iri(term));
        if (is_literal(term)) {
            const Literal& lit = as_literal(term);
            std::string out = "\"" + escape_literal(lit.text) + "\"";
            if (!lit.language.empty())
                out += "@" + lit.language;
            return out;
        }
        return render_blank_inline(as_blank(term).id);
    }

    std::string render_blank_inline(const std::string& id) {
        if (!m_open_blanks.insert(id).second)
            throw Error("cyclic blank node structure; not serializable");
        auto triples = m_doc.graph.match(Term{BlankNode{id}}, std::nullopt, std::nullopt);
        std::string out = "[";
        out += render_grouped(triples, " ", " ; ");
        out += out.size() == 1 ? "]" : " ]";
        m_open_blanks.erase(id);
        return out;
    }

    std::string render_predicate_objects(const Term& subject, int indent) {
        auto triples = m_doc.graph.match(subject, std::nullopt, std::nullopt);
        std::string pad(static_cast<std::size_t>(indent) * 4, ' ');
        return pad + render_grouped(triples, "", " ;\n" + pad);
    }

    // Group triples by predicate (rdf:type first, rendered as "a"),
    // comma-join objects within a group.
    std::string render_grouped(const std::vector<Triple>& triples, const std::string& lead,
                               const std::string& group_sep) {
        std::map<Iri, std::vector<Term>> groups;
        for (const Triple& t : triples)
            groups[t.predicate].push_back(t.object);

        std::vector<Iri> order;
        if (groups.count(vocab::rdf_type()))
            order.push_back(vocab::rdf_type());
        for (const auto& [p, objs] : groups)
            if (!(p == vocab::rdf_type()))
                order.push_back(p);

        std::string out;
        for (const Iri& p : order) {
            out += out.empty() ? lead : group_sep;
            out += p == vocab::rdf_type() ? "a" : render_iri(p);
            auto& objects = groups[p];
            std::sort(objects.begin(), objects.end());
            for (std::size_t i = 0; i < objects.size(); ++i) {
                out += i == 0 ? " " : ", ";
                out += render_object(objects[i]);
            }
        }
        return out;
    }

    const TurtleDocument& m_doc;
    std::set<std::string> m_object_refs;
    std::set<std::string> m_open_blanks;
};

}  // namespace

TurtleDocument parse_turtle(std::string_view text, const PrefixMap& seed_prefixes) {
    return Parser(text, seed_prefixes).parse();
}

TurtleDocument parse_turtle(std::string_view text) {
    return parse_turtle(text, vocab::default_prefixes());
}

std::string serialize_turtle(const TurtleDocument& doc) {
    return Serializer(doc).run();
}

}  // namespace eo
