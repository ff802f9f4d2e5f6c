#ifndef EO_QUERY_HPP
#define EO_QUERY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eo/class_expression.hpp"
#include "eo/graph.hpp"
#include "eo/ontology.hpp"
#include "eo/prefix_map.hpp"

namespace eo {

/// One position of a triple pattern: a variable or a ground term.
struct PatternSlot {
    std::optional<std::string> variable;
    std::optional<Term> term;

    static PatternSlot var(std::string name) { return {std::move(name), std::nullopt}; }
    static PatternSlot ground(Term t) { return {std::nullopt, std::move(t)}; }
};

/// Subject/object slots plus a predicate that is either a variable or an
/// alternation of one or more IRIs: (p1|p2|...).
struct TriplePattern {
    PatternSlot subject;
    std::optional<std::string> predicate_variable;
    std::vector<Iri> predicate_alternatives;
    PatternSlot object;
};

struct Query {
    std::vector<std::string> select;  // ordered
    std::vector<TriplePattern> patterns;
    PrefixMap prefixes;
};

/// Parse the query subset: prefix declarations, select clause, where
/// block of dot-terminated triple patterns with ?variables, literals and
/// predicate alternation. Every selected variable must occur in a
/// pattern.
Query parse_query(std::string_view text);

struct BindingSet {
    std::vector<std::string> variables;
    std::vector<std::vector<Term>> rows;                 // deterministic order
    std::vector<std::vector<std::string>> rendered;      // same order as rows
};

/// The ontology's axioms virtualized as triples: equivalences as
/// owl:equivalentClass, subclass axioms as rdfs:subClassOf, labels as
/// rdfs:label, individuals as rdf:type. Expression-valued objects are
/// blank nodes ("schema:e<n>") resolved through `expressions`.
struct SchemaView {
    Graph graph;
    std::map<std::string, ExprPtr> expressions;
};

SchemaView schema_view(const Ontology& ont);

/// Conjunctive pattern matching over schema view plus instance data,
/// alternation expanded as union. Rows come back deduplicated and sorted
/// by their rendered form.
BindingSet execute(const Ontology& ont, const Graph& data, const Query& q);

/// Render a term for output: CURIE or <iri>, quoted literal, Manchester
/// text for schema expression nodes, _:id for other blanks.
std::string render_term(const Term& term, const PrefixMap& prefixes, const SchemaView* view);

}  // namespace eo

#endif
