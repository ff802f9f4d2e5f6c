#ifndef EO_TERM_HPP
#define EO_TERM_HPP

#include <compare>
#include <string>
#include <variant>

namespace eo {

/// Absolute IRI. Equality is exact string equality.
struct Iri {
    std::string value;

    auto operator<=>(const Iri&) const = default;
};

/// Plain literal with an optional language tag. No datatype IRIs.
struct Literal {
    std::string text;
    std::string language;  // empty means none

    auto operator<=>(const Literal&) const = default;
};

/// Blank node. Ids are unique within one graph load; cross-graph
/// comparison goes through the isomorphism check, not id equality.
struct BlankNode {
    std::string id;

    auto operator<=>(const BlankNode&) const = default;
};

/// One RDF term. Variant order (Iri < Literal < BlankNode) fixes the
/// deterministic sort order used for all rendered output.
using Term = std::variant<Iri, Literal, BlankNode>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }

inline const Iri& as_iri(const Term& t) { return std::get<Iri>(t); }
inline const Literal& as_literal(const Term& t) { return std::get<Literal>(t); }
inline const BlankNode& as_blank(const Term& t) { return std::get<BlankNode>(t); }

}  // namespace eo

#endif
