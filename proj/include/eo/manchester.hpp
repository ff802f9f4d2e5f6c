#ifndef EO_MANCHESTER_HPP
#define EO_MANCHESTER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "eo/class_expression.hpp"
#include "eo/prefix_map.hpp"

namespace eo {

/// Parse a class expression in the Manchester-style subset:
///
///   expr        := or_expr
///   or_expr     := and_expr ( "or" and_expr )*
///   and_expr    := unary ( "and" unary )*
///   unary       := name ("some" primary | "min" INT primary) | primary
///   primary     := name | "(" or_expr ")"
///
/// "and" binds tighter than "or"; restriction fillers are primaries.
/// Names are CURIEs, angle-bracketed IRIs, quoted labels with spaces
/// (`...' or '...', with or without a prefix), or bare alias-table names.
ExprPtr parse_manchester(std::string_view text, const PrefixMap& prefixes);

/// Render an expression so that parse_manchester(serialize_manchester(e))
/// is structurally equal to e. IRIs compress to CURIEs where possible.
std::string serialize_manchester(const ClassExpression& expr, const PrefixMap& prefixes);

/// Lex a Manchester text, resolve every name to its canonical CURIE,
/// drop parentheses. Two texts with the same normalized token stream
/// denote the same expression up to (redundant) grouping.
std::vector<std::string> normalize_manchester_tokens(std::string_view text,
                                                     const PrefixMap& prefixes);

}  // namespace eo

#endif
