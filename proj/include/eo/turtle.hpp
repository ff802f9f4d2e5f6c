#ifndef EO_TURTLE_HPP
#define EO_TURTLE_HPP

#include <string>
#include <string_view>

#include "eo/graph.hpp"
#include "eo/prefix_map.hpp"

namespace eo {

/// A parsed Turtle document: the final prefix environment plus the graph.
struct TurtleDocument {
    PrefixMap prefixes;
    Graph graph;
};

/// Parse the Turtle subset: @prefix/prefix declarations, "a" for rdf:type,
/// ";" predicate lists, "," object lists, "[...]" anonymous nodes, quoted
/// string literals with optional @lang tags, "." terminators, "#" comments.
/// Quoted local names (sio:`in relation to') resolve through the alias
/// table. Parsing starts from `seed_prefixes`; declarations override.
TurtleDocument parse_turtle(std::string_view text, const PrefixMap& seed_prefixes);

/// Same, seeded with the well-known prefixes (vocab::default_prefixes).
TurtleDocument parse_turtle(std::string_view text);

/// Serialize so that the output re-parses to an isomorphic graph. Blank
/// nodes must be inlinable: each referenced at most once as an object,
/// no cycles. Throws Error otherwise.
std::string serialize_turtle(const TurtleDocument& doc);

}  // namespace eo

#endif
