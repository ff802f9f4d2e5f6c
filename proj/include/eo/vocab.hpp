#ifndef EO_VOCAB_HPP
#define EO_VOCAB_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "eo/prefix_map.hpp"
#include "eo/term.hpp"

namespace eo::vocab {

// Namespace IRIs.
inline constexpr std::string_view kEo = "https://purl.org/heals/eo#";
inline constexpr std::string_view kEp = "http://linkedu.eu/dedalo/explanationPattern.owl#";
inline constexpr std::string_view kSio = "http://semanticscience.org/resource/";
inline constexpr std::string_view kProv = "http://www.w3.org/ns/prov-o#";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
/// Default namespace for instance data shipped without declarations.
inline constexpr std::string_view kInstance = "http://example.org/eo-instance#";

Iri eo(std::string_view local);
Iri ep(std::string_view local);
Iri sio(std::string_view local);
Iri prov(std::string_view local);
Iri rdf(std::string_view local);
Iri rdfs(std::string_view local);
Iri owl(std::string_view local);

const Iri& rdf_type();
const Iri& rdfs_label();
const Iri& rdfs_sub_class_of();
const Iri& owl_equivalent_class();

/// The seven well-known prefixes plus the default instance namespace.
const PrefixMap& default_prefixes();

/// Quoted multi-word labels and bare names mapped to canonical IRIs,
/// e.g. "in relation to" -> sio:inRelationTo, "isBasedOn" -> ep:isBasedOn.
const std::map<std::string, Iri>& label_aliases();

/// Exact CURIE spellings canonicalized at parse time,
/// e.g. ":addresses" -> eo:addresses.
const std::map<std::string, Iri>& curie_aliases();

/// "System Recommendation" -> "SystemRecommendation",
/// "in relation to" -> "inRelationTo".
std::string camel_case(const std::string& label);

/// "SystemRecommendation" -> "System Recommendation", "AITask" -> "AI Task".
std::string split_camel(const std::string& local);

/// Resolve a (possibly quoted, possibly multi-word) local name against a
/// prefix namespace: alias table first, camel-cased fallback otherwise.
Iri resolve_local_name(const Iri& ns, const std::string& local);

/// Resolve a name with no prefix at all; alias table only.
/// Returns nullopt when the name is unknown.
std::optional<Iri> resolve_bare_name(const std::string& name);

}  // namespace eo::vocab

#endif
