#ifndef EO_PREFIX_MAP_HPP
#define EO_PREFIX_MAP_HPP

#include <map>
#include <optional>
#include <string>

#include "eo/term.hpp"

namespace eo {

/// Prefix label -> namespace IRI. Labels are unique by construction
/// (map keys); the empty label is the default namespace.
class PrefixMap {
public:
    PrefixMap() = default;

    void bind(const std::string& label, const Iri& ns) { m_entries[label] = ns; }

    bool has(const std::string& label) const { return m_entries.count(label) != 0; }

    /// Namespace for a label; throws UnknownPrefixError if absent.
    const Iri& resolve(const std::string& label) const;

    /// Expand "label:local" to an absolute IRI. Angle-bracketed or
    /// already-absolute IRIs pass through unchanged.
    Iri expand(const std::string& curie) const;

    /// Compress an IRI to "label:local" if some bound namespace is a
    /// prefix of it; longest namespace wins, then lexicographic label.
    std::optional<std::string> compress(const Iri& iri) const;

    const std::map<std::string, Iri>& entries() const { return m_entries; }

private:
    std::map<std::string, Iri> m_entries;
};

/// Free-function form used throughout: expand a CURIE against a map.
Iri expand_curie(const PrefixMap& prefixes, const std::string& curie);

}  // namespace eo

#endif
