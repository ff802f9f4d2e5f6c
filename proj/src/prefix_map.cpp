#include "eo/prefix_map.hpp"

#include "eo/errors.hpp"

namespace eo {

const Iri& PrefixMap::resolve(const std::string& label) const {
    auto it = m_entries.find(label);
    if (it == m_entries.end())
        throw UnknownPrefixError(label);
    return it->second;
}

Iri PrefixMap::expand(const std::string& curie) const {
    if (curie.size() >= 2 && curie.front() == '<' && curie.back() == '>')
        return Iri{curie.substr(1, curie.size() - 2)};
    auto colon = curie.find(':');
    if (colon == std::string::npos)
        throw UnknownPrefixError(curie);
    std::string label = curie.substr(0, colon);
    std::string local = curie.substr(colon + 1);
    // "label" may itself be a scheme of an absolute IRI ("http://...").
    if (local.size() >= 2 && local[0] == '/' && local[1] == '/')
        return Iri{curie};
    return Iri{resolve(label).value + local};
}

std::optional<std::string> PrefixMap::compress(const Iri& iri) const {
    const std::string* best_label = nullptr;
    const std::string* best_ns = nullptr;
    for (const auto& [label, ns] : m_entries) {
        if (ns.value.empty() || iri.value.rfind(ns.value, 0) != 0)
            continue;
        if (best_ns == nullptr || ns.value.size() > best_ns->size()) {
            best_label = &label;
            best_ns = &ns.value;
        }
    }
    if (best_label == nullptr)
        return std::nullopt;
    std::string local = iri.value.substr(best_ns->size());
    // A local part with structure (further '/' or '#') would not
    // round-trip through the CURIE grammar.
    if (local.find('/') != std::string::npos || local.find('#') != std::string::npos)
        return std::nullopt;
    return *best_label + ":" + local;
}

Iri expand_curie(const PrefixMap& prefixes, const std::string& curie) {
    return prefixes.expand(curie);
}

}  // namespace eo
