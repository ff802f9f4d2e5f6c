#include "eo/vocab.hpp"

#include <cctype>

namespace eo::vocab {

namespace {

Iri in_ns(std::string_view ns, std::string_view local) {
    return Iri{std::string(ns) + std::string(local)};
}

}  // namespace

Iri eo(std::string_view local) { return in_ns(kEo, local); }
Iri ep(std::string_view local) { return in_ns(kEp, local); }
Iri sio(std::string_view local) { return in_ns(kSio, local); }
Iri prov(std::string_view local) { return in_ns(kProv, local); }
Iri rdf(std::string_view local) { return in_ns(kRdf, local); }
Iri rdfs(std::string_view local) { return in_ns(kRdfs, local); }
Iri owl(std::string_view local) { return in_ns(kOwl, local); }

const Iri& rdf_type() {
    static const Iri iri = rdf("type");
    return iri;
}

const Iri& rdfs_label() {
    static const Iri iri = rdfs("label");
    return iri;
}

const Iri& rdfs_sub_class_of() {
    static const Iri iri = rdfs("subClassOf");
    return iri;
}

const Iri& owl_equivalent_class() {
    static const Iri iri = owl("equivalentClass");
    return iri;
}

const PrefixMap& default_prefixes() {
    static const PrefixMap map = [] {
        PrefixMap m;
        m.bind("eo", Iri{std::string(kEo)});
        m.bind("ep", Iri{std::string(kEp)});
        m.bind("sio", Iri{std::string(kSio)});
        m.bind("prov", Iri{std::string(kProv)});
        m.bind("rdf", Iri{std::string(kRdf)});
        m.bind("rdfs", Iri{std::string(kRdfs)});
        m.bind("owl", Iri{std::string(kOwl)});
        m.bind("", Iri{std::string(kInstance)});
        return m;
    }();
    return map;
}

const std::map<std::string, Iri>& label_aliases() {
    static const std::map<std::string, Iri> table = {
        // SIO terms are addressed via their labels; these are the
        // canonical camel-cased identifiers used throughout.
        {"question", sio("question")},
        {"in relation to", sio("inRelationTo")},
        {"has output", sio("hasOutput")},
        {"is input in", sio("isInputIn")},
        {"patient", sio("patient")},
        // Bare names that appear without a prefix in class expressions.
        {"isBasedOn", ep("isBasedOn")},
        {"isConceptualizedBy", ep("isConceptualizedBy")},
        {"hasSetting", ep("hasSetting")},
        {"Situation", ep("Situation")},
        {"Explanation", ep("Explanation")},
        {"Study", eo("Study")},
        {"System Recommendation", eo("SystemRecommendation")},
        {"Contextual Knowledge", eo("ContextualKnowledge")},
        {"Scientific Knowledge", eo("ScientificKnowledge")},
        {"Scientific Method", eo("ScientificMethod")},
        {"Object Record", eo("ObjectRecord")},
        {"Everyday Knowledge", eo("EverydayKnowledge")},
        {"Numerical Evidence", eo("NumericalEvidence")},
        {"System Trace", eo("SystemTrace")},
        {"Alternative Input", eo("AlternativeInput")},
        {"Reasoning Mode", eo("ReasoningMode")},
    };
    return table;
}

const std::map<std::string, Iri>& curie_aliases() {
    static const std::map<std::string, Iri> table = {
        // The contrastive example asserts ":addresses" in the default
        // namespace; it is canonically the eo property.
        {":addresses", eo("addresses")},
    };
    return table;
}

std::string camel_case(const std::string& label) {
    std::string out;
    bool at_word_start = false;
    for (char c : label) {
        if (c == ' ' || c == '\t') {
            at_word_start = !out.empty();
            continue;
        }
        if (at_word_start) {
            out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            at_word_start = false;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string split_camel(const std::string& local) {
    std::string out;
    for (std::size_t i = 0; i < local.size(); ++i) {
        bool upper = std::isupper(static_cast<unsigned char>(local[i])) != 0;
        if (i > 0 && upper) {
            bool prev_lower = std::islower(static_cast<unsigned char>(local[i - 1])) != 0;
            bool next_lower =
                i + 1 < local.size() && std::islower(static_cast<unsigned char>(local[i + 1])) != 0;
            if (prev_lower || (std::isupper(static_cast<unsigned char>(local[i - 1])) && next_lower))
                out.push_back(' ');
        }
        out.push_back(local[i]);
    }
    return out;
}

Iri resolve_local_name(const Iri& ns, const std::string& local) {
    auto it = label_aliases().find(local);
    if (it != label_aliases().end() && it->second.value.rfind(ns.value, 0) == 0)
        return it->second;
    return Iri{ns.value + camel_case(local)};
}

std::optional<Iri> resolve_bare_name(const std::string& name) {
    auto it = label_aliases().find(name);
    if (it == label_aliases().end())
        return std::nullopt;
    return it->second;
}

}  // namespace eo::vocab
