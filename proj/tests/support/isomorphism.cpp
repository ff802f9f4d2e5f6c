#include "support/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace eo::tests {

namespace {

std::set<std::string> blank_ids(const Graph& g) {
    std::set<std::string> out;
    for (const Triple& t : g.triples()) {
        if (is_blank(t.subject))
            out.insert(as_blank(t.subject).id);
        if (is_blank(t.object))
            out.insert(as_blank(t.object).id);
    }
    return out;
}

// Signature of a blank node: its triples with every blank position
// erased to a placeholder. Mapped blanks must share signatures.
std::multiset<std::string> signature(const Graph& g, const std::string& id) {
    std::multiset<std::string> out;
    auto render = [](const Term& t) -> std::string {
        if (is_blank(t))
            return "_";
        if (is_iri(t))
            return "<" + as_iri(t).value + ">";
        return "\"" + as_literal(t).text + "\"@" + as_literal(t).language;
    };
    for (const Triple& t : g.triples()) {
        bool subject_is = is_blank(t.subject) && as_blank(t.subject).id == id;
        bool object_is = is_blank(t.object) && as_blank(t.object).id == id;
        if (subject_is)
            out.insert("s " + t.predicate.value + " " + render(t.object));
        if (object_is)
            out.insert("o " + t.predicate.value + " " + render(t.subject));
    }
    return out;
}

Term rename(const Term& t, const std::map<std::string, std::string>& mapping) {
    if (!is_blank(t))
        return t;
    return BlankNode{mapping.at(as_blank(t).id)};
}

bool try_mapping(const Graph& a, const Graph& b, const std::vector<std::string>& a_blanks,
                 std::size_t index, std::map<std::string, std::string>& mapping,
                 std::set<std::string>& used,
                 const std::map<std::string, std::multiset<std::string>>& a_sigs,
                 const std::map<std::string, std::multiset<std::string>>& b_sigs) {
    if (index == a_blanks.size()) {
        for (const Triple& t : a.triples())
            if (!b.contains(Triple(rename(t.subject, mapping), t.predicate,
                                   rename(t.object, mapping))))
                return false;
        return true;
    }
    const std::string& a_id = a_blanks[index];
    for (const auto& [b_id, sig] : b_sigs) {
        if (used.count(b_id) || !(sig == a_sigs.at(a_id)))
            continue;
        mapping[a_id] = b_id;
        used.insert(b_id);
        if (try_mapping(a, b, a_blanks, index + 1, mapping, used, a_sigs, b_sigs))
            return true;
        mapping.erase(a_id);
        used.erase(b_id);
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size())
        return false;

    std::set<std::string> a_ids = blank_ids(a);
    std::set<std::string> b_ids = blank_ids(b);
    if (a_ids.size() != b_ids.size())
        return false;

    // ground triples must match exactly
    for (const Triple& t : a.triples())
        if (!is_blank(t.subject) && !is_blank(t.object) && !b.contains(t))
            return false;

    std::map<std::string, std::multiset<std::string>> a_sigs;
    std::map<std::string, std::multiset<std::string>> b_sigs;
    for (const std::string& id : a_ids)
        a_sigs[id] = signature(a, id);
    for (const std::string& id : b_ids)
        b_sigs[id] = signature(b, id);

    std::vector<std::string> order(a_ids.begin(), a_ids.end());
    std::map<std::string, std::string> mapping;
    std::set<std::string> used;
    return try_mapping(a, b, order, 0, mapping, used, a_sigs, b_sigs);
}

}  // namespace eo::tests
