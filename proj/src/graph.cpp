#include "eo/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <tuple>

#include "eo/errors.hpp"

namespace eo {

Triple::Triple(Term s, Iri p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (is_literal(subject))
        throw Error("triple subject must not be a literal");
    if (predicate.value.empty())
        throw Error("triple predicate must be a non-empty IRI");
}

bool Triple::operator==(const Triple& other) const {
    return subject == other.subject && predicate == other.predicate && object == other.object;
}

bool Triple::operator<(const Triple& other) const {
    return std::tie(subject, predicate, object) <
           std::tie(other.subject, other.predicate, other.object);
}

void GraphBuilder::insert(Triple t) {
    if (m_sealed)
        throw SealedGraphError();
    m_triples.insert(std::move(t));
}

Graph GraphBuilder::seal() {
    if (m_sealed)
        throw SealedGraphError();
    m_sealed = true;
    return Graph(std::move(m_triples));
}

Graph::Graph(std::set<Triple> triples)
    : m_triples(triples.begin(), triples.end()) {
    for (std::size_t i = 0; i < m_triples.size(); ++i) {
        const Triple& t = m_triples[i];
        m_by_subject[t.subject].push_back(i);
        m_by_predicate[t.predicate].push_back(i);
        m_by_subject_predicate[{t.subject, t.predicate}].push_back(i);
    }
}

bool Graph::contains(const Triple& t) const {
    return std::binary_search(m_triples.begin(), m_triples.end(), t);
}

std::vector<Triple> Graph::match(const std::optional<Term>& s,
                                 const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
    const std::vector<std::size_t>* candidates = nullptr;
    if (s && p) {
        auto it = m_by_subject_predicate.find({*s, *p});
        if (it == m_by_subject_predicate.end())
            return {};
        candidates = &it->second;
    } else if (s) {
        auto it = m_by_subject.find(*s);
        if (it == m_by_subject.end())
            return {};
        candidates = &it->second;
    } else if (p) {
        auto it = m_by_predicate.find(*p);
        if (it == m_by_predicate.end())
            return {};
        candidates = &it->second;
    }

    std::vector<Triple> out;
    auto matches = [&](const Triple& t) {
        if (s && !(t.subject == *s)) return false;
        if (p && !(t.predicate == *p)) return false;
        if (o && !(t.object == *o)) return false;
        return true;
    };
    if (candidates) {
        for (std::size_t i : *candidates)
            if (matches(m_triples[i]))
                out.push_back(m_triples[i]);
    } else {
        for (const Triple& t : m_triples)
            if (matches(t))
                out.push_back(t);
    }
    return out;
}

std::vector<Term> Graph::objects(const Term& s, const Iri& p) const {
    std::vector<Term> out;
    auto it = m_by_subject_predicate.find({s, p});
    if (it == m_by_subject_predicate.end())
        return out;
    for (std::size_t i : it->second)
        out.push_back(m_triples[i].object);
    // index lists are in store order, so objects are already sorted
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Term> Graph::subjects(const Iri& p, const Term& o) const {
    std::vector<Term> out;
    auto it = m_by_predicate.find(p);
    if (it == m_by_predicate.end())
        return out;
    for (std::size_t i : it->second)
        if (m_triples[i].object == o)
            out.push_back(m_triples[i].subject);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Term> Graph::nodes() const {
    std::set<Term> set;
    for (const Triple& t : m_triples) {
        set.insert(t.subject);
        if (!is_literal(t.object))
            set.insert(t.object);
    }
    return {set.begin(), set.end()};
}

Graph merge_graphs(const std::vector<Graph>& graphs) {
    GraphBuilder builder;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        std::string prefix = "g" + std::to_string(gi) + ":";
        auto rename = [&](const Term& t) -> Term {
            if (is_blank(t))
                return BlankNode{prefix + as_blank(t).id};
            return t;
        };
        for (const Triple& t : graphs[gi].triples())
            builder.insert(Triple(rename(t.subject), t.predicate, rename(t.object)));
    }
    return builder.seal();
}

}  // namespace eo
