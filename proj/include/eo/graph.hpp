#ifndef EO_GRAPH_HPP
#define EO_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eo/term.hpp"

namespace eo {

/// One assertion. The predicate is always an IRI and the subject is
/// never a literal; the constructor enforces both.
struct Triple {
    Term subject;
    Iri predicate;
    Term object;

    Triple(Term s, Iri p, Term o);

    bool operator==(const Triple& other) const;
    bool operator<(const Triple& other) const;
};

class Graph;

/// Mutable first phase of a graph. Single-owner; seal() produces the
/// immutable Graph and further inserts throw SealedGraphError.
class GraphBuilder {
public:
    GraphBuilder() = default;

    /// Set semantics: inserting a duplicate leaves the size unchanged.
    void insert(Triple t);

    std::size_t size() const { return m_triples.size(); }

    Graph seal();

private:
    std::set<Triple> m_triples;
    bool m_sealed = false;
};

/// Immutable triple store with subject, predicate and
/// (subject, predicate) indexes. Safe to share across threads.
class Graph {
public:
    Graph() = default;

    std::size_t size() const { return m_triples.size(); }
    bool empty() const { return m_triples.empty(); }

    const std::vector<Triple>& triples() const { return m_triples; }

    bool contains(const Triple& t) const;

    /// Triples agreeing with every bound position; unbound positions
    /// are wildcards. Results come back in store order (sorted).
    std::vector<Triple> match(const std::optional<Term>& s,
                              const std::optional<Iri>& p,
                              const std::optional<Term>& o) const;

    /// Objects o with (s, p, o) in the graph, sorted, duplicates removed.
    std::vector<Term> objects(const Term& s, const Iri& p) const;

    /// Subjects s with (s, p, o) in the graph, sorted, duplicates removed.
    std::vector<Term> subjects(const Iri& p, const Term& o) const;

    /// All distinct IRI and blank-node terms in subject or object
    /// position, sorted. Literals are not nodes.
    std::vector<Term> nodes() const;

private:
    friend class GraphBuilder;

    explicit Graph(std::set<Triple> triples);

    std::vector<Triple> m_triples;  // sorted, unique
    std::map<Term, std::vector<std::size_t>> m_by_subject;
    std::map<Iri, std::vector<std::size_t>> m_by_predicate;
    std::map<std::pair<Term, Iri>, std::vector<std::size_t>> m_by_subject_predicate;
};

/// Union of several graphs. Blank nodes are renamed apart per input
/// ("g<n>:" id prefix) so accidental id collisions cannot merge nodes.
Graph merge_graphs(const std::vector<Graph>& graphs);

}  // namespace eo

#endif
