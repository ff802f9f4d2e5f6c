#ifndef EO_ERRORS_HPP
#define EO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eo {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A CURIE used a prefix label that is not in scope.
class UnknownPrefixError : public Error {
public:
    explicit UnknownPrefixError(const std::string& label)
        : Error("unknown prefix: '" + label + "'"), m_label(label) {}

    const std::string& label() const { return m_label; }

private:
    std::string m_label;
};

/// Attempt to mutate a graph builder after seal().
class SealedGraphError : public Error {
public:
    SealedGraphError() : Error("graph builder already sealed") {}
};

/// Parse failure in any of the textual formats. Position is 1-based.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& expected)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": expected " + expected),
          m_line(line),
          m_column(column),
          m_expected(expected) {}

    std::size_t line() const { return m_line; }
    std::size_t column() const { return m_column; }
    const std::string& expected() const { return m_expected; }

private:
    std::size_t m_line;
    std::size_t m_column;
    std::string m_expected;
};

/// Lookup of a class IRI that is not declared in the ontology.
class UnknownClassError : public Error {
public:
    explicit UnknownClassError(const std::string& iri)
        : Error("unknown class: " + iri) {}
};

/// Lookup of an explanation type outside the nine shipped ones.
class UnknownExplanationTypeError : public Error {
public:
    explicit UnknownExplanationTypeError(const std::string& name)
        : Error("unknown explanation type: " + name) {}
};

/// A name token that could not be resolved to an IRI.
class UnknownNameError : public Error {
public:
    explicit UnknownNameError(const std::string& name)
        : Error("unknown name: '" + name + "'") {}
};

/// Ontology construction rejected the axiom set.
class OntologyError : public Error {
public:
    explicit OntologyError(const std::string& message) : Error(message) {}
};

}  // namespace eo

#endif
