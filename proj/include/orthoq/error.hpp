#ifndef ORTHOQ_ERROR_HPP
#define ORTHOQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orthoq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON documents, family names).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Arguments outside an operation's domain (invalid lattice, bad index).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A parameter choice makes a denominator or recurrence coefficient vanish.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Classification could not map the data to one of the supported families.
class ClassificationError : public Error {
public:
    using Error::Error;
};

}  // namespace orthoq

#endif  // ORTHOQ_ERROR_HPP
