#pragma once

#include <stdexcept>
#include <string>

namespace trapeze {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class EmptyWordError : public Error {
public:
    explicit EmptyWordError(const std::string& what_op)
        : Error(what_op + ": the empty word is not accepted") {}
};

class EmptyPatternError : public Error {
public:
    using Error::Error;
};

class NotAFactorError : public Error {
public:
    using Error::Error;
};

class NotGtError : public Error {
public:
    using Error::Error;
};

class AlphabetTooSmallError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class BoundsError : public Error {
public:
    using Error::Error;
};

} // namespace trapeze
