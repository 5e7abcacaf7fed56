#pragma once

#include <stdexcept>
#include <string>

namespace spslab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// lattice
class EmptyLatticeError : public Error {
public:
    using Error::Error;
};
class CycleError : public Error {
public:
    using Error::Error;
};
class NotALatticeError : public Error {
public:
    using Error::Error;
};
class UnknownElementError : public Error {
public:
    using Error::Error;
};

// closure
class UnknownPointError : public Error {
public:
    using Error::Error;
};
class MissingEmptySetError : public Error {
public:
    using Error::Error;
};
class NotIntersectionClosedError : public Error {
public:
    using Error::Error;
};
class EmptySubspaceError : public Error {
public:
    using Error::Error;
};

// classical
class NotClassicalError : public Error {
public:
    using Error::Error;
};

// decompose
class NoSuchPropertyError : public Error {
public:
    using Error::Error;
};
class SkeletonAxiomViolationError : public Error {
public:
    using Error::Error;
};
class TooManyComponentsError : public Error {
public:
    using Error::Error;
};

// oracle
class TooLargeError : public Error {
public:
    using Error::Error;
};

// documents
class SyntaxError : public Error {
public:
    using Error::Error;
};

}  // namespace spslab
