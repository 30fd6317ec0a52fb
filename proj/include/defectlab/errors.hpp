#pragma once

#include <stdexcept>
#include <string>

namespace defectlab {

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NonCubicError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (wrong kind of graph, bad cut, ...).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// An internal cross-check failed: a computed object contradicts a structural
// fact it must satisfy.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class NoCycleSeparatingCut : public std::runtime_error {
  public:
    NoCycleSeparatingCut() : std::runtime_error("graph has no two disjoint circuits") {}
};

class FetchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IntegrityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A time budget ran out before a search finished.
class Inconclusive : public std::runtime_error {
  public:
    Inconclusive() : std::runtime_error("time budget exhausted") {}
    using std::runtime_error::runtime_error;
};

}  // namespace defectlab
