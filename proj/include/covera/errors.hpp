#pragma once

#include <stdexcept>
#include <string>

namespace covera {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameter sets outside 3 <= k < v, lambda >= 1.
class TrivialParamsError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Lemma-style preconditions that callers may legitimately trip
// (e.g. the edge-weight condition of the weighted Caro-Tuza bound).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

// A certified relation failed on concrete data (b < rank bound etc.).
class SoundnessViolation : public Error {
public:
    using Error::Error;
};

// Two routes that must agree disagreed, or an internal invariant broke.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace covera
