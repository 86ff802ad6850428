#pragma once

#include <stdexcept>
#include <string>

namespace ivim {

// Error taxonomy. Each class maps to a distinct CLI exit code; see tools/.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Signal data unusable for the requested operation (zero b=0 sample,
// non-positive magnitudes in a log stage, ...).
class DegenerateSignal : public Error {
public:
    using Error::Error;
};

class ScheduleMismatch : public Error {
public:
    using Error::Error;
};

// Too few samples on one side of the segmented-fit threshold.
class UnderdeterminedFit : public Error {
public:
    using Error::Error;
};

class NumericFailure : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class JoinError : public Error {
public:
    using Error::Error;
};

class UndefinedNormalization : public Error {
public:
    using Error::Error;
};

class UndefinedCorrelation : public Error {
public:
    using Error::Error;
};

} // namespace ivim
