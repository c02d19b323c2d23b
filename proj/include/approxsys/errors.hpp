// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace approxsys {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (division by zero, bad index).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two points, or a point and a system, disagree on the ambient dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input: rational literals, formula documents, reports.
class FormatError : public Error {
public:
    using Error::Error;
};

/// A lazily forced name index whose search ran out of budget.
class TimeoutError : public Error {
public:
    TimeoutError(const std::string& what, unsigned long long index)
        : Error(what), index_(index) {}
    unsigned long long index() const noexcept { return index_; }

private:
    unsigned long long index_;
};

} // namespace approxsys
