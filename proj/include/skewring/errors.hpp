/*
   Copyright 2026 The skewring Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWRING_ERRORS_HPP
#define SKEWRING_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewring {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands from different structures, out-of-range indices, malformed payloads.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A brute-force operation was asked to enumerate more than the configured cap.
class CapacityError : public Error {
   public:
    CapacityError(const std::string& what, std::uint64_t requested, std::uint64_t cap)
        : Error(what + ": " + std::to_string(requested) + " elements exceeds enumeration cap " + std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t cap() const noexcept { return cap_; }

   private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

/// A check-specific hypothesis (abelian group, G-simplicity, outer action, ...) does not hold.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// A property that a proven statement guarantees failed to hold on a concrete computation.
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

/// Malformed or inconsistent instance input. Line/column are 1-based, 0 when unknown.
class InputError : public Error {
   public:
    explicit InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")" : what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace skewring

#endif  // SKEWRING_ERRORS_HPP
