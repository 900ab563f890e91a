/*
   Copyright 2026 The pcgroup authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace pcg {

/// Base class of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (presentation files, words, transcripts).
/// Carries a 1-based line number when one is known, 0 otherwise.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Presentation shape violations (bad relation keys, missing relations, ...).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Domain preconditions (wrong group kind, index out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A collect call exceeded its rewriting-step budget.
class StepLimitError : public Error {
public:
    using Error::Error;
};

/// An orbit or visited-set cap was exceeded during a search.
class CapError : public Error {
public:
    using Error::Error;
};

/// A search ran past its deadline. Timeouts are data for the bench harness,
/// an error everywhere else.
class TimeoutError : public Error {
public:
    using Error::Error;
};

}  // namespace pcg
