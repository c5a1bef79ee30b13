// Copyright 2026 The kgc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KGC_ERROR_HPP_
#define KGC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kgc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid graph (loop, duplicate edge, bad id, disconnected).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's domain (k out of range, bad generator spec, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A configured resource cap was hit; the instance is too large for the requested computation.
class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace kgc

#endif // KGC_ERROR_HPP_
