// Copyright 2026 The qdsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDSC_ERRORS_H
#define QDSC_ERRORS_H

#include <stdexcept>
#include <string>

namespace qdsc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operand lengths or shapes disagree.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Malformed textual input (Pauli strings, code files, binary rows).
class ParseError : public Error {
   public:
    using Error::Error;
};

/// Stabilizer rows fail to commute.
class CommutationError : public Error {
   public:
    using Error::Error;
};

/// Generators are linearly dependent, or a matrix is rank deficient.
class RankError : public Error {
   public:
    using Error::Error;
};

/// Gauge group does not have a consistent subsystem structure.
class StructureError : public Error {
   public:
    using Error::Error;
};

/// Unknown catalog entry.
class LookupError : public Error {
   public:
    using Error::Error;
};

/// A configured enumeration cap would be exceeded.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// Input violates an operation's stated precondition (for example a pure code
/// passed to the impure construction).
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// A search that is proven to succeed came back empty. Always a defect.
class ConstructionFailure : public Error {
   public:
    using Error::Error;
};

/// External data (an imported classical code matrix) is not present.
class AvailabilityError : public Error {
   public:
    using Error::Error;
};

}  // namespace qdsc

#endif
