// Copyright 2026 The paulinoise Authors
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

#ifndef PAULINOISE_ERRORS_H
#define PAULINOISE_ERRORS_H

#include <stdexcept>
#include <string>

namespace paulinoise {

/// Base for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad labels, bad flags, bad files, broken invariants.
struct ValidationError : Error {
    using Error::Error;
};

/// Operand shapes do not agree.
struct DimensionError : ValidationError {
    using ValidationError::ValidationError;
};

/// A qubit count exceeded the configured cap.
struct SizeLimitError : ValidationError {
    using ValidationError::ValidationError;
};

/// A document could not be parsed. The message carries field context.
struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

/// The input is not a physical object within tolerance (non-unitary
/// operator, non-real fidelity, negative Pauli weight, ...).
struct PhysicalityError : Error {
    using Error::Error;
};

}  // namespace paulinoise

#endif
