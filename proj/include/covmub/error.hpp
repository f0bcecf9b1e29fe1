// Copyright 2026 The covmub Authors
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

#ifndef COVMUB_ERROR_HPP
#define COVMUB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace covmub {

enum class ErrorKind {
    InvalidInput,
    NonPrime,
    ReduciblePolynomial,
    DegreeMismatch,
    ZeroInverse,
    FieldMismatch,
    FieldTooLarge,
    OddCharacteristic,
    EvenCharacteristic,
    ZeroScale,
    SingularMap,
    NonSymplecticElement,
    NotUnimodular,
    NotATorus,
    NotACocycle,
    NotAWeylMultiplier,
    NotEquivalent,
    NotInvariantMultiplier,
    NotProjective,
    InconsistentDimension,
    MultiplierMismatch,
    DegenerateSeed,
    NotIrreducible,
    NotCovariant,
    NoneFound,
    MultipleFound,
    SingularAminusI,
    NotScalarPower,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace covmub

#endif
