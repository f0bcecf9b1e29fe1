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

#include "covmub/error.hpp"

namespace covmub {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput:
            return "InvalidInput";
        case ErrorKind::NonPrime:
            return "NonPrime";
        case ErrorKind::ReduciblePolynomial:
            return "ReduciblePolynomial";
        case ErrorKind::DegreeMismatch:
            return "DegreeMismatch";
        case ErrorKind::ZeroInverse:
            return "ZeroInverse";
        case ErrorKind::FieldMismatch:
            return "FieldMismatch";
        case ErrorKind::FieldTooLarge:
            return "FieldTooLarge";
        case ErrorKind::OddCharacteristic:
            return "OddCharacteristic";
        case ErrorKind::EvenCharacteristic:
            return "EvenCharacteristic";
        case ErrorKind::ZeroScale:
            return "ZeroScale";
        case ErrorKind::SingularMap:
            return "SingularMap";
        case ErrorKind::NonSymplecticElement:
            return "NonSymplecticElement";
        case ErrorKind::NotUnimodular:
            return "NotUnimodular";
        case ErrorKind::NotATorus:
            return "NotATorus";
        case ErrorKind::NotACocycle:
            return "NotACocycle";
        case ErrorKind::NotAWeylMultiplier:
            return "NotAWeylMultiplier";
        case ErrorKind::NotEquivalent:
            return "NotEquivalent";
        case ErrorKind::NotInvariantMultiplier:
            return "NotInvariantMultiplier";
        case ErrorKind::NotProjective:
            return "NotProjective";
        case ErrorKind::InconsistentDimension:
            return "InconsistentDimension";
        case ErrorKind::MultiplierMismatch:
            return "MultiplierMismatch";
        case ErrorKind::DegenerateSeed:
            return "DegenerateSeed";
        case ErrorKind::NotIrreducible:
            return "NotIrreducible";
        case ErrorKind::NotCovariant:
            return "NotCovariant";
        case ErrorKind::NoneFound:
            return "NoneFound";
        case ErrorKind::MultipleFound:
            return "MultipleFound";
        case ErrorKind::SingularAminusI:
            return "SingularAminusI";
        case ErrorKind::NotScalarPower:
            return "NotScalarPower";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace covmub
