// Copyright 2026 The qising Authors
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

#include "qising/error.hpp"

namespace qising {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::NotHermitian:
            return "NotHermitian";
        case Errc::NotUnitary:
            return "NotUnitary";
        case Errc::NotSimple:
            return "NotSimple";
        case Errc::ShapeMismatch:
            return "ShapeMismatch";
        case Errc::OutOfWindow:
            return "OutOfWindow";
        case Errc::MarginTooSmall:
            return "MarginTooSmall";
        case Errc::NotInSpan:
            return "NotInSpan";
        case Errc::DimensionMismatch:
            return "DimensionMismatch";
        case Errc::BadLambdas:
            return "BadLambdas";
        case Errc::NotCommuting:
            return "NotCommuting";
        case Errc::WrongTrace:
            return "WrongTrace";
        case Errc::ZeroConditioner:
            return "ZeroConditioner";
        case Errc::NotFaithful:
            return "NotFaithful";
        case Errc::NotCorrelated:
            return "NotCorrelated";
        case Errc::DegenerateEvent:
            return "DegenerateEvent";
        case Errc::BracketFailure:
            return "BracketFailure";
        case Errc::RegionSelectionFailure:
            return "RegionSelectionFailure";
        case Errc::EmptyCommutant:
            return "EmptyCommutant";
        case Errc::TruncationTooSmall:
            return "TruncationTooSmall";
        case Errc::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &what) : std::runtime_error(what), code_(code) {
}

void fail(Errc code, const std::string &what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace qising
