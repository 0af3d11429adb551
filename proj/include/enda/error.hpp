/*
   Copyright 2026 The enda-lab authors

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

#ifndef ENDA_ERROR_HPP
#define ENDA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace enda {

enum class Errc {
    SyntaxError,
    NotIrreducible,
    NotPrime,
    WrongRing,
    UnsupportedDomain,
    UnsupportedRing,
    DivisionByZero,
    NotAUnit,
    RankNotOne,
    NotMatrixUnits,
    FactorizationFailed,
    AlgebraMismatch,
    GeneratorOutOfRange,
    NonCanonicalCoefficient,
    NotFromRecipe,
    UnsupportedVariety,
    TwistInCharZero,
    CocycleViolated,
    NotHomogeneous,
    NotSymmetric,
    WrongDegree,
    PrerequisiteFailed,
    IllFormedTwist
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotPrime: return "NotPrime";
        case Errc::WrongRing: return "WrongRing";
        case Errc::UnsupportedDomain: return "UnsupportedDomain";
        case Errc::UnsupportedRing: return "UnsupportedRing";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::RankNotOne: return "RankNotOne";
        case Errc::NotMatrixUnits: return "NotMatrixUnits";
        case Errc::FactorizationFailed: return "FactorizationFailed";
        case Errc::AlgebraMismatch: return "AlgebraMismatch";
        case Errc::GeneratorOutOfRange: return "GeneratorOutOfRange";
        case Errc::NonCanonicalCoefficient: return "NonCanonicalCoefficient";
        case Errc::NotFromRecipe: return "NotFromRecipe";
        case Errc::UnsupportedVariety: return "UnsupportedVariety";
        case Errc::TwistInCharZero: return "TwistInCharZero";
        case Errc::CocycleViolated: return "CocycleViolated";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::WrongDegree: return "WrongDegree";
        case Errc::PrerequisiteFailed: return "PrerequisiteFailed";
        case Errc::IllFormedTwist: return "IllFormedTwist";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace enda

#endif  // ENDA_ERROR_HPP
