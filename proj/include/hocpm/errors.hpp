// Copyright 2026 The hocpm Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hocpm {

/**
 * Base class of every error raised by the library.
 **/
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

#define HOCPM_DECLARE_ERROR(Name)                                \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& message) : Error(message) {} \
  }

/** Values or matrices over different semirings were combined. */
HOCPM_DECLARE_ERROR(MixedSemiringError);
/** An automorphism is not defined on the given semiring. */
HOCPM_DECLARE_ERROR(InvalidAutomorphismError);
/** Malformed semiring descriptor (e.g. reducible modulus). */
HOCPM_DECLARE_ERROR(InvalidSemiringError);
/** Group element with wrong arity or out-of-range residues. */
HOCPM_DECLARE_ERROR(InvalidElementError);
/** A generator image does not respect the cyclic order of its generator. */
HOCPM_DECLARE_ERROR(InvalidActionError);
HOCPM_DECLARE_ERROR(NonCommutingActionsError);
/** g.cols() != f.rows() in a composite g∘f. */
HOCPM_DECLARE_ERROR(ComposeMismatchError);
HOCPM_DECLARE_ERROR(ShapeMismatchError);
HOCPM_DECLARE_ERROR(InvalidPermutationError);
/** A matrix does not have the dimensions of a morphism between folded objects. */
HOCPM_DECLARE_ERROR(NotAFoldedShapeError);
HOCPM_DECLARE_ERROR(EffectNotRegisteredError);
/** An explicit generator violates an environment axiom at registration. */
HOCPM_DECLARE_ERROR(EnvAxiomError);
HOCPM_DECLARE_ERROR(InvalidEnvironmentError);
HOCPM_DECLARE_ERROR(NotClassicalError);
HOCPM_DECLARE_ERROR(NotFiniteError);
HOCPM_DECLARE_ERROR(NoWitnessFoundError);
HOCPM_DECLARE_ERROR(InvalidTestError);
HOCPM_DECLARE_ERROR(ParseError);
/** An internal consistency check between two computation routes failed. */
HOCPM_DECLARE_ERROR(InternalError);

#undef HOCPM_DECLARE_ERROR

}  // namespace hocpm
