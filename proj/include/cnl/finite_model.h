// Copyright 2026 The cnlwiki Authors.
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

// Bounded model search used as an independent check of the reasoner. The
// knowledge base is grounded over a domain of n elements into
// propositional clauses which a DPLL search decides.

#ifndef CNL_FINITE_MODEL_H_
#define CNL_FINITE_MODEL_H_

#include <optional>

#include "cnl/owl.h"
#include "cnl/reasoner.h"

namespace cnl {

// Largest domain FiniteModelCheck accepts.
inline constexpr int kMaxFiniteDomain = 6;

// A model of the KB with at most max_domain elements, or nullopt when none
// exists. Individuals denote distinct elements. Throws Error(kTooLarge)
// when max_domain exceeds kMaxFiniteDomain or the grounding gets too big.
std::optional<Interpretation> FiniteModelCheck(const KbSnapshot &kb,
                                               int max_domain);

}  // namespace cnl

#endif  // CNL_FINITE_MODEL_H_
