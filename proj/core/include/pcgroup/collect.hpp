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

#include <cstdint>
#include <string>
#include <vector>

#include "pcgroup/presentation.hpp"
#include "pcgroup/word.hpp"

namespace pcg {

struct CollectOptions {
    // Rewriting-step budget per top-level call. Malformed presentations can
    // make collection arbitrarily expensive; the built-in groups stay orders
    // of magnitude below this at test sizes.
    std::int64_t step_limit = 10'000'000;
};

/// Collection from the left with whole-syllable moves: repeatedly rewrites
/// the leftmost minimal non-normal subword, transporting entire syllables.
/// Returns the exponent vector; for a consistent presentation this is the
/// unique normal form of w. Throws StepLimitError past the step budget.
NormalWord collect(const PcPresentation& p, const Word& w, const CollectOptions& opt = {});

NormalWord multiply(const PcPresentation& p, const NormalWord& x, const NormalWord& y,
                    const CollectOptions& opt = {});

NormalWord inverse(const PcPresentation& p, const NormalWord& x, const CollectOptions& opt = {});

/// x^y = y^{-1} x y.
NormalWord conjugate(const PcPresentation& p, const NormalWord& x, const NormalWord& y,
                     const CollectOptions& opt = {});

/// [a, b] = a^{-1} b^{-1} a b = a^{-1} * (a^b).
NormalWord commutator(const PcPresentation& p, const NormalWord& a, const NormalWord& b,
                      const CollectOptions& opt = {});

NormalWord power(const PcPresentation& p, const NormalWord& x, const Int& k,
                 const CollectOptions& opt = {});

/// Number of generators of infinite relative order; an isomorphism invariant
/// of the group when the presentation is consistent.
int hirsch_length(const PcPresentation& p);

struct ConsistencyViolation {
    std::string overlap;  // which test word was collected two ways
    std::string left;     // normal form via the first route
    std::string right;    // normal form via the second route
};

struct ConsistencyReport {
    bool consistent = true;
    std::vector<ConsistencyViolation> violations;  // empty iff consistent
};

/// Collects every standard overlap test word two ways and reports pairs with
/// differing normal forms:
///   - associativity triples  a_k (a_j a_i)  vs  (a_k a_j) a_i   for i < j <= k,
///   - power overlaps         a_j a_i^{r_i},  a_j^{r_j} a_i,  a_i^{r_i} a_i,
///   - cancellation overlaps  (a_j a_i) a_i^{-1}  and  (a_j a_i^{-1}) a_i.
/// Agreement on all of them is equivalent to consistency of the presentation.
/// A step-limit blowup inside an overlap is reported as a violation of
/// unknown side rather than thrown.
ConsistencyReport check_consistency(const PcPresentation& p, const CollectOptions& opt = {});

/// Deterministic random word: syllable generators uniform in 1..n, exponents
/// uniform and nonzero in [-exponent_bound, exponent_bound]. Fixed seed,
/// fixed word.
Word random_word(const PcPresentation& p, std::size_t syllable_count,
                 std::uint64_t exponent_bound, std::uint64_t seed);

}  // namespace pcg
