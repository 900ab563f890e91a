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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcgroup/group_spec.hpp"

namespace pcg {

/// Generating set of the subgroup whose conjugation action is searched: the
/// whole group, or a published key-exchange subgroup.
struct ActingSet {
    std::vector<NormalWord> gens;  // nonempty

    static ActingSet whole_group(const GroupSpec& g);
};

/// Witness for r^a = s. `conjugator_expr` spells a as a word in the acting
/// generators (that expressibility is what the key-recovery attack needs).
/// `centralizer_gens` generate the stabilizer of s inside the acting
/// subgroup; the bounded solver leaves the list empty because completeness
/// is unavailable there.
struct ConjugacyWitness {
    NormalWord conjugator;
    SubgroupWord conjugator_expr;
    std::vector<NormalWord> centralizer_gens;
    std::vector<SubgroupWord> centralizer_exprs;
};

struct SearchLimits {
    std::uint64_t orbit_cap = 1u << 20;
    std::uint64_t visited_cap = 1u << 22;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    CollectOptions collect;
};

/// All prod r_i normal words of a finite group (I = {1..n}), in lexicographic
/// order of exponent vectors; the identity comes first. Throws DomainError on
/// infinite groups and CapError past `cap`.
std::vector<NormalWord> enumerate_elements(const GroupSpec& g, std::uint64_t cap = 1u << 20);

/// Closure of `gens` under multiplication; the acting-subgroup order oracle.
std::vector<NormalWord> subgroup_closure(const GroupSpec& g, const std::vector<NormalWord>& gens,
                                         std::uint64_t cap = 1u << 20);

/// Breadth-first orbit of r under conjugation by the acting generators, with
/// transversal words; stabilizer generators arise as Schreier generators and
/// are returned conjugated onto the centralizer of s. Absent means s is not
/// in the orbit, which proves non-conjugacy under the acting subgroup.
/// Requires the acting subgroup to be finite.
std::optional<ConjugacyWitness> conjugacy_search_finite(const GroupSpec& g, const ActingSet& acting,
                                                        const NormalWord& r, const NormalWord& s,
                                                        const SearchLimits& limits = {});

/// Breadth-first search over products of up to max_length acting generators
/// and their inverses, deduplicated by normal form. Generators are tried in
/// list order, positive letter before inverse, so results are deterministic.
/// Absent means only "not found within the bound".
std::optional<ConjugacyWitness> conjugacy_search_bounded(const GroupSpec& g, const ActingSet& acting,
                                                         const NormalWord& r, const NormalWord& s,
                                                         int max_length,
                                                         const SearchLimits& limits = {});

struct Solver {
    enum class Kind { Finite, Bounded };
    Kind kind = Kind::Finite;
    int bound = 4;  // Bounded only

    static Solver finite() { return {Kind::Finite, 0}; }
    static Solver bounded(int L) { return {Kind::Bounded, L}; }
    /// "finite" or "bounded:<L>".
    static Solver parse(const std::string& text);
    std::string str() const;
};

/// Simultaneous conjugacy r_i^a = s_i by the centralizer-chain reduction:
/// solve one coordinate, then search the next inside the centralizer of the
/// targets matched so far. With the finite solver the centralizer is acted
/// on through its Schreier generators; with the bounded solver candidates
/// are drawn from the original acting set and filtered by the centralizing
/// constraint, a strictly weaker guarantee. On failure returns absent and
/// stores the failing coordinate in *failed_step when given.
std::optional<ConjugacyWitness> multiple_conjugacy(const GroupSpec& g, const ActingSet& acting,
                                                   const std::vector<NormalWord>& rs,
                                                   const std::vector<NormalWord>& ss,
                                                   const Solver& solver,
                                                   const SearchLimits& limits = {},
                                                   int* failed_step = nullptr);

}  // namespace pcg
