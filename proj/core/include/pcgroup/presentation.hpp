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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcgroup/word.hpp"

namespace pcg {

/// A polycyclic presentation
///
///   < a_1, ..., a_n |  a_k^{r_k} = u_k           for k in I,
///                      a_j^{a_i} = w_{ji},
///                      a_j^{a_i^{-1}} = v_{ji}    for 1 <= i < j <= n >
///
/// where every right-hand side is a word in generators of index strictly
/// greater than the conjugated-by / powered generator: u_k over a_{k+1}..a_n
/// and w_{ji}, v_{ji} over a_{i+1}..a_n. Collection relies on exactly this
/// shape to terminate.
///
/// v_{ji} may be omitted when i in I (a_i has finite relative order): it is
/// then derived at finalize() by conjugating a_j with a_i a further r_i - 1
/// times and correcting by u_i^{-1} when the power relation is nontrivial.
///
/// Build with the setters, then call finalize() once; afterwards the value is
/// immutable and safe to share across threads.
class PcPresentation {
public:
    explicit PcPresentation(int n);

    // --- construction (before finalize) ---
    void set_order(int i, Int r);                           // r >= 2
    void set_power_rhs(int i, Word w);                      // needs set_order(i, ..)
    void set_conj_rhs(int j, int i, bool positive, Word w); // 1 <= i < j <= n

    /// Validates the shape invariants, derives missing negative conjugation
    /// relations, and normalizes every right-hand side. Throws ShapeError.
    void finalize();
    bool finalized() const { return finalized_; }

    // --- queries (after finalize) ---
    int size() const { return n_; }
    bool is_finite_gen(int i) const;
    const Int* relative_order(int i) const;  // nullptr when i is not in I
    int num_finite_gens() const;

    /// Normalized right-hand sides, as collected syllable sequences.
    const std::vector<Syllable>& power_nf(int i) const;
    const std::vector<Syllable>& conj_nf(int j, int i, bool positive) const;

    // Raw storage, mainly for serialization and product constructions.
    const std::map<int, Int>& orders() const { return orders_; }
    const std::map<int, Word>& power_raw() const { return power_raw_; }
    struct ConjKey {
        int j, i;
        bool positive;
        bool operator<(const ConjKey& o) const {
            if (j != o.j) return j < o.j;
            if (i != o.i) return i < o.i;
            return positive < o.positive;
        }
    };
    struct ConjEntry {
        Word rhs;
        bool explicit_input = true;  // false for derived negative relations
    };
    const std::map<ConjKey, ConjEntry>& conj_raw() const { return conj_raw_; }

    bool operator==(const PcPresentation& o) const;

    /// Line-oriented text format:
    ///   pcp v1
    ///   gens <n>
    ///   order <i> <r_i>
    ///   pow <i> = <word>          (omitted when the RHS is trivial)
    ///   conj <j> <i> = <word>
    ///   conj <j> -<i> = <word>
    /// '#' starts a comment. Serialization is canonical, so
    /// serialize(parse(serialize(p))) == serialize(p) byte for byte.
    static PcPresentation parse(const std::string& text);
    std::string serialize() const;

private:
    friend class Collector;

    void require_finalized() const;
    void require_mutable() const;
    void validate_rhs(const Word& w, int min_gen_exclusive, const std::string& what) const;

    int n_;
    bool finalized_ = false;
    std::map<int, Int> orders_;
    std::map<int, Word> power_raw_;
    std::map<ConjKey, ConjEntry> conj_raw_;

    // Dense normalized tables, filled by finalize().
    std::vector<std::vector<Syllable>> power_nf_;                // [i]
    std::vector<std::vector<std::vector<Syllable>>> conj_pos_;   // [j][i]
    std::vector<std::vector<std::vector<Syllable>>> conj_neg_;   // [j][i]
};

}  // namespace pcg
