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
#include <utility>
#include <vector>

#include "pcgroup/ints.hpp"

namespace pcg {

/// One factor a_gen^exp of a word. Generators are 1-based; exp is never zero
/// in a valid word.
struct Syllable {
    int gen = 0;
    Int exp;

    Syllable() = default;
    Syllable(int g, Int e) : gen(g), exp(std::move(e)) {}

    bool operator==(const Syllable& o) const { return gen == o.gen && exp == o.exp; }
};

/// An unreduced word in the generators: a finite syllable sequence. Adjacent
/// syllables may repeat a generator; the empty sequence is the identity.
///
/// Text syntax: space-separated tokens "g<i>" or "g<i>^<e>", or the single
/// token "id" for the empty word.
struct Word {
    std::vector<Syllable> syls;

    Word() = default;
    explicit Word(std::vector<Syllable> s) : syls(std::move(s)) {}

    bool empty() const { return syls.empty(); }
    std::size_t size() const { return syls.size(); }

    /// Parses word syntax. When max_gen > 0, generator indices must be
    /// <= max_gen. Rejects zero exponents and indices < 1.
    static Word parse(const std::string& text, int max_gen = 0);

    std::string str() const;

    bool operator==(const Word& o) const { return syls == o.syls; }
};

/// The exponent vector (e_1, ..., e_n) of a collected word. For a consistent
/// presentation this is the unique normal form, so equality of group elements
/// is componentwise equality.
///
/// Serialized as comma-separated signed decimals, e.g. "1,3".
struct NormalWord {
    std::vector<Int> e;

    NormalWord() = default;
    explicit NormalWord(std::vector<Int> v) : e(std::move(v)) {}

    static NormalWord identity(std::size_t n) { return NormalWord(std::vector<Int>(n)); }

    std::size_t size() const { return e.size(); }

    bool is_identity() const {
        for (const Int& x : e)
            if (x != 0) return false;
        return true;
    }

    static NormalWord parse(const std::string& text, int expect_len = 0);

    std::string str() const;

    bool operator==(const NormalWord& o) const { return e == o.e; }
    bool operator!=(const NormalWord& o) const { return !(*this == o); }
    bool operator<(const NormalWord& o) const { return e < o.e; }
};

/// Turns a normal word back into a word (identity becomes the empty word).
Word embed(const NormalWord& x);

/// A word over the positions of some published generator list rather than
/// over the group's own generators; secrets and recovered conjugators are
/// expressed this way. Positions are 0-based; exponents are nonzero.
struct SubgroupWord {
    std::vector<std::pair<int, Int>> syls;

    SubgroupWord() = default;

    bool empty() const { return syls.empty(); }
    void push(int pos, Int exp) { syls.emplace_back(pos, std::move(exp)); }

    /// Concatenation with the positions of `o` untouched.
    SubgroupWord& operator+=(const SubgroupWord& o) {
        syls.insert(syls.end(), o.syls.begin(), o.syls.end());
        return *this;
    }

    /// Formal inverse: reversed order, negated exponents.
    SubgroupWord inverse() const;

    std::string str() const;

    bool operator==(const SubgroupWord& o) const { return syls == o.syls; }
};

}  // namespace pcg
