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

#include <string>
#include <vector>

#include "pcgroup/ints.hpp"

namespace pcg {

/// Dense square matrix over the integers, exact arithmetic throughout.
/// Generator images in embeddings must be unimodular (det = +-1) so that
/// inverses stay integral.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int d) : d_(d), m_(static_cast<std::size_t>(d) * d) {}

    static IntMatrix identity(int d);

    int dim() const { return d_; }
    const Int& at(int r, int c) const { return m_[static_cast<std::size_t>(r) * d_ + c]; }
    Int& at(int r, int c) { return m_[static_cast<std::size_t>(r) * d_ + c]; }

    bool is_identity() const;
    bool is_zero() const;

    IntMatrix mul(const IntMatrix& o) const;

    /// Exact determinant (fraction-free Bareiss elimination).
    Int det() const;

    /// Exact inverse; requires det = +-1. Signed permutation matrices invert
    /// by transposition, everything else goes through the adjugate.
    IntMatrix inverse() const;

    /// M^e for any integer e. When M - I squares to zero, M^e = I + e(M - I),
    /// which keeps translation-style generators cheap even for huge e.
    IntMatrix pow(const Int& e) const;

    bool operator==(const IntMatrix& o) const { return d_ == o.d_ && m_ == o.m_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    /// Rows separated by ';', entries by ',': "1,0;0,-1".
    std::string str() const;
    static IntMatrix parse(const std::string& text);

private:
    IntMatrix sub(const IntMatrix& o) const;
    bool signed_permutation() const;

    int d_ = 0;
    std::vector<Int> m_;
};

}  // namespace pcg
