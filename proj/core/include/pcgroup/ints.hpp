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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pcg {

// Exponents, matrix entries and group orders are arbitrary-precision
// throughout; collection in infinite groups blows well past 64 bits.
using Int = boost::multiprecision::cpp_int;

/// Floored division: a = q*m + r with 0 <= r < m. Requires m > 0.
inline void floor_divmod(const Int& a, const Int& m, Int& q, Int& r) {
    q = a / m;
    r = a % m;
    if (r < 0) {
        r += m;
        q -= 1;
    }
}

inline std::string to_string(const Int& v) { return v.str(); }

/// Parses a signed decimal integer; throws on garbage.
Int parse_int(const std::string& text);

/// FNV-1a over bytes, used to fingerprint deterministic word sequences.
inline std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

}  // namespace pcg
