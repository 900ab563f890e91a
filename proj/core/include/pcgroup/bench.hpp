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
#include <optional>
#include <string>
#include <vector>

#include "pcgroup/conjugacy.hpp"
#include "pcgroup/group_spec.hpp"

namespace pcg {

/// One table row. Word sequences are functions of the seed alone, so
/// regenerating a row reproduces every non-timing field; only the measured
/// milliseconds move between runs.
struct BenchResult {
    std::string label;
    std::optional<int> r;  // cyclotomic rows only
    int hirsch = 0;
    int trials = 0;
    std::optional<double> collect_mean_ms;
    std::optional<double> collect_max_ms;
    std::optional<double> conj_mean_ms;
    std::optional<double> conj_max_ms;
    int conj_timeouts = 0;
    std::int64_t timeout_ms = 0;
    std::uint64_t seed = 0;
    std::uint64_t words_digest = 0;  // fingerprint of the sampled words
};

struct WordParams {
    std::size_t syllables = 20;
    std::uint64_t exponent_bound = 64;
};

struct ConjugatorParams {
    std::size_t syllables = 2;
    std::uint64_t exponent_bound = 2;
    std::size_t base_syllables = 4;       // the element r being conjugated
    std::uint64_t base_exponent_bound = 8;
};

/// Times collect on `trials` seeded random words. Wall-clock per call, no
/// warmup discard unless asked.
BenchResult bench_collection(const GroupSpec& g, int trials, const WordParams& wp,
                             std::uint64_t seed, bool warmup = false);

/// Per trial: sample r and a short conjugator x, set s = r^x, time the
/// solver on (r, s) with the whole group acting. Witnesses are verified by
/// collection before the trial counts; a trial past timeout_ms is recorded
/// as a timeout and enters the mean at the timeout value.
BenchResult bench_conjugacy(const GroupSpec& g, int trials, const Solver& solver,
                            const ConjugatorParams& cp, std::int64_t timeout_ms,
                            std::uint64_t seed);

/// Merges the collection and conjugacy halves of one row.
BenchResult combine_rows(const BenchResult& collection, const BenchResult& conjugacy);

enum class TableFormat { Markdown, Csv };

/// Stable column order; when every conjugacy trial timed out the conj column
/// prints ">" followed by the timeout budget. Both formats carry identical
/// numeric strings. Throws DomainError on an empty list.
std::string emit_table(const std::vector<BenchResult>& results, TableFormat format);

}  // namespace pcg
