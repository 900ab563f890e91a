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

#include "pcgroup/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "pcgroup/errors.hpp"

namespace pcg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// splitmix64 step; decorrelates per-trial seeds drawn from one row seed
std::uint64_t subseed(std::uint64_t seed, std::uint64_t idx) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (idx + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string format_ms(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

BenchResult bench_collection(const GroupSpec& g, int trials, const WordParams& wp, std::uint64_t seed,
                             bool warmup) {
    if (trials < 1) throw DomainError("bench needs trials >= 1");
    BenchResult res;
    res.label = g.name;
    res.hirsch = hirsch_length(g.pres);
    res.trials = trials;
    res.seed = seed;
    res.words_digest = kFnvOffset;

    if (warmup) {
        Word w = random_word(g.pres, wp.syllables, wp.exponent_bound, subseed(seed, 0));
        (void)collect(g.pres, w);
    }

    double total = 0, peak = 0;
    for (int t = 0; t < trials; ++t) {
        Word w = random_word(g.pres, wp.syllables, wp.exponent_bound, subseed(seed, static_cast<std::uint64_t>(t)));
        res.words_digest = fnv1a(res.words_digest, w.str());
        auto t0 = Clock::now();
        NormalWord nf = collect(g.pres, w);
        double dt = ms_since(t0);
        (void)nf;
        total += dt;
        peak = std::max(peak, dt);
    }
    res.collect_mean_ms = total / trials;
    res.collect_max_ms = peak;
    return res;
}

BenchResult bench_conjugacy(const GroupSpec& g, int trials, const Solver& solver,
                            const ConjugatorParams& cp, std::int64_t timeout_ms, std::uint64_t seed) {
    if (trials < 1) throw DomainError("bench needs trials >= 1");
    BenchResult res;
    res.label = g.name;
    res.hirsch = hirsch_length(g.pres);
    res.trials = trials;
    res.seed = seed;
    res.timeout_ms = timeout_ms;
    res.words_digest = kFnvOffset;

    ActingSet acting = ActingSet::whole_group(g);
    double total = 0, peak = 0;
    for (int t = 0; t < trials; ++t) {
        Word rw = random_word(g.pres, cp.base_syllables, cp.base_exponent_bound,
                              subseed(seed, 2 * static_cast<std::uint64_t>(t)));
        Word xw = random_word(g.pres, cp.syllables, cp.exponent_bound,
                              subseed(seed, 2 * static_cast<std::uint64_t>(t) + 1));
        res.words_digest = fnv1a(res.words_digest, rw.str());
        res.words_digest = fnv1a(res.words_digest, xw.str());
        NormalWord r = collect(g.pres, rw);
        NormalWord x = collect(g.pres, xw);
        NormalWord s = conjugate(g.pres, r, x);

        SearchLimits limits;
        if (timeout_ms > 0) limits.deadline = Clock::now() + std::chrono::milliseconds(timeout_ms);

        double dt = 0;
        auto t0 = Clock::now();
        try {
            std::optional<ConjugacyWitness> w =
                solver.kind == Solver::Kind::Finite
                    ? conjugacy_search_finite(g, acting, r, s, limits)
                    : conjugacy_search_bounded(g, acting, r, s, solver.bound, limits);
            dt = ms_since(t0);
            // soundness gate: a trial only counts once its witness passes
            // collection (absent results simply record their honest time)
            if (w && conjugate(g.pres, r, w->conjugator) != s)
                throw Error("internal: bench witness failed verification");
        } catch (const TimeoutError&) {
            dt = static_cast<double>(timeout_ms);
            res.conj_timeouts += 1;
        }
        total += dt;
        peak = std::max(peak, dt);
    }
    res.conj_mean_ms = total / trials;
    res.conj_max_ms = peak;
    return res;
}

BenchResult combine_rows(const BenchResult& collection, const BenchResult& conjugacy) {
    BenchResult out = collection;
    out.conj_mean_ms = conjugacy.conj_mean_ms;
    out.conj_max_ms = conjugacy.conj_max_ms;
    out.conj_timeouts = conjugacy.conj_timeouts;
    out.timeout_ms = conjugacy.timeout_ms;
    out.words_digest = fnv1a(out.words_digest, std::to_string(conjugacy.words_digest));
    return out;
}

std::string emit_table(const std::vector<BenchResult>& results, TableFormat format) {
    if (results.empty()) throw DomainError("no bench results to print");

    const std::vector<std::string> header = {"group",        "r",           "h",
                                             "trials",       "coll_ms",     "coll_max_ms",
                                             "conj_ms",      "conj_max_ms", "conj_timeouts",
                                             "seed"};
    std::vector<std::vector<std::string>> rows;
    for (const BenchResult& b : results) {
        std::vector<std::string> row;
        row.push_back(b.label);
        row.push_back(b.r ? std::to_string(*b.r) : "-");
        row.push_back(std::to_string(b.hirsch));
        row.push_back(std::to_string(b.trials));
        row.push_back(b.collect_mean_ms ? format_ms(*b.collect_mean_ms) : "-");
        row.push_back(b.collect_max_ms ? format_ms(*b.collect_max_ms) : "-");
        if (b.conj_mean_ms) {
            const bool all_timed_out = b.trials > 0 && b.conj_timeouts == b.trials;
            row.push_back(all_timed_out ? ">" + format_ms(static_cast<double>(b.timeout_ms))
                                        : format_ms(*b.conj_mean_ms));
            row.push_back(b.conj_max_ms ? format_ms(*b.conj_max_ms) : "-");
        } else {
            row.push_back("-");
            row.push_back("-");
        }
        row.push_back(std::to_string(b.conj_timeouts));
        row.push_back(std::to_string(b.seed));
        rows.push_back(std::move(row));
    }

    std::string out;
    if (format == TableFormat::Csv) {
        for (std::size_t c = 0; c < header.size(); ++c) out += (c ? "," : "") + header[c];
        out += "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c];
            out += "\n";
        }
        return out;
    }
    out += "|";
    for (const std::string& h : header) out += " " + h + " |";
    out += "\n|";
    for (std::size_t c = 0; c < header.size(); ++c) {
        (void)c;
        out += " --- |";
    }
    out += "\n";
    for (const auto& row : rows) {
        out += "|";
        for (const std::string& cell : row) out += " " + cell + " |";
        out += "\n";
    }
    return out;
}

}  // namespace pcg
