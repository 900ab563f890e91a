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

#include "pcgroup/collect.hpp"

#include <random>

#include "collector.hpp"
#include "pcgroup/errors.hpp"

namespace pcg {

namespace {

void require_ready(const PcPresentation& p) {
    if (!p.finalized()) throw DomainError("presentation is not finalized");
}

void require_word(const PcPresentation& p, const Word& w) {
    for (const Syllable& s : w.syls) {
        if (s.gen < 1 || s.gen > p.size())
            throw DomainError("word mentions g" + std::to_string(s.gen) + ", presentation has " +
                              std::to_string(p.size()) + " generators");
        if (s.exp == 0) throw DomainError("word has a zero exponent");
    }
}

void require_normal(const PcPresentation& p, const NormalWord& x) {
    if (x.size() != static_cast<std::size_t>(p.size()))
        throw DomainError("normal word has " + std::to_string(x.size()) + " entries, presentation has " +
                          std::to_string(p.size()) + " generators");
}

}  // namespace

NormalWord collect(const PcPresentation& p, const Word& w, const CollectOptions& opt) {
    require_ready(p);
    require_word(p, w);
    Collector col(p, opt);
    return col.to_normal(col.reduce(w.syls));
}

NormalWord multiply(const PcPresentation& p, const NormalWord& x, const NormalWord& y,
                    const CollectOptions& opt) {
    require_ready(p);
    require_normal(p, x);
    require_normal(p, y);
    Collector col(p, opt);
    return col.to_normal(col.mul(Collector::from_normal(x), Collector::from_normal(y)));
}

NormalWord inverse(const PcPresentation& p, const NormalWord& x, const CollectOptions& opt) {
    require_ready(p);
    require_normal(p, x);
    Collector col(p, opt);
    return col.to_normal(col.inv(Collector::from_normal(x)));
}

NormalWord conjugate(const PcPresentation& p, const NormalWord& x, const NormalWord& y,
                     const CollectOptions& opt) {
    require_ready(p);
    require_normal(p, x);
    require_normal(p, y);
    Collector col(p, opt);
    return col.to_normal(col.conj_elem(Collector::from_normal(x), Collector::from_normal(y)));
}

NormalWord commutator(const PcPresentation& p, const NormalWord& a, const NormalWord& b,
                      const CollectOptions& opt) {
    require_ready(p);
    require_normal(p, a);
    require_normal(p, b);
    Collector col(p, opt);
    auto as = Collector::from_normal(a);
    auto bs = Collector::from_normal(b);
    auto w = col.inv(as);
    auto ib = col.inv(bs);
    w.insert(w.end(), ib.begin(), ib.end());
    w.insert(w.end(), as.begin(), as.end());
    w.insert(w.end(), bs.begin(), bs.end());
    return col.to_normal(col.reduce(std::move(w)));
}

NormalWord power(const PcPresentation& p, const NormalWord& x, const Int& k, const CollectOptions& opt) {
    require_ready(p);
    require_normal(p, x);
    Collector col(p, opt);
    return col.to_normal(col.pow(Collector::from_normal(x), k));
}

int hirsch_length(const PcPresentation& p) {
    require_ready(p);
    return p.size() - p.num_finite_gens();
}

ConsistencyReport check_consistency(const PcPresentation& p, const CollectOptions& opt) {
    require_ready(p);
    ConsistencyReport report;
    const int n = p.size();

    auto gen_word = [](int i, const Int& e) { return std::vector<Syllable>{Syllable(i, e)}; };

    auto run = [&](const std::string& overlap, auto&& left_fn, auto&& right_fn) {
        try {
            Collector col(p, opt);
            auto left = left_fn(col);
            auto right = right_fn(col);
            if (left != right)
                report.violations.push_back(
                    {overlap, col.to_normal(left).str(), col.to_normal(right).str()});
        } catch (const StepLimitError&) {
            report.violations.push_back({overlap + " (step limit exceeded)", "?", "?"});
        }
    };

    auto gname = [](int i) { return "a" + std::to_string(i); };

    // associativity triples, i < j <= k
    for (int k = 1; k <= n; ++k)
        for (int j = 2; j <= k; ++j)
            for (int i = 1; i < j; ++i)
                run(gname(k) + "*(" + gname(j) + "*" + gname(i) + ") vs (" + gname(k) + "*" + gname(j) +
                        ")*" + gname(i),
                    [&](Collector& c) { return c.mul(gen_word(k, 1), c.mul(gen_word(j, 1), gen_word(i, 1))); },
                    [&](Collector& c) { return c.mul(c.mul(gen_word(k, 1), gen_word(j, 1)), gen_word(i, 1)); });

    for (int i = 1; i <= n; ++i) {
        const Int* ri = p.relative_order(i);
        if (!ri) continue;
        // a_i^{r_i} * a_i both ways
        run(gname(i) + "^" + to_string(*ri) + "*" + gname(i) + " (power overlap)",
            [&](Collector& c) { return c.mul(p.power_nf(i), gen_word(i, 1)); },
            [&](Collector& c) { return c.mul(gen_word(i, 1), p.power_nf(i)); });
        for (int j = i + 1; j <= n; ++j) {
            // a_j * a_i^{r_i}: via the power relation vs via syllable moves
            run(gname(j) + "*" + gname(i) + "^" + to_string(*ri) + " (power overlap)",
                [&](Collector& c) { return c.mul(gen_word(j, 1), p.power_nf(i)); },
                [&](Collector& c) {
                    return c.mul(c.mul(gen_word(j, 1), gen_word(i, 1)), c.pow(gen_word(i, 1), *ri - 1));
                });
        }
    }
    for (int j = 1; j <= n; ++j) {
        const Int* rj = p.relative_order(j);
        if (!rj) continue;
        for (int i = 1; i < j; ++i)
            // a_j^{r_j} * a_i both ways
            run(gname(j) + "^" + to_string(*rj) + "*" + gname(i) + " (power overlap)",
                [&](Collector& c) { return c.mul(p.power_nf(j), gen_word(i, 1)); },
                [&](Collector& c) {
                    return c.mul(c.pow(gen_word(j, 1), *rj - 1), c.mul(gen_word(j, 1), gen_word(i, 1)));
                });
    }

    // cancellation overlaps: a_j a_i^{+-1} a_i^{-+1} collapses to a_j
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            run(gname(j) + "*" + gname(i) + "*" + gname(i) + "^-1 (cancellation)",
                [&](Collector& c) {
                    return c.reduce({Syllable(j, 1), Syllable(i, 1), Syllable(i, -1)});
                },
                [&](Collector& c) { return c.reduce(gen_word(j, 1)); });
            run(gname(j) + "*" + gname(i) + "^-1*" + gname(i) + " (cancellation)",
                [&](Collector& c) {
                    return c.reduce({Syllable(j, 1), Syllable(i, -1), Syllable(i, 1)});
                },
                [&](Collector& c) { return c.reduce(gen_word(j, 1)); });
        }

    report.consistent = report.violations.empty();
    return report;
}

Word random_word(const PcPresentation& p, std::size_t syllable_count, std::uint64_t exponent_bound,
                 std::uint64_t seed) {
    require_ready(p);
    if (exponent_bound < 1) throw DomainError("exponent bound must be >= 1");
    // mt19937_64 output is pinned by the standard, so words are reproducible
    // across platforms; the modulo bias at these ranges is far below any
    // statistical test we run.
    std::mt19937_64 rng(seed);
    const auto n = static_cast<std::uint64_t>(p.size());
    Word w;
    w.syls.reserve(syllable_count);
    for (std::size_t t = 0; t < syllable_count; ++t) {
        int gen = static_cast<int>(rng() % n) + 1;
        std::uint64_t u = rng() % (2 * exponent_bound);
        Int exp = u < exponent_bound ? Int(u) - Int(exponent_bound) : Int(u - exponent_bound + 1);
        w.syls.emplace_back(gen, std::move(exp));
    }
    return w;
}

}  // namespace pcg
