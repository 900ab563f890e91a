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

// Internal engine behind collect(); not installed.
//
// Collection from the left with whole-syllable moves. The collected prefix
// `out` always carries strictly increasing generator indices with exponents
// reduced into range, so the boundary between `out` and the pending stack is
// exactly the leftmost minimal non-normal subword:
//
//   a_h^f a_g^e  (h > g)   ->   a_g^e (a_h^{a_g^e})^f
//   a_g^e a_g^f             ->   a_g^{e+f}
//   a_g^e, g in I, e out of range  ->  a_g^{e mod r_g} u_g^{e div r_g}
//
// a_h^{a_g^e} is evaluated by square-and-compose over the conjugation
// automorphism of <a_{g+1}, ..., a_n>, with the squares memoized per
// collector; repeated conjugation by a_g would be linear in e, which is
// hopeless for the exponents infinite groups produce.

#pragma once

#include <cassert>
#include <map>
#include <utility>
#include <vector>

#include "pcgroup/collect.hpp"
#include "pcgroup/errors.hpp"
#include "pcgroup/presentation.hpp"

namespace pcg {

class Collector {
public:
    using Syls = std::vector<Syllable>;

    Collector(const PcPresentation& p, const CollectOptions& opt)
        : p_(p), n_(p.size()), steps_(opt.step_limit) {
        ord_.assign(static_cast<std::size_t>(n_) + 1, nullptr);
        for (const auto& [i, r] : p.orders()) ord_[static_cast<std::size_t>(i)] = &r;
    }

    Syls reduce(Syls w) {
        Syls out;
        Syls pending;
        pending.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) pending.push_back(std::move(*it));
        while (!pending.empty()) {
            tick();
            Syllable s = std::move(pending.back());
            pending.pop_back();
            if (s.exp == 0) continue;
            if (out.empty() || out.back().gen < s.gen) {
                settle(out, pending, std::move(s));
            } else if (out.back().gen == s.gen) {
                Syllable t = std::move(out.back());
                out.pop_back();
                t.exp += s.exp;
                if (t.exp != 0) settle(out, pending, std::move(t));
            } else {
                Syllable h = std::move(out.back());
                out.pop_back();
                Syls c = conj_power(h.gen, s.gen, s.exp);
                Syls cf = pow(std::move(c), h.exp);
                push_word(pending, cf);
                pending.push_back(std::move(s));
            }
        }
        return out;
    }

    Syls mul(Syls a, const Syls& b) {
        a.insert(a.end(), b.begin(), b.end());
        return reduce(std::move(a));
    }

    Syls inv(const Syls& x) {
        Syls w;
        w.reserve(x.size());
        for (auto it = x.rbegin(); it != x.rend(); ++it) w.emplace_back(it->gen, -it->exp);
        return reduce(std::move(w));
    }

    Syls pow(Syls x, const Int& k) {
        if (k == 0 || x.empty()) return {};
        if (k < 0) return pow(inv(x), Int(-k));
        if (k == 1) return reduce(std::move(x));
        if (x.size() == 1) return reduce({Syllable(x[0].gen, x[0].exp * k)});
        if (commuting_support(x)) {
            for (Syllable& s : x) s.exp *= k;
            return reduce(std::move(x));
        }
        Syls acc;
        Syls base = std::move(x);
        Int e = k;
        while (true) {
            tick();
            if (boost::multiprecision::bit_test(e, 0)) acc = mul(std::move(acc), base);
            e >>= 1;
            if (e == 0) break;
            base = mul(base, base);
        }
        return acc;
    }

    /// y^{-1} x y.
    Syls conj_elem(const Syls& x, const Syls& y) {
        Syls w = inv(y);
        w.insert(w.end(), x.begin(), x.end());
        w.insert(w.end(), y.begin(), y.end());
        return reduce(std::move(w));
    }

    /// a_h^{a_g^e} as a collected word over a_{g+1}..a_n.
    Syls conj_power(int h, int g, const Int& e) {
        if (e == 0) return {Syllable(h, 1)};
        const bool positive = e > 0;
        Syls x = rel(h, g, positive);
        Int k = positive ? Int(e - 1) : Int(-e - 1);
        if (k == 0) return x;
        if (is_single(x, h)) return x;  // a_g fixes a_h, so any power does
        unsigned level = 0;
        while (k > 0) {
            tick();
            if (boost::multiprecision::bit_test(k, 0)) x = apply_aut(aut_square(g, positive, level), g, x);
            k >>= 1;
            ++level;
        }
        return x;
    }

    static Syls from_normal(const NormalWord& x) {
        Syls out;
        for (std::size_t i = 0; i < x.e.size(); ++i)
            if (x.e[i] != 0) out.emplace_back(static_cast<int>(i) + 1, x.e[i]);
        return out;
    }

    NormalWord to_normal(const Syls& out) const {
        NormalWord nf = NormalWord::identity(static_cast<std::size_t>(n_));
        for (const Syllable& s : out) nf.e[static_cast<std::size_t>(s.gen) - 1] = s.exp;
        return nf;
    }

private:
    struct Aut {
        std::vector<Syls> img;  // img[h - g - 1] = image of a_h, h in g+1..n
    };

    void tick() {
        if (--steps_ < 0) throw StepLimitError("collection step limit exceeded");
    }

    static bool is_single(const Syls& x, int gen) {
        return x.size() == 1 && x[0].gen == gen && x[0].exp == 1;
    }

    static void push_word(Syls& pending, const Syls& w) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) pending.push_back(*it);
    }

    // s.gen strictly exceeds everything in out; bring the exponent into
    // range and queue the power-relation tail u^q behind the syllable.
    void settle(Syls& out, Syls& pending, Syllable s) {
        if (const Int* r = ord_[static_cast<std::size_t>(s.gen)]) {
            if (s.exp < 0 || s.exp >= *r) {
                Int q, rem;
                floor_divmod(s.exp, *r, q, rem);
                const Syls& u = p_.power_nf_[static_cast<std::size_t>(s.gen)];
                if (!u.empty() && q != 0) push_word(pending, pow(u, q));
                s.exp = std::move(rem);
            }
        }
        if (s.exp != 0) out.push_back(std::move(s));
    }

    const Syls& rel(int j, int i, bool positive) const {
        assert(1 <= i && i < j && j <= n_);
        const auto& table = positive ? p_.conj_pos_ : p_.conj_neg_;
        return table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }

    bool commuting_support(const Syls& x) {
        support_.clear();
        for (const Syllable& s : x) support_.push_back(s.gen);
        std::sort(support_.begin(), support_.end());
        support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
        for (std::size_t a = 0; a < support_.size(); ++a)
            for (std::size_t b = a + 1; b < support_.size(); ++b)
                if (!is_single(rel(support_[b], support_[a], true), support_[b])) return false;
        return true;
    }

    Syls apply_aut(const Aut& a, int g, const Syls& x) {
        Syls acc;
        for (const Syllable& s : x) {
            tick();
            acc = mul(std::move(acc), pow(a.img[static_cast<std::size_t>(s.gen - g - 1)], s.exp));
        }
        return acc;
    }

    const Aut& aut_square(int g, bool positive, unsigned level) {
        auto& chain = aut_memo_[{g, positive}];
        if (chain.empty()) {
            Aut base;
            base.img.reserve(static_cast<std::size_t>(n_ - g));
            for (int h = g + 1; h <= n_; ++h) base.img.push_back(rel(h, g, positive));
            chain.push_back(std::move(base));
        }
        while (chain.size() <= level) {
            // chain.back() is only read before the push below; recursion from
            // apply_aut stays at conjugators > g, so it cannot reenter here.
            Aut next;
            next.img.reserve(static_cast<std::size_t>(n_ - g));
            for (int h = g + 1; h <= n_; ++h) {
                const Aut& prev = chain.back();
                next.img.push_back(apply_aut(prev, g, prev.img[static_cast<std::size_t>(h - g - 1)]));
            }
            chain.push_back(std::move(next));
        }
        return chain[level];
    }

    const PcPresentation& p_;
    int n_;
    std::vector<const Int*> ord_;
    std::int64_t steps_;
    std::vector<int> support_;
    std::map<std::pair<int, bool>, std::vector<Aut>> aut_memo_;
};

}  // namespace pcg
