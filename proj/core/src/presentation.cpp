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

#include "pcgroup/presentation.hpp"

#include <sstream>

#include "collector.hpp"
#include "pcgroup/errors.hpp"

namespace pcg {

PcPresentation::PcPresentation(int n) : n_(n) {
    if (n < 1) throw ShapeError("need at least one generator");
}

void PcPresentation::require_mutable() const {
    if (finalized_) throw ShapeError("presentation is finalized");
}

void PcPresentation::require_finalized() const {
    if (!finalized_) throw ShapeError("presentation is not finalized");
}

void PcPresentation::set_order(int i, Int r) {
    require_mutable();
    if (i < 1 || i > n_) throw ShapeError("order: generator index out of range");
    if (r < 2) throw ShapeError("order: relative order must be >= 2, got " + to_string(r));
    if (!orders_.emplace(i, std::move(r)).second) throw ShapeError("order: duplicate for generator " + std::to_string(i));
}

void PcPresentation::set_power_rhs(int i, Word w) {
    require_mutable();
    if (!orders_.count(i)) throw ShapeError("pow: generator " + std::to_string(i) + " has no relative order");
    validate_rhs(w, i, "pow " + std::to_string(i));
    if (!power_raw_.emplace(i, std::move(w)).second) throw ShapeError("pow: duplicate for generator " + std::to_string(i));
}

void PcPresentation::set_conj_rhs(int j, int i, bool positive, Word w) {
    require_mutable();
    if (!(1 <= i && i < j && j <= n_))
        throw ShapeError("conj " + std::to_string(j) + " " + std::to_string(i) + ": need 1 <= i < j <= n");
    validate_rhs(w, i, "conj " + std::to_string(j) + " " + (positive ? "" : "-") + std::to_string(i));
    ConjKey key{j, i, positive};
    if (conj_raw_.count(key))
        throw ShapeError("conj: duplicate relation " + std::to_string(j) + " " + (positive ? "" : "-") +
                         std::to_string(i));
    conj_raw_.emplace(key, ConjEntry{std::move(w), true});
}

void PcPresentation::validate_rhs(const Word& w, int min_gen_exclusive, const std::string& what) const {
    for (const Syllable& s : w.syls) {
        if (s.gen < 1 || s.gen > n_)
            throw ShapeError(what + ": right-hand side generator g" + std::to_string(s.gen) + " out of range");
        if (s.gen <= min_gen_exclusive)
            throw ShapeError(what + ": right-hand side generator index " + std::to_string(s.gen) +
                             " not greater than " + std::to_string(min_gen_exclusive));
        if (s.exp == 0) throw ShapeError(what + ": zero exponent on right-hand side");
    }
}

bool PcPresentation::is_finite_gen(int i) const { return orders_.count(i) != 0; }

const Int* PcPresentation::relative_order(int i) const {
    auto it = orders_.find(i);
    return it == orders_.end() ? nullptr : &it->second;
}

int PcPresentation::num_finite_gens() const { return static_cast<int>(orders_.size()); }

const std::vector<Syllable>& PcPresentation::power_nf(int i) const {
    require_finalized();
    if (i < 1 || i > n_) throw DomainError("power_nf: index out of range");
    return power_nf_[static_cast<std::size_t>(i)];
}

const std::vector<Syllable>& PcPresentation::conj_nf(int j, int i, bool positive) const {
    require_finalized();
    if (!(1 <= i && i < j && j <= n_)) throw DomainError("conj_nf: bad index pair");
    return positive ? conj_pos_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                    : conj_neg_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

void PcPresentation::finalize() {
    require_mutable();

    // Presence checks first: every pair needs the positive relation, and the
    // negative one too when the conjugator has infinite order.
    for (int j = 2; j <= n_; ++j)
        for (int i = 1; i < j; ++i) {
            if (!conj_raw_.count({j, i, true}))
                throw ShapeError("missing relation conj " + std::to_string(j) + " " + std::to_string(i));
            if (!orders_.count(i) && !conj_raw_.count({j, i, false}))
                throw ShapeError("missing relation conj " + std::to_string(j) + " -" + std::to_string(i) +
                                 " (conjugator g" + std::to_string(i) + " has infinite order)");
        }

    const std::size_t dim = static_cast<std::size_t>(n_) + 1;
    power_nf_.assign(dim, {});
    conj_pos_.assign(dim, std::vector<std::vector<Syllable>>(dim));
    conj_neg_.assign(dim, std::vector<std::vector<Syllable>>(dim));
    finalized_ = true;  // tables fill bottom-up below; collector reads them

    // Normalize right-hand sides and derive missing negatives, walking the
    // conjugator index downward so every lookup lands on a finished level.
    CollectOptions opt;
    Collector col(*this, opt);
    auto to_syls = [](const Word& w) { return w.syls; };
    auto to_word = [](const std::vector<Syllable>& s) { return Word(s); };
    try {
        for (int level = n_; level >= 1; --level) {
            if (auto it = power_raw_.find(level); it != power_raw_.end())
                power_nf_[static_cast<std::size_t>(level)] = col.reduce(to_syls(it->second));
            for (int j = level + 1; j <= n_; ++j) {
                conj_pos_[static_cast<std::size_t>(j)][static_cast<std::size_t>(level)] =
                    col.reduce(to_syls(conj_raw_.at({j, level, true}).rhs));
                if (auto it = conj_raw_.find({j, level, false}); it != conj_raw_.end())
                    conj_neg_[static_cast<std::size_t>(j)][static_cast<std::size_t>(level)] =
                        col.reduce(to_syls(it->second.rhs));
            }
            if (auto ord = orders_.find(level); ord != orders_.end()) {
                for (int j = level + 1; j <= n_; ++j) {
                    if (conj_raw_.count({j, level, false})) continue;
                    // a_level^{-1} = a_level^{r-1} u^{-1}, so conjugate a_j by
                    // a_level another r-1 times, then by u^{-1} when the power
                    // relation is nontrivial.
                    std::vector<Syllable> x = col.conj_power(j, level, ord->second - 1);
                    const std::vector<Syllable>& u = power_nf_[static_cast<std::size_t>(level)];
                    if (!u.empty()) x = col.conj_elem(x, col.inv(u));
                    conj_neg_[static_cast<std::size_t>(j)][static_cast<std::size_t>(level)] = x;
                    conj_raw_.emplace(ConjKey{j, level, false}, ConjEntry{to_word(x), false});
                }
            }
        }
    } catch (...) {
        finalized_ = false;
        throw;
    }
}

bool PcPresentation::operator==(const PcPresentation& o) const {
    if (n_ != o.n_ || orders_ != o.orders_ || power_raw_ != o.power_raw_) return false;
    auto explicit_only = [](const std::map<ConjKey, ConjEntry>& m) {
        std::map<ConjKey, Word> out;
        for (const auto& [k, e] : m)
            if (e.explicit_input) out.emplace(k, e.rhs);
        return out;
    };
    return explicit_only(conj_raw_) == explicit_only(o.conj_raw_);
}

// --- text format ---

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> logical_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream probe(raw);
        std::string tok;
        if (probe >> tok)
            lines.push_back({no, raw});
    }
    return lines;
}

}  // namespace

PcPresentation PcPresentation::parse(const std::string& text) {
    std::vector<Line> lines = logical_lines(text);
    std::size_t pos = 0;
    auto fail = [&](int line, const std::string& msg) -> void { throw ParseError(line, msg); };

    if (pos >= lines.size()) throw ParseError(0, "empty presentation file");
    {
        std::istringstream in(lines[pos].text);
        std::string a, b, extra;
        in >> a >> b;
        if (a != "pcp" || b != "v1" || (in >> extra)) fail(lines[pos].number, "expected header 'pcp v1'");
        ++pos;
    }
    if (pos >= lines.size()) throw ParseError(0, "missing 'gens <n>' line");
    int n = 0;
    {
        std::istringstream in(lines[pos].text);
        std::string kw;
        in >> kw >> n;
        if (kw != "gens" || in.fail() || n < 1) fail(lines[pos].number, "expected 'gens <n>' with n >= 1");
        ++pos;
    }

    PcPresentation p(n);
    struct PendingRel {
        int line;
        bool is_pow;
        int j, i;
        bool positive;
        std::string word;
    };
    std::vector<PendingRel> rels;

    for (; pos < lines.size(); ++pos) {
        const Line& ln = lines[pos];
        std::istringstream in(ln.text);
        std::string kw;
        in >> kw;
        try {
            if (kw == "order") {
                long long i = 0;
                std::string r;
                if (!(in >> i >> r)) fail(ln.number, "expected 'order <i> <r>'");
                p.set_order(static_cast<int>(i), parse_int(r));
            } else if (kw == "pow" || kw == "conj") {
                std::string rest;
                std::getline(in, rest);
                auto eq = rest.find('=');
                if (eq == std::string::npos) fail(ln.number, "expected '=' in relation");
                std::istringstream lhs(rest.substr(0, eq));
                PendingRel rel{ln.number, kw == "pow", 0, 0, true, rest.substr(eq + 1)};
                if (rel.is_pow) {
                    if (!(lhs >> rel.i)) fail(ln.number, "expected 'pow <i> = <word>'");
                } else {
                    std::string jtok, itok;
                    if (!(lhs >> jtok >> itok)) fail(ln.number, "expected 'conj <j> <i> = <word>'");
                    rel.j = std::stoi(jtok);
                    if (!itok.empty() && itok[0] == '-') {
                        rel.positive = false;
                        itok.erase(0, 1);
                    }
                    rel.i = std::stoi(itok);
                }
                std::string lhs_extra;
                if (lhs >> lhs_extra) fail(ln.number, "unexpected token before '='");
                rels.push_back(std::move(rel));
            } else {
                fail(ln.number, "unknown directive '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(ln.number, e.what());
        } catch (const std::exception& e) {
            throw ParseError(ln.number, e.what());
        }
    }

    for (const PendingRel& rel : rels) {
        try {
            Word w = Word::parse(rel.word, n);
            if (rel.is_pow)
                p.set_power_rhs(rel.i, std::move(w));
            else
                p.set_conj_rhs(rel.j, rel.i, rel.positive, std::move(w));
        } catch (const Error& e) {
            throw ParseError(rel.line, e.what());
        }
    }

    p.finalize();
    return p;
}

std::string PcPresentation::serialize() const {
    std::string out = "pcp v1\ngens " + std::to_string(n_) + "\n";
    for (const auto& [i, r] : orders_) out += "order " + std::to_string(i) + " " + to_string(r) + "\n";
    for (const auto& [i, w] : power_raw_)
        if (!w.empty()) out += "pow " + std::to_string(i) + " = " + w.str() + "\n";
    for (int j = 2; j <= n_; ++j)
        for (int i = 1; i < j; ++i) {
            out += "conj " + std::to_string(j) + " " + std::to_string(i) + " = " +
                   conj_raw_.at({j, i, true}).rhs.str() + "\n";
            if (auto it = conj_raw_.find({j, i, false}); it != conj_raw_.end() && it->second.explicit_input)
                out += "conj " + std::to_string(j) + " -" + std::to_string(i) + " = " + it->second.rhs.str() +
                       "\n";
        }
    return out;
}

}  // namespace pcg
