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

#include "pcgroup/word.hpp"

#include <algorithm>
#include <sstream>

#include "pcgroup/errors.hpp"

namespace pcg {

Int parse_int(const std::string& text) {
    if (text.empty()) throw ParseError(0, "empty integer");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw ParseError(0, "bad integer '" + text + "'");
    for (; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') throw ParseError(0, "bad integer '" + text + "'");
    return Int(text);
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Word Word::parse(const std::string& text, int max_gen) {
    Word w;
    for (const std::string& tok : split_ws(text)) {
        if (tok == "id") continue;
        if (tok.size() < 2 || tok[0] != 'g')
            throw ParseError(0, "bad word token '" + tok + "'");
        std::size_t caret = tok.find('^');
        std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError(0, "bad generator index in '" + tok + "'");
        if (idx.size() > 9) throw ParseError(0, "generator index out of range in '" + tok + "'");
        int gen = std::stoi(idx);
        Int exp = 1;
        if (caret != std::string::npos) {
            if (caret + 1 >= tok.size()) throw ParseError(0, "missing exponent in '" + tok + "'");
            exp = parse_int(tok.substr(caret + 1));
        }
        if (gen < 1) throw ParseError(0, "generator index must be >= 1 in '" + tok + "'");
        if (max_gen > 0 && gen > max_gen)
            throw ParseError(0, "generator index " + std::to_string(gen) + " exceeds gens " +
                                    std::to_string(max_gen));
        if (exp == 0) throw ParseError(0, "zero exponent in '" + tok + "'");
        w.syls.emplace_back(gen, std::move(exp));
    }
    return w;
}

std::string Word::str() const {
    if (syls.empty()) return "id";
    std::string out;
    for (std::size_t i = 0; i < syls.size(); ++i) {
        if (i) out += ' ';
        out += 'g';
        out += std::to_string(syls[i].gen);
        if (syls[i].exp != 1) {
            out += '^';
            out += to_string(syls[i].exp);
        }
    }
    return out;
}

NormalWord NormalWord::parse(const std::string& text, int expect_len) {
    NormalWord nf;
    std::string cur;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            nf.e.push_back(pcg::parse_int(cur));
            cur.clear();
        } else {
            cur += text[i];
        }
    }
    if (expect_len > 0 && nf.e.size() != static_cast<std::size_t>(expect_len))
        throw ParseError(0, "normal word has " + std::to_string(nf.e.size()) + " entries, expected " +
                                std::to_string(expect_len));
    return nf;
}

std::string NormalWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ',';
        out += to_string(e[i]);
    }
    return out;
}

Word embed(const NormalWord& x) {
    Word w;
    for (std::size_t i = 0; i < x.e.size(); ++i)
        if (x.e[i] != 0) w.syls.emplace_back(static_cast<int>(i) + 1, x.e[i]);
    return w;
}

SubgroupWord SubgroupWord::inverse() const {
    SubgroupWord out;
    out.syls.reserve(syls.size());
    for (auto it = syls.rbegin(); it != syls.rend(); ++it) out.syls.emplace_back(it->first, -it->second);
    return out;
}

std::string SubgroupWord::str() const {
    if (syls.empty()) return "id";
    std::string out;
    for (std::size_t i = 0; i < syls.size(); ++i) {
        if (i) out += ' ';
        out += 'p';
        out += std::to_string(syls[i].first);
        if (syls[i].second != 1) {
            out += '^';
            out += to_string(syls[i].second);
        }
    }
    return out;
}

}  // namespace pcg
