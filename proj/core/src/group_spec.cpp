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

#include "pcgroup/group_spec.hpp"

#include <fstream>
#include <sstream>

#include "pcgroup/cyclotomic.hpp"
#include "pcgroup/errors.hpp"

namespace pcg {

namespace {

Word single(int gen, Int exp = Int(1)) { return Word({Syllable(gen, std::move(exp))}); }

/// Sparse word from a coefficient row, generators offset .. offset+len-1.
Word row_word(const IntMatrix& m, int row, int offset) {
    Word w;
    for (int c = 0; c < m.dim(); ++c)
        if (m.at(row, c) != 0) w.syls.emplace_back(offset + c, m.at(row, c));
    return w;
}

Int product_of_orders(const PcPresentation& p) {
    Int order = 1;
    for (const auto& [i, r] : p.orders()) {
        (void)i;
        order *= r;
    }
    return order;
}

bool all_finite(const PcPresentation& p) { return p.num_finite_gens() == p.size(); }

}  // namespace

NormalWord GroupSpec::gen(int i) const {
    if (i < 1 || i > pres.size()) throw DomainError("generator index out of range");
    NormalWord nf = identity();
    nf.e[static_cast<std::size_t>(i) - 1] = 1;
    return nf;
}

GroupSpec dihedral(int m) {
    if (m < 3) throw DomainError("dihedral: need m >= 3");
    PcPresentation p(2);
    p.set_order(1, 2);
    p.set_order(2, m);
    p.set_conj_rhs(2, 1, true, single(2, m - 1));
    p.set_conj_rhs(2, 1, false, single(2, m - 1));  // a_1 is an involution
    p.finalize();

    GroupSpec g(std::move(p));
    g.name = m == 4 ? "d4" : "dihedral(" + std::to_string(m) + ")";
    g.order = 2 * m;
    std::vector<IntMatrix> emb;
    if (m == 4) {
        IntMatrix refl(2), rot(2);
        refl.at(0, 0) = 1;
        refl.at(1, 1) = -1;
        rot.at(0, 1) = -1;
        rot.at(1, 0) = 1;
        emb = {refl, rot};
    } else {
        // permutation action on the m vertices: rotation i -> i+1,
        // reflection i -> m-i (mod m)
        IntMatrix refl(m), rot(m);
        for (int i = 0; i < m; ++i) {
            rot.at(i, (i + 1) % m) = 1;
            refl.at(i, (m - i) % m) = 1;
        }
        emb = {refl, rot};
    }
    g.embedding = std::move(emb);
    return g;
}

GroupSpec heisenberg() {
    PcPresentation p(3);
    p.set_conj_rhs(2, 1, true, Word({Syllable(2, 1), Syllable(3, 1)}));
    p.set_conj_rhs(2, 1, false, Word({Syllable(2, 1), Syllable(3, -1)}));
    p.set_conj_rhs(3, 1, true, single(3));
    p.set_conj_rhs(3, 1, false, single(3));
    p.set_conj_rhs(3, 2, true, single(3));
    p.set_conj_rhs(3, 2, false, single(3));
    p.finalize();

    GroupSpec g(std::move(p));
    g.name = "heisenberg";
    IntMatrix m1 = IntMatrix::identity(3), m2 = IntMatrix::identity(3), m3 = IntMatrix::identity(3);
    m1.at(0, 1) = -1;
    m2.at(1, 2) = 1;
    m3.at(0, 2) = 1;
    g.embedding = std::vector<IntMatrix>{m1, m2, m3};
    return g;
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
    const int na = a.pres.size();
    const int nb = b.pres.size();
    PcPresentation p(na + nb);

    for (const auto& [i, r] : a.pres.orders()) p.set_order(i, r);
    for (const auto& [i, r] : b.pres.orders()) p.set_order(i + na, r);

    auto shift = [&](const Word& w, int off) {
        Word out = w;
        for (Syllable& s : out.syls) s.gen += off;
        return out;
    };

    for (const auto& [i, w] : a.pres.power_raw()) p.set_power_rhs(i, w);
    for (const auto& [i, w] : b.pres.power_raw()) p.set_power_rhs(i + na, shift(w, na));

    for (const auto& [key, entry] : a.pres.conj_raw())
        if (entry.explicit_input) p.set_conj_rhs(key.j, key.i, key.positive, entry.rhs);
    for (const auto& [key, entry] : b.pres.conj_raw())
        if (entry.explicit_input) p.set_conj_rhs(key.j + na, key.i + na, key.positive, shift(entry.rhs, na));

    // the factors commute elementwise
    for (int i = 1; i <= na; ++i)
        for (int j = na + 1; j <= na + nb; ++j) {
            p.set_conj_rhs(j, i, true, single(j));
            p.set_conj_rhs(j, i, false, single(j));
        }
    p.finalize();

    GroupSpec g(std::move(p));
    g.name = a.name + " x " + b.name;
    if (a.order && b.order) g.order = *a.order * *b.order;
    if (a.embedding && b.embedding) {
        const int da = (*a.embedding)[0].dim();
        const int db = (*b.embedding)[0].dim();
        std::vector<IntMatrix> emb;
        emb.reserve(static_cast<std::size_t>(na + nb));
        for (int i = 0; i < na; ++i) {
            IntMatrix m = IntMatrix::identity(da + db);
            for (int r = 0; r < da; ++r)
                for (int c = 0; c < da; ++c) m.at(r, c) = (*a.embedding)[static_cast<std::size_t>(i)].at(r, c);
            emb.push_back(std::move(m));
        }
        for (int i = 0; i < nb; ++i) {
            IntMatrix m = IntMatrix::identity(da + db);
            for (int r = 0; r < db; ++r)
                for (int c = 0; c < db; ++c)
                    m.at(da + r, da + c) = (*b.embedding)[static_cast<std::size_t>(i)].at(r, c);
            emb.push_back(std::move(m));
        }
        g.embedding = std::move(emb);
    }
    return g;
}

GroupSpec cyclotomic_group(int r) {
    require_cyclotomic(r);
    const int d = cyclotomic_phi(r);

    std::vector<CyclotomicInt> units;
    units.push_back(torsion_unit(r));
    for (CyclotomicInt& u : fundamental_cyclotomic_units(r)) units.push_back(std::move(u));
    const int k = static_cast<int>(units.size());
    const int n = k + d;

    std::vector<IntMatrix> action, action_inv;
    for (const CyclotomicInt& u : units) {
        action.push_back(unit_matrix(r, u));
        action_inv.push_back(action.back().inverse());
    }

    PcPresentation p(n);
    p.set_order(1, torsion_order(r));
    for (int j = 2; j <= k; ++j)
        for (int i = 1; i < j; ++i) {
            p.set_conj_rhs(j, i, true, single(j));
            p.set_conj_rhs(j, i, false, single(j));
        }
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j) {
            const int row = j - k - 1;
            p.set_conj_rhs(j, i, true, row_word(action[static_cast<std::size_t>(i) - 1], row, k + 1));
            p.set_conj_rhs(j, i, false, row_word(action_inv[static_cast<std::size_t>(i) - 1], row, k + 1));
        }
    for (int j = k + 2; j <= n; ++j)
        for (int i = k + 1; i < j; ++i) {
            p.set_conj_rhs(j, i, true, single(j));
            p.set_conj_rhs(j, i, false, single(j));
        }
    p.finalize();

    GroupSpec g(std::move(p));
    g.name = "cyclotomic(" + std::to_string(r) + ")";
    std::vector<IntMatrix> emb;
    emb.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) {
        IntMatrix m = IntMatrix::identity(d + 1);
        for (int rr = 0; rr < d; ++rr)
            for (int cc = 0; cc < d; ++cc) m.at(rr, cc) = action[static_cast<std::size_t>(i)].at(rr, cc);
        emb.push_back(std::move(m));
    }
    for (int c = 0; c < d; ++c) {
        IntMatrix m = IntMatrix::identity(d + 1);
        m.at(d, c) = 1;  // translation by the basis vector zeta^c
        emb.push_back(std::move(m));
    }
    g.embedding = std::move(emb);
    return g;
}

IntMatrix matrix_of_word(const GroupSpec& g, const Word& w) {
    if (!g.embedding) throw DomainError("group '" + g.name + "' has no matrix embedding");
    const auto& emb = *g.embedding;
    IntMatrix acc = IntMatrix::identity(emb[0].dim());
    for (const Syllable& s : w.syls) {
        if (s.gen < 1 || s.gen > g.num_gens()) throw DomainError("word generator out of range");
        acc = acc.mul(emb[static_cast<std::size_t>(s.gen) - 1].pow(s.exp));
    }
    return acc;
}

bool verify_embedding(const GroupSpec& g) {
    if (!g.embedding) throw DomainError("group '" + g.name + "' has no matrix embedding");
    const auto& emb = *g.embedding;
    const PcPresentation& p = g.pres;
    auto eval = [&](const std::vector<Syllable>& syls) {
        IntMatrix acc = IntMatrix::identity(emb[0].dim());
        for (const Syllable& s : syls) acc = acc.mul(emb[static_cast<std::size_t>(s.gen) - 1].pow(s.exp));
        return acc;
    };
    for (int i = 1; i <= p.size(); ++i)
        if (const Int* r = p.relative_order(i)) {
            if (emb[static_cast<std::size_t>(i) - 1].pow(*r) != eval(p.power_nf(i))) return false;
        }
    for (int j = 2; j <= p.size(); ++j)
        for (int i = 1; i < j; ++i) {
            const IntMatrix& mi = emb[static_cast<std::size_t>(i) - 1];
            const IntMatrix& mj = emb[static_cast<std::size_t>(j) - 1];
            IntMatrix mi_inv = mi.inverse();
            if (mi_inv.mul(mj).mul(mi) != eval(p.conj_nf(j, i, true))) return false;
            if (mi.mul(mj).mul(mi_inv) != eval(p.conj_nf(j, i, false))) return false;
        }
    return true;
}

std::string serialize_group(const GroupSpec& g) {
    std::string out = g.pres.serialize();
    if (g.embedding) {
        out += "[embedding]\n";
        for (std::size_t i = 0; i < g.embedding->size(); ++i)
            out += "mat " + std::to_string(i + 1) + " = " + (*g.embedding)[i].str() + "\n";
    }
    return out;
}

GroupSpec parse_group(const std::string& text, const std::string& name) {
    std::string pres_part, emb_part;
    std::istringstream in(text);
    std::string line;
    bool in_embedding = false;
    int emb_line = 0, line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        if (auto hash = stripped.find('#'); hash != std::string::npos) stripped.erase(hash);
        std::istringstream probe(stripped);
        std::string tok;
        if ((probe >> tok) && tok == "[embedding]") {
            in_embedding = true;
            emb_line = line_no;
            continue;
        }
        (in_embedding ? emb_part : pres_part) += line + "\n";
    }

    GroupSpec g(PcPresentation::parse(pres_part));
    g.name = name;
    if (in_embedding) {
        std::vector<IntMatrix> emb(static_cast<std::size_t>(g.num_gens()));
        std::vector<bool> seen(static_cast<std::size_t>(g.num_gens()), false);
        std::istringstream ein(emb_part);
        int no = emb_line;
        while (std::getline(ein, line)) {
            ++no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string kw;
            if (!(ls >> kw)) continue;
            if (kw != "mat") throw ParseError(no, "expected 'mat <i> = <rows>'");
            int idx = 0;
            std::string eq;
            if (!(ls >> idx >> eq) || eq != "=") throw ParseError(no, "expected 'mat <i> = <rows>'");
            if (idx < 1 || idx > g.num_gens()) throw ParseError(no, "mat index out of range");
            std::string rows;
            std::getline(ls, rows);
            auto start = rows.find_first_not_of(" \t");
            if (start == std::string::npos) throw ParseError(no, "mat line has no entries");
            try {
                emb[static_cast<std::size_t>(idx) - 1] = IntMatrix::parse(rows.substr(start));
            } catch (const Error& e) {
                throw ParseError(no, e.what());
            }
            seen[static_cast<std::size_t>(idx) - 1] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) throw ParseError(0, "embedding is missing mat " + std::to_string(i + 1));
        const int dim = emb[0].dim();
        for (const IntMatrix& m : emb)
            if (m.dim() != dim) throw ParseError(0, "embedding matrices have mixed dimensions");
        g.embedding = std::move(emb);
    }
    if (all_finite(g.pres)) g.order = product_of_orders(g.pres);
    return g;
}

namespace {

GroupSpec product_from_token(const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos) throw DomainError("product token needs two factors: product:<a>,<b>");
    std::string a = spec.substr(0, comma), b = spec.substr(comma + 1);
    if (a.rfind("product:", 0) == 0 || b.rfind("product:", 0) == 0)
        throw DomainError("nested product tokens are not supported");
    return direct_product(builtin_group(a), builtin_group(b));
}

}  // namespace

bool is_builtin_token(const std::string& token) {
    return token == "d4" || token == "heisenberg" || token.rfind("dihedral:", 0) == 0 ||
           token.rfind("cyclotomic:", 0) == 0 || token.rfind("product:", 0) == 0;
}

GroupSpec builtin_group(const std::string& token) {
    try {
        if (token == "d4") return dihedral(4);
        if (token == "heisenberg") return heisenberg();
        if (token.rfind("dihedral:", 0) == 0) return dihedral(std::stoi(token.substr(9)));
        if (token.rfind("cyclotomic:", 0) == 0) return cyclotomic_group(std::stoi(token.substr(11)));
        if (token.rfind("product:", 0) == 0) return product_from_token(token.substr(8));
    } catch (const std::invalid_argument&) {
        throw DomainError("bad number in builtin token '" + token + "'");
    } catch (const std::out_of_range&) {
        throw DomainError("bad number in builtin token '" + token + "'");
    }
    throw DomainError("unknown builtin group '" + token + "'");
}

GroupSpec load_group(const std::string& ref) {
    if (is_builtin_token(ref)) return builtin_group(ref);
    std::ifstream in(ref);
    if (!in) throw ParseError(0, "cannot read group file '" + ref + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = ref;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name.erase(0, slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) name.erase(dot);
    return parse_group(buf.str(), name);
}

}  // namespace pcg
