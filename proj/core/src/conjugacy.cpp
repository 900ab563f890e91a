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

#include "pcgroup/conjugacy.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "pcgroup/errors.hpp"

namespace pcg {

namespace {

void check_deadline(const SearchLimits& limits) {
    if (limits.deadline && std::chrono::steady_clock::now() > *limits.deadline)
        throw TimeoutError("conjugacy search timed out");
}

// An element together with its spelling over the original acting generators.
struct ExprElem {
    NormalWord nf;
    SubgroupWord expr;
};

std::vector<ExprElem> as_expr_elems(const ActingSet& acting) {
    std::vector<ExprElem> out;
    out.reserve(acting.gens.size());
    for (std::size_t i = 0; i < acting.gens.size(); ++i) {
        ExprElem e;
        e.nf = acting.gens[i];
        e.expr.push(static_cast<int>(i), 1);
        out.push_back(std::move(e));
    }
    return out;
}

struct InternalWitness {
    ExprElem conjugator;
    std::vector<ExprElem> centralizer;
};

/// Appends the acting element's own spelling (or its formal inverse), so
/// expressions always stay over the original published generators even when
/// the acting set is itself made of derived elements.
void append_letter(SubgroupWord& expr, const ExprElem& gen, int sign) {
    if (sign > 0)
        expr += gen.expr;
    else
        expr += gen.expr.inverse();
}

/// Full orbit of r under conjugation by `acting`, Schreier generators for
/// the stabilizer of r, then everything shifted onto s by the transversal.
std::optional<InternalWitness> orbit_search(const GroupSpec& g, const std::vector<ExprElem>& acting,
                                            const NormalWord& r, const NormalWord& s,
                                            const SearchLimits& limits) {
    const PcPresentation& p = g.pres;
    const CollectOptions& co = limits.collect;

    std::vector<NormalWord> inv_gens;
    inv_gens.reserve(acting.size());
    for (const ExprElem& a : acting) inv_gens.push_back(inverse(p, a.nf, co));

    struct Point {
        NormalWord nf;
        ExprElem transversal;
    };
    std::vector<Point> points;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<ExprElem> schreier;
    std::unordered_set<std::string> schreier_seen;

    points.push_back({r, {NormalWord::identity(r.size()), {}}});
    index.emplace(r.str(), 0);

    for (std::size_t head = 0; head < points.size(); ++head) {
        check_deadline(limits);
        for (std::size_t gi = 0; gi < acting.size(); ++gi) {
            for (int sign : {+1, -1}) {
                const NormalWord& act = sign > 0 ? acting[gi].nf : inv_gens[gi];
                NormalWord next = conjugate(p, points[head].nf, act, co);
                std::string key = next.str();
                auto it = index.find(key);
                if (it == index.end()) {
                    if (points.size() >= limits.orbit_cap)
                        throw CapError("orbit cap exceeded (" + std::to_string(limits.orbit_cap) + " points)");
                    ExprElem t;
                    t.nf = multiply(p, points[head].transversal.nf, act, co);
                    t.expr = points[head].transversal.expr;
                    append_letter(t.expr, acting[gi], sign);
                    index.emplace(std::move(key), points.size());
                    points.push_back({std::move(next), std::move(t)});
                } else {
                    // Schreier generator t_p * a * t_q^{-1}, a stabilizer
                    // element of r.
                    const Point& q = points[it->second];
                    NormalWord sg = multiply(p, multiply(p, points[head].transversal.nf, act, co),
                                             inverse(p, q.transversal.nf, co), co);
                    if (sg.is_identity()) continue;
                    std::string skey = sg.str();
                    if (!schreier_seen.insert(std::move(skey)).second) continue;
                    ExprElem e;
                    e.nf = std::move(sg);
                    e.expr = points[head].transversal.expr;
                    append_letter(e.expr, acting[gi], sign);
                    e.expr += q.transversal.expr.inverse();
                    schreier.push_back(std::move(e));
                }
            }
        }
    }

    auto it = index.find(s.str());
    if (it == index.end()) return std::nullopt;

    InternalWitness w;
    w.conjugator = points[it->second].transversal;
    // stabilizer of r conjugated by t_s is the stabilizer of s
    for (const ExprElem& sg : schreier) {
        ExprElem c;
        c.nf = conjugate(p, sg.nf, w.conjugator.nf, co);
        c.expr = w.conjugator.expr.inverse();
        c.expr += sg.expr;
        c.expr += w.conjugator.expr;
        w.centralizer.push_back(std::move(c));
    }

    if (conjugate(p, r, w.conjugator.nf, co) != s) throw Error("internal: unsound orbit witness");
    return w;
}

/// Breadth-first search over words of length <= max_length in the acting
/// generators; accept() decides. Generators in list order, positive letter
/// first, so the found word is deterministic.
template <typename Accept>
std::optional<ExprElem> bounded_search(const GroupSpec& g, const std::vector<ExprElem>& acting,
                                       int max_length, const SearchLimits& limits, Accept&& accept) {
    if (max_length < 1) throw DomainError("bounded search needs max_length >= 1");
    const PcPresentation& p = g.pres;
    const CollectOptions& co = limits.collect;

    std::vector<NormalWord> inv_gens;
    inv_gens.reserve(acting.size());
    for (const ExprElem& a : acting) inv_gens.push_back(inverse(p, a.nf, co));

    ExprElem identity{NormalWord::identity(static_cast<std::size_t>(p.size())), {}};
    if (accept(identity.nf)) return identity;

    std::unordered_set<std::string> visited;
    visited.insert(identity.nf.str());
    std::deque<std::pair<ExprElem, int>> queue;
    queue.emplace_back(std::move(identity), 0);

    std::uint64_t ticks = 0;
    while (!queue.empty()) {
        auto [cur, depth] = std::move(queue.front());
        queue.pop_front();
        if (depth == max_length) continue;
        for (std::size_t gi = 0; gi < acting.size(); ++gi) {
            for (int sign : {+1, -1}) {
                if ((++ticks & 63u) == 0) check_deadline(limits);
                const NormalWord& act = sign > 0 ? acting[gi].nf : inv_gens[gi];
                NormalWord next = multiply(p, cur.nf, act, co);
                if (!visited.insert(next.str()).second) continue;
                if (visited.size() > limits.visited_cap)
                    throw CapError("visited-set cap exceeded (" + std::to_string(limits.visited_cap) + ")");
                ExprElem e;
                e.nf = std::move(next);
                e.expr = cur.expr;
                append_letter(e.expr, acting[gi], sign);
                if (accept(e.nf)) return e;
                queue.emplace_back(std::move(e), depth + 1);
            }
        }
    }
    return std::nullopt;
}

ConjugacyWitness to_public(InternalWitness w) {
    ConjugacyWitness out;
    out.conjugator = std::move(w.conjugator.nf);
    out.conjugator_expr = std::move(w.conjugator.expr);
    for (ExprElem& c : w.centralizer) {
        out.centralizer_gens.push_back(std::move(c.nf));
        out.centralizer_exprs.push_back(std::move(c.expr));
    }
    return out;
}

void require_acting(const ActingSet& acting) {
    if (acting.gens.empty()) throw DomainError("acting set must be nonempty");
}

}  // namespace

ActingSet ActingSet::whole_group(const GroupSpec& g) {
    ActingSet out;
    for (int i = 1; i <= g.num_gens(); ++i) out.gens.push_back(g.gen(i));
    return out;
}

std::vector<NormalWord> enumerate_elements(const GroupSpec& g, std::uint64_t cap) {
    const PcPresentation& p = g.pres;
    if (p.num_finite_gens() != p.size())
        throw DomainError("group '" + g.name + "' is infinite; cannot enumerate");
    Int order = 1;
    for (const auto& [i, r] : p.orders()) {
        (void)i;
        order *= r;
    }
    if (order > cap)
        throw CapError("group order " + to_string(order) + " exceeds enumeration cap " + std::to_string(cap));

    std::vector<NormalWord> out;
    const int n = p.size();
    NormalWord cur = NormalWord::identity(static_cast<std::size_t>(n));
    while (true) {
        out.push_back(cur);
        int pos = n - 1;
        // odometer, last coordinate fastest: lexicographic ascending
        while (pos >= 0) {
            cur.e[static_cast<std::size_t>(pos)] += 1;
            if (cur.e[static_cast<std::size_t>(pos)] < *p.relative_order(pos + 1)) break;
            cur.e[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<NormalWord> subgroup_closure(const GroupSpec& g, const std::vector<NormalWord>& gens,
                                         std::uint64_t cap) {
    const PcPresentation& p = g.pres;
    std::vector<NormalWord> out;
    std::unordered_set<std::string> seen;
    NormalWord id = NormalWord::identity(static_cast<std::size_t>(p.size()));
    out.push_back(id);
    seen.insert(id.str());
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const NormalWord& gen : gens) {
            NormalWord next = multiply(p, out[head], gen);
            if (!seen.insert(next.str()).second) continue;
            if (out.size() + 1 > cap) throw CapError("subgroup closure cap exceeded");
            out.push_back(std::move(next));
        }
    }
    return out;
}

std::optional<ConjugacyWitness> conjugacy_search_finite(const GroupSpec& g, const ActingSet& acting,
                                                        const NormalWord& r, const NormalWord& s,
                                                        const SearchLimits& limits) {
    require_acting(acting);
    auto w = orbit_search(g, as_expr_elems(acting), r, s, limits);
    if (!w) return std::nullopt;
    return to_public(std::move(*w));
}

std::optional<ConjugacyWitness> conjugacy_search_bounded(const GroupSpec& g, const ActingSet& acting,
                                                         const NormalWord& r, const NormalWord& s,
                                                         int max_length, const SearchLimits& limits) {
    require_acting(acting);
    const PcPresentation& p = g.pres;
    auto found = bounded_search(g, as_expr_elems(acting), max_length, limits,
                                [&](const NormalWord& cand) { return conjugate(p, r, cand, limits.collect) == s; });
    if (!found) return std::nullopt;
    ConjugacyWitness out;
    out.conjugator = std::move(found->nf);
    out.conjugator_expr = std::move(found->expr);
    return out;
}

Solver Solver::parse(const std::string& text) {
    if (text == "finite") return finite();
    if (text.rfind("bounded:", 0) == 0) {
        try {
            int L = std::stoi(text.substr(8));
            if (L < 1) throw DomainError("solver bound must be >= 1");
            return bounded(L);
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw DomainError("bad solver '" + text + "' (expected finite or bounded:<L>)");
}

std::string Solver::str() const {
    return kind == Kind::Finite ? "finite" : "bounded:" + std::to_string(bound);
}

std::optional<ConjugacyWitness> multiple_conjugacy(const GroupSpec& g, const ActingSet& acting,
                                                   const std::vector<NormalWord>& rs,
                                                   const std::vector<NormalWord>& ss,
                                                   const Solver& solver, const SearchLimits& limits,
                                                   int* failed_step) {
    require_acting(acting);
    if (rs.size() != ss.size()) throw DomainError("multiple conjugacy: tuple length mismatch");
    if (rs.empty()) throw DomainError("multiple conjugacy: empty tuples");
    const PcPresentation& p = g.pres;
    const CollectOptions& co = limits.collect;

    const std::vector<ExprElem> original = as_expr_elems(acting);
    std::vector<ExprElem> chain_acting = original;  // finite solver: shrinks to centralizers
    ExprElem a{NormalWord::identity(static_cast<std::size_t>(p.size())), {}};
    std::vector<ExprElem> centralizer;

    for (std::size_t j = 0; j < rs.size(); ++j) {
        NormalWord moved = conjugate(p, rs[j], a.nf, co);
        if (solver.kind == Solver::Kind::Finite) {
            auto step = orbit_search(g, chain_acting, moved, ss[j], limits);
            if (!step) {
                if (failed_step) *failed_step = static_cast<int>(j);
                return std::nullopt;
            }
            a.nf = multiply(p, a.nf, step->conjugator.nf, co);
            a.expr += step->conjugator.expr;
            centralizer = std::move(step->centralizer);
            chain_acting = centralizer;
            if (chain_acting.empty())
                chain_acting.push_back({NormalWord::identity(static_cast<std::size_t>(p.size())), {}});
        } else {
            // candidates from the original acting set, filtered by the
            // centralizing constraint for the targets already matched
            auto accept = [&](const NormalWord& cand) {
                for (std::size_t k = 0; k < j; ++k)
                    if (conjugate(p, ss[k], cand, co) != ss[k]) return false;
                return conjugate(p, moved, cand, co) == ss[j];
            };
            auto step = bounded_search(g, original, solver.bound, limits, accept);
            if (!step) {
                if (failed_step) *failed_step = static_cast<int>(j);
                return std::nullopt;
            }
            a.nf = multiply(p, a.nf, step->nf, co);
            a.expr += step->expr;
        }
    }

    for (std::size_t j = 0; j < rs.size(); ++j)
        if (conjugate(p, rs[j], a.nf, co) != ss[j]) throw Error("internal: unsound multiple-conjugacy witness");

    InternalWitness w;
    w.conjugator = std::move(a);
    w.centralizer = std::move(centralizer);
    return to_public(std::move(w));
}

}  // namespace pcg
