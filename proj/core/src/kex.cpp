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

#include "pcgroup/kex.hpp"

#include <random>
#include <sstream>

#include "pcgroup/errors.hpp"

namespace pcg {

namespace {

void require_group(const GroupPtr& g) {
    if (!g) throw DomainError("null group");
}

void require_gens(const GroupSpec& g, const std::vector<NormalWord>& gens, const char* what) {
    if (gens.empty()) throw DomainError(std::string(what) + " generator list is empty");
    for (const NormalWord& x : gens)
        if (x.size() != static_cast<std::size_t>(g.num_gens()))
            throw DomainError(std::string(what) + " generator has wrong length");
}

}  // namespace

AagParams::AagParams(GroupPtr g, std::vector<NormalWord> s, std::vector<NormalWord> t)
    : group(std::move(g)), s_gens(std::move(s)), t_gens(std::move(t)) {
    require_group(group);
    require_gens(*group, s_gens, "S");
    require_gens(*group, t_gens, "T");
}

NcdhParams::NcdhParams(GroupPtr g, NormalWord u_, std::vector<NormalWord> s, std::vector<NormalWord> t)
    : group(std::move(g)), u(std::move(u_)), s_gens(std::move(s)), t_gens(std::move(t)) {
    require_group(group);
    require_gens(*group, s_gens, "S");
    require_gens(*group, t_gens, "T");
    // generator commutation implies [S, T] = 1
    const PcPresentation& p = group->pres;
    for (const NormalWord& a : s_gens)
        for (const NormalWord& b : t_gens)
            if (!commutator(p, a, b).is_identity())
                throw DomainError("S and T do not commute: [" + a.str() + ", " + b.str() + "] != 1");
}

NormalWord eval_subgroup_word(const GroupSpec& g, const std::vector<NormalWord>& gens,
                              const SubgroupWord& w) {
    NormalWord acc = g.identity();
    for (const auto& [pos, exp] : w.syls) {
        if (pos < 0 || static_cast<std::size_t>(pos) >= gens.size())
            throw DomainError("subgroup word position " + std::to_string(pos) + " out of range");
        if (exp == 0) throw DomainError("subgroup word has a zero exponent");
        acc = multiply(g.pres, acc, power(g.pres, gens[static_cast<std::size_t>(pos)], exp));
    }
    return acc;
}

AagCommit aag_commit(const AagParams& params, Role role, const SubgroupWord& secret) {
    const GroupSpec& g = *params.group;
    const auto& own = role == Role::Alice ? params.s_gens : params.t_gens;
    const auto& peer = role == Role::Alice ? params.t_gens : params.s_gens;
    NormalWord elem = eval_subgroup_word(g, own, secret);
    AagCommit out;
    out.reserve(peer.size());
    for (const NormalWord& x : peer) out.push_back(conjugate(g.pres, x, elem));
    return out;
}

NormalWord aag_key(const AagParams& params, Role role, const SubgroupWord& secret,
                   const AagCommit& peer_commit) {
    const GroupSpec& g = *params.group;
    const auto& own = role == Role::Alice ? params.s_gens : params.t_gens;
    if (peer_commit.size() != own.size())
        throw DomainError("peer commit has " + std::to_string(peer_commit.size()) + " entries, expected " +
                          std::to_string(own.size()));
    NormalWord elem = eval_subgroup_word(g, own, secret);
    // the peer's commit entries are the own generators conjugated by the
    // peer's secret, so re-reading the secret over them conjugates elem
    NormalWord conjugated = eval_subgroup_word(g, peer_commit, secret);
    if (role == Role::Alice) return multiply(g.pres, inverse(g.pres, elem), conjugated);
    return multiply(g.pres, inverse(g.pres, conjugated), elem);
}

NormalWord ncdh_commit(const NcdhParams& params, Role role, const SubgroupWord& secret) {
    const GroupSpec& g = *params.group;
    const auto& own = role == Role::Alice ? params.s_gens : params.t_gens;
    return conjugate(g.pres, params.u, eval_subgroup_word(g, own, secret));
}

NormalWord ncdh_key(const NcdhParams& params, Role role, const SubgroupWord& secret,
                    const NormalWord& peer_commit) {
    const GroupSpec& g = *params.group;
    const auto& own = role == Role::Alice ? params.s_gens : params.t_gens;
    return conjugate(g.pres, peer_commit, eval_subgroup_word(g, own, secret));
}

ClassicDhResult classic_dh(const Int& p, const Int& g, const Int& x, const Int& y) {
    if (p < 2) throw DomainError("modulus must be >= 2");
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError("modulus " + to_string(p) + " is not prime");
    if (g <= 0 || g >= p) throw DomainError("base must satisfy 0 < g < p");
    if (x < 0 || y < 0) throw DomainError("exponents must be nonnegative");
    using boost::multiprecision::powm;
    ClassicDhResult out;
    out.X = powm(g, x, p);
    out.Y = powm(g, y, p);
    out.k = powm(out.Y, x, p);
    Int check = powm(out.X, y, p);
    if (check != out.k) throw Error("internal: key derivations disagree");
    return out;
}

std::optional<NormalWord> aag_attack(const AagParams& params, const AagCommit& commit_a,
                                     const AagCommit& commit_b, const Solver& solver,
                                     const SearchLimits& limits) {
    const GroupSpec& g = *params.group;
    if (commit_a.size() != params.t_gens.size()) throw DomainError("commit A has wrong length");
    if (commit_b.size() != params.s_gens.size()) throw DomainError("commit B has wrong length");
    ActingSet acting{params.s_gens};
    auto witness = multiple_conjugacy(g, acting, params.t_gens, commit_a, solver, limits);
    if (!witness) return std::nullopt;
    // witness->conjugator_expr spells a' over s_gens; derive the key exactly
    // as Alice does, substituting the positions into Bob's commit
    return aag_key(params, Role::Alice, witness->conjugator_expr, commit_b);
}

std::optional<NormalWord> ncdh_attack(const NcdhParams& params, const NormalWord& commit_a,
                                      const NormalWord& commit_b, const Solver& solver,
                                      const SearchLimits& limits) {
    const GroupSpec& g = *params.group;
    ActingSet acting{params.s_gens};
    auto witness = multiple_conjugacy(g, acting, {params.u}, {commit_a}, solver, limits);
    if (!witness) return std::nullopt;
    // w' lies in S, so it commutes with Bob's secret
    return conjugate(g.pres, commit_b, witness->conjugator);
}

// --- transcripts ---

namespace {

std::string join_words(const std::vector<NormalWord>& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ';';
        out += ws[i].str();
    }
    return out;
}

std::vector<NormalWord> split_words(const std::string& text, int line) {
    std::vector<NormalWord> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ';')) {
        try {
            out.push_back(NormalWord::parse(cur));
        } catch (const Error& e) {
            throw ParseError(line, e.what());
        }
    }
    return out;
}

}  // namespace

std::string KexTranscript::serialize() const {
    std::string out = "kex v1 ";
    out += protocol == Protocol::Aag ? "aag" : "ncdh";
    out += "\ngroup " + group_ref + "\n";
    out += "sgens " + join_words(s_gens) + "\n";
    out += "tgens " + join_words(t_gens) + "\n";
    if (protocol == Protocol::Ncdh && u) out += "u " + u->str() + "\n";
    out += "commitA " + join_words(commit_a) + "\n";
    out += "commitB " + join_words(commit_b) + "\n";
    if (key_a) out += "keyA " + key_a->str() + "\n";
    if (key_b) out += "keyB " + key_b->str() + "\n";
    return out;
}

KexTranscript KexTranscript::parse(const std::string& text) {
    KexTranscript t;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    bool have_header = false, have_group = false, have_sgens = false, have_tgens = false;
    bool have_ca = false, have_cb = false;
    while (std::getline(in, line)) {
        ++no;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        std::string rest;
        std::getline(ls, rest);
        if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
        if (kw == "kex") {
            std::istringstream hs(rest);
            std::string version, proto;
            hs >> version >> proto;
            if (version != "v1" || (proto != "aag" && proto != "ncdh"))
                throw ParseError(no, "expected 'kex v1 <aag|ncdh>'");
            t.protocol = proto == "aag" ? Protocol::Aag : Protocol::Ncdh;
            have_header = true;
        } else if (kw == "group") {
            t.group_ref = rest;
            have_group = true;
        } else if (kw == "sgens") {
            t.s_gens = split_words(rest, no);
            have_sgens = true;
        } else if (kw == "tgens") {
            t.t_gens = split_words(rest, no);
            have_tgens = true;
        } else if (kw == "u") {
            t.u = NormalWord::parse(rest);
        } else if (kw == "commitA") {
            t.commit_a = split_words(rest, no);
            have_ca = true;
        } else if (kw == "commitB") {
            t.commit_b = split_words(rest, no);
            have_cb = true;
        } else if (kw == "keyA") {
            t.key_a = NormalWord::parse(rest);
        } else if (kw == "keyB") {
            t.key_b = NormalWord::parse(rest);
        } else {
            throw ParseError(no, "unknown transcript line '" + kw + "'");
        }
    }
    if (!have_header) throw ParseError(0, "missing 'kex v1' header");
    if (!have_group || !have_sgens || !have_tgens || !have_ca || !have_cb)
        throw ParseError(0, "transcript is missing required lines");
    if (t.protocol == Protocol::Ncdh && !t.u) throw ParseError(0, "ncdh transcript is missing 'u'");
    if (t.key_a && t.key_b && *t.key_a != *t.key_b)
        throw ParseError(0, "transcript keys disagree");
    return t;
}

bool KexTranscript::operator==(const KexTranscript& o) const {
    return protocol == o.protocol && group_ref == o.group_ref && s_gens == o.s_gens &&
           t_gens == o.t_gens && u == o.u && commit_a == o.commit_a && commit_b == o.commit_b &&
           key_a == o.key_a && key_b == o.key_b;
}

// --- seeded instances ---

namespace {

Int nonzero_exp(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t u = rng() % (2 * bound);
    return u < bound ? Int(u) - Int(bound) : Int(u - bound + 1);
}

NormalWord random_element(const GroupSpec& g, std::mt19937_64& rng, int syllables,
                          std::uint64_t exp_bound, int min_gen, int max_gen) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Word w;
        for (int t = 0; t < syllables; ++t) {
            int gen = min_gen + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gen - min_gen + 1));
            w.syls.emplace_back(gen, nonzero_exp(rng, exp_bound));
        }
        NormalWord nf = collect(g.pres, w);
        if (!nf.is_identity()) return nf;
    }
    return g.identity();  // trivial group corner
}

SubgroupWord random_secret(std::mt19937_64& rng, int num_gens, int syllables, std::uint64_t exp_bound) {
    SubgroupWord w;
    for (int t = 0; t < syllables; ++t)
        w.push(static_cast<int>(rng() % static_cast<std::uint64_t>(num_gens)), nonzero_exp(rng, exp_bound));
    return w;
}

}  // namespace

AagInstance aag_random_instance(GroupPtr g, std::uint64_t seed, const AagInstanceOptions& opt) {
    require_group(g);
    std::mt19937_64 rng(seed);
    std::vector<NormalWord> s_gens, t_gens;
    for (int i = 0; i < opt.num_s_gens; ++i)
        s_gens.push_back(random_element(*g, rng, opt.element_syllables, opt.element_exp_bound, 1, g->num_gens()));
    for (int i = 0; i < opt.num_t_gens; ++i)
        t_gens.push_back(random_element(*g, rng, opt.element_syllables, opt.element_exp_bound, 1, g->num_gens()));

    AagParams params(std::move(g), std::move(s_gens), std::move(t_gens));
    SubgroupWord secret_a = random_secret(rng, opt.num_s_gens, opt.secret_syllables, opt.secret_exp_bound);
    SubgroupWord secret_b = random_secret(rng, opt.num_t_gens, opt.secret_syllables, opt.secret_exp_bound);

    AagCommit commit_a = aag_commit(params, Role::Alice, secret_a);
    AagCommit commit_b = aag_commit(params, Role::Bob, secret_b);
    NormalWord key_a = aag_key(params, Role::Alice, secret_a, commit_b);
    NormalWord key_b = aag_key(params, Role::Bob, secret_b, commit_a);
    if (key_a != key_b) throw Error("internal: commutator key mismatch");

    return AagInstance{std::move(params), std::move(secret_a), std::move(secret_b),
                       std::move(commit_a), std::move(commit_b), std::move(key_a)};
}

NcdhInstance ncdh_random_instance(GroupPtr product, int first_factor_gens, std::uint64_t seed,
                                  const NcdhInstanceOptions& opt) {
    require_group(product);
    const int n = product->num_gens();
    if (first_factor_gens < 1 || first_factor_gens >= n)
        throw DomainError("first factor generator count out of range");
    std::mt19937_64 rng(seed);
    std::vector<NormalWord> s_gens, t_gens;
    for (int i = 0; i < opt.num_s_gens; ++i)
        s_gens.push_back(
            random_element(*product, rng, opt.element_syllables, opt.element_exp_bound, 1, first_factor_gens));
    for (int i = 0; i < opt.num_t_gens; ++i)
        t_gens.push_back(random_element(*product, rng, opt.element_syllables, opt.element_exp_bound,
                                        first_factor_gens + 1, n));
    NormalWord u = random_element(*product, rng, opt.element_syllables, opt.element_exp_bound, 1, n);

    NcdhParams params(std::move(product), std::move(u), std::move(s_gens), std::move(t_gens));
    SubgroupWord secret_a = random_secret(rng, opt.num_s_gens, opt.secret_syllables, opt.secret_exp_bound);
    SubgroupWord secret_b = random_secret(rng, opt.num_t_gens, opt.secret_syllables, opt.secret_exp_bound);

    NormalWord commit_a = ncdh_commit(params, Role::Alice, secret_a);
    NormalWord commit_b = ncdh_commit(params, Role::Bob, secret_b);
    NormalWord key_a = ncdh_key(params, Role::Alice, secret_a, commit_b);
    NormalWord key_b = ncdh_key(params, Role::Bob, secret_b, commit_a);
    if (key_a != key_b) throw Error("internal: conjugation key mismatch");

    return NcdhInstance{std::move(params), std::move(secret_a), std::move(secret_b),
                        std::move(commit_a), std::move(commit_b), std::move(key_a)};
}

KexTranscript aag_transcript(const AagInstance& inst, const std::string& group_ref, bool with_keys) {
    KexTranscript t;
    t.protocol = Protocol::Aag;
    t.group_ref = group_ref;
    t.s_gens = inst.params.s_gens;
    t.t_gens = inst.params.t_gens;
    t.commit_a = inst.commit_a;
    t.commit_b = inst.commit_b;
    if (with_keys) {
        t.key_a = inst.key;
        t.key_b = inst.key;
    }
    return t;
}

KexTranscript ncdh_transcript(const NcdhInstance& inst, const std::string& group_ref, bool with_keys) {
    KexTranscript t;
    t.protocol = Protocol::Ncdh;
    t.group_ref = group_ref;
    t.s_gens = inst.params.s_gens;
    t.t_gens = inst.params.t_gens;
    t.u = inst.params.u;
    t.commit_a = {inst.commit_a};
    t.commit_b = {inst.commit_b};
    if (with_keys) {
        t.key_a = inst.key;
        t.key_b = inst.key;
    }
    return t;
}

}  // namespace pcg
