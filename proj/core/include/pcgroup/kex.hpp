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

enum class Role { Alice, Bob };

/// Commutator key agreement over a shared group: Alice's subgroup S and
/// Bob's subgroup T are published through their generator lists; secrets are
/// words in the own list; the shared key is [a, b].
struct AagParams {
    GroupPtr group;
    std::vector<NormalWord> s_gens;
    std::vector<NormalWord> t_gens;

    AagParams(GroupPtr g, std::vector<NormalWord> s, std::vector<NormalWord> t);
};

/// t_j^a in generator order (Alice) or s_i^b (Bob).
using AagCommit = std::vector<NormalWord>;

/// Evaluates a position word against a generator list.
NormalWord eval_subgroup_word(const GroupSpec& g, const std::vector<NormalWord>& gens,
                              const SubgroupWord& w);

AagCommit aag_commit(const AagParams& params, Role role, const SubgroupWord& secret);

/// Key derivation from the peer's commit alone:
///   Alice:  a^{-1} * prod_k (s_{i_k}^b)^{a_k}   (her secret re-read over Bob's commit)
///   Bob:    (prod_k (t_{i_k}^a)^{b_k})^{-1} * b
/// Both equal [a, b].
NormalWord aag_key(const AagParams& params, Role role, const SubgroupWord& secret,
                   const AagCommit& peer_commit);

/// Conjugation Diffie-Hellman: needs [S, T] = 1, checked on generator pairs
/// at construction (generator commutation already forces subgroup
/// commutation). Throws DomainError otherwise.
struct NcdhParams {
    GroupPtr group;
    NormalWord u;
    std::vector<NormalWord> s_gens;
    std::vector<NormalWord> t_gens;

    NcdhParams(GroupPtr g, NormalWord u, std::vector<NormalWord> s, std::vector<NormalWord> t);
};

NormalWord ncdh_commit(const NcdhParams& params, Role role, const SubgroupWord& secret);

/// conjugate(peer_commit, own secret); u^{wv} = u^{vw} since [S,T] = 1.
NormalWord ncdh_key(const NcdhParams& params, Role role, const SubgroupWord& secret,
                    const NormalWord& peer_commit);

/// Classic modular-arithmetic key exchange, the baseline the group protocols
/// generalize. p must be prime (trial division), 0 < g < p, x, y >= 0.
struct ClassicDhResult {
    Int X, Y, k;
};
ClassicDhResult classic_dh(const Int& p, const Int& g, const Int& x, const Int& y);

/// Recovers the shared key from public data only: solves the simultaneous
/// conjugacy t_j^{a'} = commitA_j with conjugators restricted to words in
/// s_gens, then derives the key exactly as Alice would with a' in place of
/// a. Whenever the solver succeeds the returned key equals the honest one.
std::optional<NormalWord> aag_attack(const AagParams& params, const AagCommit& commit_a,
                                     const AagCommit& commit_b, const Solver& solver,
                                     const SearchLimits& limits = {});

/// Finds w' in S with u^{w'} = commit_a and returns conjugate(commit_b, w').
std::optional<NormalWord> ncdh_attack(const NcdhParams& params, const NormalWord& commit_a,
                                      const NormalWord& commit_b, const Solver& solver,
                                      const SearchLimits& limits = {});

// --- transcripts ---

enum class Protocol { Aag, Ncdh };

/// Public record of one session. `group_ref` is a builtin token or a file
/// path; words are stored in the comma normal-word format. Line format:
///   kex v1 <aag|ncdh>
///   group <ref>
///   sgens <nf>;<nf>;...
///   tgens ...
///   u <nf>              (ncdh only)
///   commitA <nf>;...
///   commitB <nf>;...
///   keyA <nf>           (optional)
///   keyB <nf>           (optional)
struct KexTranscript {
    Protocol protocol = Protocol::Aag;
    std::string group_ref;
    std::vector<NormalWord> s_gens;
    std::vector<NormalWord> t_gens;
    std::optional<NormalWord> u;
    std::vector<NormalWord> commit_a;
    std::vector<NormalWord> commit_b;
    std::optional<NormalWord> key_a;
    std::optional<NormalWord> key_b;

    std::string serialize() const;
    static KexTranscript parse(const std::string& text);

    bool operator==(const KexTranscript& o) const;
};

// --- seeded demo instances (CLI and tests) ---

struct AagInstanceOptions {
    int num_s_gens = 2;
    int num_t_gens = 2;
    int secret_syllables = 3;
    std::uint64_t secret_exp_bound = 3;
    int element_syllables = 4;
    std::uint64_t element_exp_bound = 4;
};

struct AagInstance {
    AagParams params;
    SubgroupWord secret_a, secret_b;
    AagCommit commit_a, commit_b;
    NormalWord key;  // the honest shared key, equal for both roles
};

AagInstance aag_random_instance(GroupPtr g, std::uint64_t seed, const AagInstanceOptions& opt = {});

struct NcdhInstanceOptions {
    int num_s_gens = 2;
    int num_t_gens = 2;
    int secret_syllables = 2;
    std::uint64_t secret_exp_bound = 2;
    int element_syllables = 3;
    std::uint64_t element_exp_bound = 3;
};

struct NcdhInstance {
    NcdhParams params;
    SubgroupWord secret_a, secret_b;
    NormalWord commit_a, commit_b;
    NormalWord key;
};

/// Requires a direct product built by direct_product(); S comes from the
/// first factor's generators, T from the second's, so [S,T] = 1 holds by
/// construction.
NcdhInstance ncdh_random_instance(GroupPtr product, int first_factor_gens, std::uint64_t seed,
                                  const NcdhInstanceOptions& opt = {});

KexTranscript aag_transcript(const AagInstance& inst, const std::string& group_ref, bool with_keys);
KexTranscript ncdh_transcript(const NcdhInstance& inst, const std::string& group_ref, bool with_keys);

}  // namespace pcg
