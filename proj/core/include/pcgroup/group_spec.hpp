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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcgroup/collect.hpp"
#include "pcgroup/matrix.hpp"
#include "pcgroup/presentation.hpp"

namespace pcg {

/// A presentation bundled with an optional faithful integer-matrix embedding
/// (one unimodular image per generator, common dimension) and metadata. The
/// embedding is the independent word-problem oracle: two words are equal in
/// the group iff their matrix images coincide.
struct GroupSpec {
    PcPresentation pres;
    std::string name;
    std::optional<std::vector<IntMatrix>> embedding;  // index 0 = image of a_1
    std::optional<Int> order;                         // present iff finite

    explicit GroupSpec(PcPresentation p) : pres(std::move(p)) {}

    int num_gens() const { return pres.size(); }
    bool has_embedding() const { return embedding.has_value(); }
    int matrix_dim() const { return has_embedding() ? (*embedding)[0].dim() : 0; }

    NormalWord identity() const { return NormalWord::identity(static_cast<std::size_t>(pres.size())); }
    NormalWord gen(int i) const;  // normal word of a_i
};

using GroupPtr = std::shared_ptr<const GroupSpec>;
inline GroupPtr share(GroupSpec g) { return std::make_shared<const GroupSpec>(std::move(g)); }

// --- constructions ---

/// Dihedral group of order 2m:  < a_1, a_2 | a_1^2, a_2^m, a_2^{a_1} = a_2^{m-1} >.
/// m = 4 gets the 2x2 rotation/reflection embedding, other m a permutation
/// embedding of dimension m.
GroupSpec dihedral(int m);

/// Discrete Heisenberg group: three generators, a_3 central,
/// a_2^{a_1} = a_2 a_3. Embedded in 3x3 unitriangular integer matrices.
GroupSpec heisenberg();

/// Direct product on n_g + n_h generators: block relations, trivial cross
/// conjugation, block-diagonal embedding when both factors have one.
GroupSpec direct_product(const GroupSpec& g, const GroupSpec& h);

/// The split extension O x| U' for O = Z[zeta_r] and U' the group generated
/// by the torsion unit and the fundamental cyclotomic units. Generators:
/// units first (torsion, then infinite units), then the phi(r) additive basis
/// elements of O. Conjugation of the additive part reads off unit_matrix
/// rows; the embedding is by (phi(r)+1)-dimensional affine matrices
/// [[M_u, 0], [o, 1]] under the row-vector convention.
GroupSpec cyclotomic_group(int r);

/// Product of generator-image powers in word order; the word-problem oracle.
IntMatrix matrix_of_word(const GroupSpec& g, const Word& w);

/// Checks that every defining relation evaluates to equal matrices on both
/// sides. Cheap for the desk-scale groups; not run automatically by the
/// constructors.
bool verify_embedding(const GroupSpec& g);

// --- serialization ---

/// Presentation text plus an optional "[embedding]" section of
/// "mat <i> = <rows>" lines. Canonical output, so serialize . parse is the
/// identity on its own output.
std::string serialize_group(const GroupSpec& g);
GroupSpec parse_group(const std::string& text, const std::string& name);

/// "d4" | "dihedral:<m>" | "heisenberg" | "cyclotomic:<r>" |
/// "product:<a>,<b>" with a, b builtin tokens.
GroupSpec builtin_group(const std::string& token);
bool is_builtin_token(const std::string& token);

/// Builtin token or presentation-file path.
GroupSpec load_group(const std::string& ref);

}  // namespace pcg
