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

#include <vector>

#include "pcgroup/ints.hpp"
#include "pcgroup/matrix.hpp"

namespace pcg {

/// Supported root-of-unity orders. Keeping the set small keeps the unit data
/// desk-checkable.
bool cyclotomic_supported(int r);
void require_cyclotomic(int r);

/// Euler phi for supported r; the degree of the r-th cyclotomic polynomial.
int cyclotomic_phi(int r);

/// An element of Z[zeta_r] in the power basis 1, zeta, ..., zeta^{phi(r)-1}.
struct CyclotomicInt {
    int r = 0;
    std::vector<Int> coeffs;  // length phi(r)

    CyclotomicInt() = default;
    CyclotomicInt(int r_, std::vector<Int> c);

    static CyclotomicInt zero(int r);
    static CyclotomicInt one(int r);
    /// zeta^k for any integer k (reduced mod Phi_r).
    static CyclotomicInt zeta_pow(int r, long k);

    bool operator==(const CyclotomicInt& o) const { return r == o.r && coeffs == o.coeffs; }
};

/// Schoolbook product reduced modulo the r-th cyclotomic polynomial.
CyclotomicInt cyc_mul(int r, const CyclotomicInt& x, const CyclotomicInt& y);

CyclotomicInt cyc_add(const CyclotomicInt& x, const CyclotomicInt& y);
CyclotomicInt cyc_neg(const CyclotomicInt& x);

/// The phi(r) x phi(r) integer matrix of multiplication by u in the power
/// basis, row-vector convention: row k holds the coefficients of u * zeta^k.
/// Throws DomainError unless det = +-1, i.e. unless u is a unit of Z[zeta_r].
IntMatrix unit_matrix(int r, const CyclotomicInt& u);

/// The cyclotomic unit (1 - zeta^a)/(1 - zeta) = 1 + zeta + ... + zeta^{a-1},
/// for 2 <= a <= (r-1)/2 and r an odd prime.
CyclotomicInt cyclotomic_unit(int r, int a);

/// Generator of the torsion units: -zeta for odd prime r (order 2r), zeta
/// for r = 4 (order 4).
CyclotomicInt torsion_unit(int r);
int torsion_order(int r);

/// Multiplicatively independent units of infinite order; empty for r = 3, 4.
std::vector<CyclotomicInt> fundamental_cyclotomic_units(int r);

}  // namespace pcg
