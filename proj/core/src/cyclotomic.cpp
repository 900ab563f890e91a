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

#include "pcgroup/cyclotomic.hpp"

#include "pcgroup/errors.hpp"

namespace pcg {

bool cyclotomic_supported(int r) { return r == 3 || r == 4 || r == 7 || r == 11; }

void require_cyclotomic(int r) {
    if (!cyclotomic_supported(r))
        throw DomainError("unsupported cyclotomic order " + std::to_string(r) + " (supported: 3, 4, 7, 11)");
}

int cyclotomic_phi(int r) {
    require_cyclotomic(r);
    return r == 4 ? 2 : r - 1;
}

namespace {

// Coefficients of the r-th cyclotomic polynomial, constant term first.
// Monic, so division by it stays integral.
std::vector<Int> cyclotomic_poly(int r) {
    if (r == 4) return {Int(1), Int(0), Int(1)};  // x^2 + 1
    // prime r: 1 + x + ... + x^{r-1}
    return std::vector<Int>(static_cast<std::size_t>(r), Int(1));
}

std::vector<Int> mod_phi(int r, std::vector<Int> c) {
    const std::vector<Int> phi = cyclotomic_poly(r);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = c.size(); k-- > deg;) {
        if (c[k] == 0) continue;
        Int lead = std::move(c[k]);
        c[k] = 0;
        for (std::size_t t = 0; t < deg; ++t) c[k - deg + t] -= lead * phi[t];
    }
    c.resize(deg);
    return c;
}

}  // namespace

CyclotomicInt::CyclotomicInt(int r_, std::vector<Int> c) : r(r_), coeffs(std::move(c)) {
    require_cyclotomic(r);
    if (coeffs.size() != static_cast<std::size_t>(cyclotomic_phi(r)))
        throw DomainError("coefficient vector has " + std::to_string(coeffs.size()) + " entries, expected " +
                          std::to_string(cyclotomic_phi(r)));
}

CyclotomicInt CyclotomicInt::zero(int r) {
    return CyclotomicInt(r, std::vector<Int>(static_cast<std::size_t>(cyclotomic_phi(r))));
}

CyclotomicInt CyclotomicInt::one(int r) {
    CyclotomicInt x = zero(r);
    x.coeffs[0] = 1;
    return x;
}

CyclotomicInt CyclotomicInt::zeta_pow(int r, long k) {
    require_cyclotomic(r);
    long m = k % r;
    if (m < 0) m += r;
    std::vector<Int> c(static_cast<std::size_t>(m) + 1);
    c.back() = 1;
    return CyclotomicInt(r, mod_phi(r, std::move(c)));
}

CyclotomicInt cyc_mul(int r, const CyclotomicInt& x, const CyclotomicInt& y) {
    require_cyclotomic(r);
    if (x.r != r || y.r != r) throw DomainError("cyclotomic order mismatch");
    std::vector<Int> prod(x.coeffs.size() + y.coeffs.size() - 1);
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs.size(); ++j)
            if (y.coeffs[j] != 0) prod[i + j] += x.coeffs[i] * y.coeffs[j];
    }
    return CyclotomicInt(r, mod_phi(r, std::move(prod)));
}

CyclotomicInt cyc_add(const CyclotomicInt& x, const CyclotomicInt& y) {
    if (x.r != y.r) throw DomainError("cyclotomic order mismatch");
    CyclotomicInt out = x;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += y.coeffs[i];
    return out;
}

CyclotomicInt cyc_neg(const CyclotomicInt& x) {
    CyclotomicInt out = x;
    for (Int& c : out.coeffs) c = -c;
    return out;
}

IntMatrix unit_matrix(int r, const CyclotomicInt& u) {
    require_cyclotomic(r);
    const int d = cyclotomic_phi(r);
    IntMatrix m(d);
    CyclotomicInt basis = CyclotomicInt::one(r);
    for (int k = 0; k < d; ++k) {
        CyclotomicInt row = cyc_mul(r, u, basis);
        for (int c = 0; c < d; ++c) m.at(k, c) = row.coeffs[static_cast<std::size_t>(c)];
        basis = cyc_mul(r, basis, CyclotomicInt::zeta_pow(r, 1));
    }
    Int det = m.det();
    if (det != 1 && det != -1)
        throw DomainError("element is not a unit of Z[zeta_" + std::to_string(r) + "] (det " + to_string(det) +
                          ")");
    return m;
}

CyclotomicInt cyclotomic_unit(int r, int a) {
    require_cyclotomic(r);
    if (r == 4) throw DomainError("no fundamental cyclotomic units for r = 4");
    if (a < 2 || a > (r - 1) / 2) throw DomainError("cyclotomic unit index out of range");
    // (1 - zeta^a)/(1 - zeta) = 1 + zeta + ... + zeta^{a-1}
    CyclotomicInt x = CyclotomicInt::zero(r);
    for (int k = 0; k < a; ++k) x.coeffs[static_cast<std::size_t>(k)] = 1;
    return x;
}

CyclotomicInt torsion_unit(int r) {
    require_cyclotomic(r);
    if (r == 4) return CyclotomicInt::zeta_pow(4, 1);
    return cyc_neg(CyclotomicInt::zeta_pow(r, 1));
}

int torsion_order(int r) {
    require_cyclotomic(r);
    return r == 4 ? 4 : 2 * r;
}

std::vector<CyclotomicInt> fundamental_cyclotomic_units(int r) {
    require_cyclotomic(r);
    std::vector<CyclotomicInt> units;
    if (r == 3 || r == 4) return units;
    for (int a = 2; a <= (r - 1) / 2; ++a) units.push_back(cyclotomic_unit(r, a));
    return units;
}

}  // namespace pcg
