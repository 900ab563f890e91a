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

#include "pcgroup/matrix.hpp"

#include <sstream>

#include "pcgroup/errors.hpp"

namespace pcg {

IntMatrix IntMatrix::identity(int d) {
    IntMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_identity() const {
    for (int r = 0; r < d_; ++r)
        for (int c = 0; c < d_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : m_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (d_ != o.d_) throw DomainError("matrix dimension mismatch");
    IntMatrix out(d_);
    for (int r = 0; r < d_; ++r)
        for (int k = 0; k < d_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < d_; ++c) {
                const Int& b = o.at(k, c);
                if (b != 0) out.at(r, c) += a * b;
            }
        }
    return out;
}

IntMatrix IntMatrix::sub(const IntMatrix& o) const {
    IntMatrix out(d_);
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] - o.m_[i];
    return out;
}

Int IntMatrix::det() const {
    // Bareiss fraction-free elimination; all divisions are exact.
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < d_ - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < d_; ++r)
                if (a.at(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            for (int c = 0; c < d_; ++c) std::swap(a.at(k, c), a.at(p, c));
            sign = -sign;
        }
        for (int r = k + 1; r < d_; ++r) {
            for (int c = k + 1; c < d_; ++c)
                a.at(r, c) = (a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c)) / prev;
            a.at(r, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(d_ - 1, d_ - 1) : -a.at(d_ - 1, d_ - 1);
}

bool IntMatrix::signed_permutation() const {
    for (int r = 0; r < d_; ++r) {
        int nonzero = 0;
        for (int c = 0; c < d_; ++c) {
            const Int& v = at(r, c);
            if (v == 0) continue;
            if (v != 1 && v != -1) return false;
            ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    for (int c = 0; c < d_; ++c) {
        int nonzero = 0;
        for (int r = 0; r < d_; ++r)
            if (at(r, c) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

IntMatrix IntMatrix::inverse() const {
    if (signed_permutation()) {
        IntMatrix out(d_);
        for (int r = 0; r < d_; ++r)
            for (int c = 0; c < d_; ++c) out.at(c, r) = at(r, c);
        return out;
    }
    Int d = det();
    if (d != 1 && d != -1) throw DomainError("matrix is not unimodular (det " + to_string(d) + ")");
    // Adjugate: inverse = adj / det and det is a unit here.
    IntMatrix out(d_);
    for (int r = 0; r < d_; ++r)
        for (int c = 0; c < d_; ++c) {
            IntMatrix minor(d_ - 1);
            for (int i = 0, mi = 0; i < d_; ++i) {
                if (i == c) continue;
                for (int j = 0, mj = 0; j < d_; ++j) {
                    if (j == r) continue;
                    minor.at(mi, mj) = at(i, j);
                    ++mj;
                }
                ++mi;
            }
            Int cof = d_ == 1 ? Int(1) : minor.det();
            if ((r + c) % 2) cof = -cof;
            out.at(r, c) = d == 1 ? cof : -cof;
        }
    return out;
}

IntMatrix IntMatrix::pow(const Int& e) const {
    if (e == 0) return identity(d_);
    IntMatrix n = sub(identity(d_));
    if (n.mul(n).is_zero()) {
        // unipotent of class 2: M^e = I + e (M - I)
        IntMatrix out = identity(d_);
        for (int r = 0; r < d_; ++r)
            for (int c = 0; c < d_; ++c)
                if (n.at(r, c) != 0) out.at(r, c) += e * n.at(r, c);
        return out;
    }
    IntMatrix base = e < 0 ? inverse() : *this;
    Int k = e < 0 ? Int(-e) : e;
    IntMatrix acc = identity(d_);
    while (k > 0) {
        if (boost::multiprecision::bit_test(k, 0)) acc = acc.mul(base);
        k >>= 1;
        if (k > 0) base = base.mul(base);
    }
    return acc;
}

std::string IntMatrix::str() const {
    std::string out;
    for (int r = 0; r < d_; ++r) {
        if (r) out += ';';
        for (int c = 0; c < d_; ++c) {
            if (c) out += ',';
            out += to_string(at(r, c));
        }
    }
    return out;
}

IntMatrix IntMatrix::parse(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::string row;
    std::istringstream in(text);
    while (std::getline(in, row, ';')) {
        std::vector<Int> vals;
        std::string cell;
        std::istringstream rin(row);
        while (std::getline(rin, cell, ',')) vals.push_back(parse_int(cell));
        rows.push_back(std::move(vals));
    }
    if (rows.empty()) throw ParseError(0, "empty matrix");
    int d = static_cast<int>(rows.size());
    IntMatrix m(d);
    for (int r = 0; r < d; ++r) {
        if (rows[r].size() != static_cast<std::size_t>(d))
            throw ParseError(0, "matrix is not square");
        for (int c = 0; c < d; ++c) m.at(r, c) = std::move(rows[r][c]);
    }
    return m;
}

}  // namespace pcg
