// Copyright 2026 The Querylab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "querylab/basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace querylab {

std::string to_string(const BasisState &s) {
    return "|" + std::to_string(s.workspace) + "," + to_string(s.reg) + std::to_string(s.index) + "," +
           std::to_string(s.z) + ">";
}

size_t BasisLayout::dimension() const {
    return (size_t{1} << workspace_bits) * static_cast<size_t>(registers) * static_cast<size_t>(index_range) * 2;
}

bool BasisLayout::contains(const BasisState &s) const {
    return s.workspace < (uint64_t{1} << workspace_bits) && static_cast<int>(s.reg) < registers && s.index >= 1 &&
           s.index <= index_range && (s.z == 1 || s.z == 2);
}

size_t BasisLayout::flat(const BasisState &s) const {
    if (!contains(s)) throw Error("basis state " + to_string(s) + " outside layout");
    size_t f = s.workspace;
    f = f * registers + static_cast<size_t>(s.reg);
    f = f * index_range + static_cast<size_t>(s.index - 1);
    return f * 2 + static_cast<size_t>(s.z - 1);
}

BasisState BasisLayout::state(size_t f) const {
    if (f >= dimension()) throw Error("flat index out of range");
    BasisState s;
    s.z = static_cast<int>(f % 2) + 1;
    f /= 2;
    s.index = static_cast<int>(f % index_range) + 1;
    f /= index_range;
    s.reg = static_cast<Register>(f % registers);
    f /= registers;
    s.workspace = f;
    return s;
}

int bits_for(int max_value) {
    int bits = 0;
    while ((1L << bits) <= max_value) ++bits;
    return std::max(bits, 1);
}

template <class A>
SparseMatrix<A> SparseMatrix<A>::identity(size_t dim) {
    SparseMatrix m(dim);
    for (size_t c = 0; c < dim; ++c) m.columns_[c].emplace_back(static_cast<uint32_t>(c), AmplitudeTraits<A>::one());
    return m;
}

template <class A>
SparseMatrix<A> SparseMatrix<A>::permutation(const std::vector<size_t> &perm) {
    SparseMatrix m(perm.size());
    std::vector<bool> seen(perm.size(), false);
    for (size_t c = 0; c < perm.size(); ++c) {
        if (perm[c] >= perm.size() || seen[perm[c]]) throw Error("not a permutation");
        seen[perm[c]] = true;
        m.columns_[c].emplace_back(static_cast<uint32_t>(perm[c]), AmplitudeTraits<A>::one());
    }
    return m;
}

template <class A>
A SparseMatrix<A>::at(size_t row, size_t col) const {
    const auto &c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto &e, size_t r) { return e.first < r; });
    if (it != c.end() && it->first == row) return it->second;
    return A{};
}

template <class A>
void SparseMatrix<A>::set(size_t row, size_t col, const A &value) {
    if (row >= dimension() || col >= dimension()) throw Error("matrix index out of range");
    auto &c = columns_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto &e, size_t r) { return e.first < r; });
    bool zero = AmplitudeTraits<A>::is_zero(value);
    if (it != c.end() && it->first == row) {
        if (zero) {
            c.erase(it);
        } else {
            it->second = value;
        }
    } else if (!zero) {
        c.insert(it, {static_cast<uint32_t>(row), value});
    }
}

template <class A>
size_t SparseMatrix<A>::nonzeros() const {
    size_t n = 0;
    for (const auto &c : columns_) n += c.size();
    return n;
}

template <class A>
bool SparseMatrix<A>::is_orthogonal(double tolerance) const {
    const size_t dim = dimension();
    // Gram matrix accumulated row by row: G[c1][c2] += U[r][c1] * U[r][c2].
    std::vector<std::vector<std::pair<uint32_t, A>>> rows(dim);
    for (size_t c = 0; c < dim; ++c) {
        for (const auto &[r, v] : columns_[c]) rows[r].emplace_back(static_cast<uint32_t>(c), v);
    }
    std::map<std::pair<uint32_t, uint32_t>, A> gram;
    for (const auto &row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            for (size_t j = i; j < row.size(); ++j) {
                gram[{row[i].first, row[j].first}] += row[i].second * row[j].second;
            }
        }
    }
    for (size_t c = 0; c < dim; ++c) {
        auto it = gram.find({static_cast<uint32_t>(c), static_cast<uint32_t>(c)});
        if (it == gram.end()) return false;
    }
    for (const auto &[key, v] : gram) {
        A expected = key.first == key.second ? AmplitudeTraits<A>::one() : A{};
        if constexpr (AmplitudeTraits<A>::exact) {
            if (!(v == expected)) return false;
        } else {
            if (std::abs(v - expected) > tolerance) return false;
        }
    }
    return true;
}

template <class A>
SparseMatrix<A> SparseMatrix<A>::operator*(const SparseMatrix &rhs) const {
    if (rhs.dimension() != dimension()) throw Error("matrix dimension mismatch");
    SparseMatrix out(dimension());
    for (size_t c = 0; c < dimension(); ++c) {
        std::map<uint32_t, A> acc;
        for (const auto &[k, v] : rhs.columns_[c]) {
            for (const auto &[r, u] : columns_[k]) acc[r] += u * v;
        }
        for (auto &[r, v] : acc) {
            if (!AmplitudeTraits<A>::is_zero(v)) out.columns_[c].emplace_back(r, std::move(v));
        }
    }
    return out;
}

template class SparseMatrix<QSqrt2>;
template class SparseMatrix<double>;

SparseMatrix<double> to_float(const SparseMatrix<QSqrt2> &m) {
    SparseMatrix<double> out(m.dimension());
    for (size_t c = 0; c < m.dimension(); ++c) {
        for (const auto &[r, v] : m.column(c)) out.set(r, c, v.to_double());
    }
    return out;
}

}  // namespace querylab
