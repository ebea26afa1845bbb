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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "querylab/exact.hpp"
#include "querylab/instance.hpp"

namespace querylab {

/// |Psi, (reg, i), z>: workspace bits, the query register (which input sequence and
/// which position), and the output bit z in {1, 2}. z = 2 means accept.
struct BasisState {
    uint64_t workspace = 0;
    Register reg = Register::X;
    int index = 1;
    int z = 1;

    auto operator<=>(const BasisState &) const = default;
};

std::string to_string(const BasisState &s);

/// Shape of the basis an algorithm acts on. Flat index ordering is
/// ((workspace * registers + reg) * index_range + (index - 1)) * 2 + (z - 1).
struct BasisLayout {
    int workspace_bits = 0;
    int registers = 1;
    int index_range = 1;

    size_t dimension() const;
    size_t flat(const BasisState &s) const;
    BasisState state(size_t flat_index) const;
    bool contains(const BasisState &s) const;

    friend bool operator==(const BasisLayout &, const BasisLayout &) = default;
};

/// Location of the query answer inside the workspace: bits [offset, offset + width).
struct AnswerField {
    int offset = 0;
    int width = 1;

    friend bool operator==(const AnswerField &, const AnswerField &) = default;
};

/// Bits needed to hold every value in {0..max_value}.
int bits_for(int max_value);

/// Square matrix stored by columns; each column lists (row, entry) sorted by row.
template <class A>
class SparseMatrix {
   public:
    using Column = std::vector<std::pair<uint32_t, A>>;

    SparseMatrix() = default;
    explicit SparseMatrix(size_t dim) : columns_(dim) {}

    static SparseMatrix identity(size_t dim);
    /// Permutation matrix sending basis column c to row perm[c].
    static SparseMatrix permutation(const std::vector<size_t> &perm);

    size_t dimension() const { return columns_.size(); }
    const Column &column(size_t c) const { return columns_[c]; }
    A at(size_t row, size_t col) const;
    void set(size_t row, size_t col, const A &value);
    size_t nonzeros() const;

    /// U^T U == I, exactly for Q(sqrt 2) entries, within `tolerance` for doubles.
    bool is_orthogonal(double tolerance = 1e-12) const;

    /// this * rhs.
    SparseMatrix operator*(const SparseMatrix &rhs) const;

    friend bool operator==(const SparseMatrix &, const SparseMatrix &) = default;

   private:
    std::vector<Column> columns_;
};

SparseMatrix<double> to_float(const SparseMatrix<QSqrt2> &m);

}  // namespace querylab
