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

#include "querylab/circuits.hpp"

#include <bit>

namespace querylab {

SparseMatrix<QSqrt2> permutation_layer(const BasisLayout &layout, const BasisMap &f) {
    std::vector<size_t> perm(layout.dimension());
    for (size_t c = 0; c < perm.size(); ++c) perm[c] = layout.flat(f(layout.state(c)));
    return SparseMatrix<QSqrt2>::permutation(perm);
}

SparseMatrix<QSqrt2> hadamard_layer(const BasisLayout &layout, const std::function<int(const BasisState &)> &bit,
                                    const BasisMap &flip) {
    SparseMatrix<QSqrt2> m(layout.dimension());
    const QSqrt2 h = QSqrt2::inv_sqrt2();
    for (size_t c = 0; c < layout.dimension(); ++c) {
        BasisState s = layout.state(c);
        size_t partner = layout.flat(flip(s));
        // |0> -> (|0> + |1>)/sqrt2, |1> -> (|0> - |1>)/sqrt2
        m.set(c, c, bit(s) == 0 ? h : -h);
        m.set(partner, c, h);
    }
    return m;
}

SparseMatrix<QSqrt2> hadamard_workspace_bit(const BasisLayout &layout, int bit) {
    if (bit < 0 || bit >= layout.workspace_bits) throw Error("workspace bit out of range");
    return hadamard_layer(
        layout, [bit](const BasisState &s) { return static_cast<int>((s.workspace >> bit) & 1); },
        [bit](BasisState s) {
            s.workspace ^= uint64_t{1} << bit;
            return s;
        });
}

SparseMatrix<QSqrt2> hadamard_z(const BasisLayout &layout) {
    return hadamard_layer(
        layout, [](const BasisState &s) { return s.z - 1; },
        [](BasisState s) {
            s.z = 3 - s.z;
            return s;
        });
}

SparseMatrix<QSqrt2> hadamard_register(const BasisLayout &layout) {
    if (layout.registers != 2) throw Error("register Hadamard needs a two-register layout");
    return hadamard_layer(
        layout, [](const BasisState &s) { return static_cast<int>(s.reg); },
        [](BasisState s) {
            s.reg = s.reg == Register::X ? Register::Y : Register::X;
            return s;
        });
}

SparseMatrix<QSqrt2> walsh_hadamard_index(const BasisLayout &layout) {
    int k = layout.index_range;
    if (!std::has_single_bit(static_cast<unsigned>(k))) throw Error("Walsh-Hadamard needs a power-of-two index range");
    int bits = std::countr_zero(static_cast<unsigned>(k));
    // 1/sqrt(k) = 2^(-bits/2), in Q(sqrt 2) for every power of two.
    QSqrt2 norm(1);
    for (int b = 0; b < bits; ++b) norm *= QSqrt2::inv_sqrt2();
    SparseMatrix<QSqrt2> m(layout.dimension());
    for (size_t c = 0; c < layout.dimension(); ++c) {
        BasisState s = layout.state(c);
        for (int j = 1; j <= k; ++j) {
            BasisState t = s;
            t.index = j;
            int sign = std::popcount(static_cast<unsigned>((s.index - 1) & (j - 1))) % 2 == 0 ? 1 : -1;
            m.set(layout.flat(t), c, sign > 0 ? norm : -norm);
        }
    }
    return m;
}

namespace {

uint64_t field(const BasisState &s, int offset, int width) { return (s.workspace >> offset) & ((uint64_t{1} << width) - 1); }

ExactAlgorithm::Config collision_config(const std::string &name, int n, int workspace_bits) {
    ExactAlgorithm::Config c;
    c.name = name;
    c.kind = InstanceKind::collision;
    c.n = n;
    c.oracle = OracleKind::standard;
    c.layout = BasisLayout{workspace_bits, 1, n};
    c.answer = AnswerField{0, bits_for(n)};
    c.initial = StateVector<QSqrt2>(BasisState{0, Register::X, 1, 1});
    return c;
}

BasisMap flip_z_if(std::function<bool(const BasisState &)> pred) {
    return [pred = std::move(pred)](BasisState s) {
        if (pred(s)) s.z = 3 - s.z;
        return s;
    };
}

ExactAlgorithm always_accept(int n) {
    auto c = collision_config("always-accept", n, bits_for(n));
    c.initial = StateVector<QSqrt2>(BasisState{0, Register::X, 1, 2});
    c.layers = {SparseMatrix<QSqrt2>::identity(c.layout.dimension())};
    return ExactAlgorithm(std::move(c));
}

ExactAlgorithm x1_equals_1(int n) {
    auto c = collision_config("x1-equals-1", n, bits_for(n));
    int w = c.answer.width;
    c.layers = {SparseMatrix<QSqrt2>::identity(c.layout.dimension()),
                permutation_layer(c.layout, flip_z_if([w](const BasisState &s) { return field(s, 0, w) == 1; }))};
    return ExactAlgorithm(std::move(c));
}

ExactAlgorithm interference(int n) {
    auto c = collision_config("interference", n, bits_for(n));
    auto wh = walsh_hadamard_index(c.layout);
    c.layers = {wh, permutation_layer(c.layout, flip_z_if([](const BasisState &s) { return s.index == 1; })) * wh};
    return ExactAlgorithm(std::move(c));
}

ExactAlgorithm pair_equality(int n) {
    if (n < 2) throw Error("pair-equality needs n >= 2");
    int w = bits_for(n);
    auto c = collision_config("pair-equality", n, 2 * w);
    // Move the first answer into the upper field and point the query at position 2.
    auto stash = permutation_layer(c.layout, [w](BasisState s) {
        uint64_t lo = field(s, 0, w), hi = field(s, w, w);
        s.workspace = (lo << w) | hi;
        if (s.index <= 2) s.index = 3 - s.index;
        return s;
    });
    auto compare = permutation_layer(
        c.layout, flip_z_if([w](const BasisState &s) { return field(s, 0, w) == field(s, w, w); }));
    c.layers = {SparseMatrix<QSqrt2>::identity(c.layout.dimension()), stash, compare};
    return ExactAlgorithm(std::move(c));
}

ExactAlgorithm mixer(int n) {
    int w = bits_for(n);
    auto c = collision_config("mixer", n, w + 1);
    auto wh = walsh_hadamard_index(c.layout);
    // Cyclic shift of the position register controlled by the lowest answer bit, then a
    // Hadamard on the spare workspace bit controlled by nothing.
    auto shift = permutation_layer(c.layout, [n](BasisState s) {
        if (s.workspace & 1) s.index = s.index % n + 1;
        return s;
    });
    auto spare = hadamard_workspace_bit(c.layout, w);
    auto copy_bit = permutation_layer(c.layout, [w](BasisState s) {
        if (s.workspace >> w & 1) s.workspace ^= 2;
        return s;
    });
    auto h0 = hadamard_workspace_bit(c.layout, 0);
    auto parity = permutation_layer(c.layout, flip_z_if([w](const BasisState &s) {
                                        return std::popcount(field(s, 0, w)) % 2 == 1;
                                    }));
    c.layers = {wh * spare, copy_bit * h0 * shift, hadamard_z(c.layout) * parity * wh};
    return ExactAlgorithm(std::move(c));
}

ExactAlgorithm register_compare(int n) {
    ExactAlgorithm::Config c;
    c.name = "register-compare";
    c.kind = InstanceKind::setcomp;
    c.n = n;
    c.oracle = OracleKind::standard;
    c.layout = BasisLayout{bits_for(2 * n), 2, n};
    c.answer = AnswerField{0, bits_for(2 * n)};
    c.initial = StateVector<QSqrt2>(BasisState{0, Register::X, 1, 1});
    auto h = hadamard_register(c.layout);
    auto mark = permutation_layer(c.layout, flip_z_if([](const BasisState &s) { return s.reg == Register::Y; }));
    c.layers = {h, mark * h};
    return ExactAlgorithm(std::move(c));
}

ExactAlgorithm erasing_setcomp(int n) {
    ExactAlgorithm::Config c;
    c.name = "erasing-setcomp";
    c.kind = InstanceKind::setcomp;
    c.n = n;
    c.oracle = OracleKind::erasing;
    c.layout = BasisLayout{0, 2, 2 * n};
    c.answer = AnswerField{0, 1};
    std::vector<BasisState> start;
    for (Register b : {Register::X, Register::Y}) {
        for (int i = 1; i <= n; ++i) start.push_back(BasisState{0, b, i, 1});
    }
    c.initial = StateVector<QSqrt2>::uniform(start);
    auto mark = permutation_layer(c.layout, flip_z_if([](const BasisState &s) { return s.reg == Register::Y; }));
    c.layers = {SparseMatrix<QSqrt2>::identity(c.layout.dimension()), mark * hadamard_register(c.layout)};
    return ExactAlgorithm(std::move(c));
}

}  // namespace

std::vector<std::string> builtin_algorithm_names() {
    return {"always-accept", "x1-equals-1", "interference",    "pair-equality",
            "mixer",         "register-compare", "erasing-setcomp"};
}

ExactAlgorithm builtin_algorithm(const std::string &name, int n) {
    if (n < 1) throw Error("n must be positive");
    if (name == "always-accept") return always_accept(n);
    if (name == "x1-equals-1") return x1_equals_1(n);
    if (name == "interference") return interference(n);
    if (name == "pair-equality") return pair_equality(n);
    if (name == "mixer") return mixer(n);
    if (name == "register-compare") return register_compare(n);
    if (name == "erasing-setcomp") return erasing_setcomp(n);
    throw Error("unknown builtin algorithm '" + name + "'");
}

}  // namespace querylab
